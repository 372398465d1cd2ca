#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dyadic/encoding.h"
#include "dyadic/io.h"
#include "dyadic/pose.h"
#include "dyadic/scene.h"
#include "dyadic/status.h"

namespace {

using namespace dyadic;

constexpr int kExitFailure = 1;
constexpr int kExitMalformed = 2;

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Status::kMalformedInput, "cannot open " + path);
  return in;
}

std::string FormatValuation(int v, int precision) {
  return v >= precision ? "≥ " + std::to_string(precision) : std::to_string(v);
}

std::string FormatDyadic(const DyadicRational& q) {
  return q.numerator.get_str() + "/2^" + std::to_string(q.exponent);
}

size_t PointsFor(Method method) {
  switch (method) {
    case Method::kEightPoint:
      return 8;
    case Method::kSevenPoint:
      return 7;
    case Method::kFivePoint:
      return 5;
  }
  return 8;
}

int Generate(uint64_t seed, int points, int bound, const std::string& corrs_path,
             const std::string& truth_path) {
  SceneParams params;
  params.num_points = points;
  params.coordinate_bound = bound;
  const Scene scene = GenScene(seed, params);
  if (corrs_path.empty() || corrs_path == "-") {
    WritePointPairs(std::cout, scene.pairs);
  } else {
    std::ofstream out(corrs_path);
    WritePointPairs(out, scene.pairs);
  }
  if (!truth_path.empty()) {
    std::ofstream out(truth_path);
    WriteGroundTruth(out, scene);
  }
  return 0;
}

int Encode(const std::string& grid_spec, const std::string& path) {
  uint64_t width = 0, height = 0;
  char sep = 0;
  std::istringstream grid_in(grid_spec);
  if (!(grid_in >> width >> sep >> height) || sep != 'x' || width == 0 ||
      height == 0) {
    throw Error(Status::kMalformedInput, "grid must look like WIDTHxHEIGHT");
  }
  const PixelGrid grid = PixelGrid::FromSize(width, height);
  std::ifstream file;
  if (!path.empty() && path != "-") file = OpenInput(path);
  std::istream& in = file.is_open() ? file : std::cin;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    long long x = -1, y = -1;
    if (!(fields >> x >> y) || x < 0 || y < 0 ||
        static_cast<uint64_t>(x) >= width || static_cast<uint64_t>(y) >= height) {
      throw Error(Status::kMalformedInput, "bad pixel line: " + line);
    }
    const EncodedPoint p = EncodePixel(x, y, grid);
    std::cout << x << " " << y << " r=" << p.r.ToString() << " s=" << p.s.ToString()
              << " iota=(" << FormatDyadic(Iota(p.r)) << ", "
              << FormatDyadic(Iota(p.s)) << ")\n";
  }
  return 0;
}

int Solve(const std::string& method_name, int precision, const std::string& path) {
  const auto method = ParseMethod(method_name);
  if (!method) throw Error(Status::kMalformedInput, "unknown method " + method_name);
  std::ifstream in = OpenInput(path);
  std::vector<PointPair> pairs = ReadPointPairs(in);
  if (pairs.size() > PointsFor(*method)) pairs.resize(PointsFor(*method));

  const std::vector<EssentialCandidate> candidates =
      SolveToPrecision(*method, pairs, precision);
  for (const auto& c : candidates) std::cout << CandidateToJson(c) << "\n";
  for (size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    std::cout << "# candidate " << i << " (" << c.seed << ") E mod 2^" << c.precision
              << " =";
    for (const auto& v : c.e) std::cout << " " << v.get_str();
    std::cout << "\n# iterations: " << c.iterations << "\n";
  }
  // The eight-point solver hands back a candidate even when it has no rank-2
  // witness, so it can be inspected; the run still counts as a failure.
  for (const auto& c : candidates) {
    if (!c.valid) {
      std::cerr << StatusName(Status::kRankTestFailed)
                << ": candidate has no unit 2x2 minor with vanishing determinant\n";
      return kExitFailure;
    }
  }
  return 0;
}

int Verify(const std::string& candidates_path, const std::string& corrs_path) {
  std::ifstream cin_file = OpenInput(candidates_path);
  const std::vector<EssentialCandidate> candidates = ReadCandidates(cin_file);
  std::ifstream pin = OpenInput(corrs_path);
  const std::vector<PointPair> pairs = ReadPointPairs(pin);

  bool all_ok = !candidates.empty();
  for (size_t i = 0; i < candidates.size(); ++i) {
    const EssentialCandidate& c = candidates[i];
    const int n = c.precision;
    std::vector<Correspondence> corrs;
    for (size_t k = 0; k < std::min(pairs.size(), PointsFor(c.method)); ++k) {
      corrs.push_back(Correspondence::FromIntegers(pairs[k].u, pairs[k].v, n));
    }
    const ResidualReport r = VerifyCandidate(c, corrs);
    std::cout << "candidate " << i << " (" << MethodName(c.method) << ", N=" << n
              << ")\n  epipolar valuations:";
    for (int v : r.epipolar_valuations) std::cout << " " << FormatValuation(v, n);
    std::cout << "\n  det valuation: " << FormatValuation(r.det_valuation, n)
              << "\n  trace valuations:";
    for (int v : r.trace_valuations) std::cout << " " << FormatValuation(v, n);
    std::cout << "\n  unit 2x2 minor: " << (r.has_unit_minor ? "yes" : "no")
              << "\n  " << (r.ok ? "ok" : "FAILED") << "\n";
    all_ok = all_ok && r.ok;
  }
  if (!all_ok) {
    std::cerr << "verification failed\n";
    return kExitFailure;
  }
  return 0;
}

int Stability(int precision, int data_precision, int scenes, uint64_t seed) {
  if (data_precision == 0) data_precision = precision + 32;
  const StabilityReport report = RunStability(precision, data_precision, scenes, seed);
  for (const auto& row : report.rows) {
    std::cout << MethodName(row.method) << ": " << row.compared << " solves, "
              << row.candidates << " candidates, first divergent digit "
              << FormatValuation(row.first_divergent, precision) << "\n";
  }
  const int first = report.FirstDivergentDigit();
  std::cout << "first divergent digit: " << FormatValuation(first, precision) << "\n";
  return first >= precision ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-adic relative pose from exact correspondences"};
  app.require_subcommand(1);

  int precision = 32;
  auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--precision,-N", precision, "number of 2-adic digits")
        ->envname("DYADIC_PRECISION")
        ->check(CLI::Range(1, 4096));
  };

  uint64_t seed = 0;
  int points = 8, bound = 64;
  std::string corrs_out, truth_out;
  auto* generate = app.add_subcommand("generate", "synthetic scene to JSONL");
  generate->add_option("--seed", seed);
  generate->add_option("--points", points)->check(CLI::Range(1, 1000));
  generate->add_option("--bound", bound, "coordinate bound")->check(CLI::Range(1, 1 << 20));
  generate->add_option("-o,--output", corrs_out, "correspondence file (default stdout)");
  generate->add_option("--truth", truth_out, "ground-truth JSON file");

  std::string grid, pixels;
  auto* encode = app.add_subcommand("encode", "pixel coordinates to digit strings");
  encode->add_option("--grid", grid, "WIDTHxHEIGHT")->required();
  encode->add_option("pixels", pixels, "file of 'x y' lines (default stdin)");

  std::string method = "8pt", corrs_in;
  auto* solve = app.add_subcommand("solve", "essential matrix candidates");
  solve->add_option("--method", method)->check(CLI::IsMember({"8pt", "7pt", "5pt"}));
  add_precision(solve);
  solve->add_option("correspondences", corrs_in)->required();

  std::string candidates_in;
  auto* verify = app.add_subcommand("verify", "residual report for candidates");
  verify->add_option("candidates", candidates_in)->required();
  verify->add_option("correspondences", corrs_in)->required();

  int data_precision = 0, scenes = 50;
  auto* stability = app.add_subcommand("stability", "perturbation experiment");
  add_precision(stability);
  stability->add_option("--data-precision", data_precision,
                        "digits kept in the data (default precision + 32)");
  stability->add_option("--scenes", scenes)->check(CLI::Range(1, 100000));
  stability->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    if (*generate) return Generate(seed, points, bound, corrs_out, truth_out);
    if (*encode) return Encode(grid, pixels);
    if (*solve) return Solve(method, precision, corrs_in);
    if (*verify) return Verify(candidates_in, corrs_in);
    if (*stability) return Stability(precision, data_precision, scenes, seed);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.status() == Status::kMalformedInput ? kExitMalformed : kExitFailure;
  }
  return 0;
}
