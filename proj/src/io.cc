#include "dyadic/io.h"

#include <istream>
#include <ostream>

#include "dyadic/status.h"
#include "json.hpp"

namespace dyadic {
namespace {

using nlohmann::json;

mpz_class ToInteger(const json& value) {
  if (value.is_number_integer()) {
    return mpz_class(std::to_string(value.get<long long>()));
  }
  if (value.is_string()) {
    mpz_class out;
    if (out.set_str(value.get<std::string>(), 10) != 0) {
      throw Error(Status::kMalformedInput, "not an integer: " + value.dump());
    }
    return out;
  }
  throw Error(Status::kMalformedInput, "not an integer: " + value.dump());
}

// Small values stay JSON numbers; anything beyond 62 bits becomes a string.
json FromInteger(const mpz_class& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) < 62) return json(v.get_si());
  return json(v.get_str());
}

std::array<mpz_class, 3> ReadPoint(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_array() || obj[key].size() != 3) {
    throw Error(Status::kMalformedInput,
                std::string("expected 3-element array \"") + key + "\"");
  }
  return {ToInteger(obj[key][0]), ToInteger(obj[key][1]), ToInteger(obj[key][2])};
}

json PointJson(const std::array<mpz_class, 3>& p) {
  return json::array({FromInteger(p[0]), FromInteger(p[1]), FromInteger(p[2])});
}

}  // namespace

std::vector<PointPair> ReadPointPairs(std::istream& in) {
  std::vector<PointPair> pairs;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(Status::kMalformedInput,
                  "line " + std::to_string(line_number) + ": " + e.what());
    }
    if (!obj.is_object()) {
      throw Error(Status::kMalformedInput,
                  "line " + std::to_string(line_number) + " is not an object");
    }
    pairs.push_back({ReadPoint(obj, "u"), ReadPoint(obj, "v")});
  }
  return pairs;
}

void WritePointPairs(std::ostream& out, const std::vector<PointPair>& pairs) {
  for (const auto& p : pairs) {
    out << json{{"u", PointJson(p.u)}, {"v", PointJson(p.v)}}.dump() << "\n";
  }
}

void WriteGroundTruth(std::ostream& out, const Scene& scene) {
  json truth;
  truth["seed"] = scene.seed;
  truth["quaternion"] = json::array();
  for (const auto& c : scene.quaternion) truth["quaternion"].push_back(FromInteger(c));
  truth["translation"] = PointJson(scene.translation);
  truth["essential_numerator"] = json::array();
  for (const auto& c : scene.essential_numerator) {
    truth["essential_numerator"].push_back(FromInteger(c));
  }
  truth["essential_denominator"] = FromInteger(scene.essential_denominator);
  for (const auto* name : {"first_camera", "second_camera"}) {
    const CameraMatrix& cam =
        std::string(name) == "first_camera" ? scene.first : scene.second;
    json numerator = json::array();
    for (const auto& c : cam.numerator) numerator.push_back(FromInteger(c));
    truth[name] = {{"numerator", numerator},
                   {"denominator", FromInteger(cam.denominator)}};
  }
  truth["points"] = json::array();
  for (const auto& p : scene.points) {
    truth["points"].push_back(json::array(
        {FromInteger(p[0]), FromInteger(p[1]), FromInteger(p[2]), FromInteger(p[3])}));
  }
  out << truth.dump(2) << "\n";
}

Mat3 ReadGroundTruthEssential(std::istream& in) {
  json truth;
  try {
    truth = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Status::kMalformedInput, e.what());
  }
  const json& e = truth.value("essential_numerator", json());
  if (!e.is_array() || e.size() != 9) {
    throw Error(Status::kMalformedInput, "essential_numerator must have 9 entries");
  }
  Mat3 m;
  for (int i = 0; i < 9; ++i) m[i] = ToInteger(e[i]);
  return m;
}

std::string CandidateToJson(const EssentialCandidate& candidate) {
  json obj;
  obj["method"] = std::string(MethodName(candidate.method));
  obj["precision"] = candidate.precision;
  obj["seed"] = candidate.seed;
  obj["iterations"] = candidate.iterations;
  obj["valid"] = candidate.valid;
  obj["E"] = json::array();
  obj["digits"] = json::array();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      obj["E"].push_back(candidate.e[3 * i + j].get_str());
      obj["digits"].push_back(candidate.Entry(i, j).ToString());
    }
  }
  if (candidate.witness) {
    obj["witness"] = {{"row", candidate.witness->row}, {"col", candidate.witness->col}};
  } else {
    obj["witness"] = nullptr;
  }
  return obj.dump();
}

EssentialCandidate CandidateFromJson(const std::string& line) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::exception& e) {
    throw Error(Status::kMalformedInput, e.what());
  }
  EssentialCandidate candidate;
  try {
    const auto method = ParseMethod(obj.at("method").get<std::string>());
    if (!method) throw Error(Status::kMalformedInput, "unknown method");
    candidate.method = *method;
    candidate.precision = obj.at("precision").get<int>();
    candidate.seed = obj.value("seed", "");
    candidate.iterations = obj.value("iterations", 0);
    const json& e = obj.at("E");
    if (!e.is_array() || e.size() != 9 || candidate.precision < 1) {
      throw Error(Status::kMalformedInput, "candidate needs 9 residues");
    }
    for (int i = 0; i < 9; ++i) {
      candidate.e[i] = Mod2k(ToInteger(e[i]), candidate.precision);
    }
  } catch (const json::exception& e) {
    throw Error(Status::kMalformedInput, e.what());
  }
  candidate.witness = FindUnitMinor(candidate.e);
  candidate.valid = candidate.witness.has_value() &&
                    DeterminantMod(candidate.e, candidate.precision) == 0;
  return candidate;
}

std::vector<EssentialCandidate> ReadCandidates(std::istream& in) {
  std::vector<EssentialCandidate> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    out.push_back(CandidateFromJson(line));
  }
  return out;
}

}  // namespace dyadic
