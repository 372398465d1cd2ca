#include "dyadic/scene.h"

#include <algorithm>
#include <random>
#include <string>

#include "dyadic/status.h"

namespace dyadic {
namespace {

mpz_class Uniform(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return dist(rng);
}

bool AllEven(const std::array<mpz_class, 3>& p) {
  return std::all_of(p.begin(), p.end(), [](const mpz_class& c) {
    return mpz_even_p(c.get_mpz_t()) != 0;
  });
}

std::array<mpz_class, 4> RandomQuaternion(std::mt19937_64& rng, int bound) {
  while (true) {
    std::array<mpz_class, 4> q;
    for (auto& c : q) c = Uniform(rng, -bound, bound);
    const mpz_class norm = q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
    if (mpz_odd_p(norm.get_mpz_t())) return q;
  }
}

std::array<mpz_class, 3> RandomTranslation(std::mt19937_64& rng, int bound) {
  while (true) {
    std::array<mpz_class, 3> t;
    for (auto& c : t) c = Uniform(rng, -bound, bound);
    if (!AllEven(t)) return t;
  }
}

Scene SamplePoints(Scene scene, std::mt19937_64& rng, const SceneParams& params) {
  while (static_cast<int>(scene.points.size()) < params.num_points) {
    std::array<mpz_class, 4> point;
    for (int i = 0; i < 3; ++i) {
      point[i] = Uniform(rng, -params.coordinate_bound, params.coordinate_bound);
    }
    point[3] = Uniform(rng, 1, 4);
    PointPair pair{scene.first.Project(point), scene.second.Project(point)};
    // Only odd homogeneous scales are allowed, so a projection with no odd
    // component is resampled.
    if (AllEven(pair.u) || AllEven(pair.v)) continue;
    scene.points.push_back(point);
    scene.pairs.push_back(std::move(pair));
  }
  return scene;
}

}  // namespace

std::array<mpz_class, 3> CameraMatrix::Project(
    const std::array<mpz_class, 4>& point) const {
  std::array<mpz_class, 3> out;
  for (int r = 0; r < 3; ++r) {
    out[r] = 0;
    for (int c = 0; c < 4; ++c) out[r] += numerator[4 * r + c] * point[c];
  }
  return out;
}

int CameraMatrix::Rank() const {
  // Largest nonvanishing minor over the rationals.
  for (int skip = 0; skip < 4; ++skip) {
    std::vector<IntVector> m(3);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 4; ++c) {
        if (c != skip) m[r].push_back(numerator[4 * r + c]);
      }
    }
    if (IntegerDeterminant(m) != 0) return 3;
  }
  for (int r0 = 0; r0 < 3; ++r0) {
    for (int r1 = r0 + 1; r1 < 3; ++r1) {
      for (int c0 = 0; c0 < 4; ++c0) {
        for (int c1 = c0 + 1; c1 < 4; ++c1) {
          if (numerator[4 * r0 + c0] * numerator[4 * r1 + c1] !=
              numerator[4 * r0 + c1] * numerator[4 * r1 + c0]) {
            return 2;
          }
        }
      }
    }
  }
  return std::any_of(numerator.begin(), numerator.end(),
                     [](const mpz_class& v) { return v != 0; })
             ? 1
             : 0;
}

std::vector<Correspondence> Scene::Correspondences(int precision) const {
  return Correspondences(precision, 0, pairs.size());
}

std::vector<Correspondence> Scene::Correspondences(int precision,
                                                   size_t first_index,
                                                   size_t count) const {
  if (first_index + count > pairs.size()) {
    throw Error(Status::kOutOfRange, "scene has " + std::to_string(pairs.size()) +
                                         " correspondences");
  }
  std::vector<Correspondence> out;
  for (size_t i = first_index; i < first_index + count; ++i) {
    out.push_back(Correspondence::FromIntegers(pairs[i].u, pairs[i].v, precision));
  }
  return out;
}

Mat3 Skew(const std::array<mpz_class, 3>& t) {
  return {0, -t[2], t[1], t[2], 0, -t[0], -t[1], t[0], 0};
}

Mat3 QuaternionRotationNumerator(const std::array<mpz_class, 4>& q) {
  const mpz_class &a = q[0], &b = q[1], &c = q[2], &d = q[3];
  return {a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c),
          2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b),
          2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d};
}

Scene MakeScene(uint64_t seed, const std::array<mpz_class, 4>& quaternion,
                const std::array<mpz_class, 3>& translation,
                const SceneParams& params) {
  const mpz_class norm = quaternion[0] * quaternion[0] +
                         quaternion[1] * quaternion[1] +
                         quaternion[2] * quaternion[2] +
                         quaternion[3] * quaternion[3];
  if (mpz_even_p(norm.get_mpz_t())) {
    throw Error(Status::kOutOfRange, "quaternion norm must be odd");
  }
  if (AllEven(translation)) {
    throw Error(Status::kOutOfRange, "translation needs an odd entry");
  }
  Scene scene;
  scene.seed = seed;
  scene.quaternion = quaternion;
  scene.translation = translation;

  const Mat3 rotation = QuaternionRotationNumerator(quaternion);
  // first = [R | t] = [R_num | norm t] / norm.
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) scene.first.numerator[4 * r + c] = rotation[3 * r + c];
    scene.first.numerator[4 * r + 3] = norm * translation[r];
  }
  scene.first.denominator = norm;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 4; ++c) scene.second.numerator[4 * r + c] = r == c ? 1 : 0;
  }

  const Mat3 skew = Skew(translation);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      mpz_class acc = 0;
      for (int k = 0; k < 3; ++k) acc += skew[3 * i + k] * rotation[3 * k + j];
      scene.essential_numerator[3 * i + j] = acc;
    }
  }
  scene.essential_denominator = norm;

  std::mt19937_64 rng(seed);
  return SamplePoints(std::move(scene), rng, params);
}

Scene GenScene(uint64_t seed, const SceneParams& params) {
  std::mt19937_64 rng(seed);
  const auto q = RandomQuaternion(rng, params.rotation_bound);
  const auto t = RandomTranslation(rng, params.translation_bound);
  // Points come from a stream derived from the same seed.
  return MakeScene(rng(), q, t, params);
}

PerturbedCoefficients Perturb(const std::vector<mpz_class>& coefficients,
                              const PerturbationSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  const mpz_class scale = PrimePower(2, spec.precision);
  const long bound = 1L << std::min(spec.magnitude_bits, 30);
  std::uniform_int_distribution<long> dist(-bound, bound);
  PerturbedCoefficients out;
  out.original = coefficients;
  for (const auto& c : coefficients) {
    const mpz_class r = dist(rng);
    out.offsets.push_back(r);
    out.perturbed.push_back(c + scale * r);
  }
  return out;
}

ResidueMatrix Perturb(const ResidueMatrix& a, const PerturbationSpec& spec) {
  std::vector<mpz_class> flat;
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) flat.push_back(a(r, c));
  }
  const PerturbedCoefficients p = Perturb(flat, spec);
  ResidueMatrix out(a.rows(), a.cols(), a.precision());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out.Set(r, c, p.perturbed[r * a.cols() + c]);
  }
  return out;
}

int StabilityReport::FirstDivergentDigit() const {
  int digit = precision;
  for (const auto& row : rows) digit = std::min(digit, row.first_divergent);
  return digit;
}

StabilityReport RunStability(int precision, int data_precision, int num_scenes,
                             uint64_t seed) {
  if (data_precision < precision) {
    throw Error(Status::kOutOfRange, "data precision below target precision");
  }
  StabilityReport report;
  report.precision = precision;
  report.data_precision = data_precision;
  const std::array<std::pair<Method, size_t>, 3> methods = {{
      {Method::kEightPoint, 8}, {Method::kSevenPoint, 7}, {Method::kFivePoint, 5}}};
  for (const auto& [method, count] : methods) {
    report.rows.push_back({method, 0, 0, precision});
  }
  SceneParams params;
  params.num_points = 8;
  for (int s = 0; s < num_scenes; ++s) {
    const Scene scene = GenScene(seed + static_cast<uint64_t>(s), params);
    for (size_t m = 0; m < methods.size(); ++m) {
      const auto [method, count] = methods[m];
      StabilityRow& row = report.rows[m];
      const ResidueMatrix a =
          BuildEpipolarMatrix(scene.Correspondences(data_precision, 0, count),
                              data_precision);
      PerturbationSpec spec;
      spec.precision = precision;
      spec.seed = seed ^ (static_cast<uint64_t>(s) << 8) ^ m;
      const ResidueMatrix noisy = Perturb(a, spec);

      std::vector<EssentialCandidate> clean_out, noisy_out;
      std::optional<Status> clean_status, noisy_status;
      try {
        clean_out = SolveWith(method, a, precision);
      } catch (const Error& e) {
        clean_status = e.status();
      }
      try {
        noisy_out = SolveWith(method, noisy, precision);
      } catch (const Error& e) {
        noisy_status = e.status();
      }
      ++row.compared;
      if (clean_status != noisy_status || clean_out.size() != noisy_out.size()) {
        row.first_divergent = 0;
        continue;
      }
      for (size_t i = 0; i < clean_out.size(); ++i) {
        ++row.candidates;
        for (int k = 0; k < 9; ++k) {
          const int v = TwoAdicValuation(
              Mod2k(clean_out[i].e[k] - noisy_out[i].e[k], precision), precision);
          row.first_divergent = std::min(row.first_divergent, v);
        }
      }
    }
  }
  return report;
}

}  // namespace dyadic
