#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <vector>

#include "dyadic/linalg.h"
#include "dyadic/pose.h"

namespace dyadic {

// 3x4 projective camera numerator / odd denominator. The denominator is a
// 2-adic unit, so the camera is defined over Z_2.
struct CameraMatrix {
  std::array<mpz_class, 12> numerator;
  mpz_class denominator = 1;

  // Homogeneous image of a homogeneous 3D point, up to the (odd) denominator.
  std::array<mpz_class, 3> Project(const std::array<mpz_class, 4>& point) const;
  int Rank() const;
};

struct Scene {
  uint64_t seed = 0;
  // u comes from `first` = [R | t], v from `second` = [I | 0].
  CameraMatrix first;
  CameraMatrix second;
  std::array<mpz_class, 4> quaternion;
  std::array<mpz_class, 3> translation;
  std::vector<std::array<mpz_class, 4>> points;
  // E_true = skew(t) R(q) = numerator / denominator, denominator odd.
  Mat3 essential_numerator;
  mpz_class essential_denominator = 1;
  std::vector<PointPair> pairs;

  std::vector<Correspondence> Correspondences(int precision) const;
  std::vector<Correspondence> Correspondences(int precision, size_t first_index,
                                              size_t count) const;
};

struct SceneParams {
  int num_points = 8;
  int coordinate_bound = 64;
  int rotation_bound = 4;
  int translation_bound = 4;
};

Mat3 Skew(const std::array<mpz_class, 3>& t);
// Numerator of the rotation of an integer quaternion; divide by |q|^2.
Mat3 QuaternionRotationNumerator(const std::array<mpz_class, 4>& q);

// Scene with an explicit rotation and translation; points sampled from `seed`.
Scene MakeScene(uint64_t seed, const std::array<mpz_class, 4>& quaternion,
                const std::array<mpz_class, 3>& translation,
                const SceneParams& params);
// Rotation, translation and points all drawn from `seed`.
Scene GenScene(uint64_t seed, const SceneParams& params);

enum class PerturbTarget { kMatrixEntries, kCubicCoeffs, kDegree10Coeffs };

struct PerturbationSpec {
  int precision = 16;
  // Noise is 2^precision * r with |r| <= 2^magnitude_bits.
  int magnitude_bits = 8;
  PerturbTarget target = PerturbTarget::kMatrixEntries;
  uint64_t seed = 0;
};

struct PerturbedCoefficients {
  std::vector<mpz_class> original;
  std::vector<mpz_class> perturbed;
  std::vector<mpz_class> offsets;  // the r values
};

PerturbedCoefficients Perturb(const std::vector<mpz_class>& coefficients,
                              const PerturbationSpec& spec);
// Entries get + 2^N r and are reduced at the matrix's own precision.
ResidueMatrix Perturb(const ResidueMatrix& a, const PerturbationSpec& spec);

struct StabilityRow {
  Method method;
  int compared = 0;         // solves compared (including matching failures)
  int candidates = 0;       // candidates compared residue by residue
  int first_divergent = 0;  // lowest differing digit, precision if none
};

struct StabilityReport {
  int precision = 0;
  int data_precision = 0;
  std::vector<StabilityRow> rows;
  int FirstDivergentDigit() const;
};

// Solves original and 2^N-perturbed epipolar systems (data kept at
// `data_precision` >= N) on `num_scenes` scenes for all three methods and
// compares candidate residues mod 2^N.
StabilityReport RunStability(int precision, int data_precision, int num_scenes,
                             uint64_t seed);

}  // namespace dyadic
