#pragma once

// Verification of orthonormality, unbiasedness, SIC-POVM overlaps and the
// bounds on the number of mutually unbiased bases.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mubkit/builder.hpp"
#include "mubkit/linalg.hpp"

namespace mubkit {

inline constexpr double kSearchTol = 1e-6;

struct OrthoReport {
  double deviation = 0.0;  // max |<v_i|v_j> - delta_ij|
  bool pass = false;
};

struct PairReport {
  std::size_t i = 0;
  std::size_t j = 0;
  double deviation = 0.0;  // max ||<a|b>| - 1/sqrt(d)|
  /// Vector indices attaining the deviation.
  std::size_t worst_a = 0;
  std::size_t worst_b = 0;
  bool pass = false;
};

struct MubReport {
  std::size_t dim = 0;
  std::size_t basis_count = 0;
  std::vector<PairReport> pairs;
  std::vector<OrthoReport> ortho;
  double max_deviation = 0.0;
  double tolerance = kDefaultTol;
  /// Set when more than d + 1 bases were supplied.
  bool exceeds_bound = false;
  bool pass = false;
};

OrthoReport check_orthonormal(const Basis& b, double tol = kDefaultTol);
PairReport check_unbiased_pair(const Basis& a, const Basis& b, double tol = kDefaultTol);
MubReport check_mub_set(const MubSet& s, double tol = kDefaultTol);
MubReport check_mub_set(std::span<const Basis> bases, double tol = kDefaultTol);

struct SicReport {
  std::size_t dim = 0;
  std::size_t count = 0;
  double norm_deviation = 0.0;     // max |‖v‖ - 1|
  double overlap_deviation = 0.0;  // max ||<a|b>| - 1/sqrt(d+1)| over a != b
  std::pair<std::size_t, std::size_t> worst_pair{0, 0};
  /// max |(1/d) sum |a><a| - I|; reported, never part of the verdict.
  double frame_deviation = 0.0;
  double max_deviation = 0.0;
  double tolerance = kDefaultTol;
  bool pass = false;
};

SicReport check_sic_povm(std::span<const CVec> vectors, double tol = kDefaultTol);

/// The qubit SIC: (1,0) and (1/sqrt3, sqrt(2/3) omega_3^k) for k = 0, 1, 2.
std::vector<CVec> qubit_tetrahedron();

struct BoundsReport {
  std::int64_t d = 0;
  std::vector<std::pair<std::int64_t, int>> factorization;
  std::int64_t lower = 0;  // 1 + min p_i^e_i
  std::int64_t upper = 0;  // d + 1
  bool is_prime_power = false;
};

BoundsReport nmax_bounds(std::int64_t d);

}  // namespace mubkit
