#pragma once

// Constructions of mutually unbiased bases.
//
// Every set puts the computational basis first. Inside a basis vectors are
// ordered by ascending b (Galois-field family) or ascending eigenvalue angle
// (clock/shift family).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mubkit/gf.hpp"
#include "mubkit/linalg.hpp"

namespace mubkit {

enum class Method { Fourier, Qubit, ClockShift, WoottersFields, Tensor, Search };

std::string_view method_name(Method m);
Method method_from_name(std::string_view name);

struct MubSet {
  std::size_t dim = 0;
  std::vector<Basis> bases;
  Method method = Method::Fourier;
  std::optional<Field> field;

  std::size_t count() const { return bases.size(); }
};

/// exp(2 pi i k / n) with k reduced mod n first.
cplx root_of_unity(long long k, long long n);

/// Vector k has amplitude omega_d^(nk) / sqrt(d) at position n.
Basis fourier_basis(std::size_t d);

/// Shift X|n> = |n+1 mod d> and clock Z|n> = omega_d^n |n>.
CMat shift_matrix(std::size_t d);
CMat clock_matrix(std::size_t d);

/// Computational basis plus the Fourier pair.
MubSet fourier_mubs(std::size_t d);

/// The three qubit bases: computational, Hadamard (1, +-1)/sqrt2, and the rows
/// of HS, (1, +-i)/sqrt2.
MubSet qubit_mubs();

/// p + 1 bases for an odd prime p: the computational basis followed by the
/// eigenbases of X Z^k, k = 0..p-1.
MubSet clock_shift_mubs(int p);

/// The Galois-field family over an odd-characteristic field: the computational
/// basis, then for each a the basis whose vector b has amplitude
/// omega_p^tr(n (a n + b)) / sqrt(d) at position n.
MubSet wootters_fields_mubs(const Field& field);

/// Sum over n of omega_p^tr(n (a n + b)).
cplx gauss_sum(const Field& field, const Element& a, const Element& b);

struct Char2Witness {
  std::size_t dim = 0;
  /// magnitudes[a][b] = |S(a, b)| with a, b field indices.
  std::vector<std::vector<double>> magnitudes;
  /// True when no pair with a != 0 reaches sqrt(d).
  bool no_unbiased_pair = false;
  /// True when every magnitude is 0 or d within tol.
  bool only_zero_or_d = false;
};

Char2Witness char2_failure_witness(const Field& field, double tol = kDefaultTol);

/// Basis i of the result is bases[i] of s1 tensored with bases[i] of s2.
MubSet tensor_mubs(const MubSet& s1, const MubSet& s2);

/// Largest set this library can build in dimension d by tensoring the best
/// available set for each prime-power factor (qubit triple for 2, qubit
/// products for 2^e, the Galois-field family for odd prime powers).
MubSet factorized_mubs(std::size_t d);

}  // namespace mubkit
