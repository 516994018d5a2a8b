#pragma once

// Phase operators sum_k theta_k |v_k><v_k| built from a basis.

#include <optional>
#include <string>
#include <vector>

#include "mubkit/builder.hpp"
#include "mubkit/linalg.hpp"

namespace mubkit {

struct PhaseOperator {
  std::size_t dim = 0;
  CMat matrix;
  std::vector<double> spectrum;
  std::string source_label;
};

/// theta_k = 2 pi k / d.
std::vector<double> default_spectrum(std::size_t d);

/// Throws DegenerateSpectrum when two phases coincide (the basis would not be
/// recoverable) and NotOrthonormal for a non-orthonormal basis.
PhaseOperator phase_operator(const Basis& basis, std::optional<std::vector<double>> spectrum = std::nullopt);

/// One operator per basis of the set, all with the default spectrum.
std::vector<PhaseOperator> mub_phase_operators(const MubSet& s);

struct RoundtripReport {
  /// For each eigenvector (ascending eigenvalue), the matched basis index.
  std::vector<std::size_t> matching;
  /// Overlap magnitude of each matched pair.
  std::vector<double> overlaps;
  double min_overlap = 1.0;
  double max_eigenvalue_error = 0.0;
  bool bijective = false;
  bool pass = false;
};

/// Diagonalizes op.matrix and greedily matches eigenvectors to the basis by
/// maximal overlap.
RoundtripReport roundtrip_check(const PhaseOperator& op, const Basis& original, double tol = 1e-6);

/// exp(i Theta) from the spectral decomposition of the operator matrix.
CMat phase_evolution(const PhaseOperator& op);

}  // namespace mubkit
