#include "mubkit/phase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mubkit/checker.hpp"
#include "mubkit/error.hpp"

namespace mubkit {

namespace {

constexpr double kDistinctPhaseGap = 1e-12;
constexpr double kEigenvalueTol = 1e-8;

}  // namespace

std::vector<double> default_spectrum(std::size_t d) {
  std::vector<double> out(d);
  for (std::size_t k = 0; k < d; ++k) out[k] = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d);
  return out;
}

PhaseOperator phase_operator(const Basis& basis, std::optional<std::vector<double>> spectrum) {
  const std::size_t d = basis.dim();
  if (!check_orthonormal(basis).pass) throw Error(Errc::NotOrthonormal, "basis '" + basis.label + "'");
  std::vector<double> theta = spectrum ? std::move(*spectrum) : default_spectrum(d);
  if (theta.size() != d) {
    throw Error(Errc::DimMismatch, "spectrum has " + std::to_string(theta.size()) + " values for dimension " +
                                       std::to_string(d));
  }
  std::vector<double> sorted = theta;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k] - sorted[k - 1] <= kDistinctPhaseGap) {
      throw Error(Errc::DegenerateSpectrum, "repeated phase " + std::to_string(sorted[k]));
    }
  }

  PhaseOperator op;
  op.dim = d;
  op.matrix = CMat(d, d);
  for (std::size_t k = 0; k < d; ++k) op.matrix += theta[k] * outer(basis.vectors[k], basis.vectors[k]);
  // Exact Hermitian symmetry; the sum above is Hermitian only up to rounding.
  op.matrix = 0.5 * (op.matrix + op.matrix.adjoint());
  op.spectrum = std::move(theta);
  op.source_label = basis.label;
  return op;
}

std::vector<PhaseOperator> mub_phase_operators(const MubSet& s) {
  std::vector<PhaseOperator> ops;
  for (std::size_t a = 0; a < s.bases.size(); ++a) {
    PhaseOperator op = phase_operator(s.bases[a]);
    op.source_label = "a=" + std::to_string(a) + " " + s.bases[a].label;
    ops.push_back(std::move(op));
  }
  return ops;
}

RoundtripReport roundtrip_check(const PhaseOperator& op, const Basis& original, double tol) {
  RoundtripReport rep;
  if (original.dim() != op.dim || original.size() != op.dim) return rep;
  const Spectral sp = hermitian_spectral(op.matrix);

  std::vector<bool> used(original.size(), false);
  rep.bijective = true;
  for (std::size_t e = 0; e < sp.eigenvectors.size(); ++e) {
    std::size_t best = original.size();
    double best_overlap = -1.0;
    for (std::size_t k = 0; k < original.size(); ++k) {
      if (used[k]) continue;
      const double ov = overlap_mag(sp.eigenvectors.vectors[e], original.vectors[k]);
      if (ov > best_overlap) {
        best_overlap = ov;
        best = k;
      }
    }
    if (best == original.size()) {
      rep.bijective = false;
      break;
    }
    used[best] = true;
    rep.matching.push_back(best);
    rep.overlaps.push_back(best_overlap);
    rep.min_overlap = std::min(rep.min_overlap, best_overlap);
    if (best < op.spectrum.size()) {
      rep.max_eigenvalue_error = std::max(rep.max_eigenvalue_error, std::abs(sp.eigenvalues[e] - op.spectrum[best]));
    }
  }
  rep.bijective = rep.bijective && rep.matching.size() == original.size();
  rep.pass = rep.bijective && rep.min_overlap >= 1.0 - tol && rep.max_eigenvalue_error <= kEigenvalueTol;
  return rep;
}

CMat phase_evolution(const PhaseOperator& op) {
  const Spectral sp = hermitian_spectral(op.matrix);
  CMat u(op.dim, op.dim);
  for (std::size_t k = 0; k < sp.eigenvalues.size(); ++k) {
    u += std::polar(1.0, sp.eigenvalues[k]) * outer(sp.eigenvectors.vectors[k], sp.eigenvectors.vectors[k]);
  }
  return u;
}

}  // namespace mubkit
