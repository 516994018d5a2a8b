#include "mubkit/checker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mubkit/error.hpp"
#include "mubkit/gf.hpp"

namespace mubkit {

namespace {

constexpr std::int64_t kMaxBoundsDim = 1'000'000'000'000;

}  // namespace

OrthoReport check_orthonormal(const Basis& b, double tol) {
  OrthoReport r;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i; j < b.size(); ++j) {
      const double target = i == j ? 1.0 : 0.0;
      r.deviation = std::max(r.deviation, std::abs(inner(b.vectors[i], b.vectors[j]) - target));
    }
  }
  // A basis of C^d needs exactly d vectors.
  if (b.size() != b.dim()) r.deviation = std::max(r.deviation, 1.0);
  r.pass = r.deviation <= tol;
  return r;
}

PairReport check_unbiased_pair(const Basis& a, const Basis& b, double tol) {
  if (a.dim() != b.dim()) {
    throw Error(Errc::DimMismatch, "bases of dimension " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
  const double target = 1.0 / std::sqrt(static_cast<double>(a.dim()));
  PairReport r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double dev = std::abs(overlap_mag(a.vectors[i], b.vectors[j]) - target);
      if (dev > r.deviation) {
        r.deviation = dev;
        r.worst_a = i;
        r.worst_b = j;
      }
    }
  }
  r.pass = r.deviation <= tol;
  return r;
}

MubReport check_mub_set(std::span<const Basis> bases, double tol) {
  if (bases.empty()) throw Error(Errc::EmptyInput, "no bases to check");
  MubReport rep;
  rep.dim = bases.front().dim();
  rep.basis_count = bases.size();
  rep.tolerance = tol;
  for (const auto& b : bases) {
    if (b.dim() != rep.dim) throw Error(Errc::DimMismatch, "bases of differing dimension in one set");
    rep.ortho.push_back(check_orthonormal(b, tol));
    rep.max_deviation = std::max(rep.max_deviation, rep.ortho.back().deviation);
  }
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      PairReport pr = check_unbiased_pair(bases[i], bases[j], tol);
      pr.i = i;
      pr.j = j;
      rep.max_deviation = std::max(rep.max_deviation, pr.deviation);
      rep.pairs.push_back(pr);
    }
  }
  rep.exceeds_bound = rep.basis_count > rep.dim + 1;
  rep.pass = rep.max_deviation <= tol && !rep.exceeds_bound;
  return rep;
}

MubReport check_mub_set(const MubSet& s, double tol) { return check_mub_set(std::span<const Basis>(s.bases), tol); }

SicReport check_sic_povm(std::span<const CVec> vectors, double tol) {
  if (vectors.empty()) throw Error(Errc::WrongCount, "no vectors");
  const std::size_t d = vectors.front().dim();
  for (const auto& v : vectors) {
    if (v.dim() != d) throw Error(Errc::DimMismatch, "vectors of differing dimension");
  }
  if (vectors.size() != d * d) {
    throw Error(Errc::WrongCount, "expected " + std::to_string(d * d) + " vectors, got " + std::to_string(vectors.size()));
  }

  SicReport r;
  r.dim = d;
  r.count = vectors.size();
  r.tolerance = tol;
  const double target = 1.0 / std::sqrt(static_cast<double>(d + 1));
  CMat frame(d, d);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    r.norm_deviation = std::max(r.norm_deviation, std::abs(vectors[i].norm() - 1.0));
    frame += outer(vectors[i], vectors[i]);
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      const double dev = std::abs(overlap_mag(vectors[i], vectors[j]) - target);
      if (dev > r.overlap_deviation) {
        r.overlap_deviation = dev;
        r.worst_pair = {i, j};
      }
    }
  }
  frame *= 1.0 / static_cast<double>(d);
  r.frame_deviation = max_abs(frame - CMat::identity(d));
  r.max_deviation = std::max(r.norm_deviation, r.overlap_deviation);
  r.pass = r.max_deviation <= tol;
  return r;
}

std::vector<CVec> qubit_tetrahedron() {
  const double a = 1.0 / std::sqrt(3.0);
  const double b = std::sqrt(2.0 / 3.0);
  std::vector<CVec> out{CVec{1.0, 0.0}};
  for (int k = 0; k < 3; ++k) out.push_back(CVec{a, b * root_of_unity(k, 3)});
  return out;
}

BoundsReport nmax_bounds(std::int64_t d) {
  if (d < 2 || d > kMaxBoundsDim) throw Error(Errc::OutOfRange, "dimension must lie in [2, 1e12]");
  BoundsReport r;
  r.d = d;
  r.factorization = factorize(d);
  std::int64_t smallest = std::numeric_limits<std::int64_t>::max();
  for (const auto& [p, e] : r.factorization) {
    std::int64_t pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    smallest = std::min(smallest, pe);
  }
  r.lower = 1 + smallest;
  r.upper = d + 1;
  r.is_prime_power = r.factorization.size() == 1;
  return r;
}

}  // namespace mubkit
