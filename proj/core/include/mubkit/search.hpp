#pragma once

// Numerical search for sets of mutually unbiased bases.
//
// The merit function is
//   sum over basis pairs, sum over vector pairs, (|<a|b>|^2 - 1/d)^2
// and vanishes exactly on MUB sets. Each free basis is a d x d unitary
// (columns are the vectors); the first basis is held at the identity.
// Descent steps move along the Riemannian gradient and return to the unitary
// group through the polar factor.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mubkit/builder.hpp"
#include "mubkit/linalg.hpp"

namespace mubkit {

struct SearchConfig {
  std::size_t dim = 2;
  std::size_t target_bases = 2;
  std::size_t restarts = 1;
  std::size_t max_iters = 2000;
  double step = 0.1;
  std::uint64_t seed = 0;
  double tolerance = 1e-14;
  /// Bases to start from; missing ones are drawn at random.
  std::optional<MubSet> init;
  /// Worker threads for restarts; 0 means hardware concurrency. Results do
  /// not depend on this value.
  std::size_t threads = 1;
};

struct SearchReport {
  double best_residual = 0.0;
  MubSet best_set;
  std::size_t best_restart = 0;
  /// Final residual of each restart, in restart order.
  std::vector<double> residual_history;
  /// Iterations used by each restart.
  std::vector<std::size_t> iterations;
  bool success = false;
  std::uint64_t seed = 0;
};

/// Pairs (i, j), i < j, that enter the merit function.
using PairList = std::vector<std::pair<std::size_t, std::size_t>>;

PairList all_pairs(std::size_t count);

double residual(std::span<const CMat> bases, const PairList& pairs);
double residual(std::span<const CMat> bases);
double residual(std::span<const Basis> bases);

/// 2 d f / d conj(U_k) for every basis; index k of the result belongs to
/// bases[k]. Bases flagged as fixed get a zero matrix.
std::vector<CMat> euclidean_gradient(std::span<const CMat> bases, const PairList& pairs,
                                     const std::vector<bool>& fixed);

/// Euclidean gradient projected on the tangent space of the unitary group,
/// U skew(U^dagger G). Basis 0 is the gauge and always gets zero.
std::vector<CMat> gradient(std::span<const CMat> bases);
std::vector<CMat> riemannian_gradient(std::span<const CMat> bases, const PairList& pairs,
                                      const std::vector<bool>& fixed);

/// Haar-like random unitary: Gram-Schmidt on complex Gaussian columns.
CMat random_unitary(std::size_t d, std::uint64_t seed);

/// Derives the seed of one restart from the master seed.
std::uint64_t restart_seed(std::uint64_t master, std::size_t restart);

SearchReport search(const SearchConfig& cfg);

/// Holds every basis of base_set fixed and optimizes one additional basis.
/// The residual only counts pairs that involve the new basis.
SearchReport extend_search(const MubSet& base_set, const SearchConfig& cfg);

}  // namespace mubkit
