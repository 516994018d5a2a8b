#include "mubkit/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <random>
#include <thread>

#include "mubkit/checker.hpp"
#include "mubkit/error.hpp"

namespace mubkit {

namespace {

constexpr double kArmijo = 1e-4;
constexpr double kBacktrack = 0.5;
constexpr double kMinStep = 1e-20;
constexpr double kGradientFloor = 1e-12;

struct RestartResult {
  std::vector<CMat> bases;
  double residual = 0.0;
  std::size_t iterations = 0;
};

double sq_norm(const CMat& m) {
  double s = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s += std::norm(m(r, c));
  return s;
}

CMat skew(const CMat& a) { return 0.5 * (a - a.adjoint()); }

void validate(const SearchConfig& cfg) {
  if (cfg.dim < 1) throw Error(Errc::InvalidConfig, "dimension must be >= 1");
  if (cfg.target_bases < 2) throw Error(Errc::InvalidConfig, "need at least 2 bases");
  if (cfg.restarts < 1) throw Error(Errc::InvalidConfig, "need at least 1 restart");
  if (!(cfg.step > 0.0)) throw Error(Errc::InvalidConfig, "step must be positive");
  if (!(cfg.tolerance >= 0.0)) throw Error(Errc::InvalidConfig, "tolerance must be non-negative");
  if (cfg.init && cfg.init->dim != cfg.dim) throw Error(Errc::InvalidConfig, "init set has the wrong dimension");
}

RestartResult descend(std::vector<CMat> bases, const std::vector<bool>& fixed, const PairList& pairs,
                      const SearchConfig& cfg) {
  RestartResult out;
  double f = residual(bases, pairs);
  double step = cfg.step;
  std::size_t it = 0;
  for (; it < cfg.max_iters; ++it) {
    if (f <= cfg.tolerance) break;
    const auto grad = riemannian_gradient(bases, pairs, fixed);
    double g2 = 0.0;
    for (const auto& g : grad) g2 += sq_norm(g);
    if (std::sqrt(g2) < kGradientFloor) break;

    bool accepted = false;
    std::vector<CMat> trial = bases;
    while (step > kMinStep) {
      for (std::size_t k = 0; k < bases.size(); ++k) {
        if (!fixed[k]) trial[k] = polar_unitary(bases[k] - step * grad[k]);
      }
      const double f_trial = residual(trial, pairs);
      if (f_trial <= f - kArmijo * step * g2) {
        bases.swap(trial);
        f = f_trial;
        accepted = true;
        break;
      }
      step *= kBacktrack;
    }
    if (!accepted) break;
    // Let the next line search start from a longer step.
    step *= 2.0;
  }
  out.bases = std::move(bases);
  out.residual = f;
  out.iterations = it;
  return out;
}

std::vector<RestartResult> run_restarts(const SearchConfig& cfg, const std::vector<bool>& fixed, const PairList& pairs,
                                        const std::function<std::vector<CMat>(std::size_t)>& make_start) {
  std::vector<RestartResult> results(cfg.restarts);
  std::size_t workers = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
  workers = std::min(workers, cfg.restarts);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t r = next++; r < cfg.restarts; r = next++) {
      results[r] = descend(make_start(r), fixed, pairs, cfg);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return results;
}

SearchReport summarize(const SearchConfig& cfg, std::vector<RestartResult> results) {
  SearchReport rep;
  rep.seed = cfg.seed;
  std::size_t best = 0;
  for (std::size_t r = 0; r < results.size(); ++r) {
    rep.residual_history.push_back(results[r].residual);
    rep.iterations.push_back(results[r].iterations);
    if (results[r].residual < results[best].residual) best = r;
  }
  rep.best_restart = best;
  rep.best_residual = results[best].residual;
  rep.success = rep.best_residual <= cfg.tolerance;
  rep.best_set.dim = cfg.dim;
  rep.best_set.method = Method::Search;
  for (std::size_t k = 0; k < results[best].bases.size(); ++k) {
    rep.best_set.bases.push_back(Basis::from_matrix(results[best].bases[k], "search " + std::to_string(k)));
  }
  return rep;
}

}  // namespace

PairList all_pairs(std::size_t count) {
  PairList pairs;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) pairs.emplace_back(i, j);
  return pairs;
}

double residual(std::span<const CMat> bases, const PairList& pairs) {
  if (bases.empty()) throw Error(Errc::EmptyInput, "no bases");
  const std::size_t d = bases.front().rows();
  for (const auto& b : bases) {
    if (b.rows() != d || b.cols() != d) throw Error(Errc::DimMismatch, "bases of differing dimension");
  }
  const double inv_d = 1.0 / static_cast<double>(d);
  double total = 0.0;
  for (const auto& [i, j] : pairs) {
    const CMat g = bases[i].adjoint() * bases[j];
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        const double dev = std::norm(g(a, b)) - inv_d;
        total += dev * dev;
      }
    }
  }
  return total;
}

double residual(std::span<const CMat> bases) { return residual(bases, all_pairs(bases.size())); }

double residual(std::span<const Basis> bases) {
  std::vector<CMat> mats;
  for (const auto& b : bases) mats.push_back(b.as_matrix());
  return residual(mats);
}

std::vector<CMat> euclidean_gradient(std::span<const CMat> bases, const PairList& pairs,
                                     const std::vector<bool>& fixed) {
  const std::size_t d = bases.front().rows();
  const double inv_d = 1.0 / static_cast<double>(d);
  std::vector<CMat> grad(bases.size(), CMat(d, d));
  for (const auto& [i, j] : pairs) {
    CMat g = bases[i].adjoint() * bases[j];
    // Entry-wise 2 (|g|^2 - 1/d) g.
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) g(a, b) *= 2.0 * (std::norm(g(a, b)) - inv_d);
    if (!fixed[j]) grad[j] += 2.0 * (bases[i] * g);
    if (!fixed[i]) grad[i] += 2.0 * (bases[j] * g.adjoint());
  }
  return grad;
}

std::vector<CMat> riemannian_gradient(std::span<const CMat> bases, const PairList& pairs,
                                      const std::vector<bool>& fixed) {
  auto grad = euclidean_gradient(bases, pairs, fixed);
  for (std::size_t k = 0; k < bases.size(); ++k) {
    if (!fixed[k]) grad[k] = bases[k] * skew(bases[k].adjoint() * grad[k]);
  }
  return grad;
}

std::vector<CMat> gradient(std::span<const CMat> bases) {
  std::vector<bool> fixed(bases.size(), false);
  if (!fixed.empty()) fixed[0] = true;
  return riemannian_gradient(bases, all_pairs(bases.size()), fixed);
}

std::uint64_t restart_seed(std::uint64_t master, std::size_t restart) {
  // splitmix64 finalizer over the master seed advanced by the restart index.
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(restart) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CMat random_unitary(std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<CVec> cols;
  for (std::size_t c = 0; c < d; ++c) {
    CVec v(d);
    for (std::size_t r = 0; r < d; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      v[r] = cplx(re, im);
    }
    // Two passes of modified Gram-Schmidt.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : cols) v -= inner(u, v) * u;
    }
    v *= 1.0 / v.norm();
    cols.push_back(std::move(v));
  }
  return CMat::from_columns(cols);
}

SearchReport search(const SearchConfig& cfg) {
  validate(cfg);
  const std::size_t d = cfg.dim;
  const std::size_t k = cfg.target_bases;

  std::vector<CMat> seeded;
  if (cfg.init && !cfg.init->bases.empty()) {
    // Rotate the whole set so its first basis becomes the identity gauge.
    const CMat w = cfg.init->bases.front().as_matrix().adjoint();
    for (std::size_t i = 0; i < std::min(k, cfg.init->bases.size()); ++i) {
      seeded.push_back(i == 0 ? CMat::identity(d) : w * cfg.init->bases[i].as_matrix());
    }
  }

  std::vector<bool> fixed(k, false);
  fixed[0] = true;
  const PairList pairs = all_pairs(k);
  auto make_start = [&](std::size_t r) {
    std::vector<CMat> start = seeded;
    if (start.empty()) start.push_back(CMat::identity(d));
    const std::uint64_t base_seed = restart_seed(cfg.seed, r);
    for (std::size_t i = start.size(); i < k; ++i) start.push_back(random_unitary(d, restart_seed(base_seed, i)));
    return start;
  };
  return summarize(cfg, run_restarts(cfg, fixed, pairs, make_start));
}

SearchReport extend_search(const MubSet& base_set, const SearchConfig& cfg) {
  if (base_set.bases.empty()) throw Error(Errc::InvalidConfig, "empty base set");
  SearchConfig c = cfg;
  c.dim = base_set.dim;
  c.target_bases = base_set.count() + 1;
  c.init.reset();
  validate(c);
  if (!check_mub_set(base_set, kSearchTol).pass) throw Error(Errc::InvalidConfig, "base set is not a MUB set");

  const std::size_t d = base_set.dim;
  const std::size_t fresh = base_set.count();
  std::vector<CMat> fixed_bases;
  for (const auto& b : base_set.bases) fixed_bases.push_back(b.as_matrix());
  std::vector<bool> fixed(fresh + 1, true);
  fixed[fresh] = false;
  PairList pairs;
  for (std::size_t i = 0; i < fresh; ++i) pairs.emplace_back(i, fresh);

  auto make_start = [&](std::size_t r) {
    std::vector<CMat> start = fixed_bases;
    start.push_back(random_unitary(d, restart_seed(restart_seed(c.seed, r), fresh)));
    return start;
  };
  SearchReport rep = summarize(c, run_restarts(c, fixed, pairs, make_start));
  for (std::size_t i = 0; i < fresh; ++i) rep.best_set.bases[i] = base_set.bases[i];
  return rep;
}

}  // namespace mubkit
