#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "mubkit/builder.hpp"
#include "mubkit/linalg.hpp"
#include "test_util.hpp"

using namespace mubkit;
using testutil::code_of;

namespace {

CVec random_vec(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  CVec v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = cplx(n(rng), n(rng));
  return v;
}

CMat random_hermitian(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  CMat a(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a(i, j) = cplx(n(rng), n(rng));
  return 0.5 * (a + a.adjoint());
}

double eigen_residual(const CMat& m, const CVec& v, cplx lambda) { return (m * v - lambda * v).norm(); }

}  // namespace

TEST_CASE("inner product and overlap examples") {
  const CVec e0 = CVec::unit(2, 0);
  const CVec e1 = CVec::unit(2, 1);
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(overlap_mag(e0, e0) == doctest::Approx(1.0));
  CHECK(overlap_mag(e0, CVec{h, h}) == doctest::Approx(h).epsilon(1e-15));
  CHECK(overlap_mag(e0, e1) == 0.0);
  CHECK(code_of([&] { inner(e0, CVec::unit(3, 0)); }) == Errc::DimMismatch);
}

TEST_CASE("inner product is conjugate symmetric and obeys Cauchy-Schwarz") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + trial % 9;
    const CVec a = random_vec(d, rng), b = random_vec(d, rng);
    CHECK(std::abs(inner(a, b) - std::conj(inner(b, a))) < 1e-12);
    CHECK(overlap_mag(a, b) <= a.norm() * b.norm() + 1e-12);
  }
}

TEST_CASE("tensor index convention") {
  CHECK(tensor_vec(CVec::unit(2, 0), CVec::unit(3, 0)) == CVec::unit(6, 0));
  CHECK(tensor_vec(CVec::unit(2, 1), CVec::unit(3, 2)) == CVec::unit(6, 5));
  const Basis t = tensor(fourier_basis(2), fourier_basis(3));
  CHECK(t.size() == 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      CHECK(std::abs(inner(t.vectors[i], t.vectors[j]) - (i == j ? 1.0 : 0.0)) < 1e-12);
}

TEST_CASE("order-p eigenbasis of the clock matrix is the computational basis") {
  const Basis b = unitary_order_p_eigenbasis(clock_matrix(3), 3);
  REQUIRE(b.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(std::abs(b.vectors[k][k] - 1.0) < 1e-12);
    CHECK(b.vectors[k].norm() == doctest::Approx(1.0));
  }
}

TEST_CASE("order-p eigenbasis of the shift matrix matches the Fourier basis up to phase") {
  const CMat x = shift_matrix(3);
  const Basis b = unitary_order_p_eigenbasis(x, 3);
  const Basis f = fourier_basis(3);
  for (const auto& v : b.vectors) {
    double best = 0.0;
    for (const auto& w : f.vectors) best = std::max(best, overlap_mag(v, w));
    CHECK(best == doctest::Approx(1.0).epsilon(1e-9));
  }
  // Angles ascend from 0: eigenvalues 1, omega, omega^2.
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(eigen_residual(x, b.vectors[k], root_of_unity(static_cast<long long>(k), 3)) <= 1e-9);
  }
}

TEST_CASE("eigenbasis of X_5 Z_5^2 is unbiased to the computational basis") {
  const CMat z = clock_matrix(5);
  const CMat m = shift_matrix(5) * z * z;
  const Basis b = unitary_order_p_eigenbasis(m, 5);
  REQUIRE(b.size() == 5);
  CMat projector_sum(5, 5);
  for (const auto& v : b.vectors) {
    for (std::size_t n = 0; n < 5; ++n) CHECK(std::abs(std::abs(v[n]) - 1.0 / std::sqrt(5.0)) <= 1e-9);
    projector_sum += outer(v, v);
  }
  CHECK(max_abs(projector_sum - CMat::identity(5)) <= 1e-9);
  CHECK(unitarity_error(b.as_matrix()) <= 1e-9);
}

TEST_CASE("order-p eigenbasis with a nontrivial phase") {
  // (X_2 Z_2)^2 = -I: the eigenvalues are the square roots of -1.
  const CMat m = shift_matrix(2) * clock_matrix(2);
  const Basis b = unitary_order_p_eigenbasis(m, 2, -1.0);
  CHECK(eigen_residual(m, b.vectors[0], cplx(0.0, 1.0)) <= 1e-9);
  CHECK(eigen_residual(m, b.vectors[1], cplx(0.0, -1.0)) <= 1e-9);
  CHECK(code_of([&] { unitary_order_p_eigenbasis(m, 2); }) == Errc::NotOrderP);
}

TEST_CASE("order-p eigenbasis error paths") {
  CHECK(code_of([] { unitary_order_p_eigenbasis(shift_matrix(4), 3); }) == Errc::NotOrderP);
  CHECK(code_of([] { unitary_order_p_eigenbasis(CMat::identity(3), 3); }) == Errc::DegenerateProjector);
  // X_6 has order 6, not 3... but X_6^2 has order 3 with every eigenspace of rank 2.
  const CMat x6 = shift_matrix(6);
  CHECK(code_of([&] { unitary_order_p_eigenbasis(x6 * x6, 3); }) == Errc::DegenerateProjector);
}

TEST_CASE("canonical phase makes the first significant amplitude real positive") {
  const CVec v = canonical_phase(CVec{cplx(1e-12, 0.0), cplx(0.0, -0.5), cplx(0.3, 0.4)});
  CHECK(v[1].imag() == 0.0);
  CHECK(v[1].real() == doctest::Approx(0.5));
  CHECK(std::abs(v[2]) == doctest::Approx(0.5));
}

TEST_CASE("hermitian_spectral examples") {
  const Spectral id = hermitian_spectral(CMat::identity(4));
  for (double l : id.eigenvalues) CHECK(l == doctest::Approx(1.0));

  const std::vector<cplx> diag{3.0, -1.0, 2.0, 0.5};
  const Spectral sp = hermitian_spectral(CMat::diagonal(diag));
  CHECK(sp.eigenvalues == std::vector<double>{-1.0, 0.5, 2.0, 3.0});
  CHECK(sp.eigenvectors.vectors[0] == CVec::unit(4, 1));
  CHECK(sp.eigenvectors.vectors[3] == CVec::unit(4, 0));

  CMat bad = CMat::identity(2);
  bad(0, 1) = 1.0;
  CHECK(code_of([&] { hermitian_spectral(bad); }) == Errc::NotHermitian);
  CHECK(code_of([] { hermitian_spectral(CMat(2, 3)); }) == Errc::DimMismatch);
}

TEST_CASE("hermitian_spectral reconstructs random Hermitian matrices") {
  std::mt19937_64 rng(5);
  for (std::size_t d = 1; d <= 16; ++d) {
    const CMat m = random_hermitian(d, rng);
    const Spectral sp = hermitian_spectral(m);
    CMat rebuilt(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      const CVec& v = sp.eigenvectors.vectors[k];
      CHECK(eigen_residual(m, v, sp.eigenvalues[k]) <= 1e-8);
      rebuilt += sp.eigenvalues[k] * outer(v, v);
      if (k > 0) CHECK(sp.eigenvalues[k - 1] <= sp.eigenvalues[k]);
    }
    CHECK(max_abs(rebuilt - m) <= 1e-8);
    CHECK(unitarity_error(sp.eigenvectors.as_matrix()) <= 1e-10);
  }
}

TEST_CASE("hermitian_spectral handles degenerate spectra") {
  // Projector of rank 2 in C^4: eigenvalues {0, 0, 1, 1}.
  const CVec a = (1.0 / std::sqrt(2.0)) * CVec{1.0, cplx(0.0, 1.0), 0.0, 0.0};
  const CVec b = CVec{0.0, 0.0, 0.6, cplx(0.0, 0.8)};
  const Spectral sp = hermitian_spectral(outer(a, a) + outer(b, b));
  CHECK(sp.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(sp.eigenvalues[3] == doctest::Approx(1.0));
}

TEST_CASE("polar_unitary returns the unitary factor") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> n(0.0, 1.0);
  for (std::size_t d : {1u, 2u, 3u, 6u, 8u}) {
    CMat y(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) y(i, j) = cplx(n(rng), n(rng));
    const CMat u = polar_unitary(y);
    CHECK(unitarity_error(u) <= 1e-10);
    // U^dagger Y is the positive factor: Hermitian.
    CHECK(hermiticity_error(u.adjoint() * y) <= 1e-9);
    CHECK(max_abs(polar_unitary(u) - u) <= 1e-10);
  }
  CHECK(code_of([] { polar_unitary(CMat(2, 2)); }) == Errc::NotOrthonormal);
}
