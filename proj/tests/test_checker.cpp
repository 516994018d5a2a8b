#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "mubkit/checker.hpp"
#include "mubkit/search.hpp"
#include "test_util.hpp"

using namespace mubkit;
using testutil::code_of;

namespace {

bool oracle_is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

// Prime power iff some prime p divides n and n is a power of p.
bool oracle_is_prime_power(std::int64_t n) {
  for (std::int64_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    if (!oracle_is_prime(p)) return false;
    while (n % p == 0) n /= p;
    return n == 1;
  }
  return false;
}

MubSet scramble(const MubSet& s, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  MubSet out = s;
  for (auto& b : out.bases) {
    for (auto& v : b.vectors) v *= std::polar(1.0, angle(rng));
    std::shuffle(b.vectors.begin(), b.vectors.end(), rng);
  }
  std::shuffle(out.bases.begin(), out.bases.end(), rng);
  return out;
}

}  // namespace

TEST_CASE("check_orthonormal examples") {
  CHECK(check_orthonormal(Basis::computational(4)).deviation == 0.0);
  CHECK(check_orthonormal(Basis::computational(4)).pass);
  CHECK(check_orthonormal(fourier_basis(5)).deviation < 1e-12);

  Basis dup;
  dup.vectors = {CVec::unit(2, 0), CVec::unit(2, 0)};
  const OrthoReport r = check_orthonormal(dup);
  CHECK_FALSE(r.pass);
  CHECK(r.deviation == doctest::Approx(1.0));

  // An orthonormal but incomplete list is not a basis.
  Basis short_list;
  short_list.vectors = {CVec::unit(3, 0), CVec::unit(3, 1)};
  CHECK_FALSE(check_orthonormal(short_list).pass);
}

TEST_CASE("check_unbiased_pair examples") {
  for (std::size_t d = 1; d <= 16; ++d) {
    const PairReport r = check_unbiased_pair(Basis::computational(d), fourier_basis(d));
    CHECK(r.pass);
    CHECK(r.deviation < 1e-12);
  }
  for (std::size_t d : {2u, 3u, 7u}) {
    const PairReport r = check_unbiased_pair(Basis::computational(d), Basis::computational(d));
    CHECK_FALSE(r.pass);
    // Overlaps are 1 and 0, so the worst deviation is 1 - 1/sqrt(d) or 1/sqrt(d).
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    CHECK(r.deviation == doctest::Approx(std::max(1.0 - s, s)));
  }
  const MubSet q = qubit_mubs();
  CHECK(check_unbiased_pair(q.bases[1], q.bases[2], 1e-12).pass);
  CHECK(code_of([] { check_unbiased_pair(Basis::computational(2), Basis::computational(3)); }) ==
        Errc::DimMismatch);
}

TEST_CASE("check_mub_set on constructed sets") {
  const MubReport r9 = check_mub_set(wootters_fields_mubs(Field::create(3, 2)));
  CHECK(r9.pass);
  CHECK(r9.basis_count == 10);
  CHECK(r9.pairs.size() == 45);
  CHECK(r9.ortho.size() == 10);
  CHECK(r9.max_deviation <= 1e-9);
  CHECK(r9.tolerance == kDefaultTol);

  const MubReport r7 = check_mub_set(clock_shift_mubs(7));
  CHECK(r7.pass);
  CHECK(r7.basis_count == 8);

  MubSet dup = qubit_mubs();
  dup.bases.push_back(dup.bases[1]);
  const MubReport rd = check_mub_set(dup);
  CHECK_FALSE(rd.pass);
  // 4 bases in d = 2 also exceeds the d + 1 bound.
  CHECK(rd.exceeds_bound);

  std::vector<Basis> mixed{Basis::computational(2), Basis::computational(3)};
  CHECK(code_of([&] { check_mub_set(std::span<const Basis>(mixed)); }) == Errc::DimMismatch);
  CHECK(code_of([] { check_mub_set(std::span<const Basis>()); }) == Errc::EmptyInput);
}

TEST_CASE("verdict is max_deviation <= tolerance") {
  const MubSet s = clock_shift_mubs(5);
  const MubReport r = check_mub_set(s);
  CHECK(check_mub_set(s, r.max_deviation).pass);
  if (r.max_deviation > 0.0) CHECK_FALSE(check_mub_set(s, r.max_deviation / 2.0).pass);
}

TEST_CASE("the worst pair is located") {
  MubSet s = clock_shift_mubs(3);
  s.bases[2].vectors[1][0] += cplx(0.05, 0.0);
  const MubReport r = check_mub_set(s);
  CHECK_FALSE(r.pass);
  auto worst = std::max_element(r.pairs.begin(), r.pairs.end(),
                                [](const PairReport& a, const PairReport& b) { return a.deviation < b.deviation; });
  CHECK((worst->i == 2 || worst->j == 2));
  CHECK_FALSE(r.ortho[2].pass);
  CHECK(r.max_deviation == std::max(worst->deviation, r.ortho[2].deviation));
}

TEST_CASE("check_mub_set is invariant under phases and permutations") {
  std::mt19937_64 rng(3);
  for (const MubSet& s : {qubit_mubs(), clock_shift_mubs(5), wootters_fields_mubs(Field::create(3, 2)),
                          tensor_mubs(qubit_mubs(), clock_shift_mubs(3))}) {
    for (int trial = 0; trial < 5; ++trial) {
      const MubReport r = check_mub_set(scramble(s, rng));
      CHECK(r.pass);
      CHECK(r.max_deviation <= 1e-9);
    }
  }
}

TEST_CASE("random bases are not unbiased") {
  for (std::size_t d = 2; d <= 8; ++d) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Basis a = Basis::from_matrix(random_unitary(d, seed));
      const Basis b = Basis::from_matrix(random_unitary(d, seed + 100));
      CHECK(check_orthonormal(a).pass);
      CHECK_FALSE(check_unbiased_pair(a, b).pass);
    }
  }
}

TEST_CASE("SIC-POVM checks") {
  const std::vector<CVec> tet = qubit_tetrahedron();
  REQUIRE(tet.size() == 4);
  // Independent evaluation of all six overlaps.
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) CHECK(std::abs(overlap_mag(tet[i], tet[j]) - 1.0 / std::sqrt(3.0)) < 1e-12);

  const SicReport r = check_sic_povm(tet);
  CHECK(r.pass);
  CHECK(r.count == 4);
  CHECK(r.dim == 2);
  CHECK(r.max_deviation < 1e-12);
  CHECK(r.frame_deviation < 1e-12);

  std::vector<CVec> scaled = tet;
  scaled[2] *= 0.9;
  const SicReport rs = check_sic_povm(scaled);
  CHECK_FALSE(rs.pass);
  CHECK(rs.norm_deviation == doctest::Approx(0.1));

  const std::vector<CVec> two{CVec::unit(2, 0), CVec::unit(2, 1)};
  CHECK(code_of([&] { check_sic_povm(two); }) == Errc::WrongCount);
  std::vector<CVec> mixed = tet;
  mixed[3] = CVec::unit(3, 0);
  CHECK(code_of([&] { check_sic_povm(mixed); }) == Errc::DimMismatch);
}

TEST_CASE("nmax_bounds examples") {
  const BoundsReport b6 = nmax_bounds(6);
  CHECK(b6.lower == 3);
  CHECK(b6.upper == 7);
  CHECK_FALSE(b6.is_prime_power);

  const BoundsReport b9 = nmax_bounds(9);
  CHECK(b9.lower == 10);
  CHECK(b9.upper == 10);
  CHECK(b9.is_prime_power);

  const BoundsReport b12 = nmax_bounds(12);
  CHECK(b12.lower == 4);
  CHECK(b12.factorization == std::vector<std::pair<std::int64_t, int>>{{2, 2}, {3, 1}});

  CHECK(nmax_bounds(999999999989LL).is_prime_power);
  CHECK(code_of([] { nmax_bounds(1); }) == Errc::OutOfRange);
  CHECK(code_of([] { nmax_bounds(1000000000001LL); }) == Errc::OutOfRange);
}

TEST_CASE("nmax_bounds saturates exactly on prime powers up to 1000") {
  for (std::int64_t d = 2; d <= 1000; ++d) {
    const BoundsReport b = nmax_bounds(d);
    const bool pp = oracle_is_prime_power(d);
    REQUIRE(b.is_prime_power == pp);
    REQUIRE((b.lower == b.upper) == pp);
    REQUIRE(b.lower <= b.upper);
    REQUIRE(b.upper == d + 1);
    // Lower bound from a direct scan over prime-power divisors.
    std::int64_t smallest = d;
    for (std::int64_t p = 2; p <= d; ++p) {
      if (d % p != 0 || !oracle_is_prime(p)) continue;
      std::int64_t pe = 1, rest = d;
      while (rest % p == 0) {
        rest /= p;
        pe *= p;
      }
      smallest = std::min(smallest, pe);
    }
    REQUIRE(b.lower == 1 + smallest);
  }
}
