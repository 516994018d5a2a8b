#include "doctest.h"
#include "mubkit/error.hpp"
#include "mubkit/gf.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace mubkit;

namespace {

using testutil::code_of;

const std::vector<std::pair<int, int>> kSmallFields = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 1},
                                                       {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2}};

}  // namespace

TEST_CASE("field_create picks the smallest monic irreducible") {
  CHECK(Field::create(2, 1).modulus() == std::vector<int>{0, 1});
  CHECK(Field::create(2, 2).modulus() == std::vector<int>{1, 1, 1});
  CHECK(Field::create(3, 2).modulus() == std::vector<int>{1, 0, 1});
  CHECK(Field::create(7, 1).order() == 7);

  // Oracle: enumerate monic polynomials in the same lexicographic order and
  // test irreducibility by exhaustive products.
  for (auto [p, m] : kSmallFields) {
    if (m == 1) continue;
    std::vector<int> expected;
    const int total = static_cast<int>(std::pow(p, m));
    for (int counter = 0; counter < total && expected.empty(); ++counter) {
      std::vector<int> poly(m + 1, 0);
      int rest = counter;
      for (int i = m - 1; i >= 0; --i) {
        poly[i] = rest % p;
        rest /= p;
      }
      poly[m] = 1;
      if (oracle::irreducible_by_products(poly, p)) expected = poly;
    }
    CAPTURE(p);
    CAPTURE(m);
    CHECK(Field::create(p, m).modulus() == expected);
  }
}

TEST_CASE("field_create rejects bad inputs") {
  CHECK(code_of([] { Field::create(4, 1); }) == Errc::NotPrime);
  CHECK(code_of([] { Field::create(1, 1); }) == Errc::NotPrime);
  CHECK(code_of([] { Field::create(2, 2, std::vector<int>{1, 0, 1}); }) == Errc::Reducible);
  CHECK(code_of([] { Field::create(2, 2, std::vector<int>{1, 1}); }) == Errc::DegreeMismatch);
  CHECK(code_of([] { Field::create(3, 2, std::vector<int>{1, 0, 2}); }) == Errc::DegreeMismatch);
  CHECK(code_of([] { Field::create(2, 13); }) == Errc::Unsupported);
  CHECK(code_of([] { Field::create(101, 1); }) == Errc::Unsupported);
  CHECK_NOTHROW(Field::create(2, 12));
  CHECK_NOTHROW(Field::create(3, 2, std::vector<int>{2, 2, 1}));
}

TEST_CASE("irreducibility test agrees with exhaustive products") {
  for (int p : {2, 3, 5}) {
    for (int m = 2; m <= (p == 2 ? 6 : 3); ++m) {
      const int total = static_cast<int>(std::pow(p, m));
      for (int c = 0; c < total; ++c) {
        std::vector<int> poly(m + 1, 0);
        int rest = c;
        for (int i = 0; i < m; ++i) {
          poly[i] = rest % p;
          rest /= p;
        }
        poly[m] = 1;
        CHECK(is_irreducible(poly, p) == oracle::irreducible_by_products(poly, p));
      }
    }
  }
}

TEST_CASE("basic arithmetic examples") {
  const Field f3 = Field::create(3, 1);
  CHECK((f3.element_at(2) + f3.element_at(2)).index() == 1);

  const Field f4 = Field::create(2, 2);
  const Element x = f4.element_at(2);
  CHECK((x * x).index() == 3);  // x^2 = x + 1

  const Field f5 = Field::create(5, 1);
  CHECK(inv(f5.element_at(2)).index() == 3);
  CHECK_THROWS_AS(inv(f5.zero()), Error);
  CHECK(code_of([&] { inv(f5.zero()); }) == Errc::DivisionByZero);
  CHECK(code_of([&] { (void)(f3.one() + f5.one()); }) == Errc::FieldMismatch);
}

TEST_CASE("multiplication matches the naive oracle on full tables") {
  for (auto [p, m] : kSmallFields) {
    const Field f = Field::create(p, m);
    const oracle::NaiveField nf{p, m, f.modulus()};
    for (int a = 0; a < f.order(); ++a) {
      for (int b = 0; b < f.order(); ++b) {
        REQUIRE((f.element_at(a) * f.element_at(b)).index() == nf.mul(a, b));
        REQUIRE((f.element_at(a) + f.element_at(b)).index() == nf.add(a, b));
      }
    }
  }
}

TEST_CASE("field axioms hold exhaustively for d <= 64") {
  for (auto [p, m] : kSmallFields) {
    const Field f = Field::create(p, m);
    const int d = f.order();
    if (d > 64) continue;
    std::vector<Element> e;
    for (int n = 0; n < d; ++n) e.push_back(f.element_at(n));
    CAPTURE(d);
    for (int a = 0; a < d; ++a) {
      REQUIRE(pow(e[a], d) == e[a]);
      if (a != 0) REQUIRE(inv(e[a]) * e[a] == f.one());
      for (int b = 0; b < d; ++b) {
        REQUIRE(e[a] * e[b] == e[b] * e[a]);
        REQUIRE(e[a] + e[b] == e[b] + e[a]);
        REQUIRE(frobenius(e[a] + e[b]) == frobenius(e[a]) + frobenius(e[b]));
        for (int c = 0; c < d; ++c) {
          REQUIRE((e[a] * e[b]) * e[c] == e[a] * (e[b] * e[c]));
          REQUIRE((e[a] + e[b]) + e[c] == e[a] + (e[b] + e[c]));
          REQUIRE(e[a] * (e[b] + e[c]) == e[a] * e[b] + e[a] * e[c]);
        }
      }
    }
    // Inverses are unique.
    for (int a = 1; a < d; ++a) {
      int count = 0;
      for (int b = 0; b < d; ++b) count += (e[a] * e[b] == f.one()) ? 1 : 0;
      REQUIRE(count == 1);
    }
  }
}

TEST_CASE("trace examples and properties") {
  const Field f4 = Field::create(2, 2);
  CHECK(trace(f4.element_at(0)) == 0);
  CHECK(trace(f4.element_at(1)) == 0);
  CHECK(trace(f4.element_at(2)) == 1);
  CHECK(trace(f4.element_at(3)) == 1);
  CHECK(trace(Field::create(3, 1).element_at(2)) == 2);

  for (auto [p, m] : kSmallFields) {
    const Field f = Field::create(p, m);
    const oracle::NaiveField nf{p, m, f.modulus()};
    std::vector<int> hits(p, 0);
    for (int n = 0; n < f.order(); ++n) {
      const Element e = f.element_at(n);
      const int t = trace(e);
      REQUIRE(t == nf.trace(n));
      REQUIRE(f.trace_at(n) == t);
      REQUIRE(trace(frobenius(e)) == t);
      ++hits[t];
      for (int k = 0; k < f.order(); k += 3) {
        const Element g = f.element_at(k);
        REQUIRE(trace(e + g) == (t + trace(g)) % p);
      }
      for (int c = 0; c < p; ++c) REQUIRE(trace(f.from_coeffs({c}) * e) == (c * t) % p);
    }
    // Surjective and balanced onto Z_p.
    for (int v : hits) CHECK(v == f.order() / p);
  }
}

TEST_CASE("poly_divmod") {
  const Field f8 = Field::create(2, 3);
  auto [a, b] = poly_divmod(f8.from_coeffs({1, 0, 1}), f8.from_coeffs({0, 1}));
  CHECK(a == f8.from_coeffs({0, 1}));
  CHECK(b == f8.one());

  const Field f4 = Field::create(2, 2);
  auto [a2, b2] = poly_divmod(f4.element_at(2), f4.element_at(3));
  CHECK(a2 == f4.one());
  CHECK(b2 == f4.one());

  CHECK(code_of([&] { poly_divmod(f4.one(), f4.zero()); }) == Errc::DivisionByZero);

  // Reconstruction k = a n + b with deg b < deg n, exhaustively for d <= 16.
  // Degrees stay below m, so the field product equals the polynomial product.
  for (auto [p, m] : kSmallFields) {
    const Field f = Field::create(p, m);
    if (f.order() > 16) continue;
    for (int k = 0; k < f.order(); ++k) {
      const Element ke = f.element_at(k);
      auto [q, r] = poly_divmod(ke, f.one());
      REQUIRE(q == ke);
      REQUIRE(r.is_zero());
      for (int n = 1; n < f.order(); ++n) {
        const Element ne = f.element_at(n);
        auto [qa, rb] = poly_divmod(ke, ne);
        REQUIRE(qa * ne + rb == ke);
        REQUIRE(rb.degree() < ne.degree());
      }
    }
  }
}

TEST_CASE("index bijection") {
  const Field f4 = Field::create(2, 2);
  CHECK(f4.element_at(2).coeffs() == std::vector<int>{0, 1});
  const Field f9 = Field::create(3, 2);
  CHECK(index_of(f9.from_coeffs({2, 1})) == 5);
  for (auto [p, m] : kSmallFields) {
    const Field f = Field::create(p, m);
    for (int n = 0; n < f.order(); ++n) REQUIRE(index_of(element_at(f, n)) == n);
  }
  CHECK(code_of([&] { f9.element_at(9); }) == Errc::IndexOutOfRange);
  CHECK(code_of([&] { f9.element_at(-1); }) == Errc::IndexOutOfRange);
}

TEST_CASE("factorize and is_prime") {
  CHECK(factorize(12) == std::vector<std::pair<std::int64_t, int>>{{2, 2}, {3, 1}});
  CHECK(factorize(97) == std::vector<std::pair<std::int64_t, int>>{{97, 1}});
  CHECK(factorize(1).empty());
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(91));
  for (std::int64_t n = 2; n < 2000; ++n) {
    std::int64_t prod = 1;
    for (auto [p, e] : factorize(n)) {
      REQUIRE(is_prime(p));
      for (int i = 0; i < e; ++i) prod *= p;
    }
    REQUIRE(prod == n);
  }
}
