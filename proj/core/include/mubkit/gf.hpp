#pragma once

// Exact arithmetic in the finite field GF(p^m).
//
// Elements are coefficient vectors over Z_p (coefficient of x^i at position
// i) reduced modulo a monic irreducible polynomial of degree m. Fields and
// elements are immutable values; a Field is a cheap shared handle.

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace mubkit {

namespace detail {
struct FieldData;
}

class Element;

class Field {
 public:
  /// Builds GF(p^m). Without an explicit modulus the lexicographically
  /// smallest monic irreducible of degree m is chosen, comparing
  /// coefficients from the constant term upward.
  ///
  /// The modulus, when given, lists coefficients constant term first and must
  /// include the leading 1 (length m + 1).
  static Field create(int p, int m, std::optional<std::vector<int>> modulus = std::nullopt);

  int characteristic() const;
  int degree() const;
  /// Number of elements, p^m.
  int order() const;
  const std::vector<int>& modulus() const;

  Element zero() const;
  Element one() const;
  /// Element whose base-p digits (least significant first) are its coefficients.
  Element element_at(std::int64_t n) const;
  Element from_coeffs(std::vector<int> coeffs) const;

  /// Trace of the element with index n, cached at construction.
  int trace_at(int n) const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::FieldData> data_;
  friend class Element;
};

class Element {
 public:
  const std::vector<int>& coeffs() const { return coeffs_; }
  Field field() const { return Field(field_); }
  bool is_zero() const;
  /// Degree of the polynomial representative; -1 for zero.
  int degree() const;
  std::int64_t index() const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b);

 private:
  Element(std::shared_ptr<const detail::FieldData> field, std::vector<int> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

  std::shared_ptr<const detail::FieldData> field_;
  std::vector<int> coeffs_;
  friend class Field;
  friend Element pow(const Element& a, std::uint64_t k);
  friend std::pair<Element, Element> poly_divmod(const Element& k, const Element& n);
};

Element pow(const Element& a, std::uint64_t k);
Element inv(const Element& a);
/// Frobenius map e -> e^p.
Element frobenius(const Element& a);
/// e + e^p + ... + e^{p^(m-1)}, returned as its Z_p value.
int trace(const Element& e);

inline std::int64_t index_of(const Element& e) { return e.index(); }
inline Element element_at(const Field& f, std::int64_t n) { return f.element_at(n); }

/// Euclidean division of polynomial representatives over Z_p: returns (a, b)
/// with k = a*n + b and deg b < deg n. Both results are elements of the field
/// since their degrees stay below m.
std::pair<Element, Element> poly_divmod(const Element& k, const Element& n);

bool is_prime(std::int64_t n);

/// Prime factorization by trial division as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// True when the monic polynomial (constant term first, leading 1 included)
/// has no monic divisor of degree 1..deg/2 over Z_p.
bool is_irreducible(const std::vector<int>& poly, int p);

}  // namespace mubkit
