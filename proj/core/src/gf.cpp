#include "mubkit/gf.hpp"

#include <algorithm>
#include <string>

#include "mubkit/error.hpp"

namespace mubkit {

namespace detail {

struct FieldData {
  int p = 0;
  int m = 0;
  int d = 0;
  std::vector<int> modulus;  // constant term first, leading 1 included
  std::vector<int> traces;   // trace of element_at(n)
};

}  // namespace detail

namespace {

constexpr int kMaxPrime = 97;
constexpr int kMaxOrder = 4096;

using Poly = std::vector<int>;

int mod_p(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inverse_mod_p(int a, int p) {
  // p is small; Fermat via square-and-multiply.
  long long result = 1;
  long long base = a;
  int e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int poly_degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] != 0) return i;
  }
  return -1;
}

// Long division over Z_p. divisor must be nonzero.
std::pair<Poly, Poly> poly_divide(Poly num, const Poly& divisor, int p) {
  const int dd = poly_degree(divisor);
  trim(num);
  const int nd = poly_degree(num);
  if (nd < dd) return {Poly{}, num};
  Poly quot(nd - dd + 1, 0);
  const int lead_inv = inverse_mod_p(divisor[dd], p);
  for (int i = nd; i >= dd; --i) {
    const int c = num[i];
    if (c == 0) continue;
    const int factor = static_cast<int>(static_cast<long long>(c) * lead_inv % p);
    quot[i - dd] = factor;
    for (int j = 0; j <= dd; ++j) {
      num[i - dd + j] = mod_p(num[i - dd + j] - static_cast<long long>(factor) * divisor[j], p);
    }
  }
  trim(num);
  trim(quot);
  return {quot, num};
}

Poly pad(Poly a, int m) {
  a.resize(m, 0);
  return a;
}

std::vector<int> digits(std::int64_t n, int p, int m) {
  std::vector<int> out(m, 0);
  for (int i = 0; i < m; ++i) {
    out[i] = static_cast<int>(n % p);
    n /= p;
  }
  return out;
}

std::vector<int> smallest_irreducible(int p, int m) {
  // Lexicographic order on (c_0, c_1, ..., c_{m-1}): c_0 is the most
  // significant digit of the enumeration counter.
  int total = 1;
  for (int i = 0; i < m; ++i) total *= p;
  for (int counter = 0; counter < total; ++counter) {
    Poly poly(m + 1, 0);
    int rest = counter;
    for (int i = m - 1; i >= 0; --i) {
      poly[i] = rest % p;
      rest /= p;
    }
    poly[m] = 1;
    if (is_irreducible(poly, p)) return poly;
  }
  throw Error(Errc::Reducible, "no irreducible polynomial found");
}

const detail::FieldData& same_field(const std::shared_ptr<const detail::FieldData>& a,
                                    const std::shared_ptr<const detail::FieldData>& b) {
  if (a != b && (a->p != b->p || a->m != b->m || a->modulus != b->modulus)) {
    throw Error(Errc::FieldMismatch, "operands belong to different fields");
  }
  return *a;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    int e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    out.emplace_back(f, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_irreducible(const std::vector<int>& poly, int p) {
  const int deg = poly_degree(poly);
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (int k = 1; k <= deg / 2; ++k) {
    int count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (int c = 0; c < count; ++c) {
      Poly divisor = digits(c, p, k);
      divisor.push_back(1);
      if (poly_divide(poly, divisor, p).second.empty()) return false;
    }
  }
  return true;
}

Field Field::create(int p, int m, std::optional<std::vector<int>> modulus) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(Errc::DegreeMismatch, "extension degree must be >= 1");
  if (p > kMaxPrime) throw Error(Errc::Unsupported, "characteristic above 97");
  long long d = 1;
  for (int i = 0; i < m; ++i) {
    d *= p;
    if (d > kMaxOrder) throw Error(Errc::Unsupported, "field order above 4096");
  }

  std::vector<int> poly;
  if (modulus) {
    poly = *modulus;
    if (static_cast<int>(poly.size()) != m + 1) {
      throw Error(Errc::DegreeMismatch, "modulus must have m+1 coefficients");
    }
    for (int c : poly) {
      if (c < 0 || c >= p) throw Error(Errc::OutOfRange, "modulus coefficient outside [0, p)");
    }
    if (poly.back() != 1) throw Error(Errc::DegreeMismatch, "modulus must be monic of degree m");
    if (!is_irreducible(poly, p)) throw Error(Errc::Reducible, "modulus is reducible over Z_p");
  } else {
    poly = smallest_irreducible(p, m);
  }

  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->m = m;
  data->d = static_cast<int>(d);
  data->modulus = std::move(poly);
  Field field(data);
  data->traces.resize(data->d);
  for (int n = 0; n < data->d; ++n) data->traces[n] = trace(field.element_at(n));
  return field;
}

int Field::characteristic() const { return data_->p; }
int Field::degree() const { return data_->m; }
int Field::order() const { return data_->d; }
const std::vector<int>& Field::modulus() const { return data_->modulus; }

Element Field::zero() const { return Element(data_, std::vector<int>(data_->m, 0)); }

Element Field::one() const {
  std::vector<int> c(data_->m, 0);
  c[0] = 1;
  return Element(data_, std::move(c));
}

Element Field::element_at(std::int64_t n) const {
  if (n < 0 || n >= data_->d) {
    throw Error(Errc::IndexOutOfRange, "element index " + std::to_string(n) + " outside [0, " +
                                           std::to_string(data_->d) + ")");
  }
  return Element(data_, digits(n, data_->p, data_->m));
}

Element Field::from_coeffs(std::vector<int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > data_->m) {
    throw Error(Errc::DegreeMismatch, "too many coefficients for this field");
  }
  for (int& c : coeffs) c = mod_p(c, data_->p);
  coeffs.resize(data_->m, 0);
  return Element(data_, std::move(coeffs));
}

int Field::trace_at(int n) const {
  if (n < 0 || n >= data_->d) throw Error(Errc::IndexOutOfRange, "trace index");
  return data_->traces[n];
}

bool operator==(const Field& a, const Field& b) {
  return a.data_ == b.data_ ||
         (a.data_->p == b.data_->p && a.data_->m == b.data_->m && a.data_->modulus == b.data_->modulus);
}

bool Element::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

int Element::degree() const { return poly_degree(coeffs_); }

std::int64_t Element::index() const {
  std::int64_t n = 0;
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) n = n * field_->p + coeffs_[i];
  return n;
}

Element operator+(const Element& a, const Element& b) {
  const auto& f = same_field(a.field_, b.field_);
  std::vector<int> c(f.m);
  for (int i = 0; i < f.m; ++i) c[i] = (a.coeffs_[i] + b.coeffs_[i]) % f.p;
  return Element(a.field_, std::move(c));
}

Element operator-(const Element& a) {
  const int p = a.field_->p;
  std::vector<int> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (p - a.coeffs_[i]) % p;
  return Element(a.field_, std::move(c));
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Element& a, const Element& b) {
  const auto& f = same_field(a.field_, b.field_);
  std::vector<int> prod(2 * f.m - 1, 0);
  for (int i = 0; i < f.m; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < f.m; ++j) {
      prod[i + j] = (prod[i + j] + a.coeffs_[i] * b.coeffs_[j]) % f.p;
    }
  }
  auto rem = poly_divide(std::move(prod), f.modulus, f.p).second;
  return Element(a.field_, pad(std::move(rem), f.m));
}

bool operator==(const Element& a, const Element& b) {
  return a.field() == b.field() && a.coeffs_ == b.coeffs_;
}

Element pow(const Element& a, std::uint64_t k) {
  Element result = a.field().one();
  Element base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Element inv(const Element& a) {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "zero has no inverse");
  // a^(d-2) = a^-1 in a field of d elements.
  return pow(a, static_cast<std::uint64_t>(a.field().order()) - 2);
}

Element frobenius(const Element& a) { return pow(a, static_cast<std::uint64_t>(a.field().characteristic())); }

int trace(const Element& e) {
  Element sum = e;
  Element term = e;
  for (int i = 1; i < e.field().degree(); ++i) {
    term = frobenius(term);
    sum = sum + term;
  }
  // The trace lands in the prime subfield: only the constant coefficient survives.
  return sum.coeffs()[0];
}

std::pair<Element, Element> poly_divmod(const Element& k, const Element& n) {
  const auto& f = same_field(k.field_, n.field_);
  if (n.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero polynomial");
  auto [q, r] = poly_divide(k.coeffs_, n.coeffs_, f.p);
  return {Element(k.field_, pad(std::move(q), f.m)), Element(k.field_, pad(std::move(r), f.m))};
}

}  // namespace mubkit
