#include "mubkit/builder.hpp"

#include <cmath>
#include <numbers>

#include "mubkit/error.hpp"

namespace mubkit {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Fourier: return "fourier";
    case Method::Qubit: return "qubit";
    case Method::ClockShift: return "clock-shift";
    case Method::WoottersFields: return "wootters-fields";
    case Method::Tensor: return "tensor";
    case Method::Search: return "search";
  }
  return "unknown";
}

Method method_from_name(std::string_view name) {
  for (Method m : {Method::Fourier, Method::Qubit, Method::ClockShift, Method::WoottersFields, Method::Tensor,
                   Method::Search}) {
    if (method_name(m) == name) return m;
  }
  throw Error(Errc::Parse, "unknown method '" + std::string(name) + "'");
}

cplx root_of_unity(long long k, long long n) {
  k %= n;
  if (k < 0) k += n;
  // Quarter turns are returned exactly so that +-1 and +-i carry no rounding.
  if ((4 * k) % n == 0) {
    switch ((4 * k) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
}

Basis fourier_basis(std::size_t d) {
  if (d == 0) throw Error(Errc::OutOfRange, "dimension must be >= 1");
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  Basis b;
  b.label = "fourier";
  for (std::size_t k = 0; k < d; ++k) {
    CVec v(d);
    for (std::size_t n = 0; n < d; ++n) v[n] = norm * root_of_unity(static_cast<long long>(n * k), d);
    b.vectors.push_back(std::move(v));
  }
  return b;
}

CMat shift_matrix(std::size_t d) {
  CMat x(d, d);
  for (std::size_t n = 0; n < d; ++n) x((n + 1) % d, n) = 1.0;
  return x;
}

CMat clock_matrix(std::size_t d) {
  CMat z(d, d);
  for (std::size_t n = 0; n < d; ++n) z(n, n) = root_of_unity(static_cast<long long>(n), d);
  return z;
}

MubSet fourier_mubs(std::size_t d) {
  MubSet s;
  s.dim = d;
  s.method = Method::Fourier;
  s.bases = {Basis::computational(d), fourier_basis(d)};
  return s;
}

MubSet qubit_mubs() {
  const double h = 1.0 / std::sqrt(2.0);
  Basis hs{{CVec{h, cplx(0.0, h)}, CVec{h, cplx(0.0, -h)}}, "HS rows"};
  Basis hadamard = fourier_basis(2);
  hadamard.label = "H";
  MubSet s;
  s.dim = 2;
  s.method = Method::Qubit;
  s.bases = {Basis::computational(2), std::move(hadamard), std::move(hs)};
  return s;
}

MubSet clock_shift_mubs(int p) {
  if (p == 2) throw Error(Errc::EvenPrime, "use qubit_mubs for p = 2");
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  const auto d = static_cast<std::size_t>(p);
  const CMat x = shift_matrix(d);
  const CMat z = clock_matrix(d);

  MubSet s;
  s.dim = d;
  s.method = Method::ClockShift;
  Basis first = Basis::computational(d);
  first.label = "eig Z";
  s.bases.push_back(std::move(first));
  CMat op = x;
  for (int k = 0; k < p; ++k) {
    Basis b = unitary_order_p_eigenbasis(op, p);
    b.label = "eig XZ^" + std::to_string(k);
    s.bases.push_back(std::move(b));
    op = op * z;
  }
  return s;
}

MubSet wootters_fields_mubs(const Field& field) {
  const int p = field.characteristic();
  if (p == 2) throw Error(Errc::CharacteristicTwo, "construction requires odd characteristic");
  const int d = field.order();

  // tr(a n^2 + b n) = tr(a n^2) + tr(b n); tabulate tr(x y) once.
  std::vector<Element> elems;
  elems.reserve(d);
  for (int n = 0; n < d; ++n) elems.push_back(field.element_at(n));
  std::vector<int> square(d);
  for (int n = 0; n < d; ++n) square[n] = static_cast<int>((elems[n] * elems[n]).index());
  std::vector<int> trace_xy(static_cast<std::size_t>(d) * d);
  for (int x = 0; x < d; ++x) {
    for (int y = x; y < d; ++y) {
      const int t = field.trace_at(static_cast<int>((elems[x] * elems[y]).index()));
      trace_xy[static_cast<std::size_t>(x) * d + y] = t;
      trace_xy[static_cast<std::size_t>(y) * d + x] = t;
    }
  }
  auto tr = [&](int x, int y) { return trace_xy[static_cast<std::size_t>(x) * d + y]; };

  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  MubSet s;
  s.dim = static_cast<std::size_t>(d);
  s.method = Method::WoottersFields;
  s.field = field;
  s.bases.push_back(Basis::computational(s.dim));
  for (int a = 0; a < d; ++a) {
    Basis basis;
    basis.label = "WF a=" + std::to_string(a);
    for (int b = 0; b < d; ++b) {
      CVec v(s.dim);
      for (int n = 0; n < d; ++n) v[n] = norm * root_of_unity((tr(a, square[n]) + tr(b, n)) % p, p);
      basis.vectors.push_back(std::move(v));
    }
    s.bases.push_back(std::move(basis));
  }
  return s;
}

cplx gauss_sum(const Field& field, const Element& a, const Element& b) {
  const int p = field.characteristic();
  cplx sum = 0.0;
  for (int n = 0; n < field.order(); ++n) {
    const Element e = field.element_at(n);
    sum += root_of_unity(trace(e * (a * e + b)), p);
  }
  return sum;
}

Char2Witness char2_failure_witness(const Field& field, double tol) {
  if (field.characteristic() != 2) throw Error(Errc::InvalidConfig, "witness applies to characteristic 2 only");
  const int d = field.order();
  const double sqrt_d = std::sqrt(static_cast<double>(d));
  Char2Witness w;
  w.dim = static_cast<std::size_t>(d);
  w.no_unbiased_pair = true;
  w.only_zero_or_d = true;
  w.magnitudes.assign(d, std::vector<double>(d, 0.0));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const double mag = std::abs(gauss_sum(field, field.element_at(a), field.element_at(b)));
      w.magnitudes[a][b] = mag;
      if (a != 0 && std::abs(mag - sqrt_d) <= tol) w.no_unbiased_pair = false;
      if (std::abs(mag) > tol && std::abs(mag - d) > tol) w.only_zero_or_d = false;
    }
  }
  return w;
}

MubSet tensor_mubs(const MubSet& s1, const MubSet& s2) {
  if (s1.bases.empty() || s2.bases.empty()) throw Error(Errc::EmptyInput, "tensor of an empty set");
  MubSet out;
  out.dim = s1.dim * s2.dim;
  out.method = Method::Tensor;
  const std::size_t count = std::min(s1.count(), s2.count());
  for (std::size_t i = 0; i < count; ++i) out.bases.push_back(tensor(s1.bases[i], s2.bases[i]));
  return out;
}

MubSet factorized_mubs(std::size_t d) {
  if (d < 1) throw Error(Errc::OutOfRange, "dimension must be >= 1");
  MubSet acc;
  acc.dim = 1;
  acc.method = Method::Tensor;
  acc.bases.push_back(Basis::computational(1));
  acc.bases.front().label = "trivial";
  bool first = true;
  for (const auto& [prime, exp] : factorize(static_cast<std::int64_t>(d))) {
    MubSet part;
    if (prime == 2) {
      part = qubit_mubs();
      for (int i = 1; i < exp; ++i) part = tensor_mubs(part, qubit_mubs());
    } else {
      part = wootters_fields_mubs(Field::create(static_cast<int>(prime), exp));
    }
    if (first) {
      acc = std::move(part);
      first = false;
    } else {
      acc = tensor_mubs(acc, part);
    }
  }
  return acc;
}

}  // namespace mubkit
