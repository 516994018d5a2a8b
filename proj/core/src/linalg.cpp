#include "mubkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "mubkit/error.hpp"

namespace mubkit {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(Errc::DimMismatch, std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

void require_square(const CMat& m, const char* what) {
  if (m.rows() != m.cols()) throw Error(Errc::DimMismatch, std::string(what) + ": matrix is not square");
}

constexpr double kJacobiThreshold = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

}  // namespace

CVec CVec::unit(std::size_t dim, std::size_t index) {
  CVec v(dim);
  v[index] = 1.0;
  return v;
}

double CVec::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

CVec& CVec::operator*=(cplx s) {
  for (auto& a : amps_) a *= s;
  return *this;
}

CVec& CVec::operator+=(const CVec& o) {
  require_same_dim(dim(), o.dim(), "vector add");
  for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] += o.amps_[i];
  return *this;
}

CVec& CVec::operator-=(const CVec& o) {
  require_same_dim(dim(), o.dim(), "vector subtract");
  for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] -= o.amps_[i];
  return *this;
}

CVec operator*(cplx s, CVec v) { return v *= s; }
CVec operator+(CVec a, const CVec& b) { return a += b; }
CVec operator-(CVec a, const CVec& b) { return a -= b; }

cplx inner(const CVec& a, const CVec& b) {
  require_same_dim(a.dim(), b.dim(), "inner product");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double overlap_mag(const CVec& a, const CVec& b) { return std::abs(inner(a, b)); }

CVec tensor_vec(const CVec& u, const CVec& v) {
  CVec out(u.dim() * v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    for (std::size_t j = 0; j < v.dim(); ++j) out[i * v.dim() + j] = u[i] * v[j];
  }
  return out;
}

CVec canonical_phase(CVec v) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > 1e-10) {
      v *= std::conj(v[i]) / mag;
      v[i] = mag;
      break;
    }
  }
  return v;
}

CMat CMat::identity(std::size_t n) {
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::diagonal(std::span<const cplx> diag) {
  CMat m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

CMat CMat::from_columns(std::span<const CVec> cols) {
  const std::size_t rows = cols.empty() ? 0 : cols.front().dim();
  CMat m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require_same_dim(cols[c].dim(), rows, "column");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

CVec CMat::column(std::size_t c) const {
  CVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

CMat CMat::adjoint() const {
  CMat out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

cplx CMat::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

CMat& CMat::operator+=(const CMat& o) {
  require_same_dim(rows_, o.rows_, "matrix add rows");
  require_same_dim(cols_, o.cols_, "matrix add cols");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

CMat& CMat::operator-=(const CMat& o) {
  require_same_dim(rows_, o.rows_, "matrix subtract rows");
  require_same_dim(cols_, o.cols_, "matrix subtract cols");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

CMat& CMat::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

CMat operator*(const CMat& a, const CMat& b) {
  require_same_dim(a.cols(), b.rows(), "matrix product");
  CMat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

CVec operator*(const CMat& a, const CVec& v) {
  require_same_dim(a.cols(), v.dim(), "matrix-vector product");
  CVec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s = 0.0;
    for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * v[k];
    out[i] = s;
  }
  return out;
}

CMat operator*(cplx s, CMat a) { return a *= s; }
CMat operator+(CMat a, const CMat& b) { return a += b; }
CMat operator-(CMat a, const CMat& b) { return a -= b; }

CMat outer(const CVec& a, const CVec& b) {
  CMat out(a.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) out(i, j) = a[i] * std::conj(b[j]);
  }
  return out;
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

double max_abs(const CMat& m) {
  double best = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) best = std::max(best, std::abs(m(r, c)));
  return best;
}

double frobenius_norm(const CMat& m) {
  double s = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s += std::norm(m(r, c));
  return std::sqrt(s);
}

double unitarity_error(const CMat& m) {
  return max_abs(m.adjoint() * m - CMat::identity(m.cols()));
}

double hermiticity_error(const CMat& m) {
  require_square(m, "hermiticity check");
  return max_abs(m - m.adjoint());
}

Basis Basis::from_matrix(const CMat& m, std::string label) {
  Basis b;
  b.label = std::move(label);
  b.vectors.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) b.vectors.push_back(m.column(c));
  return b;
}

Basis Basis::computational(std::size_t dim) {
  Basis b;
  b.label = "computational";
  for (std::size_t i = 0; i < dim; ++i) b.vectors.push_back(CVec::unit(dim, i));
  return b;
}

Basis tensor(const Basis& a, const Basis& b) {
  Basis out;
  out.label = a.label + " (x) " + b.label;
  out.vectors.reserve(a.size() * b.size());
  for (const auto& u : a.vectors)
    for (const auto& v : b.vectors) out.vectors.push_back(tensor_vec(u, v));
  return out;
}

Basis unitary_order_p_eigenbasis(const CMat& m, int p, cplx phase, double tol) {
  require_square(m, "order-p eigenbasis");
  if (p < 2) throw Error(Errc::NotOrderP, "order must be at least 2");
  const std::size_t d = m.rows();

  std::vector<CMat> powers{CMat::identity(d)};
  for (int j = 1; j <= p; ++j) powers.push_back(powers.back() * m);
  if (max_abs(powers[p] - phase * CMat::identity(d)) > tol) {
    throw Error(Errc::NotOrderP, "M^p differs from phase * I");
  }
  powers.pop_back();

  const double two_pi = 2.0 * std::numbers::pi;
  const cplx root0 = std::polar(std::pow(std::abs(phase), 1.0 / p), std::arg(phase) / p);
  struct Root {
    cplx value;
    double angle;
  };
  std::vector<Root> roots;
  for (int j = 0; j < p; ++j) {
    const cplx lambda = root0 * std::polar(1.0, two_pi * j / p);
    double angle = std::fmod(std::arg(lambda) + two_pi, two_pi);
    if (angle > two_pi - 1e-12) angle = 0.0;
    roots.push_back({lambda, angle});
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.angle < b.angle; });

  Basis basis;
  for (const auto& root : roots) {
    CMat proj(d, d);
    for (int j = 0; j < p; ++j) proj += std::pow(root.value, -j) * powers[j];
    proj *= 1.0 / p;
    const cplx rank = proj.trace();
    if (std::abs(rank - 1.0) > 1e-6) {
      throw Error(Errc::DegenerateProjector,
                  "eigenspace for root angle " + std::to_string(root.angle) + " has rank " + std::to_string(rank.real()));
    }
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t c = 0; c < d; ++c) {
      const double n = proj.column(c).norm();
      if (n > best_norm + 1e-14) {
        best_norm = n;
        best = c;
      }
    }
    CVec v = proj.column(best);
    v *= 1.0 / best_norm;
    basis.vectors.push_back(canonical_phase(std::move(v)));
  }
  return basis;
}

Spectral hermitian_spectral(const CMat& m, double hermitian_tol) {
  require_square(m, "hermitian_spectral");
  if (hermiticity_error(m) > hermitian_tol) throw Error(Errc::NotHermitian, "matrix is not Hermitian");
  const std::size_t n = m.rows();

  CMat a = 0.5 * (m + m.adjoint());
  CMat v = CMat::identity(n);
  const double scale = std::max(1.0, frobenius_norm(a));

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  bool converged = false;
  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_norm() <= kJacobiThreshold * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r <= 1e-300) continue;
        // Phase-rotate column q so the pivot is real, then apply a real
        // Jacobi rotation: V = D P with D = diag(1, e^-i phi).
        const cplx e = std::conj(a(p, q)) / r;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx vpp = c, vpq = s, vqp = -s * e, vqq = c * e;

        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * vpp + akq * vqp;
          a(k, q) = akp * vpq + akq * vqq;
          const cplx ukp = v(k, p), ukq = v(k, q);
          v(k, p) = ukp * vpp + ukq * vqp;
          v(k, q) = ukp * vpq + ukq * vqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
          a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (!converged && off_norm() > kJacobiThreshold * scale) {
    throw Error(Errc::NoConvergence, "Jacobi sweep budget exhausted");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  Spectral out;
  out.eigenvectors.label = "eigenvectors";
  for (std::size_t idx : order) {
    out.eigenvalues.push_back(a(idx, idx).real());
    out.eigenvectors.vectors.push_back(canonical_phase(v.column(idx)));
  }
  return out;
}

CMat polar_unitary(const CMat& y) {
  require_square(y, "polar_unitary");
  const CMat gram = y.adjoint() * y;
  const Spectral sp = hermitian_spectral(0.5 * (gram + gram.adjoint()), 1e-8);
  const std::size_t n = y.rows();
  CMat inv_sqrt(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = sp.eigenvalues[k];
    if (lambda <= 1e-14) throw Error(Errc::NotOrthonormal, "polar factor of a singular matrix");
    const CVec& u = sp.eigenvectors.vectors[k];
    const double w = 1.0 / std::sqrt(lambda);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv_sqrt(i, j) += w * u[i] * std::conj(u[j]);
  }
  return y * inv_sqrt;
}

}  // namespace mubkit
