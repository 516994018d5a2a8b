#pragma once

// Dense complex vectors and matrices sized for desk-scale dimensions
// (d <= 64), plus the two eigen-solvers the rest of the library needs.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mubkit {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;

class CVec {
 public:
  CVec() = default;
  explicit CVec(std::size_t dim) : amps_(dim) {}
  explicit CVec(std::vector<cplx> amps) : amps_(std::move(amps)) {}
  CVec(std::initializer_list<cplx> amps) : amps_(amps) {}

  static CVec unit(std::size_t dim, std::size_t index);

  std::size_t dim() const { return amps_.size(); }
  cplx& operator[](std::size_t i) { return amps_[i]; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }
  std::span<const cplx> amps() const { return amps_; }
  auto begin() const { return amps_.begin(); }
  auto end() const { return amps_.end(); }

  double norm() const;
  CVec& operator*=(cplx s);
  CVec& operator+=(const CVec& o);
  CVec& operator-=(const CVec& o);

  friend bool operator==(const CVec&, const CVec&) = default;

 private:
  std::vector<cplx> amps_;
};

CVec operator*(cplx s, CVec v);
CVec operator+(CVec a, const CVec& b);
CVec operator-(CVec a, const CVec& b);

/// <a|b> = sum conj(a_i) b_i.
cplx inner(const CVec& a, const CVec& b);
double overlap_mag(const CVec& a, const CVec& b);
/// Amplitude of |i>|j> sits at i * dim(v) + j.
CVec tensor_vec(const CVec& u, const CVec& v);

/// Multiplies by the phase that makes the first amplitude with magnitude
/// above 1e-10 real and positive.
CVec canonical_phase(CVec v);

class CMat {
 public:
  CMat() = default;
  CMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMat identity(std::size_t n);
  static CMat diagonal(std::span<const cplx> diag);
  /// Matrix whose columns are the given vectors.
  static CMat from_columns(std::span<const CVec> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  CVec column(std::size_t c) const;
  CMat adjoint() const;
  cplx trace() const;

  CMat& operator+=(const CMat& o);
  CMat& operator-=(const CMat& o);
  CMat& operator*=(cplx s);

  friend bool operator==(const CMat&, const CMat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMat operator*(const CMat& a, const CMat& b);
CVec operator*(const CMat& a, const CVec& v);
CMat operator*(cplx s, CMat a);
CMat operator+(CMat a, const CMat& b);
CMat operator-(CMat a, const CMat& b);
/// |a><b|
CMat outer(const CVec& a, const CVec& b);
CMat kron(const CMat& a, const CMat& b);

double max_abs(const CMat& m);
double frobenius_norm(const CMat& m);
/// max |M^dagger M - I|
double unitarity_error(const CMat& m);
/// max |M - M^dagger|
double hermiticity_error(const CMat& m);

/// An ordered orthonormal set of d vectors in C^d.
struct Basis {
  std::vector<CVec> vectors;
  std::string label;

  std::size_t dim() const { return vectors.empty() ? 0 : vectors.front().dim(); }
  std::size_t size() const { return vectors.size(); }
  /// Columns are the basis vectors.
  CMat as_matrix() const { return CMat::from_columns(vectors); }
  static Basis from_matrix(const CMat& m, std::string label = {});
  static Basis computational(std::size_t dim);
};

Basis tensor(const Basis& a, const Basis& b);

/// Eigenbasis of a unitary M with M^p = phase * I.
///
/// Each p-th root lambda of phase yields the group-averaged projector
/// (1/p) sum_j lambda^-j M^j. Every projector must be rank one; its dominant
/// column, normalized and phase-fixed, is the eigenvector. Vectors are ordered
/// by the angle of lambda in [0, 2 pi).
Basis unitary_order_p_eigenbasis(const CMat& m, int p, cplx phase = 1.0, double tol = kDefaultTol);

struct Spectral {
  std::vector<double> eigenvalues;  // ascending
  Basis eigenvectors;
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix. Eigenvectors are
/// phase-fixed with canonical_phase.
Spectral hermitian_spectral(const CMat& m, double hermitian_tol = 1e-10);

/// Unitary factor of the polar decomposition Y = U P, computed as
/// Y (Y^dagger Y)^(-1/2).
CMat polar_unitary(const CMat& y);

}  // namespace mubkit
