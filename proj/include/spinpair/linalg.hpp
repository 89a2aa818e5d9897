#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace spinpair {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

// Fixed-size dense column vector of complex entries.
template <std::size_t N>
struct CVector {
  std::array<Complex, N> c{};

  Complex& operator[](std::size_t i) { return c[i]; }
  const Complex& operator[](std::size_t i) const { return c[i]; }

  CVector& operator+=(const CVector& o) {
    for (std::size_t i = 0; i < N; ++i) c[i] += o.c[i];
    return *this;
  }
  CVector& operator-=(const CVector& o) {
    for (std::size_t i = 0; i < N; ++i) c[i] -= o.c[i];
    return *this;
  }
  CVector& operator*=(Complex s) {
    for (auto& x : c) x *= s;
    return *this;
  }

  friend CVector operator+(CVector a, const CVector& b) { return a += b; }
  friend CVector operator-(CVector a, const CVector& b) { return a -= b; }
  friend CVector operator*(Complex s, CVector a) { return a *= s; }
  friend CVector operator*(CVector a, Complex s) { return a *= s; }
};

template <std::size_t N>
double norm(const CVector<N>& v) {
  double s = 0.0;
  for (const auto& x : v.c) s += std::norm(x);
  return std::sqrt(s);
}

// <a, b> = sum conj(a_i) b_i
template <std::size_t N>
Complex inner(const CVector<N>& a, const CVector<N>& b) {
  Complex s{};
  for (std::size_t i = 0; i < N; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

// Dense row-major N x N complex matrix.
template <std::size_t N>
struct CMatrix {
  std::array<Complex, N * N> a{};

  static constexpr std::size_t size() { return N; }

  static CMatrix identity() {
    CMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  Complex& operator()(std::size_t r, std::size_t c) { return a[r * N + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return a[r * N + c]; }

  CMatrix& operator+=(const CMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) a[i] += o.a[i];
    return *this;
  }
  CMatrix& operator-=(const CMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) a[i] -= o.a[i];
    return *this;
  }
  CMatrix& operator*=(Complex s) {
    for (auto& x : a) x *= s;
    return *this;
  }

  friend CMatrix operator+(CMatrix x, const CMatrix& y) { return x += y; }
  friend CMatrix operator-(CMatrix x, const CMatrix& y) { return x -= y; }
  friend CMatrix operator-(CMatrix x) { return x *= -1.0; }
  friend CMatrix operator*(Complex s, CMatrix x) { return x *= s; }
  friend CMatrix operator*(CMatrix x, Complex s) { return x *= s; }

  friend CMatrix operator*(const CMatrix& x, const CMatrix& y) {
    CMatrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex xik = x(i, k);
        for (std::size_t j = 0; j < N; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }

  friend CVector<N> operator*(const CMatrix& x, const CVector<N>& v) {
    CVector<N> r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r[i] += x(i, j) * v[j];
    return r;
  }
};

template <std::size_t N>
CMatrix<N> adjoint(const CMatrix<N>& m) {
  CMatrix<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

template <std::size_t N>
Complex trace(const CMatrix<N>& m) {
  Complex s{};
  for (std::size_t i = 0; i < N; ++i) s += m(i, i);
  return s;
}

inline Complex determinant(const CMatrix<2>& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

// Entrywise max-norm of the difference.
template <std::size_t N>
double max_abs_diff(const CMatrix<N>& x, const CMatrix<N>& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < N * N; ++i) d = std::max(d, std::abs(x.a[i] - y.a[i]));
  return d;
}

template <std::size_t N>
double max_abs(const CMatrix<N>& x) {
  double d = 0.0;
  for (const auto& e : x.a) d = std::max(d, std::abs(e));
  return d;
}

template <std::size_t N>
bool all_finite(const CMatrix<N>& x) {
  for (const auto& e : x.a)
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  return true;
}

inline constexpr double kDefaultTolerance = 1e-10;

template <std::size_t N>
bool approx_equal(const CMatrix<N>& x, const CMatrix<N>& y, double tol = kDefaultTolerance) {
  return max_abs_diff(x, y) <= tol;
}

}  // namespace spinpair
