#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "pcurv/error.hpp"

namespace pcurv {

enum class Basis { Fixed, Stable };

/// Dense square matrix over a commutative ring T.
template <class T>
struct Mat {
  int n = 0;
  std::vector<T> a;
  Basis basis = Basis::Stable;

  Mat() = default;
  explicit Mat(int n_, Basis b = Basis::Stable) : n(n_), a(static_cast<std::size_t>(n_) * n_), basis(b) {}
  static Mat identity(int n, const T& one, Basis b = Basis::Stable) {
    Mat m(n, b);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  T& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const T& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(a[0]));
    Mat<U> r(n, basis);
    for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = f(a[k]);
    return r;
  }

  bool operator==(const Mat& o) const {
    if (n != o.n) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!(a[k] == o.a[k])) return false;
    return true;
  }
  bool is_zero() const {
    for (auto& x : a)
      if (!x.is_zero()) return false;
    return true;
  }

  Mat& operator+=(const Mat& o) {
    shape(o);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += o.a[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    shape(o);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= o.a[k];
    return *this;
  }
  friend Mat operator+(Mat x, const Mat& y) { return x += y; }
  friend Mat operator-(Mat x, const Mat& y) { return x -= y; }
  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.a)
      if (!x.is_zero()) x = -x;
    return r;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    x.shape(y);
    Mat r(x.n, x.basis);
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < x.n; ++k) {
        const T& xik = x(i, k);
        if (xik.is_zero()) continue;
        for (int j = 0; j < x.n; ++j) {
          const T& ykj = y(k, j);
          if (ykj.is_zero()) continue;
          r(i, j) += xik * ykj;
        }
      }
    return r;
  }
  Mat scaled(const T& s) const {
    Mat r = *this;
    for (auto& x : r.a)
      if (!x.is_zero()) x = x * s;
    return r;
  }
  Mat transpose() const {
    Mat r(n, basis);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  std::vector<T> apply(const std::vector<T>& v) const {
    if (static_cast<int>(v.size()) != n) throw InternalError("matrix/vector shape mismatch");
    std::vector<T> r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
  }

 private:
  void shape(const Mat& o) const {
    if (n != o.n) throw InternalError("matrix shape mismatch");
  }
};

template <class T>
Mat<T> mat_pow(const Mat<T>& m, unsigned e, const T& one) {
  Mat<T> r = Mat<T>::identity(m.n, one, m.basis);
  for (unsigned k = 0; k < e; ++k) r = r * m;
  return r;
}

/// Characteristic polynomial det(x - M), coefficients a_0..a_n ascending, a_n = 1.
template <class T>
struct CharPoly {
  std::vector<T> a;
  int degree() const { return static_cast<int>(a.size()) - 1; }
  bool operator==(const CharPoly& o) const {
    if (a.size() != o.a.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!(a[k] == o.a[k])) return false;
    return true;
  }
  template <class F>
  auto map(F&& f) const {
    CharPoly<decltype(f(a[0]))> r;
    for (auto& x : a) r.a.push_back(f(x));
    return r;
  }
};

/// Division-free (Berkowitz) characteristic polynomial.
template <class T>
CharPoly<T> charpoly_berkowitz(const Mat<T>& M, const T& one) {
  const int n = M.n;
  if (n == 0) return CharPoly<T>{{one}};
  // v holds the coefficients of the k-th leading principal charpoly, leading first.
  std::vector<T> v{one};
  for (int k = 0; k < n; ++k) {
    // Toeplitz column: 1, -a_kk, -R C, -R M C, ..., -R M^{k-1} C
    std::vector<T> col;
    col.reserve(k + 2);
    col.push_back(one);
    col.push_back(-M(k, k));
    std::vector<T> c(k);
    for (int i = 0; i < k; ++i) c[i] = M(i, k);
    for (int j = 0; j < k; ++j) {
      T s{};
      for (int i = 0; i < k; ++i)
        if (!M(k, i).is_zero() && !c[i].is_zero()) s += M(k, i) * c[i];
      col.push_back(-s);
      if (j + 1 < k) {
        std::vector<T> nc(k);
        for (int i = 0; i < k; ++i)
          for (int l = 0; l < k; ++l)
            if (!M(i, l).is_zero() && !c[l].is_zero()) nc[i] += M(i, l) * c[l];
        c.swap(nc);
      }
    }
    std::vector<T> nv(k + 2);
    for (int i = 0; i <= k + 1; ++i)
      for (int j = 0; j <= k && j <= i; ++j) {
        const T& tt = col[i - j];
        if (tt.is_zero() || v[j].is_zero()) continue;
        nv[i] += tt * v[j];
      }
    v.swap(nv);
  }
  CharPoly<T> r;
  r.a.assign(v.rbegin(), v.rend());
  return r;
}

/// det(M) = (-1)^n chi_M(0).
template <class T>
T determinant(const Mat<T>& M, const T& one) {
  auto cp = charpoly_berkowitz(M, one);
  return (M.n % 2) ? -cp.a[0] : cp.a[0];
}

/// (-1)^{n(n-1)/2} Res(P, P') for monic P, via the Sylvester determinant.
template <class T>
T discriminant(const CharPoly<T>& P, const T& one) {
  const int n = P.degree();
  if (n < 1) throw InternalError("discriminant of a constant polynomial");
  if (n == 1) return one;
  std::vector<T> d(n);  // derivative, ascending
  for (int k = 1; k <= n; ++k) {
    T s{};
    for (int r = 0; r < k; ++r) s += P.a[k];
    d[k - 1] = s;
  }
  const int m = 2 * n - 1;
  Mat<T> S(m);
  for (int r = 0; r < n - 1; ++r)
    for (int k = 0; k <= n; ++k) S(r, r + k) = P.a[n - k];
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= n - 1; ++k) S(n - 1 + r, r + k) = d[n - 1 - k];
  T res = determinant(S, one);
  return ((n * (n - 1) / 2) % 2) ? -res : res;
}

}  // namespace pcurv
