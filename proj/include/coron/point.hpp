#pragma once

#include <array>
#include <cmath>
#include <initializer_list>
#include <stdexcept>

namespace coron {

inline constexpr int kMaxDim = 8;

// Point in R^n, n <= kMaxDim. Fixed capacity so hot loops stay on the stack.
struct Point {
  int n = 0;
  std::array<double, kMaxDim> x{};

  Point() = default;
  explicit Point(int dim) : n(dim) {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("Point: bad dimension");
  }
  Point(std::initializer_list<double> v) : n(static_cast<int>(v.size())) {
    if (n < 1 || n > kMaxDim) throw std::invalid_argument("Point: bad dimension");
    int i = 0;
    for (double c : v) x[i++] = c;
  }

  double& operator[](int i) { return x[i]; }
  double operator[](int i) const { return x[i]; }

  Point& operator+=(const Point& o) {
    for (int i = 0; i < n; ++i) x[i] += o.x[i];
    return *this;
  }
  Point& operator-=(const Point& o) {
    for (int i = 0; i < n; ++i) x[i] -= o.x[i];
    return *this;
  }
  Point& operator*=(double c) {
    for (int i = 0; i < n; ++i) x[i] *= c;
    return *this;
  }
};

inline Point operator+(Point a, const Point& b) { return a += b; }
inline Point operator-(Point a, const Point& b) { return a -= b; }
inline Point operator*(double c, Point a) { return a *= c; }

inline double dot(const Point& a, const Point& b) {
  double s = 0;
  for (int i = 0; i < a.n; ++i) s += a.x[i] * b.x[i];
  return s;
}
inline double norm2(const Point& a) { return dot(a, a); }
inline double norm(const Point& a) { return std::sqrt(norm2(a)); }

inline Point zero_point(int n) { return Point(n); }

inline Point unit_vector(int n, int axis) {
  Point e(n);
  e[axis] = 1.0;
  return e;
}

// Dense n x n matrix with the same fixed capacity, row major.
struct SqMat {
  int n = 0;
  std::array<double, kMaxDim * kMaxDim> a{};

  SqMat() = default;
  explicit SqMat(int dim) : n(dim) {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("SqMat: bad dimension");
  }

  double& operator()(int i, int j) { return a[i * kMaxDim + j]; }
  double operator()(int i, int j) const { return a[i * kMaxDim + j]; }

  static SqMat identity(int dim) {
    SqMat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  Point apply(const Point& v) const {
    Point r(n);
    for (int i = 0; i < n; ++i) {
      double s = 0;
      for (int j = 0; j < n; ++j) s += (*this)(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  // R^T v, cheaper than forming the transpose
  Point apply_transposed(const Point& v) const {
    Point r(n);
    for (int j = 0; j < n; ++j) {
      double s = 0;
      for (int i = 0; i < n; ++i) s += (*this)(i, j) * v[i];
      r[j] = s;
    }
    return r;
  }
};

inline SqMat operator*(const SqMat& a, const SqMat& b) {
  SqMat c(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) {
      double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < a.n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

}  // namespace coron
