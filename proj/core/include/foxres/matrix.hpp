#pragma once
// Small dense matrices over arbitrary exact scalar types.
// Scalars must support +, -, *, ==, default-construct-to-zero and isZero().
// Row-vector convention throughout the library: maps act on the right,
// so the matrix of B∘A is A·B.

#include <cassert>
#include <stdexcept>
#include <vector>

namespace foxres {

template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Mat(int r, int c, const T& fill) : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}

  T& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const T& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
};

template <class T>
Mat<T> matAdd(const Mat<T>& x, const Mat<T>& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matAdd: shape mismatch");
  Mat<T> r(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

template <class T>
Mat<T> matSub(const Mat<T>& x, const Mat<T>& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matSub: shape mismatch");
  Mat<T> r(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

template <class T>
Mat<T> matNeg(const Mat<T>& x) {
  Mat<T> r(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = -x.a[i];
  return r;
}

template <class T>
Mat<T> matMul(const Mat<T>& x, const Mat<T>& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matMul: shape mismatch");
  Mat<T> r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const T& xik = x.at(i, k);
      if (xik.isZero()) continue;
      for (int j = 0; j < y.cols; ++j) {
        if (y.at(k, j).isZero()) continue;
        r.at(i, j) = r.at(i, j) + xik * y.at(k, j);
      }
    }
  return r;
}

// Block diagonal with k copies of x along the diagonal.
template <class T>
Mat<T> blockDiag(const Mat<T>& x, int k) {
  Mat<T> r(x.rows * k, x.cols * k);
  for (int b = 0; b < k; ++b)
    for (int i = 0; i < x.rows; ++i)
      for (int j = 0; j < x.cols; ++j) r.at(b * x.rows + i, b * x.cols + j) = x.at(i, j);
  return r;
}

template <class T>
bool matIsZero(const Mat<T>& x) {
  for (const auto& e : x.a)
    if (!e.isZero()) return false;
  return true;
}

}  // namespace foxres
