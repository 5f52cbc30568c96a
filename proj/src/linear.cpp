#include "yk/linear.hpp"

#include <algorithm>
#include <cmath>

namespace yk {

namespace {

void require_same_shape(const Mat& a, const Mat& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(op) + ": shape mismatch " + a.shape() +
                         " vs " + b.shape());
}

void require_square(const Mat& a, const char* op) {
  if (!a.square())
    throw DimensionError(std::string(op) + ": matrix is not square (" +
                         a.shape() + ")");
}

}  // namespace

Mat& Mat::operator+=(const Mat& o) {
  require_same_shape(*this, o, "add");
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) (*this)(r, c) += o(r, c);
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require_same_shape(*this, o, "subtract");
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) (*this)(r, c) -= o(r, c);
  return *this;
}

Mat& Mat::operator*=(Complex s) {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) (*this)(r, c) *= s;
  return *this;
}

Mat matmul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows())
    throw DimensionError("matmul: shape mismatch " + a.shape() + " * " +
                         b.shape());
  Mat out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex(0.0)) continue;
      for (int c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ar = 0; ar < a.rows(); ++ar)
    for (int ac = 0; ac < a.cols(); ++ac) {
      const Complex s = a(ar, ac);
      if (s == Complex(0.0)) continue;
      for (int br = 0; br < b.rows(); ++br)
        for (int bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
    }
  return out;
}

Mat commutator(const Mat& a, const Mat& b) {
  require_same_shape(a, b, "commutator");
  require_square(a, "commutator");
  return matmul(a, b) - matmul(b, a);
}

Mat anticommutator(const Mat& a, const Mat& b) {
  require_same_shape(a, b, "anticommutator");
  require_square(a, "anticommutator");
  return matmul(a, b) + matmul(b, a);
}

Mat dagger(const Mat& a) {
  Mat out(a.cols(), a.rows());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
  return out;
}

Complex trace(const Mat& a) {
  require_square(a, "trace");
  Complex t = 0.0;
  for (int i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

// LU elimination with partial pivoting; fine at these sizes.
Complex det(const Mat& a) {
  require_square(a, "det");
  Mat m = a;
  const int n = m.rows();
  Complex d = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
    if (std::abs(m(piv, col)) == 0.0) return 0.0;
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(m(piv, c), m(col, c));
      d = -d;
    }
    d *= m(col, col);
    for (int r = col + 1; r < n; ++r) {
      const Complex factor = m(r, col) / m(col, col);
      for (int c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return d;
}

Mat inverse(const Mat& a) {
  require_square(a, "inverse");
  const double ad = std::abs(det(a));
  if (ad < kSingularTol) throw SingularMatrixError(ad);
  const int n = a.rows();
  Mat m = a;
  Mat inv = Mat::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
    if (piv != col)
      for (int c = 0; c < n; ++c) {
        std::swap(m(piv, c), m(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    const Complex p = m(col, col);
    for (int c = 0; c < n; ++c) {
      m(col, c) /= p;
      inv(col, c) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex factor = m(r, col);
      if (factor == Complex(0.0)) continue;
      for (int c = 0; c < n; ++c) {
        m(r, c) -= factor * m(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

double max_abs(const Mat& a) {
  double m = 0.0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m = std::max(m, std::abs(a(r, c)));
  return m;
}

double max_abs_distance(const Mat& a, const Mat& b) {
  require_same_shape(a, b, "max_abs_distance");
  double m = 0.0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

}  // namespace yk
