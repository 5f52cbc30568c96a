#pragma once

// Small dense complex matrices (dimensions <= 81 in practice) with the exact
// error semantics the verification suites rely on: dimension mismatches name
// both shapes, inversion of a near-singular matrix reports |det|.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace yk {

using Complex = std::complex<double>;

// |det| below this threshold makes inverse() refuse to proceed.
inline constexpr double kSingularTol = 1e-8;

struct SingularMatrixError : std::runtime_error {
  double abs_det;
  explicit SingularMatrixError(double ad)
      : std::runtime_error("singular matrix: |det| = " + std::to_string(ad)),
        abs_det(ad) {}
};

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(check_size(rows, cols)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  Complex& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Complex& operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(Complex s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Complex s, Mat a) { return a *= s; }
  friend Mat operator*(Mat a, Complex s) { return a *= s; }
  friend Mat operator-(Mat a) { return a *= -1.0; }

 private:
  static size_t check_size(int rows, int cols) {
    if (rows <= 0 || cols <= 0)
      throw DimensionError("matrix dimensions must be positive, got " +
                           std::to_string(rows) + "x" + std::to_string(cols));
    return size_t(rows) * size_t(cols);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> a_;
};

Mat matmul(const Mat& a, const Mat& b);
inline Mat operator*(const Mat& a, const Mat& b) { return matmul(a, b); }

Mat kron(const Mat& a, const Mat& b);
Mat commutator(const Mat& a, const Mat& b);    // AB - BA
Mat anticommutator(const Mat& a, const Mat& b);  // AB + BA
Mat dagger(const Mat& a);

Complex trace(const Mat& a);
Complex det(const Mat& a);
Mat inverse(const Mat& a);  // throws SingularMatrixError when |det| < kSingularTol

double max_abs(const Mat& a);
double max_abs_distance(const Mat& a, const Mat& b);

}  // namespace yk
