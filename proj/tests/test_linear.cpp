#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "yk/lie.hpp"
#include "yk/linear.hpp"

using namespace yk;

namespace {

constexpr Complex I(0.0, 1.0);

Mat random_mat(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = Complex(u(rng), u(rng));
  return m;
}

}  // namespace

TEST_CASE("matmul basics") {
  const auto su3 = gellmann_basis();
  const Mat L1 = 2.0 * su3.F(1), L2 = 2.0 * su3.F(2);
  CHECK(max_abs_distance(matmul(Mat::identity(3), L1), L1) == 0.0);

  Mat expected(3, 3);  // L1 L2 = i diag(1, -1, 0)
  expected(0, 0) = I;
  expected(1, 1) = -I;
  CHECK(max_abs_distance(matmul(L1, L2), expected) <= 1e-12);

  const auto su2 = pauli_basis();
  const Mat sp = 2.0 * (su2.F(1) + I * su2.F(2));
  const Mat sm = 2.0 * (su2.F(1) - I * su2.F(2));
  Mat diag40(2, 2);
  diag40(0, 0) = 4.0;
  CHECK(max_abs_distance(matmul(sp, sm), diag40) <= 1e-12);

  CHECK_THROWS_AS(matmul(Mat(2, 3), Mat(2, 3)), DimensionError);
}

TEST_CASE("kron basics and mixed-product law") {
  CHECK(max_abs_distance(kron(Mat::identity(2), Mat::identity(2)), Mat::identity(4)) == 0.0);

  const auto su2 = pauli_basis();
  const Mat s3 = 2.0 * su2.F(3);
  Mat expected(4, 4);
  expected(0, 0) = expected(1, 1) = 1.0;
  expected(2, 2) = expected(3, 3) = -1.0;
  CHECK(max_abs_distance(kron(s3, Mat::identity(2)), expected) <= 1e-12);

  const Mat k = kron(Mat(3, 3), Mat(3, 3));
  CHECK(k.rows() == 9);
  CHECK(k.cols() == 9);

  std::mt19937_64 rng(20240811);
  for (int n : {2, 3})
    for (int rep = 0; rep < 20; ++rep) {
      const Mat a = random_mat(n, rng), b = random_mat(n, rng);
      const Mat c = random_mat(n, rng), d = random_mat(n, rng);
      CHECK(max_abs_distance(matmul(kron(a, b), kron(c, d)),
                             kron(matmul(a, c), matmul(b, d))) <= 1e-12);
    }
}

TEST_CASE("commutator") {
  const auto su3 = gellmann_basis();
  const Mat L1 = 2.0 * su3.F(1), L2 = 2.0 * su3.F(2), L3 = 2.0 * su3.F(3);
  const Mat L4 = 2.0 * su3.F(4), L5 = 2.0 * su3.F(5), L8 = 2.0 * su3.F(8);
  CHECK(max_abs_distance(commutator(L1, L2), 2.0 * I * L3) <= 1e-12);
  CHECK(max_abs(commutator(L4, L4)) == 0.0);
  CHECK(max_abs_distance(commutator(L4, L5), I * (L3 + std::sqrt(3.0) * L8)) <= 1e-12);

  std::mt19937_64 rng(7);
  const Mat a = random_mat(4, rng), b = random_mat(4, rng), c = random_mat(4, rng);
  CHECK(max_abs_distance(commutator(a, b), -commutator(b, a)) <= 1e-12);
  CHECK(max_abs_distance(commutator(a + b, c), commutator(a, c) + commutator(b, c)) <= 1e-12);
}

TEST_CASE("dagger") {
  const auto ops = shift_ops(gellmann_basis());
  Mat im(3, 3);
  im(1, 0) = 1.0;  // lowering partner of the raising ladder
  CHECK(max_abs_distance(dagger(ops.Ip), im) == 0.0);
  CHECK(max_abs_distance(dagger(ops.I3), ops.I3) == 0.0);
  std::mt19937_64 rng(11);
  const Mat a = random_mat(5, rng);
  CHECK(max_abs_distance(dagger(dagger(a)), a) == 0.0);
}

TEST_CASE("det") {
  CHECK(std::abs(det(Mat::identity(9)) - 1.0) == 0.0);

  // The 4x4 middle-block transform (nu, lambda) has det = nu^2 - lambda^2/4.
  auto tau_like = [](double nu, double lambda) {
    Mat m = Mat::identity(4);
    m(1, 1) = m(2, 2) = nu;
    m(1, 2) = m(2, 1) = -lambda / 2.0;
    return m;
  };
  CHECK(std::abs(det(tau_like(1.0, 1.0)) - 0.75) <= 1e-12);
  CHECK(std::abs(det(tau_like(1.0, 2.0))) <= 1e-12);

  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 30; ++rep) {
    const Mat a = random_mat(6, rng), b = random_mat(6, rng);
    CHECK(std::abs(det(matmul(a, b)) - det(a) * det(b)) <= 1e-9);
  }
}

TEST_CASE("inverse") {
  CHECK(max_abs_distance(inverse(Mat::identity(4)), Mat::identity(4)) == 0.0);
  std::mt19937_64 rng(123);
  for (int rep = 0; rep < 30; ++rep) {
    const Mat a = random_mat(7, rng);
    if (std::abs(det(a)) < kSingularTol) continue;
    CHECK(max_abs_distance(matmul(a, inverse(a)), Mat::identity(7)) <= 1e-9);
  }
  Mat singular(3, 3);  // rank 1
  singular(0, 0) = singular(0, 1) = singular(1, 0) = singular(1, 1) = 1.0;
  CHECK_THROWS_AS(inverse(singular), SingularMatrixError);
  try {
    inverse(singular);
  } catch (const SingularMatrixError& e) {
    CHECK(e.abs_det <= kSingularTol);
  }
}

TEST_CASE("max_abs_distance") {
  std::mt19937_64 rng(5);
  const Mat a = random_mat(4, rng);
  CHECK(max_abs_distance(a, a) == 0.0);
  CHECK(max_abs_distance(Mat::identity(2), Mat::zero(2, 2)) == 1.0);
  CHECK_THROWS_AS(max_abs_distance(Mat(2, 2), Mat(3, 3)), DimensionError);
}
