#include "yk/lie.hpp"

#include <cmath>
#include <stdexcept>

namespace yk {

namespace {

constexpr Complex I(0.0, 1.0);
const double kSqrt3 = std::sqrt(3.0);

Mat mat2(Complex a, Complex b, Complex c, Complex d) {
  Mat m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

}  // namespace

LieBasis pauli_basis() {
  LieBasis b;
  b.name = "su2";
  b.rep_dim = 2;
  b.n_gens = 3;
  b.gen = {
      0.5 * mat2(0, 1, 1, 0),    // sigma1 / 2
      0.5 * mat2(0, -I, I, 0),   // sigma2 / 2
      0.5 * mat2(1, 0, 0, -1),   // sigma3 / 2
  };
  b.f = compute_f(b);  // = epsilon_abc
  b.d.assign(27, 0.0);
  return b;
}

LieBasis gellmann_basis() {
  LieBasis b;
  b.name = "su3";
  b.rep_dim = 3;
  b.n_gens = 8;
  b.gen.assign(8, Mat(3, 3));
  auto& g = b.gen;
  g[0](0, 1) = g[0](1, 0) = 1.0;
  g[1](0, 1) = -I;
  g[1](1, 0) = I;
  g[2](0, 0) = 1.0;
  g[2](1, 1) = -1.0;
  g[3](0, 2) = g[3](2, 0) = 1.0;
  g[4](0, 2) = -I;
  g[4](2, 0) = I;
  g[5](1, 2) = g[5](2, 1) = 1.0;
  g[6](1, 2) = -I;
  g[6](2, 1) = I;
  g[7](0, 0) = g[7](1, 1) = 1.0 / kSqrt3;
  g[7](2, 2) = -2.0 / kSqrt3;
  for (auto& m : g) m *= 0.5;  // F^a = Lambda^a / 2
  b.f = compute_f(b);
  b.d = compute_d(b);
  return b;
}

std::vector<double> compute_f(const LieBasis& basis) {
  const int n = basis.n_gens;
  std::vector<double> f(size_t(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        // lambda_a = 2 F_a, so Tr([l_a,l_b] l_c)/4i = 2 Tr([F_a,F_b] F_c) / i
        const Complex t =
            2.0 * trace(matmul(commutator(basis.gen[a], basis.gen[b]),
                               basis.gen[c])) / I;
        if (std::abs(t.imag()) > 1e-12)
          throw std::runtime_error("compute_f: nonreal structure constant at (" +
                                   std::to_string(a + 1) + "," +
                                   std::to_string(b + 1) + "," +
                                   std::to_string(c + 1) + ")");
        f[size_t(a) * n * n + size_t(b) * n + c] = t.real();
      }
  return f;
}

std::vector<double> compute_d(const LieBasis& basis) {
  const int n = basis.n_gens;
  std::vector<double> d(size_t(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const Complex t =
            2.0 * trace(matmul(anticommutator(basis.gen[a], basis.gen[b]),
                               basis.gen[c]));
        if (std::abs(t.imag()) > 1e-12)
          throw std::runtime_error("compute_d: nonreal symmetric constant at (" +
                                   std::to_string(a + 1) + "," +
                                   std::to_string(b + 1) + "," +
                                   std::to_string(c + 1) + ")");
        d[size_t(a) * n * n + size_t(b) * n + c] = t.real();
      }
  return d;
}

namespace {
double table_at(const std::vector<double>& t, int n, int a, int b, int c) {
  return t[size_t(a) * n * n + size_t(b) * n + c];
}
}  // namespace

double verify_jacobi(const std::vector<double>& f, int n) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int nn = 0; nn < n; ++nn) {
          double s = 0.0;
          for (int m = 0; m < n; ++m)
            s += table_at(f, n, i, j, m) * table_at(f, n, k, m, nn) +
                 table_at(f, n, k, i, m) * table_at(f, n, j, m, nn) +
                 table_at(f, n, j, k, m) * table_at(f, n, i, m, nn);
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

double verify_fd_identity(const std::vector<double>& f,
                          const std::vector<double>& d, int n) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int nn = 0; nn < n; ++nn) {
          double s = 0.0;
          for (int m = 0; m < n; ++m)
            s += table_at(f, n, i, j, m) * table_at(d, n, k, nn, m) +
                 table_at(f, n, i, k, m) * table_at(d, n, j, nn, m) +
                 table_at(f, n, i, nn, m) * table_at(d, n, j, k, m);
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

Mat casimir_C1(const LieBasis& basis) {
  const int n = basis.n_gens;
  Mat quad = Mat::zero(basis.rep_dim, basis.rep_dim);
  for (const auto& g : basis.gen) quad += matmul(g, g);
  // f-contracted cubic form: -(2i/N) f_abc F_a F_b F_c, where N is the
  // adjoint Casimir f_acd f_bcd = N delta_ab, recovered from the f-table
  double fsq = 0.0;
  for (double v : basis.f) fsq += v * v;
  const double N = fsq / n;
  Mat cubic = Mat::zero(basis.rep_dim, basis.rep_dim);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) {
        const double fab = basis.fc(a, b, c);
        if (fab == 0.0) continue;
        cubic += fab * matmul(matmul(basis.F(a), basis.F(b)), basis.F(c));
      }
  cubic *= -2.0 * I / N;
  const double gap = max_abs_distance(quad, cubic);
  if (gap > 1e-10)
    throw std::runtime_error(
        "casimir_C1: quadratic and f-contracted forms disagree, residual " +
        std::to_string(gap));
  return quad;
}

Mat casimir_C2(const LieBasis& basis) {
  const int n = basis.n_gens;
  Mat c2 = Mat::zero(basis.rep_dim, basis.rep_dim);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) {
        const double dab = basis.dc(a, b, c);
        if (dab == 0.0) continue;
        c2 += dab * matmul(matmul(basis.F(a), basis.F(b)), basis.F(c));
      }
  const Mat c1 = casimir_C1(basis);
  const Mat id = Mat::identity(basis.rep_dim);
  const Mat expected = matmul(c1, 2.0 * c1 - (11.0 / 6.0) * id);
  const double gap = max_abs_distance(c2, expected);
  if (gap > 1e-10)
    throw std::runtime_error(
        "casimir_C2: cubic form violates C1(2C1 - 11/6), residual " +
        std::to_string(gap));
  return c2;
}

ShiftOps shift_combinations(const std::vector<Mat>& g) {
  ShiftOps o;
  o.Ip = g[0] + I * g[1];
  o.Im = g[0] - I * g[1];
  o.Up = g[5] + I * g[6];
  o.Um = g[5] - I * g[6];
  o.Vp = g[3] - I * g[4];  // opposite sign to I/U ladders
  o.Vm = g[3] + I * g[4];
  o.I3 = g[2];
  o.I8 = (2.0 / kSqrt3) * g[7];
  o.Y = o.I8;
  o.Q = o.I3 + 0.5 * o.Y;
  o.U3 = -0.5 * o.I3 + 0.75 * o.I8;
  o.V3 = -0.5 * o.I3 - 0.75 * o.I8;
  return o;
}

ShiftOps shift_ops(const LieBasis& basis) {
  if (basis.name != "su3")
    throw std::invalid_argument("shift_ops: basis must be su3");
  return shift_combinations(basis.gen);
}

std::vector<RelationCheck> shift_table(const ShiftOps& o, double s,
                                       const std::string& prefix, double tol) {
  const int n = o.I3.rows();
  const Mat zero = Mat::zero(n, n);
  std::vector<RelationCheck> out;
  auto chk = [&](const std::string& name, const Mat& lhs, const Mat& rhs) {
    out.push_back(make_check(prefix + ":" + name, max_abs_distance(lhs, rhs), tol));
  };
  chk("[I3,I+]=I+", commutator(o.I3, o.Ip), s * o.Ip);
  chk("[I3,I-]=-I-", commutator(o.I3, o.Im), -s * o.Im);
  chk("[I+,I-]=2I3", commutator(o.Ip, o.Im), 2.0 * s * o.I3);
  chk("[I8,I+]=0", commutator(o.I8, o.Ip), zero);
  chk("[I8,I-]=0", commutator(o.I8, o.Im), zero);
  chk("[I8,I3]=0", commutator(o.I8, o.I3), zero);
  chk("[I3,U+]=-U+/2", commutator(o.I3, o.Up), -0.5 * s * o.Up);
  chk("[I3,U-]=U-/2", commutator(o.I3, o.Um), 0.5 * s * o.Um);
  chk("[I8,U+]=U+", commutator(o.I8, o.Up), s * o.Up);
  chk("[I8,U-]=-U-", commutator(o.I8, o.Um), -s * o.Um);
  chk("[U+,U-]=-I3+3I8/2", commutator(o.Up, o.Um), s * (-o.I3 + 1.5 * o.I8));
  chk("[I3,V+]=-V+/2", commutator(o.I3, o.Vp), -0.5 * s * o.Vp);
  chk("[I3,V-]=V-/2", commutator(o.I3, o.Vm), 0.5 * s * o.Vm);
  chk("[I8,V+]=-V+", commutator(o.I8, o.Vp), -s * o.Vp);
  chk("[I8,V-]=V-", commutator(o.I8, o.Vm), s * o.Vm);
  chk("[V+,V-]=-(I3+3I8/2)", commutator(o.Vp, o.Vm), -s * (o.I3 + 1.5 * o.I8));
  chk("[I+,U+]=V-", commutator(o.Ip, o.Up), s * o.Vm);
  chk("[I-,U-]=-V+", commutator(o.Im, o.Um), -s * o.Vp);
  chk("[U+,V+]=I-", commutator(o.Up, o.Vp), s * o.Im);
  chk("[U-,V-]=-I+", commutator(o.Um, o.Vm), -s * o.Ip);
  chk("[V+,I+]=U-", commutator(o.Vp, o.Ip), s * o.Um);
  chk("[V-,I-]=-U+", commutator(o.Vm, o.Im), -s * o.Up);
  chk("[I+,U-]=0", commutator(o.Ip, o.Um), zero);
  chk("[I-,U+]=0", commutator(o.Im, o.Up), zero);
  chk("[U+,V-]=0", commutator(o.Up, o.Vm), zero);
  chk("[U-,V+]=0", commutator(o.Um, o.Vp), zero);
  chk("[V+,I-]=0", commutator(o.Vp, o.Im), zero);
  chk("[V-,I+]=0", commutator(o.Vm, o.Ip), zero);
  return out;
}

std::vector<RelationCheck> verify_su3_table(const ShiftOps& o, double tol) {
  auto out = shift_table(o, 1.0, "Eq28", tol);
  const int n = o.I3.rows();
  const Mat zero = Mat::zero(n, n);
  auto chk = [&](const std::string& name, const Mat& lhs, const Mat& rhs) {
    out.push_back(make_check(name, max_abs_distance(lhs, rhs), tol));
  };
  chk("Eq30:[U3,U+]=U+", commutator(o.U3, o.Up), o.Up);
  chk("Eq30:[U3,U-]=-U-", commutator(o.U3, o.Um), -o.Um);
  chk("Eq30:[U+,U-]=2U3", commutator(o.Up, o.Um), 2.0 * o.U3);
  chk("Eq30:[V3,V+]=V+", commutator(o.V3, o.Vp), o.Vp);
  chk("Eq30:[V3,V-]=-V-", commutator(o.V3, o.Vm), -o.Vm);
  chk("Eq30:[V+,V-]=2V3", commutator(o.Vp, o.Vm), 2.0 * o.V3);
  chk("Eq32:[U+,Q]=0", commutator(o.Up, o.Q), zero);
  chk("Eq32:[U-,Q]=0", commutator(o.Um, o.Q), zero);
  chk("Eq32:[U3,Q]=0", commutator(o.U3, o.Q), zero);
  return out;
}

}  // namespace yk
