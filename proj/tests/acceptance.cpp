// Acceptance gate: one pass/fail line per criterion, exit nonzero if any
// criterion fails. Every check recomputes its quantities from scratch; the
// unit suites cover the same ground with more cases and fault injection.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "yk/entanglement.hpp"
#include "yk/lie.hpp"
#include "yk/linear.hpp"
#include "yk/reduction.hpp"
#include "yk/yangian.hpp"

using namespace yk;

namespace {

constexpr Complex kI(0.0, 1.0);
int g_failures = 0;

void report(int n, bool pass, const std::string& what) {
  std::printf("criterion %d: %s - %s\n", n, pass ? "PASS" : "FAIL", what.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

struct ParamDraw {
  std::mt19937_64 rng;
  std::uniform_real_distribution<double> u{-2.0, 2.0};
  explicit ParamDraw(unsigned seed) : rng(seed) {}

  YangianParams generic() {
    for (;;) {
      YangianParams p(u(rng), u(rng), u(rng));
      if (std::abs(p.sum()) < 0.1) continue;
      if (std::abs(p.nu - p.lambda / 2.0) < 0.1 ||
          std::abs(p.nu + p.lambda / 2.0) < 0.1)
        continue;
      return p;
    }
  }
  YangianParams constrained() {
    for (;;) {
      const double nu = u(rng), lam = u(rng);
      if (std::abs(nu) < 0.2) continue;
      if (std::abs(nu - lam / 2.0) < 0.1 || std::abs(nu + lam / 2.0) < 0.1) continue;
      const auto p = YangianParams::constrained_from(nu, lam);
      if (std::abs(p.sum()) < 0.1) continue;
      return p;
    }
  }
};

SiteRep fund() { return {gellmann_basis(), RepKind::fundamental}; }
SiteRep conj() { return {gellmann_basis(), RepKind::conjugate}; }

Mat ladder_square_sum(const ShiftOps& o) {
  Mat out = Mat::zero(o.I3.rows(), o.I3.cols());
  for (const Mat* m : {&o.Ip, &o.Im, &o.I3, &o.Up, &o.Um, &o.Vp, &o.Vm})
    out += matmul(*m, *m);
  const Mat i8 = (std::sqrt(3.0) / 2.0) * o.I8;
  out += matmul(i8, i8);
  return out;
}

double f_expected(int i, int j, int k) {
  struct Entry { int a, b, c; double v; };
  static const Entry table[] = {
      {1, 2, 3, 1.0},
      {4, 5, 8, std::sqrt(3.0) / 2.0}, {6, 7, 8, std::sqrt(3.0) / 2.0},
      {1, 4, 7, 0.5}, {2, 4, 6, 0.5}, {2, 5, 7, 0.5}, {3, 4, 5, 0.5},
      {1, 5, 6, -0.5}, {3, 6, 7, -0.5}};
  int p[3] = {i, j, k};
  double sign = 1.0;
  // sort the triple, tracking permutation parity
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2 - a; ++b)
      if (p[b] > p[b + 1]) { std::swap(p[b], p[b + 1]); sign = -sign; }
  if (p[0] == p[1] || p[1] == p[2]) return 0.0;
  for (const auto& e : table)
    if (e.a == p[0] && e.b == p[1] && e.c == p[2]) return sign * e.v;
  return 0.0;
}

void criterion1() {
  const auto b = gellmann_basis();
  double worst = 0.0;
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      for (int k = 1; k <= 8; ++k)
        worst = std::max(worst, std::abs(b.fc(i, j, k) - f_expected(i, j, k)));
  report(1, worst <= 1e-12,
         "su(3) structure constant table matches the canonical nine values, "
         "all other entries vanish (max residual " + fmt(worst) + ")");
}

void criterion2() {
  const auto b = gellmann_basis();
  double worst = 0.0;
  for (int a = 1; a <= 8; ++a)
    for (int c = 1; c <= 8; ++c) {
      // commutator and anticommutator closures of the generators
      Mat comm_rhs = Mat::zero(3, 3), anti_rhs = Mat::zero(3, 3);
      for (int e = 1; e <= 8; ++e) {
        comm_rhs += (kI * b.fc(a, c, e)) * b.F(e);
        anti_rhs += Complex(b.dc(a, c, e)) * b.F(e);
      }
      if (a == c) anti_rhs += (1.0 / 3.0) * Mat::identity(3);
      worst = std::max(worst, max_abs_distance(commutator(b.F(a), b.F(c)), comm_rhs));
      worst = std::max(worst,
                       max_abs_distance(anticommutator(b.F(a), b.F(c)), anti_rhs));
      // normalization Tr(F^a F^c) = delta / 2
      const Complex tr = trace(matmul(b.F(a), b.F(c)));
      worst = std::max(worst, std::abs(tr - Complex(a == c ? 0.5 : 0.0)));
    }
  const auto table = verify_su3_table(shift_ops(b), 1e-12);
  const bool table_ok = all_pass(table);
  worst = std::max(worst, worst_residual(table));

  bool casimir_ok = true;
  double cworst = 0.0;
  try {
    cworst = std::max(
        max_abs_distance(casimir_C1(b), (4.0 / 3.0) * Mat::identity(3)),
        max_abs_distance(casimir_C2(b), (10.0 / 9.0) * Mat::identity(3)));
    casimir_ok = cworst <= 1e-10;
  } catch (const std::exception&) {
    casimir_ok = false;
  }
  report(2, worst <= 1e-12 && table_ok && casimir_ok,
         "single-site closures, trace normalization, ladder/charge tables "
         "(max residual " + fmt(worst) + "), Casimirs (4/3, 10/9) to 1e-10 "
         "(residual " + fmt(cworst) + ")");
}

void criterion3() {
  ParamDraw draw(101);
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const auto p = draw.generic();
    const auto rep = build_su2(p);
    worst = std::max(worst, adjoint_covariance_defect(rep));
    worst = std::max(worst, closure_defect_su2(rep));
    Mat j2 = Mat::zero(4, 4), sdot = Mat::zero(4, 4);
    for (int a = 1; a <= 3; ++a) j2 += matmul(rep.J(a), rep.J(a));
    const auto& g = rep.site1.basis.gen;
    for (int a = 0; a < 3; ++a)
      sdot += matmul(embed(g[a], 1, 2, 2), embed(g[a], 2, 2, 2));
    const double s2 = p.sum() * p.sum();
    const Mat rhs = (1.0 / s2) *
        (0.75 * (p.mu * p.mu + p.nu * p.nu - p.lambda * p.lambda / 2.0) *
             Mat::identity(4) +
         (2.0 * p.mu * p.nu + p.lambda * p.lambda / 2.0) * sdot);
    worst = std::max(worst, max_abs_distance(j2, rhs));
  }
  double cw = 0.0;
  for (int n = 0; n < 20; ++n) {
    const auto rep = build_su2(draw.constrained());
    Mat j2 = Mat::zero(4, 4);
    for (int a = 1; a <= 3; ++a) j2 += matmul(rep.J(a), rep.J(a));
    cw = std::max(cw, max_abs_distance(j2, 0.75 * Mat::identity(4)));
    cw = std::max(cw, max_abs_distance(commutator(rep.J(1), rep.J(2)), kI * rep.J(3)));
    cw = std::max(cw, max_abs_distance(commutator(rep.J(2), rep.J(3)), kI * rep.J(1)));
    cw = std::max(cw, max_abs_distance(commutator(rep.J(3), rep.J(1)), kI * rep.J(2)));
  }
  report(3, worst <= 1e-12 && cw <= 1e-12,
         "su(2) two-site covariance, closure and squared-sum identity over 100 "
         "draws (max residual " + fmt(worst) + "); constrained J^2 = (3/4)1 and "
         "epsilon-closure (max residual " + fmt(cw) + ")");
}

void criterion4() {
  ParamDraw draw(202);
  bool cross_ok = true;
  for (int n = 0; n < 100 && cross_ok; ++n) {
    const auto p = draw.generic();
    try {
      barred_ops(build_su3(p, fund(), fund()));  // throws above 1e-10
      if (n % 5 == 0) barred_ops(build_su3(p, fund(), conj()));
    } catch (const std::exception&) {
      cross_ok = false;
    }
  }
  double worst = 0.0;
  bool tables_ok = true;
  for (int n = 0; n < 20; ++n) {
    const auto p = draw.constrained();
    const auto rep = build_su3(p, fund(), fund());
    const auto t38 = verify_barred_table(rep, 1e-10);
    const auto t44 = verify_tilde_table(rep, 1e-10);
    tables_ok = tables_ok && all_pass(t38) && all_pass(t44);
    worst = std::max({worst, worst_residual(t38), worst_residual(t44)});
    const double s2 = p.sum() * p.sum();
    worst = std::max(worst, max_abs_distance(ladder_square_sum(barred_ops(rep)),
                                             (s2 / 3.0) * Mat::identity(9)));
    const auto ops = normalized_ops(rep);
    ShiftOps tn;
    tn.Ip = ops.at("Itil+"); tn.Im = ops.at("Itil-");
    tn.Up = ops.at("Util+"); tn.Um = ops.at("Util-");
    tn.Vp = ops.at("Vtil+"); tn.Vm = ops.at("Vtil-");
    tn.I3 = ops.at("Itil3"); tn.I8 = ops.at("Itil8");
    worst = std::max(worst, max_abs_distance(ladder_square_sum(tn),
                                             (1.0 / 3.0) * Mat::identity(9)));
  }
  report(4, cross_ok && tables_ok && worst <= 1e-10,
         "su(3) barred operators agree between the two constructions over 100 "
         "draws; constrained ladder tables and the (1/3)(mu+nu)^2 / (1/3) "
         "squared sums (max residual " + fmt(worst) + ")");
}

void criterion5() {
  ParamDraw draw(303);
  bool ok = true;
  double worst = 0.0;
  for (int n = 0; n < 20; ++n) {
    const auto checks = spectrum_check_I3(build_su3(draw.generic(), fund(), fund()));
    ok = ok && checks.size() == 9 && all_pass(checks);
    worst = std::max(worst, worst_residual(checks));
  }
  for (int n = 0; n < 20; ++n) {
    const auto rep = build_su3(draw.constrained(), fund(), fund());
    const auto checks = spectrum_check_I3(rep);
    ok = ok && checks.size() == 3 && all_pass(checks);
    worst = std::max(worst, worst_residual(checks));
    // multiplicity 3+3+3: with the spectrum pinned to {0, 1/2, -1/2}, the
    // trace moments Tr(M^k) = m0 0^k + m+ (1/2)^k + m- (-1/2)^k for
    // k = 1..4 determine the multiplicities; (0, 3/2, 0, 3/8) means 3+3+3.
    const Mat& m = normalized_ops(rep).at("Itil3");
    Mat power = m;
    const double expected_moment[4] = {0.0, 1.5, 0.0, 0.375};
    for (int k = 0; k < 4; ++k) {
      ok = ok && std::abs(trace(power) - Complex(expected_moment[k])) <= 1e-10;
      power = matmul(power, m);
    }
  }
  report(5, ok && worst <= 1e-9,
         "isospin-3 spectrum: nine closed-form roots generically, collapsing to "
         "{0, +-1/2} each with multiplicity 3 under the constraint (max |det| " +
             fmt(worst) + ")");
}

void criterion6() {
  ParamDraw draw(404);
  bool ok = true;
  double worst = 0.0;
  for (int n = 0; n < 20; ++n) {
    const auto p = draw.constrained();
    const auto r2 = reduce_su2(p, tau(p.nu, p.lambda));
    const auto r3 = reduce_su3(build_su3(p, fund(), fund()), A_matrix(p.nu, p.lambda));
    ok = ok && r2.pass(1e-10) && r3.pass(1e-10);
    for (const auto* r : {&r2, &r3})
      for (const auto& o : r->ops)
        worst = std::max({worst, o.off_block_residual, o.block_match_residual});
    // middle-block resolution: the diagonal hypercharge-type operator reduces
    // to three copies of the single-site I8, not of I3
    const auto su3_basis = gellmann_basis();
    const Mat i8 = (2.0 / std::sqrt(3.0)) * su3_basis.F(8);
    const Mat i3 = su3_basis.F(3);
    for (const auto& o : r3.ops)
      if (o.op == "Itil8") {
        ok = ok && max_abs_distance(o.blocks[1], i8) <= 1e-10 &&
             max_abs_distance(o.blocks[1], i3) > 0.5;
      }
  }
  report(6, ok && worst <= 1e-10,
         "4x4 and 9x9 similarity reductions reproduce the closed-form blocks "
         "with scale nu - lambda/2, middle block of the hypercharge operator "
         "resolved to I8 (max residual " + fmt(worst) + ")");
}

void criterion7() {
  bool ok = true;
  double worst = 0.0;
  for (double alpha : {1.0, 0.5, 3.7}) {
    const auto checks = u1_rescale_check(alpha, 1e-12);
    ok = ok && all_pass(checks);
    worst = std::max(worst, worst_residual(checks));
  }
  report(7, ok,
         "ladder tables invariant under the u(1) rescalings with exponent "
         "patterns summing to zero, for alpha in {1, 1/2, 3.7} (max residual " +
             fmt(worst) + ")");
}

void criterion8() {
  std::mt19937_64 rng(505);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
  double worst = 0.0;
  int done = 0;
  while (done < 100) {
    YangianParams p(u(rng), u(rng), u(rng));
    if (std::abs(p.sum()) < 0.1) continue;
    const double theta = ang(rng);
    const double alpha = std::cos(theta), beta = std::sin(theta);
    if (std::abs(alpha) < 0.05) continue;
    const double num =
        std::pow(p.mu - p.lambda / 2.0, 2) + std::pow(p.nu + p.lambda / 2.0, 2);
    const double a = std::sqrt(
        2.0 / (alpha * alpha + num / (p.sum() * p.sum()) * beta * beta));
    TransitionSpec spec;
    spec.kind = TransitionSpec::Kind::su2_P;
    spec.params = p;
    spec.a = a;
    const auto rep = apply_su2_transition(initial_su2(alpha, beta), spec);
    const double cexp = std::abs((p.mu - p.lambda / 2.0) * (p.nu + p.lambda / 2.0) /
                                 (p.sum() * p.sum()) * a * a * beta * beta);
    worst = std::max(worst, std::abs(rep.final_measure - cexp));
    worst = std::max(worst, std::abs(rep.norm_factor - 1.0));  // normalization
    ++done;
  }
  // reduced point
  TransitionSpec spec;
  spec.kind = TransitionSpec::Kind::su2_P;
  spec.params = YangianParams(0.5, -0.5, 1.0);
  spec.a = std::sqrt(2.0) / 0.6;
  const auto red = apply_su2_transition(initial_su2(0.6, 0.8), spec);
  const bool red_ok = red.final_measure <= 1e-12 &&
                      std::abs(std::abs(red.final_state.at(0, 0)) - 1.0) <= 1e-12;
  report(8, worst <= 1e-10 && red_ok,
         "bi-qubit transition: brute-force concurrence matches the closed form "
         "over 100 draws with the normalizing amplitude (max residual " +
             fmt(worst) + "); reduced point lands on |11> with zero concurrence");
}

void criterion9() {
  const double e1 = 0.3, e2 = 0.7, a1 = 0.6, a2 = 0.8;
  auto spec_for = [&](const YangianParams& p) {
    TransitionSpec s;
    s.kind = TransitionSpec::Kind::su3_P;
    s.params = p;
    s.eta1 = e1;
    s.eta2 = e2;
    return s;
  };

  // (a) reduced point: operator route disentangles exactly
  const YangianParams red(0.5, -0.5, 1.0);
  const auto rrep = apply_su3_transition(initial_meson(a1, a2), spec_for(red));
  const bool entropy0 = rrep.final_measure <= 1e-12 && rrep.disentangled;

  // (b) reduced-point final state vs the published closed form (|u ubar>)
  const auto rcf = meson_closed_form(red, e1, e2, a1, a2);
  double dir = 0.0;
  for (size_t k = 0; k < rcf.state.amp.size(); ++k)
    dir = std::max(dir, std::abs(rcf.state.amp[k] - rrep.final_state.amp[k]));
  const bool direction_match = dir <= 1e-10;

  // (c) reduced-point normalization vs the published value
  const double norm_gap = std::abs(rrep.norm_factor - std::sqrt(rcf.norm_sq));
  const bool norm_match = norm_gap <= 1e-10;

  // (d) generic constrained params: coefficient-by-coefficient match
  const YangianParams gen(1.0, -0.25, 1.0);
  const auto grep = apply_su3_transition(initial_meson(a1, a2), spec_for(gen));
  const double coeff_gap = grep.extras.at("closed_form_direction_residual");
  const bool coeff_match = coeff_gap <= 1e-10;

  // (e) generic entropy vs the closed-form entropy
  const double ent_gap =
      std::abs(grep.final_measure - grep.extras.at("closed_form_entropy"));
  const bool entropy_match = ent_gap <= 1e-10;

  const bool pass =
      entropy0 && direction_match && norm_match && coeff_match && entropy_match;
  report(9, pass,
         "meson transition vs the published closed form; sub-results below");
  std::printf("  9a reduced-point disentanglement (entropy %s): %s\n",
              fmt(rrep.final_measure).c_str(), entropy0 ? "PASS" : "FAIL");
  std::printf("  9b reduced-point direction matches closed form: %s "
              "(operator route gives the |d dbar> channel, closed form |u ubar>; "
              "residual %s)\n",
              direction_match ? "PASS" : "FAIL", fmt(dir).c_str());
  std::printf("  9c reduced-point normalization matches closed form: %s "
              "(gap %s)\n", norm_match ? "PASS" : "FAIL", fmt(norm_gap).c_str());
  std::printf("  9d generic constrained coefficients match closed form: %s "
              "(residual %s; the operator route carries mu-independent ladder "
              "channels the closed form excludes)\n",
              coeff_match ? "PASS" : "FAIL", fmt(coeff_gap).c_str());
  std::printf("  9e generic entropy matches closed-form entropy: %s (gap %s)\n",
              entropy_match ? "PASS" : "FAIL", fmt(ent_gap).c_str());
  std::printf("  9 note: no operator realization of the ladder set reproduces "
              "the closed-form coefficients at generic parameters (the relevant "
              "matrix elements carry no mu dependence); the exact reduced-point "
              "disentanglement itself holds on both routes.\n");
}

void criterion10(const char* cli_path) {
  std::mt19937_64 rng(606);
  std::normal_distribution<double> g;
  auto random_state = [&](int d) {
    StateVector s(d, d);
    for (auto& a : s.amp) a = Complex(g(rng), g(rng));
    const double n = s.norm();
    for (auto& a : s.amp) a /= n;
    return s;
  };
  bool bounds_ok = true;
  for (int n = 0; n < 10000; ++n) {
    const double c = concurrence(random_state(2));
    const double e = schmidt_entropy_base3(random_state(3));
    bounds_ok = bounds_ok && c >= 0.0 && c <= 1.0 + 1e-12 && e >= 0.0 &&
                e <= 1.0 + 1e-9;
  }
  // kron mixed-product law over random complex matrices
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto rmat = [&](int r, int c) {
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = Complex(u(rng), u(rng));
    return m;
  };
  double kron_worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const Mat a = rmat(2, 3), b = rmat(3, 2), c = rmat(3, 3), d = rmat(3, 3);
    kron_worst = std::max(kron_worst, max_abs_distance(matmul(kron(a, c), kron(b, d)),
                                                       kron(matmul(a, b), matmul(c, d))));
  }
  // determinism of the CLI verification report
  bool cli_ok = true;
  if (cli_path != nullptr) {
    const std::string base = std::string(cli_path) +
        " verify --algebra su3 --constrained --nu 1.0 --lambda 1.0 --seed 7 --out ";
    cli_ok = std::system((base + "acc_rep1.json >/dev/null").c_str()) == 0 &&
             std::system((base + "acc_rep2.json >/dev/null").c_str()) == 0;
    if (cli_ok) {
      std::ifstream f1("acc_rep1.json"), f2("acc_rep2.json");
      std::stringstream s1, s2;
      s1 << f1.rdbuf();
      s2 << f2.rdbuf();
      cli_ok = s1.str().size() > 0 && s1.str() == s2.str();
    }
    std::remove("acc_rep1.json");
    std::remove("acc_rep2.json");
  }
  report(10, bounds_ok && kron_worst <= 1e-12 && cli_ok,
         "measure bounds over 10^4 states, Kronecker mixed-product law over "
         "100 draws (max residual " + fmt(kron_worst) + ")" +
             (cli_path ? ", byte-identical CLI reports for a fixed seed"
                       : " (CLI determinism: path not supplied, covered by the "
                         "cli test)"));
}

}  // namespace

int main(int argc, char** argv) {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10(argc > 1 ? argv[1] : nullptr);
  if (g_failures > 0)
    std::printf("%d criterion(s) failed\n", g_failures);
  else
    std::printf("all criteria passed\n");
  return g_failures == 0 ? 0 : 1;
}
