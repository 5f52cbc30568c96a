// ykit: verification, reduction and entanglement reports as JSON.
//
// Exit codes: 0 = all requested checks pass (entangle: transition applied),
// 1 = a relation check failed, 2 = invalid input / singular transform /
// annihilated state. Reports carry no timestamps: the same command line with
// the same seed produces byte-identical output.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "yk/entanglement.hpp"
#include "yk/lie.hpp"
#include "yk/linear.hpp"
#include "yk/reduction.hpp"
#include "yk/serialize.hpp"
#include "yk/yangian.hpp"

using namespace yk;
using nlohmann::json;

namespace {

struct CommonOpts {
  std::string algebra = "su3";
  double mu = 1.0, nu = -0.25, lambda = 1.0;
  bool constrained = false;
  double tol = 1e-10;
  std::uint64_t seed = 12345;
  int draws = 100;
  std::string out;
};

YangianParams resolve_params(const CommonOpts& o) {
  if (o.constrained) {
    if (o.nu == 0.0)
      throw std::invalid_argument("--constrained needs a nonzero --nu");
    return YangianParams::constrained_from(o.nu, o.lambda);
  }
  return YangianParams(o.mu, o.nu, o.lambda);
}

json params_json(const YangianParams& p) {
  return {{"mu", p.mu}, {"nu", p.nu}, {"lambda", p.lambda},
          {"constrained", p.constrained}};
}

json state_json(const StateVector& s) {
  json amps = json::array();
  for (const auto& a : s.amp) amps.push_back({a.real(), a.imag()});
  return {{"d1", s.d1}, {"d2", s.d2}, {"amplitudes", amps}};
}

void emit(const json& report, const std::string& out) {
  const std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!out.empty()) {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + out);
    f << text;
  }
}

struct ParamDraw {
  std::mt19937_64 rng;
  std::uniform_real_distribution<double> u{-2.0, 2.0};
  explicit ParamDraw(std::uint64_t seed) : rng(seed) {}
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
};

SiteRep fund() { return {gellmann_basis(), RepKind::fundamental}; }

int run_verify(const CommonOpts& o) {
  const auto p = resolve_params(o);
  std::vector<RelationCheck> checks;
  json skipped = json::array();

  const auto basis = o.algebra == "su2" ? pauli_basis() : gellmann_basis();
  checks.push_back(make_check("single-site:jacobi",
                              verify_jacobi(basis.f, basis.n_gens), 1e-12));
  if (o.algebra == "su3") {
    checks.push_back(make_check("single-site:fd-identity",
                                verify_fd_identity(basis.f, basis.d, basis.n_gens),
                                1e-12));
    checks.push_back(make_check(
        "single-site:casimir-quadratic",
        max_abs_distance(casimir_C1(basis), (4.0 / 3.0) * Mat::identity(3)),
        1e-10));
    checks.push_back(make_check(
        "single-site:casimir-cubic",
        max_abs_distance(casimir_C2(basis), (10.0 / 9.0) * Mat::identity(3)),
        1e-10));
    for (auto& c : verify_su3_table(shift_ops(basis), 1e-12))
      checks.push_back(std::move(c));
  }

  ParamDraw draw(o.seed);
  if (o.algebra == "su2") {
    double cov = 0.0, clo = 0.0;
    for (int n = 0; n < o.draws; ++n) {
      const auto rep = build_su2(draw.generic());
      cov = std::max(cov, adjoint_covariance_defect(rep));
      clo = std::max(clo, closure_defect_su2(rep));
    }
    checks.push_back(make_check("battery:adjoint-covariance", cov, 1e-12));
    checks.push_back(make_check("battery:closure", clo, 1e-12));

    if (std::abs(p.sum()) < 1e-12)
      throw std::invalid_argument("mu + nu = 0: two-site generators undefined");
    const auto rep = build_su2(p);
    checks.push_back(make_check("params:adjoint-covariance",
                                adjoint_covariance_defect(rep), 1e-12));
    checks.push_back(make_check("params:closure", closure_defect_su2(rep), 1e-12));
    if (p.constrained) {
      Mat j2 = Mat::zero(4, 4);
      for (int a = 1; a <= 3; ++a) j2 += matmul(rep.J(a), rep.J(a));
      checks.push_back(make_check(
          "params:J-squared=3/4",
          max_abs_distance(j2, 0.75 * Mat::identity(4)), 1e-12));
      constexpr Complex kI(0.0, 1.0);
      double eps = 0.0;
      const int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
      for (const auto& t : cyc)
        eps = std::max(eps, max_abs_distance(commutator(rep.J(t[0]), rep.J(t[1])),
                                             kI * rep.J(t[2])));
      checks.push_back(make_check("params:epsilon-closure", eps, 1e-12));
    } else {
      skipped.push_back({{"suite", "constrained-point"},
                         {"reason", "parameters do not satisfy "
                                    "mu nu = -lambda^2/4"}});
    }
  } else {
    double cov = 0.0;
    bool cross_ok = true;
    for (int n = 0; n < o.draws; ++n) {
      const auto rep = build_su3(draw.generic(), fund(), fund());
      cov = std::max(cov, adjoint_covariance_defect(rep));
      try {
        barred_ops(rep);  // throws if the two constructions disagree > 1e-10
      } catch (const std::exception&) {
        cross_ok = false;
      }
    }
    checks.push_back(make_check("battery:adjoint-covariance", cov, 1e-12));
    checks.push_back(RelationCheck{"battery:barred-cross-check(<=1e-10)", 0.0,
                                   cross_ok});

    if (std::abs(p.sum()) < 1e-12)
      throw std::invalid_argument("mu + nu = 0: normalized operators undefined");
    const auto rep = build_su3(p, fund(), fund());
    checks.push_back(make_check("params:adjoint-covariance",
                                adjoint_covariance_defect(rep), 1e-12));
    for (auto& c : spectrum_check_I3(rep)) checks.push_back(std::move(c));
    if (p.constrained) {
      for (auto& c : verify_barred_table(rep, o.tol)) checks.push_back(std::move(c));
      for (auto& c : verify_tilde_table(rep, o.tol)) checks.push_back(std::move(c));
    } else {
      skipped.push_back({{"suite", "Eq38"},
                         {"reason", "barred ladder table closes only under "
                                    "mu nu = -lambda^2/4"}});
      skipped.push_back({{"suite", "Eq44"},
                         {"reason", "tilde ladder table closes only under "
                                    "mu nu = -lambda^2/4"}});
    }
  }

  const bool ok = all_pass(checks);
  json report = {{"command", "verify"},
                 {"algebra", o.algebra},
                 {"params", params_json(p)},
                 {"seed", o.seed},
                 {"draws", o.draws},
                 {"tol", o.tol},
                 {"checks", to_json(checks)},
                 {"skipped", skipped},
                 {"all_pass", ok},
                 {"worst_residual", worst_residual(checks)}};
  emit(report, o.out);
  return ok ? 0 : 1;
}

int run_reduce(const CommonOpts& o) {
  if (o.nu == 0.0) throw std::invalid_argument("reduce needs a nonzero --nu");
  const auto p = YangianParams::constrained_from(o.nu, o.lambda);

  SimilarityTransform t;
  BlockReport blocks;
  if (o.algebra == "su2") {
    t = tau(p.nu, p.lambda);
    blocks = reduce_su2(p, t);
  } else {
    t = A_matrix(p.nu, p.lambda);
    blocks = reduce_su3(build_su3(p, fund(), fund()), t);
  }

  json ops = json::array();
  for (const auto& ob : blocks.ops) {
    json bl = json::array();
    for (const auto& b : ob.blocks) bl.push_back(to_json(b));
    ops.push_back({{"op", ob.op},
                   {"blocks", bl},
                   {"off_block_residual", ob.off_block_residual},
                   {"block_match_residual", ob.block_match_residual}});
  }
  const bool ok = blocks.pass(o.tol);
  json report = {{"command", "reduce"},
                 {"algebra", o.algebra},
                 {"params", params_json(p)},
                 {"scale", blocks.scale},
                 {"transform", to_json(t.matrix)},
                 {"inverse", to_json(t.inverse)},
                 {"ops", ops},
                 {"tol", o.tol},
                 {"pass", ok}};
  emit(report, o.out);
  return ok ? 0 : 1;
}

struct EntangleOpts {
  double alpha = 1.0, beta = 0.0;       // su2 initial state
  double a = 0.0;                       // su2 amplitude; 0 = solve it
  double alpha1 = 1.0, alpha2 = 0.0;    // su3 initial state
  double eta1 = 1.0, eta2 = 1.0;        // su3 amplitudes
};

int run_entangle(const CommonOpts& o, const EntangleOpts& e) {
  const auto p = resolve_params(o);
  TransitionSpec spec;
  spec.params = p;
  EntanglementReport rep;
  json initial;
  if (o.algebra == "su2") {
    spec.kind = TransitionSpec::Kind::su2_P;
    if (e.a != 0.0) {
      spec.a = e.a;
    } else if (std::abs(p.sum()) < 1e-12) {
      spec.a = std::sqrt(2.0) / std::abs(e.alpha);
    } else {
      const double num = std::pow(p.mu - p.lambda / 2.0, 2) +
                         std::pow(p.nu + p.lambda / 2.0, 2);
      spec.a = std::sqrt(2.0 / (e.alpha * e.alpha +
                                num / (p.sum() * p.sum()) * e.beta * e.beta));
    }
    const auto state = initial_su2(e.alpha, e.beta);
    initial = state_json(state);
    rep = apply_su2_transition(state, spec);
  } else {
    spec.kind = TransitionSpec::Kind::su3_P;
    spec.eta1 = e.eta1;
    spec.eta2 = e.eta2;
    const auto state = initial_meson(e.alpha1, e.alpha2);
    initial = state_json(state);
    rep = apply_su3_transition(state, spec);
  }

  json report = {{"command", "entangle"},
                 {"system", o.algebra},
                 {"params", params_json(p)},
                 {"initial_state", initial},
                 {"initial_measure", rep.initial_measure},
                 {"final_measure", rep.final_measure},
                 {"norm_factor", rep.norm_factor},
                 {"disentangled", rep.disentangled},
                 {"final_state", state_json(rep.final_state)},
                 {"extras", json(rep.extras)}};
  if (o.algebra == "su2") report["a"] = spec.a;
  if (o.algebra == "su3") {
    report["eta1"] = spec.eta1;
    report["eta2"] = spec.eta2;
  }
  emit(report, o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-site generator verification, block reduction and "
               "entanglement reports"};
  app.require_subcommand(1);

  CommonOpts common;
  EntangleOpts ent;

  auto add_common = [&](CLI::App* sub, bool with_seed) {
    sub->add_option("--algebra", common.algebra, "su2 | su3")
        ->check(CLI::IsMember({"su2", "su3"}));
    sub->add_option("--nu", common.nu, "site-2 weight");
    sub->add_option("--lambda", common.lambda, "cross-term weight");
    sub->add_option("--tol", common.tol, "pass tolerance");
    sub->add_option("--out", common.out, "write the JSON report here");
    if (with_seed) {
      sub->add_option("--seed", common.seed, "RNG seed for the batteries");
      sub->add_option("--draws", common.draws, "battery size")
          ->check(CLI::PositiveNumber);
    }
  };

  auto* verify = app.add_subcommand("verify", "run the relation suites");
  add_common(verify, true);
  verify->add_option("--mu", common.mu, "site-1 weight");
  verify->add_flag("--constrained", common.constrained,
                   "derive mu = -lambda^2/(4 nu)");

  auto* reduce = app.add_subcommand(
      "reduce", "block-diagonalize the constrained generators");
  add_common(reduce, false);

  auto* entangle = app.add_subcommand("entangle", "apply the transition operator");
  add_common(entangle, false);
  entangle->add_option("--mu", common.mu, "site-1 weight");
  entangle->add_flag("--constrained", common.constrained,
                     "derive mu = -lambda^2/(4 nu)");
  entangle->add_option("--alpha", ent.alpha, "su2 initial amplitude");
  entangle->add_option("--beta", ent.beta, "su2 initial amplitude");
  entangle->add_option("--a", ent.a, "su2 transition amplitude (0 = solve)");
  entangle->add_option("--alpha1", ent.alpha1, "su3 initial amplitude");
  entangle->add_option("--alpha2", ent.alpha2, "su3 initial amplitude");
  entangle->add_option("--eta1", ent.eta1, "su3 transition amplitude");
  entangle->add_option("--eta2", ent.eta2, "su3 transition amplitude");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(common);
    if (reduce->parsed()) return run_reduce(common);
    return run_entangle(common, ent);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
