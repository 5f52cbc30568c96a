#include "yk/yangian.hpp"

#include <cmath>
#include <stdexcept>

namespace yk {

namespace {
constexpr Complex I(0.0, 1.0);
}

std::vector<Mat> SiteRep::gens() const {
  if (kind == RepKind::fundamental) return basis.gen;
  std::vector<Mat> out;
  out.reserve(basis.gen.size());
  for (const auto& g : basis.gen) {
    Mat m(g.rows(), g.cols());
    for (int r = 0; r < g.rows(); ++r)
      for (int c = 0; c < g.cols(); ++c) m(r, c) = -std::conj(g(r, c));
    out.push_back(m);
  }
  return out;
}

Mat embed(const Mat& op, int site, int d1, int d2) {
  const int want = site == 1 ? d1 : d2;
  if (op.rows() != want || op.cols() != want)
    throw DimensionError("embed: operator " + op.shape() + " does not fit site " +
                         std::to_string(site) + " of dimension " +
                         std::to_string(want));
  return site == 1 ? kron(op, Mat::identity(d2)) : kron(Mat::identity(d1), op);
}

TwoSiteRep build_su2(const YangianParams& params) {
  if (params.sum() == 0.0)
    throw std::invalid_argument("build_su2: mu + nu = 0, normalization undefined");
  TwoSiteRep rep;
  rep.algebra = "su2";
  rep.site1 = {pauli_basis(), RepKind::fundamental};
  rep.site2 = rep.site1;
  rep.params = params;
  rep.d1 = rep.d2 = 2;
  const auto& b = rep.site1.basis;
  std::vector<Mat> S1(3), S2(3);
  for (int a = 0; a < 3; ++a) {
    S1[a] = embed(b.gen[a], 1, 2, 2);
    S2[a] = embed(b.gen[a], 2, 2, 2);
  }
  const double s = params.sum();
  for (int a = 0; a < 3; ++a) {
    rep.I_ops.push_back(S1[a] + S2[a]);
    Mat cross = Mat::zero(4, 4);  // (S1 x S2)_a = eps_abc S1^b S2^c
    for (int bb = 0; bb < 3; ++bb)
      for (int cc = 0; cc < 3; ++cc) {
        const double eps = b.f[size_t(a) * 9 + size_t(bb) * 3 + cc];
        if (eps != 0.0) cross += eps * matmul(S1[bb], S2[cc]);
      }
    rep.J_ops.push_back((1.0 / s) *
                        (params.mu * S1[a] + params.nu * S2[a] + I * params.lambda * cross));
  }
  return rep;
}

TwoSiteRep build_su3(const YangianParams& params, SiteRep site1, SiteRep site2) {
  if (site1.basis.name != "su3" || site2.basis.name != "su3")
    throw std::invalid_argument("build_su3: both sites must carry su3");
  TwoSiteRep rep;
  rep.algebra = "su3";
  rep.site1 = std::move(site1);
  rep.site2 = std::move(site2);
  rep.params = params;
  rep.d1 = rep.site1.basis.rep_dim;
  rep.d2 = rep.site2.basis.rep_dim;
  const auto F1 = rep.site1.gens();
  const auto F2 = rep.site2.gens();
  const auto& f = rep.site1.basis;  // structure constants are rep-independent
  for (int a = 1; a <= 8; ++a) {
    const Mat E1 = embed(F1[a - 1], 1, rep.d1, rep.d2);
    const Mat E2 = embed(F2[a - 1], 2, rep.d1, rep.d2);
    rep.I_ops.push_back(E1 + E2);
    Mat term = Mat::zero(rep.dim(), rep.dim());
    for (int b = 1; b <= 8; ++b)
      for (int c = 1; c <= 8; ++c) {
        const double fab = f.fc(a, b, c);
        if (fab == 0.0) continue;
        term += fab * (kron(F1[b - 1], F2[c - 1]) - kron(F1[c - 1], F2[b - 1]));
      }
    rep.J_ops.push_back(params.mu * E1 + params.nu * E2 + 0.5 * I * params.lambda * term);
  }
  return rep;
}

double adjoint_covariance_defect(const TwoSiteRep& rep) {
  const auto& f = rep.site1.basis;
  const int n = f.n_gens;
  double worst = 0.0;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      Mat rhs = Mat::zero(rep.dim(), rep.dim());
      for (int c = 1; c <= n; ++c) {
        const double fab = f.fc(a, b, c);
        if (fab != 0.0) rhs += I * fab * rep.J(c);
      }
      worst = std::max(worst, max_abs_distance(commutator(rep.I(a), rep.J(b)), rhs));
    }
  return worst;
}

double closure_defect_su2(const TwoSiteRep& rep) {
  if (rep.algebra != "su2")
    throw std::invalid_argument("closure_defect_su2: rep is not su2");
  const auto& p = rep.params;
  const double s2 = p.sum() * p.sum();
  const double c0 = -(p.mu * p.nu + p.lambda * p.lambda / 4.0);
  const auto& eps = rep.site1.basis.f;
  double worst = 0.0;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      Mat rhs = Mat::zero(4, 4);
      for (int c = 1; c <= 3; ++c) {
        const double e = eps[size_t(a - 1) * 9 + size_t(b - 1) * 3 + (c - 1)];
        if (e != 0.0) rhs += (I * e / s2) * (c0 * rep.I(c) + s2 * rep.J(c));
      }
      worst = std::max(worst, max_abs_distance(commutator(rep.J(a), rep.J(b)), rhs));
    }
  return worst;
}

namespace {

// The shift-operator route to the barred set: per-site ladder operators
// combined with the same site antisymmetrization as the J build.
ShiftOps barred_from_shift_ops(const TwoSiteRep& rep) {
  const auto s1 = shift_combinations(rep.site1.gens());
  const auto s2 = shift_combinations(rep.site2.gens());
  // X on one site paired with Y on the other, antisymmetrized across sites:
  // X1 Y2 - Y1 X2 (embedded factors on distinct sites commute).
  auto anti = [&](const Mat& X1, const Mat& X2, const Mat& Y1, const Mat& Y2) {
    return kron(X1, Y2) - kron(Y1, X2);
  };
  auto A = [&](const Mat ShiftOps::*x, const Mat ShiftOps::*y) {
    return anti(s1.*x, s2.*x, s1.*y, s2.*y);
  };
  const double mu = rep.params.mu, nu = rep.params.nu, lam = rep.params.lambda;
  auto site_sum = [&](const Mat ShiftOps::*x) {
    return mu * embed(s1.*x, 1, rep.d1, rep.d2) + nu * embed(s2.*x, 2, rep.d1, rep.d2);
  };
  const Mat u1 = s1.I3 - 1.5 * s1.Y, u2 = s2.I3 - 1.5 * s2.Y;
  const Mat v1 = s1.I3 + 1.5 * s1.Y, v2 = s2.I3 + 1.5 * s2.Y;
  ShiftOps o;
  o.Ip = site_sum(&ShiftOps::Ip) +
         lam * (A(&ShiftOps::Ip, &ShiftOps::I3) + 0.5 * A(&ShiftOps::Um, &ShiftOps::Vm));
  o.Im = site_sum(&ShiftOps::Im) -
         lam * (A(&ShiftOps::Im, &ShiftOps::I3) + 0.5 * A(&ShiftOps::Up, &ShiftOps::Vp));
  o.Up = site_sum(&ShiftOps::Up) -
         0.5 * lam * (anti(s1.Up, s2.Up, u1, u2) + A(&ShiftOps::Im, &ShiftOps::Vm));
  o.Um = site_sum(&ShiftOps::Um) +
         0.5 * lam * (anti(s1.Um, s2.Um, u1, u2) + A(&ShiftOps::Ip, &ShiftOps::Vp));
  o.Vp = site_sum(&ShiftOps::Vp) -
         0.5 * lam * (anti(s1.Vp, s2.Vp, v1, v2) + A(&ShiftOps::Um, &ShiftOps::Im));
  o.Vm = site_sum(&ShiftOps::Vm) +
         0.5 * lam * (anti(s1.Vm, s2.Vm, v1, v2) + A(&ShiftOps::Up, &ShiftOps::Ip));
  o.I3 = site_sum(&ShiftOps::I3) -
         0.5 * lam * (A(&ShiftOps::Ip, &ShiftOps::Im) -
                      0.5 * (A(&ShiftOps::Up, &ShiftOps::Um) + A(&ShiftOps::Vp, &ShiftOps::Vm)));
  o.I8 = site_sum(&ShiftOps::Y) -
         0.5 * lam * (A(&ShiftOps::Up, &ShiftOps::Um) - A(&ShiftOps::Vp, &ShiftOps::Vm));
  o.Y = o.I8;
  o.Q = o.I3 + 0.5 * o.Y;
  o.U3 = -0.5 * o.I3 + 0.75 * o.I8;
  o.V3 = -0.5 * o.I3 - 0.75 * o.I8;
  return o;
}

}  // namespace

ShiftOps barred_ops(const TwoSiteRep& rep) {
  if (rep.algebra != "su3")
    throw std::invalid_argument("barred_ops: rep is not su3");
  const ShiftOps a = shift_combinations(rep.J_ops);
  const ShiftOps b = barred_from_shift_ops(rep);
  const std::pair<const char*, std::pair<const Mat*, const Mat*>> pairs[] = {
      {"Ibar+", {&a.Ip, &b.Ip}}, {"Ibar-", {&a.Im, &b.Im}},
      {"Ubar+", {&a.Up, &b.Up}}, {"Ubar-", {&a.Um, &b.Um}},
      {"Vbar+", {&a.Vp, &b.Vp}}, {"Vbar-", {&a.Vm, &b.Vm}},
      {"Ibar3", {&a.I3, &b.I3}}, {"Ibar8", {&a.I8, &b.I8}},
  };
  for (const auto& [name, ops] : pairs) {
    const double gap = max_abs_distance(*ops.first, *ops.second);
    if (gap > 1e-10)
      throw std::runtime_error(std::string("barred_ops: the two constructions of ") +
                               name + " disagree, residual " + std::to_string(gap));
  }
  return a;
}

std::vector<RelationCheck> verify_barred_table(const TwoSiteRep& rep, double tol) {
  if (!rep.params.constrained)
    throw std::invalid_argument(
        "verify_barred_table: requires constrained parameters (mu nu = -lambda^2/4)");
  return shift_table(barred_ops(rep), rep.params.sum(), "Eq38", tol);
}

std::map<std::string, Mat> normalized_ops(const TwoSiteRep& rep) {
  const double s = rep.params.sum();
  if (s == 0.0)
    throw std::invalid_argument("normalized_ops: mu + nu = 0, normalization undefined");
  std::map<std::string, Mat> out;
  for (int a = 1; a <= rep.site1.basis.n_gens; ++a)
    out["Y" + std::to_string(a)] = (1.0 / s) * rep.J(a);
  if (rep.algebra == "su3") {
    const ShiftOps b = barred_ops(rep);
    const Complex inv = 1.0 / s;
    out["Itil+"] = inv * b.Ip;
    out["Itil-"] = inv * b.Im;
    out["Util+"] = inv * b.Up;
    out["Util-"] = inv * b.Um;
    out["Vtil+"] = inv * b.Vp;
    out["Vtil-"] = inv * b.Vm;
    out["Itil3"] = inv * b.I3;
    out["Itil8"] = inv * b.I8;
  }
  return out;
}

std::vector<RelationCheck> verify_tilde_table(const TwoSiteRep& rep, double tol) {
  if (!rep.params.constrained)
    throw std::invalid_argument(
        "verify_tilde_table: requires constrained parameters (mu nu = -lambda^2/4)");
  const double s = rep.params.sum();
  ShiftOps t = barred_ops(rep);
  const Complex inv = 1.0 / s;
  for (Mat* m : {&t.Ip, &t.Im, &t.Up, &t.Um, &t.Vp, &t.Vm, &t.I3, &t.I8, &t.Y, &t.Q,
                 &t.U3, &t.V3})
    *m *= inv;
  return shift_table(t, 1.0, "Eq44", tol);
}

std::vector<RelationCheck> spectrum_check_I3(const TwoSiteRep& rep) {
  if (rep.algebra != "su3")
    throw std::invalid_argument("spectrum_check_I3: rep is not su3");
  const double s = rep.params.sum();
  if (s == 0.0)
    throw std::invalid_argument("spectrum_check_I3: mu + nu = 0");
  const Mat I3t = (1.0 / s) * rep.J(3);
  const Mat id = Mat::identity(9);
  auto residual_at = [&](Complex x) { return std::abs(det(x * id - I3t)); };
  std::vector<RelationCheck> out;
  const double tol = 1e-9;
  if (rep.params.constrained) {
    out.push_back(make_check("Eq49:x1,2,3=0", residual_at(0.0), tol));
    out.push_back(make_check("Eq49:x4,5,6=1/2", residual_at(0.5), tol));
    out.push_back(make_check("Eq49:x7,8,9=-1/2", residual_at(-0.5), tol));
    return out;
  }
  const auto& p = rep.params;
  const Complex r =
      std::sqrt(Complex(p.mu * p.mu - 2.0 * p.mu * p.nu + p.nu * p.nu -
                        p.lambda * p.lambda)) / s;
  const Complex roots[9] = {0.0,           0.5,           -0.5,
                            0.5 * r,       -0.5 * r,      0.25 + 0.25 * r,
                            0.25 - 0.25 * r, -0.25 + 0.25 * r, -0.25 - 0.25 * r};
  for (int k = 0; k < 9; ++k)
    out.push_back(make_check("Eq48:x" + std::to_string(k + 1), residual_at(roots[k]), tol));
  return out;
}

}  // namespace yk
