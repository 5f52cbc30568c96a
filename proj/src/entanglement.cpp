#include "yk/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace yk {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kDisentangledTol = 1e-10;

void require_dims(const StateVector& s, int d1, int d2, const char* who) {
  if (s.d1 != d1 || s.d2 != d2)
    throw std::invalid_argument(std::string(who) + ": expected a (" +
                                std::to_string(d1) + "," + std::to_string(d2) +
                                ") state, got (" + std::to_string(s.d1) + "," +
                                std::to_string(s.d2) + ")");
}

void require_unit_norm(const StateVector& s, const char* who) {
  if (std::abs(s.norm() - 1.0) > kNormTol)
    throw std::invalid_argument(std::string(who) + ": state is not unit-norm (|.|" +
                                " = " + std::to_string(s.norm()) + ")");
}

StateVector apply(const Mat& op, const StateVector& s) {
  StateVector out(s.d1, s.d2);
  const int n = int(s.amp.size());
  for (int r = 0; r < n; ++r) {
    Complex acc = 0.0;
    for (int c = 0; c < n; ++c) acc += op(r, c) * s.amp[c];
    out.amp[r] = acc;
  }
  return out;
}

// Real eigenvalues of a small Hermitian matrix by cyclic Jacobi rotations:
// each sweep zeroes the off-diagonal entries with a 2x2 unitary conjugation;
// machine precision even for degenerate spectra (where closed-form cubic
// roots lose half the digits).
std::vector<double> hermitian_eigenvalues_3(const Mat& a) {
  Mat m = a;
  const int n = m.rows();
  for (int sweep = 0; sweep < 50; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(m(p, q)));
    if (off <= 1e-15) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = m(p, q);
        if (std::abs(apq) == 0.0) continue;
        // phase rotation making the pivot real, then a real Jacobi rotation
        const Complex phase = apq / std::abs(apq);
        const double app = m(p, p).real(), aqq = m(q, q).real();
        const double theta =
            0.5 * std::atan2(2.0 * std::abs(apq), app - aqq);
        const double c = std::cos(theta), s = std::sin(theta);
        // conjugate by U = [[c, -s], [s/phase, c/phase]] on the (p,q) plane:
        // m <- U^dagger (m U)
        for (int r = 0; r < n; ++r) {
          const Complex vp = m(r, p), vq = m(r, q);
          m(r, p) = c * vp + s * std::conj(phase) * vq;
          m(r, q) = -s * vp + c * std::conj(phase) * vq;
        }
        for (int col = 0; col < n; ++col) {
          const Complex vp = m(p, col), vq = m(q, col);
          m(p, col) = c * vp + s * phase * vq;
          m(q, col) = -s * vp + c * phase * vq;
        }
      }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = m(i, i).real();
  return eig;
}

double plogp_base3(double p) {
  return p > 1e-300 ? -p * std::log(p) / std::log(3.0) : 0.0;
}

}  // namespace

double StateVector::norm() const {
  double s = 0.0;
  for (const Complex& a : amp) s += std::norm(a);
  return std::sqrt(s);
}

double concurrence(const StateVector& state) {
  require_dims(state, 2, 2, "concurrence");
  require_unit_norm(state, "concurrence");
  return 2.0 * std::abs(state.amp[0] * state.amp[3] - state.amp[1] * state.amp[2]);
}

StateVector initial_su2(double alpha, double beta) {
  if (std::abs(alpha * alpha + beta * beta - 1.0) > kNormTol)
    throw std::invalid_argument("initial_su2: alpha^2 + beta^2 != 1");
  // |1> (spin-up) is index 0, |0> index 1; |11> sits at amplitude 0.
  StateVector s(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  s.at(0, 0) = s.at(1, 1) = alpha * r;  // |11> + |00>
  s.at(0, 1) = s.at(1, 0) = beta * r;   // |10> + |01>
  return s;
}

EntanglementReport apply_su2_transition(const StateVector& state,
                                        const TransitionSpec& spec) {
  if (spec.kind != TransitionSpec::Kind::su2_P)
    throw std::invalid_argument("apply_su2_transition: wrong transition kind");
  require_dims(state, 2, 2, "apply_su2_transition");
  require_unit_norm(state, "apply_su2_transition");
  const auto& p = spec.params;
  EntanglementReport report;
  report.initial_measure = concurrence(state);
  StateVector raw(2, 2);
  if (std::abs(p.sum()) < kNormTol) {
    // J carries a 1/(mu+nu); only at mu = lambda/2 = -nu do the closed-form
    // amplitudes of P|state> stay finite (their numerators vanish with the sum).
    if (std::abs(p.mu - p.lambda / 2.0) > kNormTol ||
        std::abs(p.nu + p.lambda / 2.0) > kNormTol)
      throw std::invalid_argument(
          "apply_su2_transition: mu + nu = 0 away from mu = -nu = lambda/2, "
          "transition operator undefined");
    raw.at(0, 0) = spec.a * state.at(0, 0);  // a alpha/sqrt2 |11>
  } else {
    const TwoSiteRep rep = build_su2(p);
    const auto pauli = pauli_basis();
    const Mat s13 = embed(pauli.gen[2], 1, 2, 2);
    const Mat s23 = embed(pauli.gen[2], 2, 2, 2);
    const Mat P = spec.a * (rep.J(3) + 2.0 * matmul(s13, s23));
    raw = apply(P, state);
  }
  report.norm_factor = raw.norm();
  if (report.norm_factor < kNormTol)
    throw std::runtime_error("apply_su2_transition: transition annihilates the state");
  report.final_state = raw;
  for (auto& a : report.final_state.amp) a /= report.norm_factor;
  report.final_measure = concurrence(report.final_state);
  report.disentangled = report.final_measure <= kDisentangledTol;
  return report;
}

double schmidt_entropy_base3(const StateVector& state) {
  require_dims(state, 3, 3, "schmidt_entropy_base3");
  require_unit_norm(state, "schmidt_entropy_base3");
  // One-site reduced state rho = M M^dagger with M the amplitude matrix.
  Mat m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = state.at(i, j);
  const Mat rho = matmul(m, dagger(m));
  double e = 0.0;
  for (double p : hermitian_eigenvalues_3(rho)) e += plogp_base3(std::max(p, 0.0));
  return e;
}

MesonBasis meson_basis() {
  // Flavor order u, d, s on the quark site and ubar, dbar, sbar on the
  // antiquark site.
  MesonBasis b;
  b.kappa_plus = StateVector(3, 3);
  b.kappa_plus.at(0, 2) = 1.0;
  b.kappa_minus = StateVector(3, 3);
  b.kappa_minus.at(2, 0) = 1.0;
  b.pi0 = StateVector(3, 3);
  b.pi0.at(0, 0) = 1.0 / std::sqrt(2.0);
  b.pi0.at(1, 1) = -1.0 / std::sqrt(2.0);
  b.eta0 = StateVector(3, 3);
  b.eta0.at(2, 2) = 2.0 / std::sqrt(6.0);
  b.eta0.at(0, 0) = b.eta0.at(1, 1) = -1.0 / std::sqrt(6.0);
  b.eta0_prime = StateVector(3, 3);
  b.eta0_prime.at(0, 0) = b.eta0_prime.at(1, 1) = b.eta0_prime.at(2, 2) =
      1.0 / std::sqrt(3.0);
  return b;
}

StateVector initial_meson(double alpha1, double alpha2) {
  if (std::abs(alpha1 * alpha1 + alpha2 * alpha2 - 1.0) > kNormTol)
    throw std::invalid_argument("initial_meson: alpha1^2 + alpha2^2 != 1");
  StateVector s(3, 3);
  s.at(0, 2) = alpha1;  // |u sbar>
  s.at(2, 0) = alpha2;  // |s ubar>
  return s;
}

MesonClosedForm meson_closed_form(const YangianParams& p, double eta1,
                                  double eta2, double alpha1, double alpha2) {
  MesonClosedForm out;
  out.X = p.sum() * eta2 * alpha1 + (p.mu + p.lambda) * eta2 * alpha2;
  out.Z = p.sum() * eta1 * (alpha1 + alpha2);
  out.norm_sq = out.X * out.X + out.Z * out.Z;
  out.state = StateVector(3, 3);
  if (out.norm_sq > 0.0) {
    const double n = std::sqrt(out.norm_sq);
    out.state.at(0, 0) = out.X / n;  // |u ubar>
    out.state.at(2, 2) = out.Z / n;  // |s sbar>
    out.entropy = plogp_base3(out.X * out.X / out.norm_sq) +
                  plogp_base3(out.Z * out.Z / out.norm_sq);
  }
  return out;
}

EntanglementReport apply_su3_transition(const StateVector& state,
                                        const TransitionSpec& spec) {
  if (spec.kind != TransitionSpec::Kind::su3_P)
    throw std::invalid_argument("apply_su3_transition: wrong transition kind");
  require_dims(state, 3, 3, "apply_su3_transition");
  require_unit_norm(state, "apply_su3_transition");
  EntanglementReport report;
  report.initial_measure = schmidt_entropy_base3(state);
  const SiteRep quark{gellmann_basis(), RepKind::fundamental};
  const SiteRep antiquark{gellmann_basis(), RepKind::conjugate};
  const TwoSiteRep rep = build_su3(spec.params, quark, antiquark);
  const ShiftOps bars = barred_ops(rep);
  const Mat P = spec.eta1 * bars.Vp + spec.eta2 * bars.Vm;
  const StateVector raw = apply(P, state);
  report.norm_factor = raw.norm();
  if (report.norm_factor < kNormTol)
    throw std::runtime_error("apply_su3_transition: transition annihilates the state");
  report.final_state = raw;
  for (auto& a : report.final_state.amp) a /= report.norm_factor;
  report.final_measure = schmidt_entropy_base3(report.final_state);
  report.disentangled = report.final_measure <= kDisentangledTol;
  // Closed-form comparison, meaningful only for kappa-superposition inputs.
  double off_support = 0.0;
  for (size_t k = 0; k < state.amp.size(); ++k)
    if (k != 2 && k != 6) off_support = std::max(off_support, std::abs(state.amp[k]));
  if (off_support < kNormTol) {
    const MesonClosedForm cf =
        meson_closed_form(spec.params, spec.eta1, spec.eta2,
                          state.amp[2].real(), state.amp[6].real());
    report.extras["closed_form_X"] = cf.X;
    report.extras["closed_form_Z"] = cf.Z;
    report.extras["closed_form_norm_sq"] = cf.norm_sq;
    report.extras["closed_form_entropy"] = cf.entropy;
    if (cf.norm_sq > 0.0) {
      double dplus = 0.0, dminus = 0.0;
      for (size_t k = 0; k < cf.state.amp.size(); ++k) {
        dplus = std::max(dplus,
                         std::abs(report.final_state.amp[k] - cf.state.amp[k]));
        dminus = std::max(dminus,
                          std::abs(report.final_state.amp[k] + cf.state.amp[k]));
      }
      report.extras["closed_form_direction_residual"] = std::min(dplus, dminus);
    }
  }
  return report;
}

}  // namespace yk
