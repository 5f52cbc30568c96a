#pragma once

// Two-site Yangian generator pairs {I^a, J^a} for su(2) and su(3), the
// ladder ("barred") combinations of the J's with their independent
// shift-operator construction, normalization, relation tables, and the
// root check for the isospin-3 spectrum.

#include <map>
#include <string>
#include <vector>

#include "yk/lie.hpp"
#include "yk/linear.hpp"
#include "yk/report.hpp"

namespace yk {

struct YangianParams {
  double mu = 0.0;
  double nu = 0.0;
  double lambda = 0.0;
  bool constrained = false;  // recomputed: |mu nu + lambda^2/4| <= 1e-12

  YangianParams() = default;
  YangianParams(double mu_, double nu_, double lambda_)
      : mu(mu_), nu(nu_), lambda(lambda_),
        constrained(std::abs(mu_ * nu_ + lambda_ * lambda_ / 4.0) <= 1e-12) {}
  // Derive mu from (nu, lambda) so the constraint holds exactly.
  static YangianParams constrained_from(double nu_, double lambda_) {
    return YangianParams(-lambda_ * lambda_ / (4.0 * nu_), nu_, lambda_);
  }
  double sum() const { return mu + nu; }
};

enum class RepKind { fundamental, conjugate };

struct SiteRep {
  LieBasis basis;
  RepKind kind = RepKind::fundamental;
  // fundamental: F^a; conjugate: -(F^a)* (antiparticle assignment)
  std::vector<Mat> gens() const;
};

// F_i^a as an operator on the product space: op (x) 1 or 1 (x) op.
Mat embed(const Mat& op, int site, int d1, int d2);

struct TwoSiteRep {
  std::string algebra;  // "su2" | "su3"
  SiteRep site1, site2;
  YangianParams params;
  int d1 = 0, d2 = 0;
  std::vector<Mat> I_ops;  // I^a = F1^a + F2^a, 0-based storage
  std::vector<Mat> J_ops;

  const Mat& I(int a) const { return I_ops[a - 1]; }
  const Mat& J(int a) const { return J_ops[a - 1]; }
  int dim() const { return d1 * d2; }
};

// J = (mu S1 + nu S2 + i lambda S1 x S2) / (mu + nu) on 4 dimensions.
// Throws std::invalid_argument when mu + nu = 0.
TwoSiteRep build_su2(const YangianParams& params);

// Unnormalized J^a = mu F1^a + nu F2^a + i/2 lambda f_abc (F1^b F2^c - F2^b F1^c)
// on 9 dimensions (normalization deferred to normalized_ops).
TwoSiteRep build_su3(const YangianParams& params, SiteRep site1, SiteRep site2);

// Max residual of [I^a, J^b] = i f_abc J^c over all pairs.
double adjoint_covariance_defect(const TwoSiteRep& rep);

// Max residual of [J_a, J_b] = i eps_abc [ -(mu nu + lambda^2/4) I_c
//                                          + (mu+nu)^2 J_c ] / (mu+nu)^2.
double closure_defect_su2(const TwoSiteRep& rep);

// Ladder combinations of the su(3) J's (Ibar+- = J1 +- iJ2, Ubar+- = J6 +- iJ7,
// Vbar+- = J4 -+ iJ5, Ibar3 = J3, Ibar8 = (2/sqrt3) J8), cross-checked against
// the independent per-site shift-operator construction. Throws
// std::runtime_error naming the operator if the two routes disagree > 1e-10.
ShiftOps barred_ops(const TwoSiteRep& rep);

// Ladder table for the barred operators with scale s = mu + nu; requires
// constrained params (throws std::invalid_argument otherwise). Labels "Eq38:*".
std::vector<RelationCheck> verify_barred_table(const TwoSiteRep& rep,
                                               double tol = 1e-10);

// Y^a = J^a / (mu+nu) plus the tilde ladder set (barred / (mu+nu)).
// Keys: "Y1".."Y8" and "Itil+", "Itil-", "Util+", ..., "Itil3", "Itil8".
std::map<std::string, Mat> normalized_ops(const TwoSiteRep& rep);

// Tilde ladder table (scale 1) under the constraint; labels "Eq44:*".
std::vector<RelationCheck> verify_tilde_table(const TwoSiteRep& rep,
                                              double tol = 1e-10);

// det(x 1 - Itil3) at the nine closed-form roots
//   {0, +-1/2, +-r/2, +-1/4 +- r/4} with r = sqrt((mu-nu)^2 - lambda^2)/(mu+nu)
// (constrained parameters collapse them to {0, 1/2, -1/2}, each triple).
// Labels "Eq48:x<k>" or "Eq49:x<k>"; tolerance 1e-9 on |det|.
std::vector<RelationCheck> spectrum_check_I3(const TwoSiteRep& rep);

}  // namespace yk
