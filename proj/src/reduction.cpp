#include "yk/reduction.hpp"

#include <cmath>

namespace yk {

namespace {

SimilarityTransform make_transform(Mat m, double nu, double lambda) {
  const double d = nu * nu - lambda * lambda / 4.0;
  if (std::abs(d) < kSingularTol)
    throw SingularLocusError(
        "similarity transform singular at nu = +-lambda/2 (nu = " +
        std::to_string(nu) + ", lambda = " + std::to_string(lambda) + ")");
  SimilarityTransform t;
  t.inverse = inverse(m);
  t.matrix = std::move(m);
  t.xi_or_alpha = nu - lambda / 2.0;
  return t;
}

Mat conjugate(const SimilarityTransform& t, const Mat& op) {
  return matmul(matmul(t.inverse, op), t.matrix);
}

// Decompose an n*k x n*k matrix into k diagonal n x n blocks plus the
// largest entry outside them.
OperatorBlocks split_blocks(std::string name, const Mat& m, int n,
                            const std::vector<Mat>& expected) {
  OperatorBlocks out;
  out.op = std::move(name);
  const int k = m.rows() / n;
  for (int b = 0; b < k; ++b) {
    Mat blk(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) blk(r, c) = m(b * n + r, b * n + c);
    out.block_match_residual =
        std::max(out.block_match_residual, max_abs_distance(blk, expected[b]));
    out.blocks.push_back(std::move(blk));
  }
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (r / n != c / n)
        out.off_block_residual = std::max(out.off_block_residual, std::abs(m(r, c)));
  return out;
}

}  // namespace

SimilarityTransform tau(double nu, double lambda) {
  Mat m = Mat::identity(4);
  m(1, 1) = m(2, 2) = nu;
  m(1, 2) = m(2, 1) = -lambda / 2.0;
  return make_transform(std::move(m), nu, lambda);
}

SimilarityTransform A_matrix(double nu, double lambda) {
  Mat m = Mat::identity(9);
  for (const auto [i, j] : {std::pair{1, 3}, std::pair{2, 6}, std::pair{5, 7}}) {
    m(i, i) = m(j, j) = nu;
    m(i, j) = m(j, i) = -lambda / 2.0;
  }
  return make_transform(std::move(m), nu, lambda);
}

BlockReport reduce_su2(const YangianParams& params, const SimilarityTransform& t) {
  if (!params.constrained)
    throw std::invalid_argument("reduce_su2: requires constrained parameters");
  const TwoSiteRep rep = build_su2(params);
  const Complex i(0.0, 1.0);
  const Mat Jp = rep.J(1) + i * rep.J(2);
  const Mat Jm = rep.J(1) - i * rep.J(2);
  const auto pauli = pauli_basis();
  const Mat sp = pauli.gen[0] + i * pauli.gen[1];  // sigma+ / 2
  const Mat sm = pauli.gen[0] - i * pauli.gen[1];
  const double xi = t.xi_or_alpha;
  BlockReport report;
  report.scale = xi;
  report.ops.push_back(split_blocks("Y+", conjugate(t, Jp), 2, {xi * sp, (1.0 / xi) * sp}));
  report.ops.push_back(split_blocks("Y-", conjugate(t, Jm), 2, {(1.0 / xi) * sm, xi * sm}));
  report.ops.push_back(split_blocks("Y3", conjugate(t, rep.J(3)), 2,
                                    {pauli.gen[2], pauli.gen[2]}));
  return report;
}

BlockReport reduce_su3(const TwoSiteRep& rep, const SimilarityTransform& t) {
  if (!rep.params.constrained)
    throw std::invalid_argument("reduce_su3: requires constrained parameters");
  const auto tilde = normalized_ops(rep);
  const auto single = shift_ops(gellmann_basis());
  const double a = t.xi_or_alpha;
  const double ia = 1.0 / a;
  BlockReport report;
  report.scale = a;
  auto add = [&](const char* name, const Mat& op, const Mat& blk, double s1,
                 double s2, double s3) {
    report.ops.push_back(split_blocks(name, conjugate(t, op), 3,
                                      {s1 * blk, s2 * blk, s3 * blk}));
  };
  add("Itil3", tilde.at("Itil3"), single.I3, 1, 1, 1);
  add("Itil8", tilde.at("Itil8"), single.I8, 1, 1, 1);
  add("Itil+", tilde.at("Itil+"), single.Ip, a, ia, 1);
  add("Itil-", tilde.at("Itil-"), single.Im, ia, a, 1);
  add("Util+", tilde.at("Util+"), single.Up, 1, a, ia);
  add("Util-", tilde.at("Util-"), single.Um, 1, ia, a);
  add("Vtil+", tilde.at("Vtil+"), single.Vp, ia, 1, a);
  add("Vtil-", tilde.at("Vtil-"), single.Vm, a, 1, ia);
  return report;
}

std::vector<RelationCheck> u1_rescale_check(double alpha, double tol) {
  if (alpha == 0.0) throw std::invalid_argument("u1_rescale_check: alpha = 0");
  const auto base = shift_ops(gellmann_basis());
  std::vector<RelationCheck> out;
  const int patterns[3][3] = {{1, 0, -1}, {-1, 1, 0}, {0, -1, 1}};
  for (const auto& p : patterns) {
    ShiftOps o = base;
    o.Ip *= std::pow(alpha, p[0]);
    o.Im *= std::pow(alpha, -p[0]);
    o.Up *= std::pow(alpha, p[1]);
    o.Um *= std::pow(alpha, -p[1]);
    o.Vp *= std::pow(alpha, p[2]);
    o.Vm *= std::pow(alpha, -p[2]);
    const std::string prefix = "u1(" + std::to_string(p[0]) + "," +
                               std::to_string(p[1]) + "," + std::to_string(p[2]) + ")";
    for (auto& c : shift_table(o, 1.0, prefix, tol)) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace yk
