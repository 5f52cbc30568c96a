#pragma once

// Similarity transforms that block-diagonalize the constrained two-site
// generators: the 4x4 tau for su(2) and the 9x9 A for su(3), plus the
// hidden-u(1) rescaling check on the single-site ladder algebra.

#include <string>
#include <vector>

#include "yk/linear.hpp"
#include "yk/report.hpp"
#include "yk/yangian.hpp"

namespace yk {

struct SingularLocusError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SimilarityTransform {
  Mat matrix;
  Mat inverse;
  double xi_or_alpha = 0.0;  // nu - lambda/2
};

// 4x4 transform with middle block [[nu, -lambda/2], [-lambda/2, nu]];
// det = nu^2 - lambda^2/4. Throws SingularLocusError near nu = +-lambda/2.
SimilarityTransform tau(double nu, double lambda);

// 9x9 transform coupling index pairs (1,3), (2,6), (5,7) with the same
// nu / -lambda/2 pattern; det = (nu^2 - lambda^2/4)^3.
SimilarityTransform A_matrix(double nu, double lambda);

struct OperatorBlocks {
  std::string op;
  std::vector<Mat> blocks;         // diagonal blocks after conjugation
  double off_block_residual = 0.0; // max |entry| outside the diagonal blocks
  double block_match_residual = 0.0;  // max distance to the closed-form blocks
};

struct BlockReport {
  double scale = 0.0;  // xi or alpha used by the closed-form blocks
  std::vector<OperatorBlocks> ops;
  bool pass(double tol) const {
    for (const auto& o : ops)
      if (o.off_block_residual > tol || o.block_match_residual > tol) return false;
    return true;
  }
};

// tau^-1 J tau for the constrained su(2) build: two 2x2 blocks per operator,
// Y+ -> (xi s+/2, xi^-1 s+/2), Y- -> (xi^-1 s-/2, xi s-/2), Y3 -> (s3/2, s3/2).
BlockReport reduce_su2(const YangianParams& params, const SimilarityTransform& t);

// A^-1 Op A for the constrained su(3) tilde operators: three 3x3 blocks per
// operator, scaled single-site shift matrices with alpha-power patterns
// (1,-1,0) for Ibar, (0,1,-1) for Ubar, (-1,0,1) for Vbar; diagonal operators
// reduce to three copies of I3 / I8.
BlockReport reduce_su3(const TwoSiteRep& rep, const SimilarityTransform& t);

// Rescaling I+- by alpha^(+-p), U+- by alpha^(+-q), V+- by alpha^(+-r) is an
// algebra automorphism exactly when p + q + r = 0; the three diagonal blocks
// of the reduction realize (1,0,-1), (-1,1,0) and (0,-1,1). Verifies the full
// ladder table for those three patterns. Throws on alpha = 0.
std::vector<RelationCheck> u1_rescale_check(double alpha, double tol = 1e-12);

}  // namespace yk
