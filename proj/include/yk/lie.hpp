#pragma once

// su(2) and su(3) fundamental representations: generators, structure
// constants, Casimirs, shift operators, and the single-site relation tables.

#include <string>
#include <vector>

#include "yk/linear.hpp"
#include "yk/report.hpp"

namespace yk {

struct LieBasis {
  std::string name;  // "su2" | "su3"
  int rep_dim = 0;
  int n_gens = 0;
  std::vector<Mat> gen;   // generators F^a, stored 0-based
  std::vector<double> f;  // rank-3 tables, flattened n^3, 1-based accessors
  std::vector<double> d;

  const Mat& F(int a) const { return gen[a - 1]; }  // a = 1..n_gens
  double fc(int a, int b, int c) const {
    return f[size_t(a - 1) * n_gens * n_gens + size_t(b - 1) * n_gens + (c - 1)];
  }
  double dc(int a, int b, int c) const {
    return d[size_t(a - 1) * n_gens * n_gens + size_t(b - 1) * n_gens + (c - 1)];
  }
};

LieBasis pauli_basis();     // S_i = sigma_i / 2, f = epsilon, d = 0
LieBasis gellmann_basis();  // F^a = Lambda^a / 2

// f_abc = Tr([l_a, l_b] l_c) / 4i and d_abc = Tr({l_a, l_b} l_c) / 4 with
// l_a = 2 F^a. Throws std::runtime_error if a trace that must be real (or
// imaginary) carries residue above 1e-12.
std::vector<double> compute_f(const LieBasis& basis);
std::vector<double> compute_d(const LieBasis& basis);

// Max |f_ijm f_kmn + f_kim f_jmn + f_jkm f_imn| over all (i,j,k,n).
double verify_jacobi(const std::vector<double>& f, int n);
// Max |f_ijm d_knm + f_ikm d_jnm + f_inm d_jkm| over all (i,j,k,n).
double verify_fd_identity(const std::vector<double>& f,
                          const std::vector<double>& d, int n);

// Quadratic Casimir, computed both as sum F_a^2 and as the f-contracted
// cubic form; throws if the two disagree beyond 1e-10.
Mat casimir_C1(const LieBasis& basis);
// Cubic Casimir sum d_abc F_a F_b F_c; throws if it differs from
// C1 (2 C1 - 11/6) beyond 1e-10.
Mat casimir_C2(const LieBasis& basis);

struct ShiftOps {
  Mat Ip, Im, Up, Um, Vp, Vm;  // ladder operators
  Mat I3, I8, Y, Q, U3, V3;    // diagonal combinations
};

// Ladder/diagonal combinations of any 8-generator su(3)-type set:
// I+- = g1 +- i g2, U+- = g6 +- i g7, V+- = g4 -+ i g5 (note the flip),
// I8 = Y = (2/sqrt 3) g8, Q = I3 + Y/2.
ShiftOps shift_combinations(const std::vector<Mat>& g);
ShiftOps shift_ops(const LieBasis& basis);  // basis must be su3

// The su(3) ladder relation table with an overall scale s on every
// right-hand side ([I+,I-] = 2s I3, ...). s = 1 is the single-site table;
// the two-site suites reuse it with s = mu + nu.
std::vector<RelationCheck> shift_table(const ShiftOps& o, double s,
                                       const std::string& prefix, double tol);

// Single-site checks: the full ladder table plus the U3/V3 su(2) triples
// and commutation of U-spin with the charge operator.
std::vector<RelationCheck> verify_su3_table(const ShiftOps& o,
                                            double tol = 1e-12);

}  // namespace yk
