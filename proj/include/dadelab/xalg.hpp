#pragma once

// Exact linear algebra kernels: GF(p) rank/kernel, integer Hermite and Smith
// normal forms, and finitely generated abelian group structure of lattice
// quotients.  All integer computations are exact; normal forms use
// arbitrary-precision integers so intermediate coefficient growth can never
// overflow.

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace dadelab::xalg {

using i64 = std::int64_t;
using Int = boost::multiprecision::cpp_int;

using Mat64 = Eigen::Matrix<i64, Eigen::Dynamic, Eigen::Dynamic>;
using Vec64 = Eigen::Matrix<i64, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

/// a mod p normalized into [0, p).
i64 mod_p(i64 a, i64 p);

/// Multiplicative inverse of a modulo the prime p.  Throws if a == 0 (mod p).
i64 inv_mod_p(i64 a, i64 p);

struct RankKernel {
  int rank = 0;
  Mat64 kernel;  ///< columns form a basis of the right null space over GF(p)
};

/// Rank and kernel basis of m over GF(p) by reduced row echelon elimination.
RankKernel rank_kernel(const Mat64& m, i64 p);

/// Rank only (dense input).
int rank_mod_p(const Mat64& m, i64 p);

/// Column-major sparse matrix over GF(p); each column holds (row, coeff)
/// pairs sorted by row with coeff in [1, p).
struct SparseMat {
  int rows = 0;
  std::vector<std::vector<std::pair<int, i64>>> cols;
};

/// Rank of a sparse matrix over GF(p) by column reduction.  Intended for the
/// very sparse boundary matrices of chain complexes, where dense elimination
/// would be wasteful.
int rank_mod_p(const SparseMat& m, i64 p);

/// Exact determinant of a square integer matrix (fraction-free elimination).
Int determinant(const IntMat& m);

struct SmithResult {
  IntMat d;  ///< diagonal normal form, d(i,i) >= 0 and d(i,i) | d(i+1,i+1)
  IntMat u;  ///< unimodular row transform
  IntMat v;  ///< unimodular column transform;  u * m * v == d
  int rank = 0;
  std::vector<Int> diagonal() const;  ///< the nonzero invariant factors
};

/// Smith normal form with transforms.  Postconditions (u*m*v == d, divisor
/// chain, |det u| == |det v| == 1) are re-verified internally; a failure
/// throws std::logic_error.
SmithResult smith_normal_form(const IntMat& m);

struct HermiteResult {
  IntMat h;                     ///< row-style Hermite normal form (row lattice basis)
  std::vector<int> pivot_cols;  ///< pivot column of each nonzero row of h
  int rank = 0;
};

/// Row-style Hermite normal form of the lattice spanned by the rows of m.
/// Pivots are positive, entries above each pivot are reduced into [0, pivot).
HermiteResult hermite_normal_form(const IntMat& m);

/// Canonical coset representative of v modulo the row lattice described by h.
/// reduce is idempotent and constant on cosets; reduce(v) == 0 iff v lies in
/// the lattice.
IntVec hnf_reduce(const HermiteResult& h, IntVec v);

struct QuotientStructure {
  int ambient_rank = 0;
  int lattice_rank = 0;
  int free_rank = 0;          ///< ambient_rank - lattice_rank
  std::vector<Int> torsion;   ///< invariant factors > 1, in divisor order
};

/// Structure of Z^ambient / (row lattice of basis_rows) via Smith normal form.
QuotientStructure lattice_quotient(const IntMat& basis_rows, int ambient_rank);

/// Invariant factors computed independently through gcds of k x k minors
/// (d_k = g_k / g_{k-1}).  Exponential in the matrix size; used as an oracle
/// against smith_normal_form on small inputs.
std::vector<Int> invariant_factors_by_minors(const IntMat& m);

/// Floor division helper for big integers (rounds toward minus infinity).
Int floor_div(const Int& a, const Int& b);

// Coefficient-wise comparisons.  Eigen's matrix operator== is not usable with
// cpp_int scalars under this Boost version (overload resolution instantiates a
// byte-container constructor that breaks on matrix iterator types), so these
// helpers are used everywhere instead.
bool mat_equal(const IntMat& a, const IntMat& b);
bool vec_equal(const IntVec& a, const IntVec& b);
bool vec_is_zero(const IntVec& a);

// Matrix products written out by hand for the same reason: Eigen's product
// overload set probes is_convertible<Matrix, Scalar>, which is poisoned for
// cpp_int here.  Scalar-times-expression stays on Eigen's fast path and is
// unaffected.
IntMat int_mat_mul(const IntMat& a, const IntMat& b);
IntVec int_mat_vec(const IntMat& a, const IntVec& x);

}  // namespace dadelab::xalg
