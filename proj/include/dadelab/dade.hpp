#pragma once

// The Borel-Smith sublattice of the super class functions, the quotient group
// it defines, and the canonical-representative arithmetic of that quotient:
// membership conditions on C_p / C_4 / C_p x C_p / Q_8 subquotients, the
// quotient's invariant factors, the reduction map psi, syzygy classes of
// G-sets, the explicit Moebius/double-coset form of tensor induction, and the
// homology-class formula for tight complexes.

#include <cstdint>
#include <vector>

#include "dadelab/cfun.hpp"
#include "dadelab/gset.hpp"
#include "dadelab/lattice.hpp"
#include "dadelab/moore.hpp"
#include "dadelab/xalg.hpp"

namespace dadelab::dade {

/// One subquotient condition, descended to conjugacy classes: the class
/// values must satisfy row . f == 0 (modulus 0) or row . f == 0 mod modulus.
struct Condition {
  grp::SubquotientType kind;
  grp::Mask l = 0;          ///< normal subgroup of the witnessing pair
  grp::Mask h = 0;          ///< overgroup of the witnessing pair
  xalg::Vec64 row;          ///< coefficients on class values
  std::int64_t modulus = 0; ///< 0 for an equality, else 2 or 4
};

struct BorelSmithBasis {
  grp::Lattice lattice;
  std::vector<Condition> conditions;  ///< full condition log (all normal pairs)
  xalg::IntMat basis;                 ///< rows: Hermite basis of the sublattice
  xalg::HermiteResult hnf;            ///< reduction handle for the row lattice
  int rank() const { return hnf.rank; }
};

/// The sublattice of class functions satisfying, for every normal pair
/// L <| H <= G:
///   (a) H/L cyclic of odd prime order:  f(L) == f(H)   mod 2
///   (b) H/L cyclic of order 4:          f(L) == f(H1)  mod 2, [H1:L] = 2
///   (c) H/L elementary abelian of rank 2: f(L) - f(H) = sum_i (f(H_i) - f(H))
///       over the p+1 intermediate subgroups H_i
///   (d) H/L quaternion of order 8:      f(L) == f(H1)  mod 4, H1/L the center
BorelSmithBasis borel_smith_lattice(grp::Lattice lattice);

/// Direct evaluation of every logged condition (the route that does not use
/// the assembled lattice; kept separate so the two can be cross-checked).
bool satisfies_conditions(const BorelSmithBasis& b, const xalg::Vec64& values);

/// An element of the quotient of the class functions by the Borel-Smith
/// sublattice, held as the canonical coset representative.
struct DadeElement {
  grp::Lattice lattice;
  xalg::IntVec rep;

  bool is_zero() const { return xalg::vec_is_zero(rep); }
};

bool equal(const DadeElement& a, const DadeElement& b);
DadeElement add(const BorelSmithBasis& b, const DadeElement& x, const DadeElement& y);

struct DadeGroupStructure {
  int free_rank = 0;
  std::vector<xalg::Int> torsion;  ///< invariant factors > 1, in divisor order
};

/// Structure of (class functions)/(Borel-Smith sublattice).
DadeGroupStructure dade_structure(const BorelSmithBasis& b);

/// Canonical coset of f; psi(f) is zero exactly when f lies in the sublattice.
DadeElement psi(const BorelSmithBasis& b, const cfun::SuperClassFunction& f);

/// psi(omega_X), the syzygy class of a G-set.  Self-checks that a G-fixed
/// point forces the zero class.
DadeElement omega_syzygy(const BorelSmithBasis& b, const gset::GSet& x);

/// Right-hand side of the explicit tensor-induction formula for a K-set X
/// along K <= H:  sum over classes S <=_H T of
///   mu_H(S,T) * #{h in T\H/K : X^{T^h cap K} nonempty} * omega_{H/S}.
cfun::SuperClassFunction tensor_induction_formula(const grp::EmbeddedGroup& k,
                                                  const gset::GSet& x,
                                                  grp::Lattice h_lattice);

struct TensorInductionReport {
  bool formula_matches = true;        ///< jnd omega_{K/J} == explicit formula, all J
  bool preserves_borel_smith = true;  ///< jnd maps the K-sublattice into the H-sublattice
  std::vector<int> mismatched_classes;  ///< K-classes J where the routes disagreed
};

/// Cross-checks generalized induction along the (H,K)-induction biset against
/// the explicit formula on every transitive K-set, and verifies induction
/// carries the Borel-Smith sublattice of K into that of H.
TensorInductionReport tensor_induction_check(const grp::EmbeddedGroup& k);

/// psi(Dim X): the class of the concentrated homology of a Moore complex.
/// Requires the report to be Moore and capped.
DadeElement hom_of_moore(const BorelSmithBasis& b, const moore::MooreReport& rep);

struct TightFormulaResult {
  int m = 0;                ///< concentration degree at the full group
  int n = 0;                ///< concentration degree at the trivial subgroup
  DadeElement cell_sum;     ///< sum of the syzygy classes of the cell G-sets, m+1..n
  DadeElement hom;          ///< psi(Dim X)
  bool matches = false;
};

/// The cell-sum formula for the homology class of a tight complex; requires
/// the report to be Moore, tight and capped.
TightFormulaResult tight_formula(const BorelSmithBasis& b, const moore::MooreReport& rep);

/// Fixed-point dimension functions of the real irreducible representations,
/// hand-tabulated for abelian p-groups and the quaternion group of order 8.
/// Throws std::invalid_argument for other groups.
std::vector<cfun::SuperClassFunction> representation_sphere_functions(grp::Lattice lattice);

struct OracleReport {
  bool all_members = true;  ///< every representation function satisfies the conditions
  bool spans = true;        ///< their span equals the computed sublattice exactly
  std::vector<int> outside; ///< indices of representation functions that fell outside
};

/// Independent check of the Borel-Smith sublattice against representation
/// theory: the dimension functions above must generate exactly the computed
/// sublattice.  Any failure is reported, never patched.
OracleReport representation_sphere_check(const BorelSmithBasis& b);

}  // namespace dadelab::dade
