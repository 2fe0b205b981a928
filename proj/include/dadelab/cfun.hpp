#pragma once

// Integer-valued functions on conjugacy classes of subgroups ("super class
// functions"): the idempotent and coset-space bases, coordinate changes
// through the Moebius table, and generalized induction along a biset.

#include <vector>

#include "dadelab/biset.hpp"
#include "dadelab/gset.hpp"
#include "dadelab/lattice.hpp"
#include "dadelab/xalg.hpp"

namespace dadelab::cfun {

struct SuperClassFunction {
  grp::Lattice lattice;
  xalg::Vec64 values;  ///< values(c) = f(class c), stored in the idempotent basis

  std::int64_t at_class(int cls) const { return values(cls); }
  std::int64_t at_mask(grp::Mask m) const { return values(lattice->class_index(m)); }
};

SuperClassFunction make_cfun(grp::Lattice lattice, xalg::Vec64 values);
SuperClassFunction zero_cfun(grp::Lattice lattice);

SuperClassFunction add(const SuperClassFunction& a, const SuperClassFunction& b);
SuperClassFunction sub(const SuperClassFunction& a, const SuperClassFunction& b);
SuperClassFunction scale(std::int64_t c, const SuperClassFunction& a);
bool equal(const SuperClassFunction& a, const SuperClassFunction& b);

/// e_H: 1 on the class of H, 0 elsewhere.
SuperClassFunction idempotent(grp::Lattice lattice, int cls);
std::vector<SuperClassFunction> idempotent_basis(const grp::Lattice& lattice);

/// omega for the coset space G/H: 1 on classes subconjugate to H.
SuperClassFunction omega_coset(grp::Lattice lattice, int cls);
std::vector<SuperClassFunction> omega_basis(const grp::Lattice& lattice);

/// omega_X: 1 on classes K with X^K nonempty; identically 0 for empty X.
SuperClassFunction omega_of_gset(grp::Lattice lattice, const gset::GSet& x);

/// Coordinates of f in the omega basis (Moebius-transform solve; exact).
xalg::Vec64 to_omega_coordinates(const SuperClassFunction& f);

/// Inverse of to_omega_coordinates.
SuperClassFunction from_omega_coordinates(grp::Lattice lattice, const xalg::Vec64& coords);

/// Linear extension of f to a whole G-set: sum of f at orbit stabilizers.
std::int64_t evaluate_at_gset(const SuperClassFunction& f, const gset::GSet& x);

/// Generalized induction along an (H,K)-biset: for each class L of H,
/// (jnd_U f)(L) = sum over (L,K) double orbits of U of f(L^u).
SuperClassFunction jnd(const biset::Biset& u, const SuperClassFunction& f,
                       grp::Lattice left_lattice);

/// Reference route for jnd: evaluate f at the K-set U^op x_H (H/L) directly.
/// Exists so the two computations can be checked against each other.
SuperClassFunction jnd_via_opposite(const biset::Biset& u, const SuperClassFunction& f,
                                    grp::Lattice left_lattice);

}  // namespace dadelab::cfun
