#pragma once

// Finite (H,K)-bisets with explicit commuting left/right action tables: the
// five basic kinds, opposites, composition over the middle group, and the
// stabilizer-style subgroups L^u that drive generalized induction.

#include <vector>

#include "dadelab/group.hpp"
#include "dadelab/gset.hpp"

namespace dadelab::biset {

struct Biset {
  grp::Group left;   ///< H, acting on the left
  grp::Group right;  ///< K, acting on the right
  int size = 0;
  std::vector<int> left_action;   ///< left_action[h*size + u] = h.u
  std::vector<int> right_action;  ///< right_action[k*size + u] = u.k

  int lact(int h, int u) const { return left_action[h * size + u]; }
  int ract(int u, int k) const { return right_action[k * size + u]; }
};

/// Validate both action axioms and the commuting law (hu)k = h(uk).
Biset make_biset(grp::Group left, grp::Group right, int size,
                 std::vector<int> left_action, std::vector<int> right_action);

/// H as an (H,K)-biset for a subgroup K of H.
Biset induction_biset(const grp::EmbeddedGroup& k);

/// H as a (K,H)-biset for a subgroup K of H.
Biset restriction_biset(const grp::EmbeddedGroup& k);

/// G/N as a (G, G/N)-biset.
Biset inflation_biset(const grp::Group& g, const grp::QuotientGroup& q);

/// G/N as a (G/N, G)-biset.
Biset deflation_biset(const grp::Group& g, const grp::QuotientGroup& q);

/// H as an (H,K)-biset along an isomorphism phi : K -> H
/// (phi[k] = image element index; validated to be bijective and a homomorphism).
Biset iso_biset(const grp::Group& h, const grp::Group& k, const std::vector<int>& phi);

/// The group itself as the identity (G,G)-biset.
Biset identity_biset(const grp::Group& g);

/// U^op: same points, sides swapped via inverses.
Biset opposite(const Biset& u);

/// U x_K V: orbits of the middle group on pairs, (u.k, v) ~ (u, k.v).
Biset compose(const Biset& u, const Biset& v);

Biset disjoint_union(const Biset& a, const Biset& b);

/// U x_K X for a left K-set X: the induced left H-set.
gset::GSet apply_biset(const Biset& u, const gset::GSet& x);

/// L^u = {k in K : u.k = l.u for some l in L}, as a mask over K's elements.
/// Always a subgroup; verified.
grp::Mask l_u_subgroup(const Biset& u, grp::Mask l, int point);

/// One L^u per (L,K) double orbit of U, in ascending order of the least point
/// of each orbit.
std::vector<grp::Mask> orbit_decomposition_uop(const Biset& u, grp::Mask l);

}  // namespace dadelab::biset
