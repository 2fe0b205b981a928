#pragma once

// Finite left G-sets with explicit action tables: coset spaces, disjoint
// unions, orbits, stabilizers and fixed points.

#include <vector>

#include "dadelab/group.hpp"
#include "dadelab/lattice.hpp"

namespace dadelab::gset {

struct GSet {
  grp::Group group;
  int size = 0;
  std::vector<int> action;  ///< action[g*size + x] = g.x

  int act(int g, int x) const { return action[g * size + x]; }
};

/// Validate the action axioms (identity, compatibility) and wrap.
GSet make_gset(grp::Group g, int size, std::vector<int> action);

/// The coset space G/H with cosets ordered by least member; the point with
/// index 0 is the coset H itself.
GSet transitive_gset(const grp::Group& g, grp::Mask h);

GSet disjoint_union(const GSet& a, const GSet& b);

/// Points fixed by every element of the subgroup h.
std::vector<int> fixed_points(const GSet& x, grp::Mask h);

std::vector<std::vector<int>> orbits(const GSet& x);

grp::Mask stabilizer(const GSet& x, int point);

/// Decomposition of x restricted to the subgroup k: the multiset of k-local
/// conjugacy classes of point stabilizers, one entry per k-orbit, sorted.
std::vector<int> restrict_decompose(const GSet& x, const grp::EmbeddedGroup& k,
                                    const grp::SubgroupLattice& k_lattice);

}  // namespace dadelab::gset
