#pragma once

// Posets with a compatible group action: discrete posets from G-sets, cones,
// symmetric joins, the map-poset construction t_U along a biset, join
// induction jn_U, fixed subposets, and flag complexes with their cell G-sets.

#include <cstdint>
#include <vector>

#include "dadelab/biset.hpp"
#include "dadelab/gset.hpp"
#include "dadelab/group.hpp"
#include "dadelab/poset.hpp"

namespace dadelab::gposet {

constexpr int kDefaultElementCap = 20'000;

struct GPoset {
  grp::Group group;
  poset::Poset order;
  std::vector<int> action;  ///< action[g*size + x]

  int size() const { return order.size; }
  bool lt(int a, int b) const { return order.lt(a, b); }
  int act(int g, int x) const { return action[g * order.size + x]; }
};

/// Validate the action (a genuine action that preserves the strict order).
GPoset make_gposet(grp::Group g, poset::Poset order, std::vector<int> action);

GPoset discrete_gposet(const gset::GSet& x);

GPoset empty_gposet(grp::Group g);

/// Bottom element appended at index size() with trivial action.
GPoset cone(const GPoset& x);

/// Symmetric join: (cX x cY) minus the pair of bottoms, diagonal action.
GPoset join(const GPoset& x, const GPoset& y);

/// n-ary symmetric join: product of cones minus the all-bottoms element.
/// join_many({X}) is isomorphic to X; at least one factor is required (the
/// empty join has no group to live over).
GPoset join_many(const std::vector<GPoset>& factors, int element_cap = kDefaultElementCap);

/// t_U(X): the H-poset of right-K-equivariant maps U -> X (one value in
/// X^{stab} per right-K-orbit of U), ordered pointwise.
GPoset tmap(const biset::Biset& u, const GPoset& x, int element_cap = kDefaultElementCap);

/// jn_U(X) = t_U(cone X) minus the constant-bottom map.
GPoset join_induce(const biset::Biset& u, const GPoset& x,
                   int element_cap = kDefaultElementCap);

/// Induced subposet on the points fixed by every element of the mask;
/// `elements` receives the selected original indices.
poset::Poset fixed_subposet(const GPoset& x, grp::Mask h, std::vector<int>* elements = nullptr);

struct FlagComplex {
  /// simplices[d] lists the d-dimensional chains x_0 < ... < x_d as
  /// increasing sequences in the order; lexicographically sorted.
  std::vector<std::vector<std::vector<int>>> simplices;

  int dimension() const { return static_cast<int>(simplices.size()) - 1; }
};

FlagComplex flag_complex(const poset::Poset& x,
                         std::int64_t chain_cap = poset::kDefaultChainCap);

/// The G-set of d-simplices of the flag complex of a G-poset, per dimension.
std::vector<gset::GSet> cell_gsets(const GPoset& x,
                                   std::int64_t chain_cap = poset::kDefaultChainCap);

}  // namespace dadelab::gposet
