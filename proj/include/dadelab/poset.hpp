#pragma once

// Plain finite posets: strict order relations, standard constructions,
// chain enumeration, and exact isomorphism testing.

#include <cstdint>
#include <vector>

namespace dadelab::poset {

constexpr std::int64_t kDefaultChainCap = 2'000'000;

struct Poset {
  int size = 0;
  std::vector<char> less;  ///< less[a*size+b]: a strictly below b; transitively closed

  bool lt(int a, int b) const { return less[a * size + b] != 0; }
};

/// Build from any irreflexive relation (covers or the full order); the
/// transitive closure is taken and checked to stay irreflexive (no cycles).
Poset make_poset(int size, const std::vector<std::pair<int, int>>& strictly_less);

/// Wrap an already-closed relation table (validated).
Poset make_poset_from_table(int size, std::vector<char> less);

Poset antichain(int n);
Poset chain(int n);

/// Adds a bottom element with index n (original indices unchanged).
Poset cone_poset(const Poset& x);

/// Componentwise order on pairs; index of (a,b) is a*y.size+b.
Poset product_poset(const Poset& x, const Poset& y);

/// Induced subposet on the given elements (in the given order).
Poset induced_subposet(const Poset& x, const std::vector<int>& elements);

Poset disjoint_union_poset(const Poset& x, const Poset& y);

/// All chains of each length: chains[d] lists the d-dimensional chains
/// x_0 < ... < x_d as increasing sequences w.r.t. the order.
/// Throws if the total number of chains exceeds the cap.
std::vector<std::vector<std::vector<int>>> chains_by_length(
    const Poset& x, std::int64_t chain_cap = kDefaultChainCap);

std::int64_t count_chains(const Poset& x, std::int64_t chain_cap = kDefaultChainCap);

/// Exact isomorphism test: iterative invariant refinement, then backtracking.
bool posets_isomorphic(const Poset& a, const Poset& b);

}  // namespace dadelab::poset
