#pragma once

// Finite p-groups given by explicit multiplication tables, a catalog of
// standard families, and derived constructions (quotients, subgroups realized
// as groups in their own right).  Orders are capped at 64 so that subgroup
// membership fits in a single 64-bit mask.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace dadelab::grp {

constexpr int kMaxOrder = 64;

/// Membership bitset over group element indices (bit i = element i).
using Mask = std::uint64_t;

struct FiniteGroup {
  int order = 0;
  int prime = 0;  ///< order == prime^k
  std::string name;
  std::vector<int> table;    ///< row-major order x order: table[a*order+b] = a*b
  std::vector<int> inverse;  ///< inverse[a]
  int identity = 0;

  int mul(int a, int b) const { return table[a * order + b]; }
  int inv(int a) const { return inverse[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  ///< g x g^-1
  Mask all_mask() const {
    return order == 64 ? ~Mask{0} : ((Mask{1} << order) - 1);
  }
};

/// Groups are immutable and shared; identity of the pointer is used to detect
/// mismatched arguments across modules.
using Group = std::shared_ptr<const FiniteGroup>;

/// Validate a multiplication table (associativity, identity, inverses, prime
/// power order, order cap) and wrap it.  Throws std::invalid_argument with a
/// witness of the failed axiom.
Group make_group(std::vector<int> table, std::string name = "");

// ---- catalog ----
Group cyclic_group(int n);                   ///< C_n, n a prime power
Group elementary_abelian_group(int p, int k);///< (C_p)^k
Group dihedral_group(int n);                 ///< D_n of order n = 2^k >= 8
Group quaternion_group(int n);               ///< generalized quaternion, order n = 2^k >= 8
Group semidihedral_group(int n);             ///< order n = 2^k >= 16
Group extraspecial_group(int p);             ///< exponent-p Heisenberg group of order p^3, p odd

/// Group generated by permutations of {0..points-1}; closure capped at 64.
Group group_from_permutations(const std::vector<std::vector<int>>& gens, int points);

// ---- element utilities ----
int element_order(const FiniteGroup& g, int a);
std::vector<int> order_census(const FiniteGroup& g);  ///< census[d] = #elements of order d
Mask center_mask(const FiniteGroup& g);

// ---- subgroup-as-set utilities ----
Mask closure_mask(const FiniteGroup& g, Mask seed);
bool is_subgroup_mask(const FiniteGroup& g, Mask s);
Mask conjugate_mask(const FiniteGroup& g, Mask s, int x);  ///< x S x^-1
bool is_normal_in(const FiniteGroup& g, Mask s, Mask ambient);
int mask_size(Mask m);
std::vector<int> mask_elements(Mask m);

/// Least-index representatives of the double cosets A\G/B.
std::vector<int> double_coset_reps(const FiniteGroup& g, Mask a, Mask b);

struct QuotientGroup {
  Group group;                 ///< the quotient G/N
  std::vector<int> proj;       ///< G-element index -> quotient element index
  std::vector<int> coset_rep;  ///< quotient element index -> least G-element in the coset
};

/// Quotient by a normal subgroup; cosets are ordered by least member.
/// Throws if n is not a normal subgroup.
QuotientGroup quotient_group(const Group& g, Mask n);

struct EmbeddedGroup {
  Group group;                  ///< the subgroup as a group in its own right
  Group parent;
  Mask mask = 0;                ///< membership in the parent
  std::vector<int> to_parent;   ///< local index -> parent index (ascending)
  std::vector<int> from_parent; ///< parent index -> local index, -1 outside

  Mask mask_to_parent(Mask local) const;
  Mask mask_from_parent(Mask parent_mask) const;  ///< parent_mask must lie inside mask
};

/// Realize the subgroup with membership mask s as a FiniteGroup.
EmbeddedGroup subgroup_group(const Group& g, Mask s);

/// Group isomorphism test by backtracking on generators (small orders only).
bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace dadelab::grp
