#pragma once

// The full subgroup lattice of a finite p-group: every subgroup as a bitmask,
// conjugacy classes of subgroups, the subconjugacy order on classes, and the
// Moebius function of that order.  Everything downstream (class functions,
// induction formulas, Borel-Smith conditions) is phrased over the class poset
// computed here.

#include <Eigen/Dense>

#include <cstdint>
#include <memory>
#include <vector>

#include "dadelab/group.hpp"

namespace dadelab::grp {

struct SubgroupLattice {
  Group group;

  // subgroup data, sorted by (size, mask)
  std::vector<Mask> subgroups;
  std::vector<int> subgroup_size;
  std::vector<int> class_of;  ///< subgroup index -> class index

  // class data; classes sorted by (size of representative, representative mask),
  // so class 0 is the trivial subgroup and the last class is G itself
  std::vector<int> class_rep;                    ///< class -> subgroup index of lex-least member
  std::vector<std::vector<int>> class_members;   ///< class -> subgroup indices
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> leq;   ///< leq(a,b): a subconjugate to b
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> mobius;  ///< Moebius of the class poset

  int num_classes() const { return static_cast<int>(class_rep.size()); }
  int subgroup_index(Mask m) const;              ///< -1 if not a subgroup of this group
  int class_index(Mask m) const;                 ///< class of the subgroup with this mask
  Mask rep_mask(int cls) const { return subgroups[class_rep[cls]]; }
  int rep_size(int cls) const { return subgroup_size[class_rep[cls]]; }
  int trivial_class() const { return 0; }
  int full_class() const { return num_classes() - 1; }
};

using Lattice = std::shared_ptr<const SubgroupLattice>;

/// Enumerate all subgroups (breadth-first closure over cyclic extensions),
/// group them into conjugacy classes and compute subconjugacy and Moebius
/// data.  Cost is fine for the order <= 64 cap.
Lattice subgroup_lattice(const Group& g);

/// Subgroup enumeration oracle: test all 2^(n-1) element subsets containing
/// the identity for closure.  Only usable for tiny orders; exists to validate
/// subgroup_lattice.
std::vector<Mask> all_subgroups_bruteforce(const FiniteGroup& g);

enum class SubquotientType { CpOdd, C4, CpxCp, Q8, Other };

/// Isomorphism type tag of h/l for the types that carry arithmetic
/// conditions; l must be normal in h.
SubquotientType subquotient_type(const FiniteGroup& g, Mask h, Mask l);

/// The subgroups m with l < m < h (as masks, from the lattice's global list).
std::vector<Mask> intermediate_subgroups(const SubgroupLattice& lat, Mask h, Mask l);

}  // namespace dadelab::grp
