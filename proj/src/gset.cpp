#include "dadelab/gset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dadelab::gset {

GSet make_gset(grp::Group g, int size, std::vector<int> action) {
  if (size < 0) throw std::invalid_argument("gset: negative size");
  const int n = g->order;
  if (static_cast<int>(action.size()) != n * size)
    throw std::invalid_argument("gset: action table has wrong shape");
  for (int v : action)
    if (v < 0 || v >= size) throw std::invalid_argument("gset: action value out of range");
  for (int x = 0; x < size; ++x)
    if (action[g->identity * size + x] != x)
      throw std::invalid_argument("gset: identity does not act trivially");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = g->mul(a, b);
      for (int x = 0; x < size; ++x)
        if (action[ab * size + x] != action[a * size + action[b * size + x]])
          throw std::invalid_argument("gset: action is not compatible with multiplication");
    }
  GSet out;
  out.group = std::move(g);
  out.size = size;
  out.action = std::move(action);
  return out;
}

GSet transitive_gset(const grp::Group& g, grp::Mask h) {
  if (!grp::is_subgroup_mask(*g, h)) throw std::invalid_argument("transitive_gset: not a subgroup");
  const int n = g->order;
  const auto hs = grp::mask_elements(h);
  // Label each element with the least member of its left coset xH; coset
  // indices follow the ascending order of those least members, so the coset H
  // itself is always point 0.
  std::vector<int> least(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (least[x] >= 0) continue;
    for (int e : hs) least[g->mul(x, e)] = x;
    reps.push_back(x);
  }
  std::vector<int> coset_of(n);
  for (int x = 0; x < n; ++x) {
    const auto it = std::lower_bound(reps.begin(), reps.end(), least[x]);
    coset_of[x] = static_cast<int>(it - reps.begin());
  }
  const int size = static_cast<int>(reps.size());
  std::vector<int> action(n * size);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < size; ++c) action[a * size + c] = coset_of[g->mul(a, reps[c])];
  return make_gset(g, size, std::move(action));
}

GSet disjoint_union(const GSet& a, const GSet& b) {
  if (a.group->order != b.group->order || a.group->table != b.group->table)
    throw std::invalid_argument("disjoint_union: mismatched groups");
  const int n = a.group->order;
  const int size = a.size + b.size;
  std::vector<int> action(n * size);
  for (int g = 0; g < n; ++g) {
    for (int x = 0; x < a.size; ++x) action[g * size + x] = a.act(g, x);
    for (int x = 0; x < b.size; ++x) action[g * size + a.size + x] = a.size + b.act(g, x);
  }
  GSet out;
  out.group = a.group;
  out.size = size;
  out.action = std::move(action);
  return out;
}

std::vector<int> fixed_points(const GSet& x, grp::Mask h) {
  const auto hs = grp::mask_elements(h);
  std::vector<int> out;
  for (int p = 0; p < x.size; ++p) {
    bool fixed = true;
    for (int e : hs)
      if (x.act(e, p) != p) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(p);
  }
  return out;
}

std::vector<std::vector<int>> orbits(const GSet& x) {
  const int n = x.group->order;
  std::vector<char> seen(x.size, 0);
  std::vector<std::vector<int>> out;
  for (int p = 0; p < x.size; ++p) {
    if (seen[p]) continue;
    std::vector<int> orbit;
    for (int g = 0; g < n; ++g) {
      const int q = x.act(g, p);
      if (!seen[q]) {
        seen[q] = 1;
        orbit.push_back(q);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

grp::Mask stabilizer(const GSet& x, int point) {
  grp::Mask m = 0;
  for (int g = 0; g < x.group->order; ++g)
    if (x.act(g, point) == point) m |= grp::Mask{1} << g;
  return m;
}

std::vector<int> restrict_decompose(const GSet& x, const grp::EmbeddedGroup& k,
                                    const grp::SubgroupLattice& k_lattice) {
  if (k_lattice.group->table != k.group->table)
    throw std::invalid_argument("restrict_decompose: lattice is for a different group");
  const int nk = k.group->order;
  std::vector<char> seen(x.size, 0);
  std::vector<int> classes;
  for (int p = 0; p < x.size; ++p) {
    if (seen[p]) continue;
    grp::Mask stab = 0;  // stabilizer of p inside k, in k-local element indices
    for (int e = 0; e < nk; ++e) {
      const int q = x.act(k.to_parent[e], p);
      seen[q] = 1;
      if (q == p) stab |= grp::Mask{1} << e;
    }
    // Mark the rest of the k-orbit (one pass is enough: orbits of a group
    // action are reached from any point by single elements).
    classes.push_back(k_lattice.class_of[k_lattice.subgroup_index(stab)]);
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

}  // namespace dadelab::gset
