#include "dadelab/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dadelab::grp {

namespace {

std::vector<Mask> enumerate_subgroups(const FiniteGroup& g) {
  std::set<Mask> known;
  const Mask triv = Mask{1} << g.identity;
  known.insert(triv);
  std::vector<Mask> frontier{triv};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask h : frontier) {
      for (int x = 0; x < g.order; ++x) {
        if (h >> x & 1) continue;
        Mask ext = closure_mask(g, h | (Mask{1} << x));
        if (known.insert(ext).second) next.push_back(ext);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Mask> out(known.begin(), known.end());
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    const int pa = mask_size(a), pb = mask_size(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

}  // namespace

std::vector<Mask> all_subgroups_bruteforce(const FiniteGroup& g) {
  if (g.order > 16) throw std::invalid_argument("all_subgroups_bruteforce: order too large");
  std::vector<Mask> out;
  const Mask id = Mask{1} << g.identity;
  const Mask all = g.all_mask();
  for (Mask s = 0; s <= all; ++s) {
    if ((s & id) == 0) continue;
    if (is_subgroup_mask(g, s)) out.push_back(s);
    if (s == all) break;
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    const int pa = mask_size(a), pb = mask_size(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

int SubgroupLattice::subgroup_index(Mask m) const {
  const int size = mask_size(m);
  auto it = std::lower_bound(subgroups.begin(), subgroups.end(), m,
                             [this, size](Mask a, Mask b) {
                               const int pa = mask_size(a), pb = mask_size(b);
                               return pa != pb ? pa < pb : a < b;
                             });
  (void)size;
  if (it == subgroups.end() || *it != m) return -1;
  return static_cast<int>(it - subgroups.begin());
}

int SubgroupLattice::class_index(Mask m) const {
  const int idx = subgroup_index(m);
  if (idx < 0) throw std::invalid_argument("class_index: mask is not a subgroup of this group");
  return class_of[idx];
}

Lattice subgroup_lattice(const Group& g) {
  auto lat = std::make_shared<SubgroupLattice>();
  lat->group = g;
  lat->subgroups = enumerate_subgroups(*g);
  const int ns = static_cast<int>(lat->subgroups.size());
  lat->subgroup_size.resize(ns);
  for (int i = 0; i < ns; ++i) lat->subgroup_size[i] = mask_size(lat->subgroups[i]);

  std::map<Mask, int> index_of;
  for (int i = 0; i < ns; ++i) index_of[lat->subgroups[i]] = i;

  // conjugation orbits
  lat->class_of.assign(ns, -1);
  std::vector<std::vector<int>> members;
  for (int i = 0; i < ns; ++i) {
    if (lat->class_of[i] >= 0) continue;
    const int cls = static_cast<int>(members.size());
    std::vector<int> orbit;
    std::vector<int> stack{i};
    lat->class_of[i] = cls;
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      orbit.push_back(cur);
      for (int x = 0; x < g->order; ++x) {
        const Mask cj = conjugate_mask(*g, lat->subgroups[cur], x);
        const int j = index_of.at(cj);
        if (lat->class_of[j] < 0) {
          lat->class_of[j] = cls;
          stack.push_back(j);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    members.push_back(std::move(orbit));
  }
  // subgroups[] is sorted by (size, mask) and orbits are discovered in that
  // order, so classes are already sorted by (rep size, rep mask).
  lat->class_members = std::move(members);
  lat->class_rep.resize(lat->class_members.size());
  for (std::size_t c = 0; c < lat->class_members.size(); ++c)
    lat->class_rep[c] = lat->class_members[c].front();

  const int nc = lat->num_classes();

  // subconjugacy: [a] <= [b]  iff some member of class a sits inside rep(b)
  lat->leq.setConstant(nc, nc, false);
  for (int a = 0; a < nc; ++a)
    for (int b = 0; b < nc; ++b) {
      const Mask repb = lat->rep_mask(b);
      for (int m : lat->class_members[a])
        if ((lat->subgroups[m] & ~repb) == 0) {
          lat->leq(a, b) = true;
          break;
        }
    }

  // Moebius function of the class poset by recursion over intervals:
  // mu(a,a) = 1 and sum_{a <= c <= b} mu(a,c) = 0 for a < b.
  lat->mobius.setZero(nc, nc);
  for (int a = 0; a < nc; ++a) {
    lat->mobius(a, a) = 1;
    for (int b = a + 1; b < nc; ++b) {
      if (!lat->leq(a, b)) continue;
      std::int64_t s = 0;
      for (int c = a; c < b; ++c)
        if (lat->leq(a, c) && lat->leq(c, b)) s += lat->mobius(a, c);
      lat->mobius(a, b) = -s;
    }
  }
  return lat;
}

SubquotientType subquotient_type(const FiniteGroup& g, Mask h, Mask l) {
  if ((l & ~h) != 0 || !is_subgroup_mask(g, h) || !is_subgroup_mask(g, l))
    throw std::invalid_argument("subquotient_type: need subgroups l <= h");
  if (!is_normal_in(g, l, h)) throw std::invalid_argument("subquotient_type: l not normal in h");
  const int p = g.prime;
  const int q = mask_size(h) / mask_size(l);

  // Order census of h/l without materializing the quotient group: the order
  // of the coset x l is the least k with x^k in l.
  const auto elems = mask_elements(h);
  auto coset_order = [&](int x) {
    int y = x, k = 1;
    while (!(l >> y & 1)) {
      y = g.mul(y, x);
      ++k;
    }
    return k;
  };
  int n_order2 = 0, max_order = 1;
  int counted = 0;
  for (int x : elems) {
    const int k = coset_order(x);
    max_order = std::max(max_order, k);
    if (k == 2) ++n_order2;
    ++counted;
  }
  // every coset was counted |l| times
  n_order2 /= mask_size(l);
  (void)counted;

  if (q == p && p % 2 == 1) return SubquotientType::CpOdd;
  if (q == 4 && p == 2) return max_order == 4 ? SubquotientType::C4 : SubquotientType::CpxCp;
  if (q == p * p && max_order == p) return SubquotientType::CpxCp;
  if (q == 8 && p == 2 && n_order2 == 1 && max_order == 4) return SubquotientType::Q8;
  return SubquotientType::Other;
}

std::vector<Mask> intermediate_subgroups(const SubgroupLattice& lat, Mask h, Mask l) {
  std::vector<Mask> out;
  for (Mask s : lat.subgroups)
    if (s != l && s != h && (l & ~s) == 0 && (s & ~h) == 0) out.push_back(s);
  return out;
}

}  // namespace dadelab::grp
