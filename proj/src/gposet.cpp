#include "dadelab/gposet.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dadelab::gposet {

GPoset make_gposet(grp::Group g, poset::Poset order, std::vector<int> action) {
  // the action-table axioms are exactly the G-set ones
  auto as_gset = gset::make_gset(g, order.size, std::move(action));
  const int n = order.size;
  for (int e = 0; e < as_gset.group->order; ++e)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (order.lt(a, b) && !order.lt(as_gset.act(e, a), as_gset.act(e, b)))
          throw std::invalid_argument("gposet: action does not preserve the order");
  return GPoset{std::move(as_gset.group), std::move(order), std::move(as_gset.action)};
}

GPoset discrete_gposet(const gset::GSet& x) {
  return GPoset{x.group, poset::antichain(x.size), x.action};
}

GPoset empty_gposet(grp::Group g) { return GPoset{std::move(g), poset::antichain(0), {}}; }

GPoset cone(const GPoset& x) {
  const int n = x.size();
  auto order = poset::cone_poset(x.order);
  std::vector<int> action(x.group->order * (n + 1));
  for (int g = 0; g < x.group->order; ++g) {
    for (int p = 0; p < n; ++p) action[g * (n + 1) + p] = x.act(g, p);
    action[g * (n + 1) + n] = n;
  }
  return GPoset{x.group, std::move(order), std::move(action)};
}

GPoset join_many(const std::vector<GPoset>& factors, int element_cap) {
  if (factors.empty()) throw std::invalid_argument("join_many: needs a group; no factors given");
  const auto& g = factors[0].group;
  const int m = static_cast<int>(factors.size());
  std::vector<GPoset> cones;
  cones.reserve(m);
  for (const auto& f : factors) {
    if (f.group->table != g->table) throw std::invalid_argument("join: group mismatch");
    cones.push_back(cone(f));
  }
  std::int64_t total = 1;
  for (const auto& c : cones) {
    total *= c.size();
    if (total - 1 > element_cap) throw std::length_error("join: element cap exceeded");
  }
  const int size = static_cast<int>(total - 1);  // the all-bottoms tuple is dropped;
                                                 // it has the largest mixed-radix index
  std::vector<int> stride(m, 1);
  for (int i = m - 2; i >= 0; --i) stride[i] = stride[i + 1] * cones[i + 1].size();
  auto decode = [&](int e, std::vector<int>& digits) {
    for (int i = 0; i < m; ++i) {
      digits[i] = e / stride[i];
      e %= stride[i];
    }
  };
  std::vector<std::vector<int>> digits(size, std::vector<int>(m));
  for (int e = 0; e < size; ++e) decode(e, digits[e]);

  std::vector<char> less(static_cast<std::size_t>(size) * size, 0);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      if (a == b) continue;
      bool le = true;
      for (int i = 0; i < m && le; ++i) {
        const int xa = digits[a][i], xb = digits[b][i];
        if (xa != xb && !cones[i].lt(xa, xb)) le = false;
      }
      if (le) less[a * size + b] = 1;
    }

  std::vector<int> action(g->order * size);
  std::vector<int> img(m);
  for (int e = 0; e < g->order; ++e)
    for (int a = 0; a < size; ++a) {
      int enc = 0;
      for (int i = 0; i < m; ++i) enc += cones[i].act(e, digits[a][i]) * stride[i];
      action[e * size + a] = enc;
    }
  return make_gposet(g, poset::make_poset_from_table(size, std::move(less)),
                     std::move(action));
}

GPoset join(const GPoset& x, const GPoset& y) { return join_many({x, y}); }

namespace {

struct RightOrbitData {
  std::vector<int> reps;         ///< least point of each right-K-orbit, ascending
  std::vector<int> orbit_of;     ///< point -> orbit index
  std::vector<int> k_of;         ///< point -> least k with rep.k = point
  std::vector<grp::Mask> stabs;  ///< orbit -> {k : rep.k = rep}
};

RightOrbitData right_orbits(const biset::Biset& u) {
  RightOrbitData d;
  d.orbit_of.assign(u.size, -1);
  d.k_of.assign(u.size, -1);
  for (int p = 0; p < u.size; ++p) {
    if (d.orbit_of[p] >= 0) continue;
    const int idx = static_cast<int>(d.reps.size());
    d.reps.push_back(p);
    grp::Mask stab = 0;
    for (int k = 0; k < u.right->order; ++k) {
      const int q = u.ract(p, k);
      if (d.orbit_of[q] < 0) {
        d.orbit_of[q] = idx;
        d.k_of[q] = k;
      }
      if (q == p) stab |= grp::Mask{1} << k;
    }
    d.stabs.push_back(stab);
  }
  return d;
}

}  // namespace

GPoset tmap(const biset::Biset& u, const GPoset& x, int element_cap) {
  if (u.right->table != x.group->table)
    throw std::invalid_argument("tmap: poset group does not match the biset's right side");
  const auto orb = right_orbits(u);
  const int m = static_cast<int>(orb.reps.size());

  // per orbit, the candidate values: elements of X fixed by the stabilizer;
  // an empty biset gives the empty product, i.e. the one-point poset
  std::vector<std::vector<int>> fixed(m);
  std::int64_t total = 1;
  for (int i = 0; i < m; ++i) {
    for (int p = 0; p < x.size(); ++p) {
      bool ok = true;
      for (int k : grp::mask_elements(orb.stabs[i]))
        if (x.act(k, p) != p) {
          ok = false;
          break;
        }
      if (ok) fixed[i].push_back(p);
    }
    total *= static_cast<std::int64_t>(fixed[i].size());
    if (total > element_cap) throw std::length_error("tmap: element cap exceeded");
  }
  const int size = static_cast<int>(total);
  std::vector<int> stride(m, 1);
  for (int i = m - 2; i >= 0; --i)
    stride[i] = stride[i + 1] * static_cast<int>(fixed[i + 1].size());
  std::vector<std::vector<int>> value(size, std::vector<int>(m));  // element -> X-points
  for (int e = 0; e < size; ++e) {
    int rem = e;
    for (int i = 0; i < m; ++i) {
      value[e][i] = fixed[i][rem / stride[i]];
      rem %= stride[i];
    }
  }

  std::vector<char> less(static_cast<std::size_t>(size) * size, 0);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      if (a == b) continue;
      bool le = true;
      for (int i = 0; i < m && le; ++i) {
        const int xa = value[a][i], xb = value[b][i];
        if (xa != xb && !x.lt(xa, xb)) le = false;
      }
      if (le) less[a * size + b] = 1;
    }

  // position of each X-point in each orbit's candidate list, for re-encoding
  std::vector<std::vector<int>> pos(m, std::vector<int>(x.size(), -1));
  for (int i = 0; i < m; ++i)
    for (int d = 0; d < static_cast<int>(fixed[i].size()); ++d) pos[i][fixed[i][d]] = d;

  // (h.f)(u_i) = f(h^-1 u_i) = k^-1 . f(u_j)   where h^-1 u_i = u_j . k
  const auto& h = *u.left;
  std::vector<int> action(h.order * size);
  for (int e = 0; e < h.order; ++e) {
    const int einv = h.inv(e);
    std::vector<int> src_orbit(m), src_k_inv(m);
    for (int i = 0; i < m; ++i) {
      const int w = u.lact(einv, orb.reps[i]);
      src_orbit[i] = orb.orbit_of[w];
      src_k_inv[i] = u.right->inv(orb.k_of[w]);
    }
    for (int a = 0; a < size; ++a) {
      int enc = 0;
      for (int i = 0; i < m; ++i) {
        const int xi = x.act(src_k_inv[i], value[a][src_orbit[i]]);
        enc += pos[i][xi] * stride[i];
      }
      action[e * size + a] = enc;
    }
  }
  return make_gposet(u.left, poset::make_poset_from_table(size, std::move(less)),
                     std::move(action));
}

GPoset join_induce(const biset::Biset& u, const GPoset& x, int element_cap) {
  // t_U(cX) has the constant-bottom map as its last element (the cone bottom
  // is the largest index of cX and is fixed by every stabilizer, so it is the
  // last candidate in every coordinate); dropping it needs no reindexing.
  auto t = tmap(u, cone(x), element_cap);
  const int n = t.size() - 1;
  std::vector<int> keep(n);
  std::iota(keep.begin(), keep.end(), 0);
  auto order = poset::induced_subposet(t.order, keep);
  std::vector<int> action(t.group->order * n);
  for (int e = 0; e < t.group->order; ++e)
    for (int a = 0; a < n; ++a) {
      const int img = t.act(e, a);
      if (img == n) throw std::logic_error("join_induce: non-bottom map sent to the bottom");
      action[e * n + a] = img;
    }
  return GPoset{t.group, std::move(order), std::move(action)};
}

poset::Poset fixed_subposet(const GPoset& x, grp::Mask h, std::vector<int>* elements) {
  const auto hs = grp::mask_elements(h);
  std::vector<int> keep;
  for (int p = 0; p < x.size(); ++p) {
    bool ok = true;
    for (int e : hs)
      if (x.act(e, p) != p) {
        ok = false;
        break;
      }
    if (ok) keep.push_back(p);
  }
  auto out = poset::induced_subposet(x.order, keep);
  if (elements) *elements = std::move(keep);
  return out;
}

FlagComplex flag_complex(const poset::Poset& x, std::int64_t chain_cap) {
  return FlagComplex{poset::chains_by_length(x, chain_cap)};
}

std::vector<gset::GSet> cell_gsets(const GPoset& x, std::int64_t chain_cap) {
  const auto flag = flag_complex(x.order, chain_cap);
  std::vector<gset::GSet> out;
  for (const auto& simplices : flag.simplices) {
    std::map<std::vector<int>, int> index;
    for (int s = 0; s < static_cast<int>(simplices.size()); ++s) index[simplices[s]] = s;
    const int ns = static_cast<int>(simplices.size());
    std::vector<int> action(x.group->order * ns);
    std::vector<int> img;
    for (int e = 0; e < x.group->order; ++e)
      for (int s = 0; s < ns; ++s) {
        img.clear();
        // order-preserving actions map increasing chains to increasing chains
        for (int v : simplices[s]) img.push_back(x.act(e, v));
        action[e * ns + s] = index.at(img);
      }
    out.push_back(gset::make_gset(x.group, ns, std::move(action)));
  }
  return out;
}

}  // namespace dadelab::gposet
