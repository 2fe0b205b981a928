#include "dadelab/biset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dadelab::biset {

namespace {

void check_left_action(const grp::FiniteGroup& g, int size, const std::vector<int>& a) {
  for (int v : a)
    if (v < 0 || v >= size) throw std::invalid_argument("biset: action value out of range");
  for (int x = 0; x < size; ++x)
    if (a[g.identity * size + x] != x)
      throw std::invalid_argument("biset: identity does not act trivially");
  for (int p = 0; p < g.order; ++p)
    for (int q = 0; q < g.order; ++q) {
      const int pq = g.mul(p, q);
      for (int x = 0; x < size; ++x)
        if (a[pq * size + x] != a[p * size + a[q * size + x]])
          throw std::invalid_argument("biset: left action incompatible");
    }
}

}  // namespace

Biset make_biset(grp::Group left, grp::Group right, int size,
                 std::vector<int> left_action, std::vector<int> right_action) {
  if (size < 0) throw std::invalid_argument("biset: negative size");
  if (static_cast<int>(left_action.size()) != left->order * size ||
      static_cast<int>(right_action.size()) != right->order * size)
    throw std::invalid_argument("biset: action table has wrong shape");
  check_left_action(*left, size, left_action);
  // the right action of K is a left action of K with the arguments flipped:
  // u.(k1 k2) = (u.k1).k2 means table[k1k2][u] = table[k2][table[k1][u]]
  for (int v : right_action)
    if (v < 0 || v >= size) throw std::invalid_argument("biset: action value out of range");
  for (int x = 0; x < size; ++x)
    if (right_action[right->identity * size + x] != x)
      throw std::invalid_argument("biset: identity does not act trivially");
  for (int p = 0; p < right->order; ++p)
    for (int q = 0; q < right->order; ++q) {
      const int pq = right->mul(p, q);
      for (int x = 0; x < size; ++x)
        if (right_action[pq * size + x] != right_action[q * size + right_action[p * size + x]])
          throw std::invalid_argument("biset: right action incompatible");
    }
  for (int h = 0; h < left->order; ++h)
    for (int k = 0; k < right->order; ++k)
      for (int x = 0; x < size; ++x)
        if (right_action[k * size + left_action[h * size + x]] !=
            left_action[h * size + right_action[k * size + x]])
          throw std::invalid_argument("biset: left and right actions do not commute");
  Biset out;
  out.left = std::move(left);
  out.right = std::move(right);
  out.size = size;
  out.left_action = std::move(left_action);
  out.right_action = std::move(right_action);
  return out;
}

Biset induction_biset(const grp::EmbeddedGroup& k) {
  const auto& h = *k.parent;
  const int n = h.order;
  std::vector<int> la(n * n), ra(k.group->order * n);
  for (int a = 0; a < n; ++a)
    for (int u = 0; u < n; ++u) la[a * n + u] = h.mul(a, u);
  for (int b = 0; b < k.group->order; ++b)
    for (int u = 0; u < n; ++u) ra[b * n + u] = h.mul(u, k.to_parent[b]);
  return make_biset(k.parent, k.group, n, std::move(la), std::move(ra));
}

Biset restriction_biset(const grp::EmbeddedGroup& k) {
  const auto& h = *k.parent;
  const int n = h.order;
  std::vector<int> la(k.group->order * n), ra(n * n);
  for (int b = 0; b < k.group->order; ++b)
    for (int u = 0; u < n; ++u) la[b * n + u] = h.mul(k.to_parent[b], u);
  for (int a = 0; a < n; ++a)
    for (int u = 0; u < n; ++u) ra[a * n + u] = h.mul(u, a);
  return make_biset(k.group, k.parent, n, std::move(la), std::move(ra));
}

Biset inflation_biset(const grp::Group& g, const grp::QuotientGroup& q) {
  const int m = q.group->order;
  std::vector<int> la(g->order * m), ra(m * m);
  for (int a = 0; a < g->order; ++a)
    for (int u = 0; u < m; ++u) la[a * m + u] = q.group->mul(q.proj[a], u);
  for (int b = 0; b < m; ++b)
    for (int u = 0; u < m; ++u) ra[b * m + u] = q.group->mul(u, b);
  return make_biset(g, q.group, m, std::move(la), std::move(ra));
}

Biset deflation_biset(const grp::Group& g, const grp::QuotientGroup& q) {
  const int m = q.group->order;
  std::vector<int> la(m * m), ra(g->order * m);
  for (int a = 0; a < m; ++a)
    for (int u = 0; u < m; ++u) la[a * m + u] = q.group->mul(a, u);
  for (int b = 0; b < g->order; ++b)
    for (int u = 0; u < m; ++u) ra[b * m + u] = q.group->mul(u, q.proj[b]);
  return make_biset(q.group, g, m, std::move(la), std::move(ra));
}

Biset iso_biset(const grp::Group& h, const grp::Group& k, const std::vector<int>& phi) {
  if (static_cast<int>(phi.size()) != k->order)
    throw std::invalid_argument("iso_biset: map has wrong domain size");
  std::vector<char> hit(h->order, 0);
  for (int x : phi) {
    if (x < 0 || x >= h->order || hit[x]) throw std::invalid_argument("iso_biset: not a bijection");
    hit[x] = 1;
  }
  if (h->order != k->order) throw std::invalid_argument("iso_biset: order mismatch");
  for (int a = 0; a < k->order; ++a)
    for (int b = 0; b < k->order; ++b)
      if (phi[k->mul(a, b)] != h->mul(phi[a], phi[b]))
        throw std::invalid_argument("iso_biset: not a homomorphism");
  const int n = h->order;
  std::vector<int> la(n * n), ra(n * n);
  for (int a = 0; a < n; ++a)
    for (int u = 0; u < n; ++u) {
      la[a * n + u] = h->mul(a, u);
      ra[a * n + u] = h->mul(u, phi[a]);
    }
  return make_biset(h, k, n, std::move(la), std::move(ra));
}

Biset identity_biset(const grp::Group& g) {
  std::vector<int> phi(g->order);
  std::iota(phi.begin(), phi.end(), 0);
  return iso_biset(g, g, phi);
}

Biset opposite(const Biset& u) {
  const int n = u.size;
  std::vector<int> la(u.right->order * n), ra(u.left->order * n);
  for (int k = 0; k < u.right->order; ++k)
    for (int x = 0; x < n; ++x) la[k * n + x] = u.ract(x, u.right->inv(k));
  for (int h = 0; h < u.left->order; ++h)
    for (int x = 0; x < n; ++x) ra[h * n + x] = u.lact(u.left->inv(h), x);
  return make_biset(u.right, u.left, n, std::move(la), std::move(ra));
}

namespace {

/// Orbit labels for the middle-group action (u,v) -> (u.k, k^-1.v); labels are
/// assigned in ascending order of each orbit's least pair index u*sizeV+v.
std::vector<int> middle_orbits(const Biset& u, const Biset& v, int& count) {
  const int nu = u.size, nv = v.size;
  std::vector<int> label(nu * nv, -1);
  count = 0;
  for (int p = 0; p < nu * nv; ++p) {
    if (label[p] >= 0) continue;
    const int pu = p / nv, pv = p % nv;
    for (int k = 0; k < u.right->order; ++k) {
      const int qu = u.ract(pu, k);
      const int qv = v.lact(v.left->inv(k), pv);
      label[qu * nv + qv] = count;
    }
    ++count;
  }
  return label;
}

}  // namespace

Biset compose(const Biset& u, const Biset& v) {
  if (u.right->table != v.left->table)
    throw std::invalid_argument("compose: middle groups do not match");
  const int nv = v.size;
  int count = 0;
  auto label = middle_orbits(u, v, count);
  // pick the least pair in each orbit as its representative
  std::vector<int> rep(count, -1);
  for (int p = static_cast<int>(label.size()) - 1; p >= 0; --p) rep[label[p]] = p;
  std::vector<int> la(u.left->order * count), ra(v.right->order * count);
  for (int o = 0; o < count; ++o) {
    const int pu = rep[o] / nv, pv = rep[o] % nv;
    for (int h = 0; h < u.left->order; ++h) la[h * count + o] = label[u.lact(h, pu) * nv + pv];
    for (int l = 0; l < v.right->order; ++l) ra[l * count + o] = label[pu * nv + v.ract(pv, l)];
  }
  return make_biset(u.left, v.right, count, std::move(la), std::move(ra));
}

Biset disjoint_union(const Biset& a, const Biset& b) {
  if (a.left->table != b.left->table || a.right->table != b.right->table)
    throw std::invalid_argument("disjoint_union: mismatched groups");
  const int n = a.size + b.size;
  std::vector<int> la(a.left->order * n), ra(a.right->order * n);
  for (int h = 0; h < a.left->order; ++h) {
    for (int x = 0; x < a.size; ++x) la[h * n + x] = a.lact(h, x);
    for (int x = 0; x < b.size; ++x) la[h * n + a.size + x] = a.size + b.lact(h, x);
  }
  for (int k = 0; k < a.right->order; ++k) {
    for (int x = 0; x < a.size; ++x) ra[k * n + x] = a.ract(x, k);
    for (int x = 0; x < b.size; ++x) ra[k * n + a.size + x] = a.size + b.ract(x, k);
  }
  return make_biset(a.left, a.right, n, std::move(la), std::move(ra));
}

gset::GSet apply_biset(const Biset& u, const gset::GSet& x) {
  if (u.right->table != x.group->table)
    throw std::invalid_argument("apply_biset: G-set group does not match the right side");
  const int nx = x.size;
  std::vector<int> label(u.size * nx, -1);
  int count = 0;
  for (int p = 0; p < u.size * nx; ++p) {
    if (label[p] >= 0) continue;
    const int pu = p / nx, px = p % nx;
    for (int k = 0; k < u.right->order; ++k)
      label[u.ract(pu, k) * nx + x.act(x.group->inv(k), px)] = count;
    ++count;
  }
  std::vector<int> rep(count, -1);
  for (int p = static_cast<int>(label.size()) - 1; p >= 0; --p) rep[label[p]] = p;
  std::vector<int> action(u.left->order * count);
  for (int o = 0; o < count; ++o) {
    const int pu = rep[o] / nx, px = rep[o] % nx;
    for (int h = 0; h < u.left->order; ++h)
      action[h * count + o] = label[u.lact(h, pu) * nx + px];
  }
  return gset::make_gset(u.left, count, std::move(action));
}

grp::Mask l_u_subgroup(const Biset& u, grp::Mask l, int point) {
  std::vector<char> in_lu(u.size, 0);  // membership in the set L.point
  for (int e : grp::mask_elements(l)) in_lu[u.lact(e, point)] = 1;
  grp::Mask out = 0;
  for (int k = 0; k < u.right->order; ++k)
    if (in_lu[u.ract(point, k)]) out |= grp::Mask{1} << k;
  if (!grp::is_subgroup_mask(*u.right, out))
    throw std::logic_error("l_u_subgroup: result is not a subgroup");
  return out;
}

std::vector<grp::Mask> orbit_decomposition_uop(const Biset& u, grp::Mask l) {
  const auto ls = grp::mask_elements(l);
  std::vector<char> seen(u.size, 0);
  std::vector<grp::Mask> out;
  for (int p = 0; p < u.size; ++p) {
    if (seen[p]) continue;
    // the (L,K) double orbit of p; two passes of left-then-right suffice since
    // both actions commute: L.p.K = {l.(p.k)}
    for (int e : ls) {
      const int q = u.lact(e, p);
      for (int k = 0; k < u.right->order; ++k) seen[u.ract(q, k)] = 1;
    }
    out.push_back(l_u_subgroup(u, l, p));
  }
  return out;
}

}  // namespace dadelab::biset
