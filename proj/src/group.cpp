#include "dadelab/group.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace dadelab::grp {

namespace {

int smallest_prime_factor(int n) {
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

// Validates the table and fills in inverse/identity/prime.
Group finish_group(std::vector<int> table, std::string name, int prime_hint) {
  auto g = std::make_shared<FiniteGroup>();
  const std::size_t sz = table.size();
  int n = 0;
  while (static_cast<std::size_t>(n) * n < sz) ++n;
  if (static_cast<std::size_t>(n) * n != sz || n == 0)
    throw std::invalid_argument("make_group: table is not square");
  if (n > kMaxOrder)
    throw std::invalid_argument("make_group: order " + std::to_string(n) + " exceeds cap 64");
  for (int v : table)
    if (v < 0 || v >= n) throw std::invalid_argument("make_group: entry out of range");

  g->order = n;
  g->table = std::move(table);

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c)))
          throw std::invalid_argument(
              "make_group: associativity fails at (" + std::to_string(a) + "," +
              std::to_string(b) + "," + std::to_string(c) + ")");

  int e = -1;
  for (int a = 0; a < n; ++a) {
    bool ok = true;
    for (int b = 0; b < n; ++b)
      if (g->mul(a, b) != b || g->mul(b, a) != b) { ok = false; break; }
    if (ok) { e = a; break; }
  }
  if (e < 0) throw std::invalid_argument("make_group: no identity element");
  g->identity = e;

  g->inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g->mul(a, b) == e && g->mul(b, a) == e) { g->inverse[a] = b; break; }
    if (g->inverse[a] < 0)
      throw std::invalid_argument("make_group: element " + std::to_string(a) + " has no inverse");
  }

  if (n == 1) {
    g->prime = prime_hint;
  } else {
    const int p = smallest_prime_factor(n);
    int m = n;
    while (m % p == 0) m /= p;
    if (m != 1)
      throw std::invalid_argument("make_group: order " + std::to_string(n) +
                                  " is not a prime power");
    g->prime = p;
  }
  g->name = std::move(name);
  return g;
}

}  // namespace

Group make_group(std::vector<int> table, std::string name) {
  return finish_group(std::move(table), std::move(name), 0);
}

Group cyclic_group(int n) {
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = (i + j) % n;
  return make_group(std::move(t), "C" + std::to_string(n));
}

Group elementary_abelian_group(int p, int k) {
  int n = 1;
  for (int i = 0; i < k; ++i) n *= p;
  if (n > kMaxOrder) throw std::invalid_argument("elementary_abelian_group: order exceeds cap");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int a = i, b = j, s = 0, pw = 1;
      for (int d = 0; d < k; ++d) {
        s += ((a % p + b % p) % p) * pw;
        a /= p;
        b /= p;
        pw *= p;
      }
      t[i * n + j] = s;
    }
  std::string name = "C" + std::to_string(p);
  for (int i = 1; i < k; ++i) name += "xC" + std::to_string(p);
  return make_group(std::move(t), name);
}

namespace {

// Common layout for the 2-generator 2-groups: indices 0..m-1 are r^i,
// indices m..2m-1 are s r^(i-m).  twist gives s^2 (as a power of r) and
// t gives the action s r s^-1 = r^t.
Group two_generator_group(int n, int twist, int t, const std::string& name) {
  const int m = n / 2;
  auto idx = [m](bool flip, int i) { return (flip ? m : 0) + ((i % m + m) % m); };
  std::vector<int> tab(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const bool fx = x >= m, fy = y >= m;
      const int i = fx ? x - m : x, j = fy ? y - m : y;
      int out;
      if (!fx && !fy) out = idx(false, i + j);               // r^i r^j
      else if (!fx)   out = idx(true, t * i + j);            // r^i (s r^j) = s r^(t i + j)
      else if (!fy)   out = idx(true, i + j);                // (s r^i) r^j
      else            out = idx(false, t * i + j + twist);   // (s r^i)(s r^j) = r^(twist + t i + j)
      tab[x * n + y] = out;
    }
  return make_group(std::move(tab), name);
}

}  // namespace

// For all three families s r s^-1 = r^t with s^2 = r^twist.  Since t is an
// involution mod m for these parameter choices (t^2 == 1 mod m), we also have
// s^-1 r s = r^t and therefore r^i s = s r^(t i), which gives the product
// rules used above.
Group dihedral_group(int n) {
  if (n < 8 || (n & (n - 1)) != 0) throw std::invalid_argument("dihedral_group: order must be 2^k >= 8");
  return two_generator_group(n, 0, -1, "D" + std::to_string(n));
}

Group quaternion_group(int n) {
  if (n < 8 || (n & (n - 1)) != 0) throw std::invalid_argument("quaternion_group: order must be 2^k >= 8");
  return two_generator_group(n, n / 4, -1, "Q" + std::to_string(n));
}

Group semidihedral_group(int n) {
  if (n < 16 || (n & (n - 1)) != 0)
    throw std::invalid_argument("semidihedral_group: order must be 2^k >= 16");
  return two_generator_group(n, 0, n / 4 - 1, "SD" + std::to_string(n));
}

Group extraspecial_group(int p) {
  if (p < 3 || p % 2 == 0 || smallest_prime_factor(p) != p)
    throw std::invalid_argument("extraspecial_group: p must be an odd prime");
  const int n = p * p * p;
  if (n > kMaxOrder) throw std::invalid_argument("extraspecial_group: order exceeds cap");
  // Unitriangular 3x3 matrices over F_p: (a,b,c) with index p^2 a + p b + c,
  // product (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b').
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int a = x / (p * p), b = (x / p) % p, c = x % p;
      const int a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
      const int ra = (a + a2) % p, rb = (b + b2) % p, rc = (c + c2 + a * b2) % p;
      t[x * n + y] = ra * p * p + rb * p + rc;
    }
  return make_group(std::move(t), "ES" + std::to_string(n));
}

Group group_from_permutations(const std::vector<std::vector<int>>& gens, int points) {
  if (points <= 0) throw std::invalid_argument("group_from_permutations: need points > 0");
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != points)
      throw std::invalid_argument("group_from_permutations: generator size mismatch");
    std::vector<bool> seen(points, false);
    for (int v : p) {
      if (v < 0 || v >= points || seen[v])
        throw std::invalid_argument("group_from_permutations: not a permutation");
      seen[v] = true;
    }
  }
  std::vector<int> ident(points);
  for (int i = 0; i < points; ++i) ident[i] = i;

  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems;
  index[ident] = 0;
  elems.push_back(ident);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gperm : gens) {
      std::vector<int> prod(points);
      for (int i = 0; i < points; ++i) prod[i] = gperm[elems[head][i]];
      if (index.emplace(prod, static_cast<int>(elems.size())).second) {
        elems.push_back(prod);
        if (elems.size() > kMaxOrder)
          throw std::invalid_argument("group_from_permutations: generated order exceeds cap 64");
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(points);
      for (int i = 0; i < points; ++i) prod[i] = elems[a][elems[b][i]];
      t[a * n + b] = index.at(prod);
    }
  return make_group(std::move(t), "perm" + std::to_string(n));
}

int element_order(const FiniteGroup& g, int a) {
  int x = a, k = 1;
  while (x != g.identity) {
    x = g.mul(x, a);
    ++k;
  }
  return k;
}

std::vector<int> order_census(const FiniteGroup& g) {
  std::vector<int> census(g.order + 1, 0);
  for (int a = 0; a < g.order; ++a) ++census[element_order(g, a)];
  return census;
}

Mask center_mask(const FiniteGroup& g) {
  Mask m = 0;
  for (int a = 0; a < g.order; ++a) {
    bool central = true;
    for (int b = 0; b < g.order && central; ++b)
      if (g.mul(a, b) != g.mul(b, a)) central = false;
    if (central) m |= Mask{1} << a;
  }
  return m;
}

int mask_size(Mask m) { return std::popcount(m); }

std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

Mask closure_mask(const FiniteGroup& g, Mask seed) {
  Mask m = seed | (Mask{1} << g.identity);
  std::vector<int> members = mask_elements(m);
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      for (int prod : {g.mul(members[head], members[j]), g.mul(members[j], members[head])}) {
        if (!(m >> prod & 1)) {
          m |= Mask{1} << prod;
          members.push_back(prod);
        }
      }
    }
  }
  return m;
}

bool is_subgroup_mask(const FiniteGroup& g, Mask s) {
  if (!(s >> g.identity & 1)) return false;
  for (int a : mask_elements(s))
    for (int b : mask_elements(s))
      if (!(s >> g.mul(a, b) & 1)) return false;
  return true;
}

Mask conjugate_mask(const FiniteGroup& g, Mask s, int x) {
  Mask out = 0;
  for (int a : mask_elements(s)) out |= Mask{1} << g.conj(x, a);
  return out;
}

bool is_normal_in(const FiniteGroup& g, Mask s, Mask ambient) {
  for (int x : mask_elements(ambient))
    if (conjugate_mask(g, s, x) != s) return false;
  return true;
}

std::vector<int> double_coset_reps(const FiniteGroup& g, Mask a, Mask b) {
  std::vector<bool> visited(g.order, false);
  std::vector<int> reps;
  const auto ae = mask_elements(a), be = mask_elements(b);
  for (int x = 0; x < g.order; ++x) {
    if (visited[x]) continue;
    reps.push_back(x);
    for (int l : ae)
      for (int r : be) visited[g.mul(g.mul(l, x), r)] = true;
  }
  return reps;
}

QuotientGroup quotient_group(const Group& g, Mask n) {
  if (!is_subgroup_mask(*g, n)) throw std::invalid_argument("quotient_group: not a subgroup");
  if (!is_normal_in(*g, n, g->all_mask()))
    throw std::invalid_argument("quotient_group: subgroup is not normal");
  QuotientGroup q;
  q.proj.assign(g->order, -1);
  const auto ne = mask_elements(n);
  for (int x = 0; x < g->order; ++x) {
    if (q.proj[x] >= 0) continue;
    const int id = static_cast<int>(q.coset_rep.size());
    q.coset_rep.push_back(x);  // x is the least member: scanning in ascending order
    for (int m : ne) q.proj[g->mul(x, m)] = id;
  }
  const int qn = static_cast<int>(q.coset_rep.size());
  std::vector<int> t(static_cast<std::size_t>(qn) * qn);
  for (int i = 0; i < qn; ++i)
    for (int j = 0; j < qn; ++j)
      t[i * qn + j] = q.proj[g->mul(q.coset_rep[i], q.coset_rep[j])];
  q.group = finish_group(std::move(t), g->name + "/N", g->prime);
  return q;
}

Mask EmbeddedGroup::mask_to_parent(Mask local) const {
  Mask out = 0;
  for (int i : mask_elements(local)) out |= Mask{1} << to_parent[i];
  return out;
}

Mask EmbeddedGroup::mask_from_parent(Mask parent_mask) const {
  if ((parent_mask & ~mask) != 0)
    throw std::invalid_argument("mask_from_parent: set not contained in the subgroup");
  Mask out = 0;
  for (int i : mask_elements(parent_mask)) out |= Mask{1} << from_parent[i];
  return out;
}

EmbeddedGroup subgroup_group(const Group& g, Mask s) {
  if (!is_subgroup_mask(*g, s)) throw std::invalid_argument("subgroup_group: not a subgroup");
  EmbeddedGroup e;
  e.parent = g;
  e.mask = s;
  e.to_parent = mask_elements(s);
  e.from_parent.assign(g->order, -1);
  for (std::size_t i = 0; i < e.to_parent.size(); ++i)
    e.from_parent[e.to_parent[i]] = static_cast<int>(i);
  const int n = static_cast<int>(e.to_parent.size());
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[i * n + j] = e.from_parent[g->mul(e.to_parent[i], e.to_parent[j])];
  e.group = finish_group(std::move(t), g->name + "_sub" + std::to_string(n), g->prime);
  return e;
}

namespace {

// Greedy generating set: repeatedly adjoin the least element outside the
// closure so far.
std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  Mask cl = Mask{1} << g.identity;
  for (int x = 0; x < g.order; ++x) {
    if (cl >> x & 1) continue;
    gens.push_back(x);
    cl = closure_mask(g, cl | (Mask{1} << x));
    if (mask_size(cl) == g.order) break;
  }
  return gens;
}

bool extend_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                        const std::vector<int>& gens, std::size_t k, std::vector<int>& img) {
  if (k == gens.size()) {
    // Images of generators chosen; derive the full map by closure and verify.
    std::vector<int> phi(a.order, -1);
    phi[a.identity] = b.identity;
    std::vector<int> frontier{a.identity};
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const int x = frontier[head];
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const int y = a.mul(x, gens[gi]);
        const int fy = b.mul(phi[x], img[gi]);
        if (phi[y] < 0) {
          phi[y] = fy;
          frontier.push_back(y);
        } else if (phi[y] != fy) {
          return false;
        }
      }
    }
    std::vector<bool> hit(b.order, false);
    for (int v : phi) {
      if (v < 0 || hit[v]) return false;
      hit[v] = true;
    }
    for (int x = 0; x < a.order; ++x)
      for (int y = 0; y < a.order; ++y)
        if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
    return true;
  }
  const int want = element_order(a, gens[k]);
  for (int cand = 0; cand < b.order; ++cand) {
    if (element_order(b, cand) != want) continue;
    img[k] = cand;
    if (extend_isomorphism(a, b, gens, k + 1, img)) return true;
  }
  return false;
}

}  // namespace

bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order != b.order) return false;
  if (order_census(a) != order_census(b)) return false;
  std::vector<int> gens = generating_set(a);
  std::vector<int> img(gens.size(), -1);
  return extend_isomorphism(a, b, gens, 0, img);
}

}  // namespace dadelab::grp
