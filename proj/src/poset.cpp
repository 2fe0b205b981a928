#include "dadelab/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dadelab::poset {

Poset make_poset(int size, const std::vector<std::pair<int, int>>& strictly_less) {
  if (size < 0) throw std::invalid_argument("poset: negative size");
  std::vector<char> less(static_cast<std::size_t>(size) * size, 0);
  for (auto [a, b] : strictly_less) {
    if (a < 0 || a >= size || b < 0 || b >= size)
      throw std::invalid_argument("poset: relation index out of range");
    if (a == b) throw std::invalid_argument("poset: relation must be irreflexive");
    less[a * size + b] = 1;
  }
  // Floyd-Warshall transitive closure
  for (int k = 0; k < size; ++k)
    for (int a = 0; a < size; ++a)
      if (less[a * size + k])
        for (int b = 0; b < size; ++b)
          if (less[k * size + b]) less[a * size + b] = 1;
  for (int a = 0; a < size; ++a)
    if (less[a * size + a]) throw std::invalid_argument("poset: relation has a cycle");
  return Poset{size, std::move(less)};
}

Poset make_poset_from_table(int size, std::vector<char> less) {
  if (static_cast<int>(less.size()) != size * size)
    throw std::invalid_argument("poset: relation table has wrong shape");
  for (int a = 0; a < size; ++a) {
    if (less[a * size + a]) throw std::invalid_argument("poset: relation not irreflexive");
    for (int b = 0; b < size; ++b)
      if (less[a * size + b])
        for (int c = 0; c < size; ++c)
          if (less[b * size + c] && !less[a * size + c])
            throw std::invalid_argument("poset: relation not transitive");
  }
  return Poset{size, std::move(less)};
}

Poset antichain(int n) { return make_poset(n, {}); }

Poset chain(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return make_poset(n, rel);
}

Poset cone_poset(const Poset& x) {
  const int n = x.size;
  std::vector<char> less(static_cast<std::size_t>(n + 1) * (n + 1), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) less[a * (n + 1) + b] = x.less[a * n + b];
  for (int b = 0; b < n; ++b) less[n * (n + 1) + b] = 1;
  return Poset{n + 1, std::move(less)};
}

Poset product_poset(const Poset& x, const Poset& y) {
  const int nx = x.size, ny = y.size, n = nx * ny;
  std::vector<char> less(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < ny; ++b)
      for (int c = 0; c < nx; ++c)
        for (int d = 0; d < ny; ++d) {
          const bool le_x = a == c || x.lt(a, c);
          const bool le_y = b == d || y.lt(b, d);
          if (le_x && le_y && !(a == c && b == d)) less[(a * ny + b) * n + c * ny + d] = 1;
        }
  return Poset{n, std::move(less)};
}

Poset induced_subposet(const Poset& x, const std::vector<int>& elements) {
  const int n = static_cast<int>(elements.size());
  std::vector<char> less(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) less[a * n + b] = x.lt(elements[a], elements[b]);
  return Poset{n, std::move(less)};
}

Poset disjoint_union_poset(const Poset& x, const Poset& y) {
  const int n = x.size + y.size;
  std::vector<char> less(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < x.size; ++a)
    for (int b = 0; b < x.size; ++b) less[a * n + b] = x.less[a * x.size + b];
  for (int a = 0; a < y.size; ++a)
    for (int b = 0; b < y.size; ++b) less[(x.size + a) * n + x.size + b] = y.less[a * y.size + b];
  return Poset{n, std::move(less)};
}

std::vector<std::vector<std::vector<int>>> chains_by_length(const Poset& x,
                                                            std::int64_t chain_cap) {
  std::vector<std::vector<std::vector<int>>> out;
  if (x.size == 0) return out;
  // successors of each element, ascending
  std::vector<std::vector<int>> above(x.size);
  for (int a = 0; a < x.size; ++a)
    for (int b = 0; b < x.size; ++b)
      if (x.lt(a, b)) above[a].push_back(b);
  out.emplace_back();
  for (int a = 0; a < x.size; ++a) out[0].push_back({a});
  std::int64_t total = x.size;
  while (!out.back().empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& ch : out.back())
      for (int b : above[ch.back()]) {
        next.push_back(ch);
        next.back().push_back(b);
        if (++total > chain_cap) throw std::length_error("poset: chain count exceeds cap");
      }
    if (next.empty()) break;
    out.push_back(std::move(next));
  }
  return out;
}

std::int64_t count_chains(const Poset& x, std::int64_t chain_cap) {
  // chains counted by extension: c(a) = 1 + sum of c(b) over b > a, processed
  // in reverse topological order (descending number of elements below works
  // for any linear extension; we sort by the size of the up-set)
  std::vector<std::vector<int>> above(x.size);
  for (int a = 0; a < x.size; ++a)
    for (int b = 0; b < x.size; ++b)
      if (x.lt(a, b)) above[a].push_back(b);
  std::vector<int> order(x.size);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return above[a].size() < above[b].size(); });
  std::vector<std::int64_t> count(x.size, 0);
  std::int64_t total = 0;
  for (int a : order) {
    count[a] = 1;
    for (int b : above[a]) {
      count[a] += count[b];
      if (count[a] > chain_cap) throw std::length_error("poset: chain count exceeds cap");
    }
    total += count[a];
    if (total > chain_cap) throw std::length_error("poset: chain count exceeds cap");
  }
  return total;
}

namespace {

/// Stable invariant labels: start with (down-degree, up-degree) and refine by
/// the multisets of neighbor labels until the partition stops changing.
std::vector<int> refine_labels(const Poset& x) {
  const int n = x.size;
  std::vector<int> label(n, 0);
  for (int round = 0; round <= n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> keyed(n);
    for (int a = 0; a < n; ++a) {
      std::vector<int> key{label[a]};
      std::vector<int> down, up;
      for (int b = 0; b < n; ++b) {
        if (x.lt(b, a)) down.push_back(label[b]);
        if (x.lt(a, b)) up.push_back(label[b]);
      }
      std::sort(down.begin(), down.end());
      std::sort(up.begin(), up.end());
      key.push_back(-1);
      key.insert(key.end(), down.begin(), down.end());
      key.push_back(-2);
      key.insert(key.end(), up.begin(), up.end());
      keyed[a] = {std::move(key), a};
    }
    // ids must be assigned by sorted key order so that labels are comparable
    // across different posets
    std::map<std::vector<int>, int> ids;
    for (const auto& [key, a] : keyed) ids.emplace(key, 0);
    int next_id = 0;
    for (auto& [key, id] : ids) id = next_id++;
    std::vector<int> next(n);
    for (const auto& [key, a] : keyed) next[a] = ids.at(key);
    if (next == label) break;
    label = std::move(next);
  }
  return label;
}

bool extend(const Poset& a, const Poset& b, const std::vector<int>& order,
            const std::vector<int>& la, const std::vector<int>& lb, std::vector<int>& map,
            std::vector<char>& used, int step) {
  const int n = a.size;
  if (step == n) return true;
  const int pos = order[step];
  for (int img = 0; img < n; ++img) {
    if (used[img] || la[pos] != lb[img]) continue;
    bool ok = true;
    for (int s = 0; s < step && ok; ++s) {
      const int prev = order[s];
      if (a.lt(pos, prev) != b.lt(img, map[prev]) || a.lt(prev, pos) != b.lt(map[prev], img))
        ok = false;
    }
    if (!ok) continue;
    map[pos] = img;
    used[img] = 1;
    if (extend(a, b, order, la, lb, map, used, step + 1)) return true;
    used[img] = 0;
  }
  return false;
}

}  // namespace

bool posets_isomorphic(const Poset& a, const Poset& b) {
  if (a.size != b.size) return false;
  auto la = refine_labels(a);
  auto lb = refine_labels(b);
  auto census = [](const std::vector<int>& l) {
    std::map<int, int> c;
    for (int v : l) ++c[v];
    return c;
  };
  auto ca = census(la);
  if (ca != census(lb)) return false;
  // match rare label classes first to prune the search early
  std::vector<int> order(a.size);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::tuple(ca.at(la[x]), la[x], x) < std::tuple(ca.at(la[y]), la[y], y);
  });
  std::vector<int> map(a.size, -1);
  std::vector<char> used(a.size, 0);
  return extend(a, b, order, la, lb, map, used, 0);
}

}  // namespace dadelab::poset
