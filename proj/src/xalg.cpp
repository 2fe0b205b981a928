#include "dadelab/xalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace dadelab::xalg {

i64 mod_p(i64 a, i64 p) {
  i64 r = a % p;
  return r < 0 ? r + p : r;
}

i64 inv_mod_p(i64 a, i64 p) {
  a = mod_p(a, p);
  if (a == 0) throw std::domain_error("inv_mod_p: zero has no inverse");
  // extended Euclid
  i64 old_r = a, r = p, old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    std::swap(old_r -= q * r, r);
    std::swap(old_s -= q * s, s);
  }
  if (old_r != 1) throw std::domain_error("inv_mod_p: modulus not prime to a");
  return mod_p(old_s, p);
}

RankKernel rank_kernel(const Mat64& m, i64 p) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  Mat64 a = m;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) = mod_p(a(i, j), p);

  std::vector<int> pivot_col;  // pivot column of row k
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    a.row(r).swap(a.row(piv));
    const i64 inv = inv_mod_p(a(r, c), p);
    for (int j = c; j < cols; ++j) a(r, j) = mod_p(a(r, j) * inv, p);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const i64 f = a(i, c);
      for (int j = c; j < cols; ++j) a(i, j) = mod_p(a(i, j) - f * a(r, j), p);
    }
    pivot_col.push_back(c);
    ++r;
  }

  RankKernel out;
  out.rank = r;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  out.kernel.setZero(cols, cols - r);
  int k = 0;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    out.kernel(c, k) = 1;
    for (int i = 0; i < r; ++i)
      out.kernel(pivot_col[i], k) = mod_p(-a(i, c), p);
    ++k;
  }
  return out;
}

int rank_mod_p(const Mat64& m, i64 p) { return rank_kernel(m, p).rank; }

namespace {

// c -= f * other over GF(p), both sorted by row; returns merged column.
std::vector<std::pair<int, i64>> axpy_col(const std::vector<std::pair<int, i64>>& c,
                                          const std::vector<std::pair<int, i64>>& other,
                                          i64 f, i64 p) {
  std::vector<std::pair<int, i64>> out;
  out.reserve(c.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < c.size() || j < other.size()) {
    if (j == other.size() || (i < c.size() && c[i].first < other[j].first)) {
      out.push_back(c[i++]);
    } else if (i == c.size() || other[j].first < c[i].first) {
      i64 v = mod_p(-f * other[j].second, p);
      if (v != 0) out.emplace_back(other[j].first, v);
      ++j;
    } else {
      i64 v = mod_p(c[i].second - f * other[j].second, p);
      if (v != 0) out.emplace_back(c[i].first, v);
      ++i, ++j;
    }
  }
  return out;
}

}  // namespace

int rank_mod_p(const SparseMat& m, i64 p) {
  // Column reduction: a column is reduced until its largest row index is a
  // fresh pivot or the column vanishes.  Standard boundary-matrix reduction.
  std::unordered_map<int, int> pivot_owner;  // row -> index into reduced
  std::vector<std::vector<std::pair<int, i64>>> reduced;
  int rank = 0;
  for (const auto& col_in : m.cols) {
    auto col = col_in;
    while (!col.empty()) {
      const int prow = col.back().first;
      auto it = pivot_owner.find(prow);
      if (it == pivot_owner.end()) {
        pivot_owner.emplace(prow, static_cast<int>(reduced.size()));
        reduced.push_back(std::move(col));
        ++rank;
        break;
      }
      const auto& owner = reduced[it->second];
      const i64 f = mod_p(col.back().second * inv_mod_p(owner.back().second, p), p);
      col = axpy_col(col, owner, f, p);
    }
  }
  return rank;
}

Int determinant(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const int n = static_cast<int>(m.rows());
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      a.row(k).swap(a.row(piv));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;  // Bareiss: division exact
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

namespace {

Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

// Index of the entry of smallest nonzero absolute value in the trailing
// submatrix starting at (t, t); (-1, -1) if the submatrix is zero.
std::pair<int, int> min_nonzero(const IntMat& d, int t) {
  std::pair<int, int> best{-1, -1};
  Int best_abs = 0;
  for (int i = t; i < d.rows(); ++i)
    for (int j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Int a = abs_int(d(i, j));
      if (best.first < 0 || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace

std::vector<Int> SmithResult::diagonal() const {
  std::vector<Int> out;
  for (int i = 0; i < rank; ++i) out.push_back(d(i, i));
  return out;
}

SmithResult smith_normal_form(const IntMat& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  SmithResult res;
  res.d = m;
  res.u = IntMat::Identity(rows, rows);
  res.v = IntMat::Identity(cols, cols);
  IntMat& d = res.d;
  IntMat& u = res.u;
  IntMat& v = res.v;

  int t = 0;
  while (t < rows && t < cols) {
    auto [pi, pj] = min_nonzero(d, t);
    if (pi < 0) break;  // trailing submatrix is zero
    if (pi != t) { d.row(t).swap(d.row(pi)); u.row(t).swap(u.row(pi)); }
    if (pj != t) { d.col(t).swap(d.col(pj)); v.col(t).swap(v.col(pj)); }

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        if (q != 0) { d.row(i) -= q * d.row(t); u.row(i) -= q * u.row(t); }
        if (d(i, t) != 0) {  // remainder strictly smaller than pivot: promote it
          d.row(t).swap(d.row(i));
          u.row(t).swap(u.row(i));
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        if (q != 0) { d.col(j) -= q * d.col(t); v.col(j) -= q * v.col(t); }
        if (d(t, j) != 0) {
          d.col(t).swap(d.col(j));
          v.col(t).swap(v.col(j));
          clean = false;
        }
      }
      if (!clean) continue;
      // divisor chain: pull in any entry the pivot does not divide and redo
      for (int i = t + 1; i < rows && clean; ++i)
        for (int j = t + 1; j < cols && clean; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.row(t) += d.row(i);
            u.row(t) += u.row(i);
            clean = false;
          }
    }
    if (d(t, t) < 0) { d.row(t) = -d.row(t); u.row(t) = -u.row(t); }
    ++t;
  }
  res.rank = t;

  // Re-verify the contract before returning.
  IntMat umv = int_mat_mul(int_mat_mul(u, m), v);
  if (!mat_equal(umv, d)) throw std::logic_error("smith_normal_form: u*m*v != d");
  if (abs_int(determinant(u)) != 1 || abs_int(determinant(v)) != 1)
    throw std::logic_error("smith_normal_form: transform not unimodular");
  for (int i = 0; i + 1 < res.rank; ++i)
    if (d(i + 1, i + 1) % d(i, i) != 0)
      throw std::logic_error("smith_normal_form: divisor chain broken");
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (i != j && d(i, j) != 0) throw std::logic_error("smith_normal_form: not diagonal");
  return res;
}

bool mat_equal(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool vec_equal(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool vec_is_zero(const IntVec& a) {
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != 0) return false;
  return true;
}

IntMat int_mat_mul(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("int_mat_mul: shape mismatch");
  IntMat out = IntMat::Zero(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntVec int_mat_vec(const IntMat& a, const IntVec& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("int_mat_vec: shape mismatch");
  IntVec out = IntVec::Zero(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) out(i) += a(i, j) * x(j);
  return out;
}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("floor_div: division by zero");
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

HermiteResult hermite_normal_form(const IntMat& m) {
  HermiteResult res;
  res.h = m;
  IntMat& h = res.h;
  const int rows = static_cast<int>(h.rows());
  const int cols = static_cast<int>(h.cols());

  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Reduce column c below row r to a single nonzero entry via gcd steps.
    while (true) {
      int piv = -1;
      Int best;
      for (int i = r; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Int a = abs_int(h(i, c));
        if (piv < 0 || a < best) { piv = i; best = a; }
      }
      if (piv < 0) break;
      if (piv != r) h.row(r).swap(h.row(piv));
      bool again = false;
      for (int i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Int q = h(i, c) / h(r, c);
        h.row(i) -= q * h.row(r);
        if (h(i, c) != 0) again = true;
      }
      if (!again) break;
    }
    if (r < rows && h(r, c) != 0) {
      if (h(r, c) < 0) h.row(r) = -h.row(r);
      for (int i = 0; i < r; ++i) {
        Int q = floor_div(h(i, c), h(r, c));
        if (q != 0) h.row(i) -= q * h.row(r);
      }
      res.pivot_cols.push_back(c);
      ++r;
    }
  }
  res.rank = r;
  return res;
}

IntVec hnf_reduce(const HermiteResult& h, IntVec v) {
  if (v.size() != h.h.cols()) throw std::invalid_argument("hnf_reduce: dimension mismatch");
  for (int i = 0; i < h.rank; ++i) {
    const int pc = h.pivot_cols[i];
    Int q = floor_div(v(pc), h.h(i, pc));
    if (q != 0) v -= q * h.h.row(i).transpose();
  }
  return v;
}

QuotientStructure lattice_quotient(const IntMat& basis_rows, int ambient_rank) {
  if (basis_rows.size() != 0 && basis_rows.cols() != ambient_rank)
    throw std::invalid_argument("lattice_quotient: basis width != ambient rank");
  QuotientStructure q;
  q.ambient_rank = ambient_rank;
  if (basis_rows.rows() == 0) {
    q.free_rank = ambient_rank;
    return q;
  }
  SmithResult s = smith_normal_form(basis_rows);
  q.lattice_rank = s.rank;
  q.free_rank = ambient_rank - s.rank;
  for (const Int& d : s.diagonal())
    if (d > 1) q.torsion.push_back(d);
  return q;
}

namespace {

Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

// All k-subsets of [0, n) in lexicographic order.
bool next_subset(std::vector<int>& s, int n) {
  const int k = static_cast<int>(s.size());
  int i = k - 1;
  while (i >= 0 && s[i] == n - k + i) --i;
  if (i < 0) return false;
  ++s[i];
  for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  return true;
}

}  // namespace

std::vector<Int> invariant_factors_by_minors(const IntMat& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  const int kmax = std::min(rows, cols);
  std::vector<Int> gcds;  // gcds[k-1] = gcd of all k x k minors
  for (int k = 1; k <= kmax; ++k) {
    Int g = 0;
    std::vector<int> rsel(k), csel(k);
    std::iota(rsel.begin(), rsel.end(), 0);
    do {
      std::iota(csel.begin(), csel.end(), 0);
      do {
        IntMat sub(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub(i, j) = m(rsel[i], csel[j]);
        g = gcd_int(g, determinant(sub));
        if (g == 1) break;
      } while (next_subset(csel, cols));
      if (g == 1) break;
    } while (next_subset(rsel, rows));
    if (g == 0) break;  // rank reached
    gcds.push_back(g);
  }
  std::vector<Int> factors;
  Int prev = 1;
  for (const Int& g : gcds) {
    factors.push_back(g / prev);
    prev = g;
  }
  return factors;
}

}  // namespace dadelab::xalg
