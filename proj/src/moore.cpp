#include "dadelab/moore.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dadelab::moore {

ChainComplex chain_complex(const gposet::FlagComplex& flag, int p) {
  if (p < 2) throw std::invalid_argument("chain_complex: invalid prime");
  ChainComplex out;
  out.prime = p;
  const int dim = flag.dimension();
  out.cells.push_back(1);  // the augmentation line in degree -1
  for (int d = 0; d <= dim; ++d)
    out.cells.push_back(static_cast<std::int64_t>(flag.simplices[d].size()));

  std::map<std::vector<int>, int> prev_index;  // (d-1)-simplex -> row
  for (int d = 0; d <= dim; ++d) {
    const auto& simplices = flag.simplices[d];
    xalg::SparseMat m;
    m.rows = static_cast<int>(out.cells[d]);
    m.cols.resize(simplices.size());
    for (std::size_t s = 0; s < simplices.size(); ++s) {
      auto& col = m.cols[s];
      if (d == 0) {
        col.emplace_back(0, 1);  // augmentation: every vertex maps to 1
        continue;
      }
      std::vector<int> face(simplices[s]);
      for (int j = 0; j <= d; ++j) {
        face.erase(face.begin() + j);
        const std::int64_t sign = (j % 2 == 0) ? 1 : p - 1;
        col.emplace_back(prev_index.at(face), sign);
        face.insert(face.begin() + j, simplices[s][j]);
      }
      std::sort(col.begin(), col.end());
    }
    out.boundary.push_back(std::move(m));
    prev_index.clear();
    for (std::size_t s = 0; s < simplices.size(); ++s)
      prev_index[simplices[s]] = static_cast<int>(s);
  }

  // del o del = 0, verified over the integers with +-1 coefficients
  for (int d = 1; d <= dim; ++d) {
    const auto& hi = flag.simplices[d];
    for (const auto& simplex : hi) {
      std::map<std::vector<int>, std::int64_t> acc;
      for (int j = 0; j <= d; ++j) {
        std::vector<int> face(simplex);
        face.erase(face.begin() + j);
        const std::int64_t sj = (j % 2 == 0) ? 1 : -1;
        for (int i = 0; i < d; ++i) {
          std::vector<int> sub(face);
          sub.erase(sub.begin() + i);
          acc[sub] += sj * ((i % 2 == 0) ? 1 : -1);
        }
      }
      for (const auto& [sub, coeff] : acc)
        if (coeff != 0) throw std::logic_error("chain_complex: boundary squared is nonzero");
    }
  }
  return out;
}

std::vector<std::int64_t> reduced_betti(const ChainComplex& c) {
  const int top = static_cast<int>(c.cells.size()) - 2;  // topological dimension
  std::vector<std::int64_t> ranks(top + 2, 0);           // ranks[d] = rank del_d, d in [0, top]
  for (int d = 0; d <= top; ++d) ranks[d] = xalg::rank_mod_p(c.boundary[d], c.prime);
  std::vector<std::int64_t> betti;
  for (int d = -1; d <= top; ++d) {
    const std::int64_t dim_kernel =
        d == -1 ? 1 : c.cells[d + 1] - ranks[d];  // del_{-1} = 0
    const std::int64_t dim_image = d + 1 <= top ? ranks[d + 1] : 0;
    betti.push_back(dim_kernel - dim_image);
  }
  return betti;
}

std::vector<std::int64_t> reduced_betti(const poset::Poset& x, int p) {
  return reduced_betti(chain_complex(gposet::flag_complex(x), p));
}

std::int64_t total_betti(const poset::Poset& x, int p) {
  std::int64_t total = 0;
  for (std::int64_t b : reduced_betti(x, p)) total += b;
  return total;
}

namespace {

ClassAnalysis analyze_class(int cls, const poset::Poset& fixed, int p,
                            std::int64_t chain_cap) {
  ClassAnalysis out;
  out.cls = cls;
  out.fixed_size = fixed.size;
  const auto flag = gposet::flag_complex(fixed, chain_cap);
  out.dim = flag.dimension();
  out.betti = reduced_betti(chain_complex(flag, p));
  int nonzero = 0;
  for (int i = 0; i < static_cast<int>(out.betti.size()); ++i)
    if (out.betti[i] != 0) {
      ++nonzero;
      out.n = i - 1;  // entry i is degree i-1; ends at the top nonzero degree
    }
  out.concentrated = nonzero <= 1;
  out.acyclic_nonempty = out.fixed_size > 0 && nonzero == 0;
  if (out.acyclic_nonempty) out.n = out.dim;  // degree convention for acyclic fixed sets
  if (out.fixed_size == 0) out.n = -1;        // the empty complex: homology sits in degree -1
  return out;
}

}  // namespace

MooreReport analyze(const gposet::GPoset& x, int p, std::int64_t chain_cap) {
  if (x.group->prime != p && x.group->order != 1)
    throw std::invalid_argument("analyze: group is not a p-group for this prime");
  MooreReport rep;
  rep.lattice = grp::subgroup_lattice(x.group);
  rep.prime = p;
  rep.cells = gposet::cell_gsets(x, chain_cap);
  const int nc = rep.lattice->num_classes();
  for (int c = 0; c < nc; ++c)
    rep.classes.push_back(
        analyze_class(c, gposet::fixed_subposet(x, rep.lattice->rep_mask(c)), p, chain_cap));

  rep.is_moore = true;
  rep.is_tight = true;
  for (const auto& cls : rep.classes) {
    if (!cls.concentrated) rep.is_moore = false;
    if (cls.n != cls.dim) rep.is_tight = false;
  }
  // cell support per class must be an initial segment of the dimensions
  rep.is_full = true;
  for (int c = 0; c < nc; ++c) {
    bool seen_empty = false;
    for (const auto& cell : rep.cells) {
      const bool nonempty = !gset::fixed_points(cell, rep.lattice->rep_mask(c)).empty();
      if (nonempty && seen_empty) rep.is_full = false;
      if (!nonempty) seen_empty = true;
    }
  }
  const auto& top_class = rep.classes[rep.lattice->full_class()];
  rep.is_capped = false;
  for (std::int64_t b : top_class.betti)
    if (b != 0) rep.is_capped = true;
  return rep;
}

cfun::SuperClassFunction MooreReport::dim_function() const {
  if (!is_moore)
    throw std::logic_error("dim_function: homology is not concentrated on every class");
  xalg::Vec64 v(lattice->num_classes());
  for (int c = 0; c < lattice->num_classes(); ++c) v(c) = classes[c].n + 1;
  return cfun::make_cfun(lattice, std::move(v));
}

DimsumCheck dimsum_check(const MooreReport& report) {
  DimsumCheck out;
  out.applicable = report.is_moore && report.is_tight && report.is_full;
  if (!out.applicable) return out;
  auto dim = report.dim_function();
  auto sum = cfun::zero_cfun(report.lattice);
  for (const auto& cell : report.cells)
    sum = cfun::add(sum, cfun::omega_of_gset(report.lattice, cell));
  out.dim_values = dim.values;
  out.omega_sum = sum.values;
  out.ok = dim.values == sum.values;
  return out;
}

}  // namespace dadelab::moore
