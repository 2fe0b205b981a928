#include "dadelab/dade.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dadelab/biset.hpp"

namespace dadelab::dade {

namespace {

using grp::Mask;
using xalg::Int;
using xalg::IntMat;
using xalg::IntVec;
using xalg::Vec64;

IntVec to_int_vec(const Vec64& v) {
  IntVec out(v.size());
  for (int i = 0; i < v.size(); ++i) out(i) = Int(v(i));
  return out;
}

Vec64 to_vec64(const IntVec& v) {
  Vec64 out(v.size());
  for (int i = 0; i < v.size(); ++i) {
    if (v(i) > Int(INT64_MAX) || v(i) < Int(INT64_MIN))
      throw std::overflow_error("class function coordinate exceeds 64 bits");
    out(i) = static_cast<std::int64_t>(v(i));
  }
  return out;
}

void require_same_group(const grp::Lattice& a, const grp::Lattice& b) {
  if (a->group != b->group)
    throw std::invalid_argument("arguments belong to different groups");
}

/// The unique subgroup M with L < M < H and [M:L] = 2 (exists for the cyclic
/// order-4 and quaternion subquotients the conditions need).
Mask index_two_intermediate(const grp::SubgroupLattice& lat, Mask h, Mask l) {
  const int target = 2 * grp::mask_size(l);
  Mask found = 0;
  int count = 0;
  for (Mask m : grp::intermediate_subgroups(lat, h, l))
    if (grp::mask_size(m) == target) { found = m; ++count; }
  if (count != 1) throw std::logic_error("expected a unique index-2 intermediate subgroup");
  return found;
}

}  // namespace

BorelSmithBasis borel_smith_lattice(grp::Lattice lattice) {
  const grp::SubgroupLattice& lat = *lattice;
  const grp::FiniteGroup& g = *lat.group;
  const int nc = lat.num_classes();

  BorelSmithBasis out;
  out.lattice = lattice;

  for (std::size_t bi = 0; bi < lat.subgroups.size(); ++bi) {
    const Mask h = lat.subgroups[bi];
    for (std::size_t ai = 0; ai < lat.subgroups.size(); ++ai) {
      const Mask l = lat.subgroups[ai];
      if (l == h || (l & h) != l) continue;
      if (!grp::is_normal_in(g, l, h)) continue;
      const auto kind = grp::subquotient_type(g, h, l);
      if (kind == grp::SubquotientType::Other) continue;

      Condition cond;
      cond.kind = kind;
      cond.l = l;
      cond.h = h;
      cond.row = Vec64::Zero(nc);
      switch (kind) {
        case grp::SubquotientType::CpOdd:
          cond.row(lat.class_index(l)) += 1;
          cond.row(lat.class_index(h)) -= 1;
          cond.modulus = 2;
          break;
        case grp::SubquotientType::C4:
          cond.row(lat.class_index(l)) += 1;
          cond.row(lat.class_index(index_two_intermediate(lat, h, l))) -= 1;
          cond.modulus = 2;
          break;
        case grp::SubquotientType::CpxCp:
          cond.row(lat.class_index(l)) += 1;
          cond.row(lat.class_index(h)) += g.prime;
          for (Mask m : grp::intermediate_subgroups(lat, h, l))
            cond.row(lat.class_index(m)) -= 1;
          cond.modulus = 0;
          break;
        case grp::SubquotientType::Q8:
          cond.row(lat.class_index(l)) += 1;
          cond.row(lat.class_index(index_two_intermediate(lat, h, l))) -= 1;
          cond.modulus = 4;
          break;
        case grp::SubquotientType::Other:
          break;
      }
      out.conditions.push_back(std::move(cond));
    }
  }

  // distinct class-level constraints
  std::map<std::pair<std::vector<std::int64_t>, std::int64_t>, int> seen;
  std::vector<const Condition*> rows;
  for (const auto& c : out.conditions) {
    std::vector<std::int64_t> key(c.row.data(), c.row.data() + c.row.size());
    if (seen.emplace(std::make_pair(std::move(key), c.modulus), 1).second)
      rows.push_back(&c);
  }

  // members are the f with row.f = 0 (equalities) or row.f + modulus*y = 0
  // for some integer y; project the integer kernel of [rows | slack] onto
  // the f-coordinates and take the Hermite basis of the projection.
  const int r = static_cast<int>(rows.size());
  int slack = 0;
  for (const auto* c : rows) slack += c->modulus != 0;

  IntMat basis;
  if (r == 0) {
    basis = IntMat::Identity(nc, nc);
  } else {
    IntMat m = IntMat::Zero(r, nc + slack);
    int s = 0;
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < nc; ++j) m(i, j) = Int(rows[i]->row(j));
      if (rows[i]->modulus != 0) m(i, nc + s++) = Int(rows[i]->modulus);
    }
    auto snf = xalg::smith_normal_form(m);
    const int n = nc + slack;
    IntMat kernel_f(n - snf.rank, nc);  // f-part of each kernel basis vector
    for (int j = snf.rank; j < n; ++j)
      for (int i = 0; i < nc; ++i) kernel_f(j - snf.rank, i) = snf.v(i, j);
    basis = kernel_f;
  }

  auto hnf = xalg::hermite_normal_form(basis);
  out.basis = hnf.h.topRows(hnf.rank);
  out.hnf = std::move(hnf);
  return out;
}

bool satisfies_conditions(const BorelSmithBasis& b, const Vec64& values) {
  if (values.size() != b.lattice->num_classes())
    throw std::invalid_argument("satisfies_conditions: wrong number of classes");
  for (const auto& c : b.conditions) {
    const std::int64_t dot = c.row.dot(values);
    if (c.modulus == 0 ? dot != 0 : dot % c.modulus != 0) return false;
  }
  return true;
}

bool equal(const DadeElement& a, const DadeElement& b) {
  require_same_group(a.lattice, b.lattice);
  return xalg::vec_equal(a.rep, b.rep);
}

DadeElement add(const BorelSmithBasis& b, const DadeElement& x, const DadeElement& y) {
  require_same_group(b.lattice, x.lattice);
  require_same_group(b.lattice, y.lattice);
  IntVec sum(x.rep.size());
  for (int i = 0; i < x.rep.size(); ++i) sum(i) = x.rep(i) + y.rep(i);
  return DadeElement{x.lattice, xalg::hnf_reduce(b.hnf, std::move(sum))};
}

DadeGroupStructure dade_structure(const BorelSmithBasis& b) {
  auto q = xalg::lattice_quotient(b.basis, b.lattice->num_classes());
  return DadeGroupStructure{q.free_rank, q.torsion};
}

DadeElement psi(const BorelSmithBasis& b, const cfun::SuperClassFunction& f) {
  require_same_group(b.lattice, f.lattice);
  return DadeElement{f.lattice, xalg::hnf_reduce(b.hnf, to_int_vec(f.values))};
}

DadeElement omega_syzygy(const BorelSmithBasis& b, const gset::GSet& x) {
  if (b.lattice->group != x.group)
    throw std::invalid_argument("omega_syzygy: G-set over a different group");
  auto om = cfun::omega_of_gset(b.lattice, x);
  auto out = psi(b, om);
  if (!gset::fixed_points(x, x.group->all_mask()).empty()) {
    // a G-fixed point makes omega_X constant 1, which must reduce to zero
    if (om.values != Vec64::Ones(om.values.size()) || !out.is_zero())
      throw std::logic_error("omega_syzygy: G-fixed point did not yield the zero class");
  }
  return out;
}

cfun::SuperClassFunction tensor_induction_formula(const grp::EmbeddedGroup& k,
                                                  const gset::GSet& x,
                                                  grp::Lattice h_lattice) {
  if (h_lattice->group != k.parent)
    throw std::invalid_argument("tensor_induction_formula: lattice is not the parent's");
  if (x.group != k.group)
    throw std::invalid_argument("tensor_induction_formula: X is not a set over K");
  const grp::FiniteGroup& g = *k.parent;
  const int nc = h_lattice->num_classes();

  Vec64 counts(nc);  // counts(T) = #{h in T\H/K : X^{T^h cap K} nonempty}
  for (int t = 0; t < nc; ++t) {
    const Mask tm = h_lattice->rep_mask(t);
    std::int64_t f = 0;
    for (int h : grp::double_coset_reps(g, tm, k.mask)) {
      const Mask conj = grp::conjugate_mask(g, tm, g.inv(h));  // h^-1 T h
      const Mask local = k.mask_from_parent(conj & k.mask);
      if (!gset::fixed_points(x, local).empty()) ++f;
    }
    counts(t) = f;
  }
  return cfun::from_omega_coordinates(h_lattice, h_lattice->mobius * counts);
}

TensorInductionReport tensor_induction_check(const grp::EmbeddedGroup& k) {
  auto h_lat = grp::subgroup_lattice(k.parent);
  auto k_lat = grp::subgroup_lattice(k.group);
  auto u = biset::induction_biset(k);

  TensorInductionReport rep;
  for (int j = 0; j < k_lat->num_classes(); ++j) {
    auto x = gset::transitive_gset(k.group, k_lat->rep_mask(j));
    auto via_biset = cfun::jnd(u, cfun::omega_coset(k_lat, j), h_lat);
    auto via_formula = tensor_induction_formula(k, x, h_lat);
    if (via_biset.values != via_formula.values) {
      rep.formula_matches = false;
      rep.mismatched_classes.push_back(j);
    }
  }

  auto k_bs = borel_smith_lattice(k_lat);
  auto h_bs = borel_smith_lattice(h_lat);
  for (int i = 0; i < k_bs.basis.rows(); ++i) {
    IntVec row = k_bs.basis.row(i).transpose();
    auto f = cfun::make_cfun(k_lat, to_vec64(row));
    auto image = cfun::jnd(u, f, h_lat);
    const bool direct = satisfies_conditions(h_bs, image.values);
    const bool reduced = psi(h_bs, image).is_zero();
    if (direct != reduced)
      throw std::logic_error("tensor_induction_check: membership routes disagree");
    if (!direct) rep.preserves_borel_smith = false;
  }
  return rep;
}

DadeElement hom_of_moore(const BorelSmithBasis& b, const moore::MooreReport& rep) {
  require_same_group(b.lattice, rep.lattice);
  if (!rep.is_moore)
    throw std::invalid_argument("hom_of_moore: homology is not concentrated");
  if (!rep.is_capped)
    throw std::invalid_argument("hom_of_moore: full-group fixed set is acyclic");
  auto dim = rep.dim_function();
  return psi(b, cfun::make_cfun(b.lattice, dim.values));
}

TightFormulaResult tight_formula(const BorelSmithBasis& b, const moore::MooreReport& rep) {
  require_same_group(b.lattice, rep.lattice);
  if (!rep.is_moore || !rep.is_tight)
    throw std::invalid_argument("tight_formula: complex is not a tight Moore complex");
  if (!rep.is_capped)
    throw std::invalid_argument("tight_formula: full-group fixed set is acyclic");

  TightFormulaResult res;
  res.m = rep.classes[rep.lattice->full_class()].n;
  res.n = rep.classes[rep.lattice->trivial_class()].n;
  res.cell_sum = DadeElement{b.lattice, IntVec::Zero(b.lattice->num_classes())};
  for (int i = std::max(0, res.m + 1); i <= res.n; ++i)
    res.cell_sum = add(b, res.cell_sum, omega_syzygy(b, rep.cells[i]));
  res.hom = hom_of_moore(b, rep);
  res.matches = equal(res.cell_sum, res.hom);
  return res;
}

std::vector<cfun::SuperClassFunction> representation_sphere_functions(grp::Lattice lattice) {
  const grp::FiniteGroup& g = *lattice->group;
  bool abelian = true;
  for (int a = 0; a < g.order && abelian; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.mul(a, b) != g.mul(b, a)) { abelian = false; break; }

  std::vector<cfun::SuperClassFunction> out;
  if (abelian) {
    // irreducibles are characters; a character with kernel N contributes the
    // function [H <= N], doubled when the character is not real-valued
    for (int c = 0; c < lattice->num_classes(); ++c) {
      const Mask n = lattice->rep_mask(c);
      auto q = grp::quotient_group(lattice->group, n);
      bool cyclic = false;
      for (int e = 0; e < q.group->order && !cyclic; ++e)
        cyclic = grp::element_order(*q.group, e) == q.group->order;
      if (!cyclic) continue;  // no irreducible character has exactly this kernel
      const int index = q.group->order;
      out.push_back(cfun::scale(index <= 2 ? 1 : 2, cfun::omega_coset(lattice, c)));
    }
    return out;
  }

  const auto census = grp::order_census(g);
  if (g.order == 8 && census[2] == 1) {
    // quaternion group: the trivial character, three sign characters with the
    // cyclic maximal subgroups as kernels, and the 4-dimensional real form of
    // the 2-dimensional irreducible, which is fixed-point free off 1
    for (int c = 0; c < lattice->num_classes(); ++c)
      if (lattice->rep_size(c) == 8 || lattice->rep_size(c) == 4)
        out.push_back(cfun::omega_coset(lattice, c));
    Vec64 quat = Vec64::Zero(lattice->num_classes());
    quat(lattice->trivial_class()) = 4;
    out.push_back(cfun::make_cfun(lattice, std::move(quat)));
    return out;
  }
  throw std::invalid_argument(
      "representation_sphere_functions: tabulated only for abelian groups and "
      "the order-8 quaternion group");
}

OracleReport representation_sphere_check(const BorelSmithBasis& b) {
  auto fns = representation_sphere_functions(b.lattice);
  OracleReport rep;
  IntMat span(static_cast<int>(fns.size()), b.lattice->num_classes());
  for (std::size_t i = 0; i < fns.size(); ++i) {
    const bool direct = satisfies_conditions(b, fns[i].values);
    const bool reduced = psi(b, fns[i]).is_zero();
    if (direct != reduced)
      throw std::logic_error("representation_sphere_check: membership routes disagree");
    if (!direct) {
      rep.all_members = false;
      rep.outside.push_back(static_cast<int>(i));
    }
    for (int j = 0; j < b.lattice->num_classes(); ++j)
      span(static_cast<int>(i), j) = Int(fns[i].values(j));
  }

  // lattice equality: representation functions inside (checked above) and
  // every basis vector inside the representation span
  auto span_hnf = xalg::hermite_normal_form(span);
  rep.spans = rep.all_members;
  for (int i = 0; i < b.basis.rows() && rep.spans; ++i) {
    IntVec row = b.basis.row(i).transpose();
    if (!xalg::vec_is_zero(xalg::hnf_reduce(span_hnf, std::move(row)))) rep.spans = false;
  }
  return rep;
}

}  // namespace dadelab::dade
