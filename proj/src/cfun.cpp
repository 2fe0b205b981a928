#include "dadelab/cfun.hpp"

#include <stdexcept>

namespace dadelab::cfun {

namespace {

void check_same_lattice(const SuperClassFunction& a, const SuperClassFunction& b) {
  if (a.lattice != b.lattice && a.lattice->group->table != b.lattice->group->table)
    throw std::invalid_argument("class functions live over different groups");
}

}  // namespace

SuperClassFunction make_cfun(grp::Lattice lattice, xalg::Vec64 values) {
  if (values.size() != lattice->num_classes())
    throw std::invalid_argument("class function has wrong length");
  return SuperClassFunction{std::move(lattice), std::move(values)};
}

SuperClassFunction zero_cfun(grp::Lattice lattice) {
  const int nc = lattice->num_classes();
  return SuperClassFunction{std::move(lattice), xalg::Vec64::Zero(nc)};
}

SuperClassFunction add(const SuperClassFunction& a, const SuperClassFunction& b) {
  check_same_lattice(a, b);
  return SuperClassFunction{a.lattice, a.values + b.values};
}

SuperClassFunction sub(const SuperClassFunction& a, const SuperClassFunction& b) {
  check_same_lattice(a, b);
  return SuperClassFunction{a.lattice, a.values - b.values};
}

SuperClassFunction scale(std::int64_t c, const SuperClassFunction& a) {
  return SuperClassFunction{a.lattice, c * a.values};
}

bool equal(const SuperClassFunction& a, const SuperClassFunction& b) {
  check_same_lattice(a, b);
  return a.values == b.values;
}

SuperClassFunction idempotent(grp::Lattice lattice, int cls) {
  const int nc = lattice->num_classes();
  xalg::Vec64 v = xalg::Vec64::Zero(nc);
  v(cls) = 1;
  return SuperClassFunction{std::move(lattice), std::move(v)};
}

std::vector<SuperClassFunction> idempotent_basis(const grp::Lattice& lattice) {
  std::vector<SuperClassFunction> out;
  for (int c = 0; c < lattice->num_classes(); ++c) out.push_back(idempotent(lattice, c));
  return out;
}

SuperClassFunction omega_coset(grp::Lattice lattice, int cls) {
  const int nc = lattice->num_classes();
  xalg::Vec64 v = xalg::Vec64::Zero(nc);
  for (int k = 0; k < nc; ++k) v(k) = lattice->leq(k, cls) ? 1 : 0;
  return SuperClassFunction{std::move(lattice), std::move(v)};
}

std::vector<SuperClassFunction> omega_basis(const grp::Lattice& lattice) {
  std::vector<SuperClassFunction> out;
  for (int c = 0; c < lattice->num_classes(); ++c) out.push_back(omega_coset(lattice, c));
  return out;
}

SuperClassFunction omega_of_gset(grp::Lattice lattice, const gset::GSet& x) {
  if (lattice->group->table != x.group->table)
    throw std::invalid_argument("omega_of_gset: lattice is for a different group");
  const int nc = lattice->num_classes();
  xalg::Vec64 v = xalg::Vec64::Zero(nc);
  for (int k = 0; k < nc; ++k)
    v(k) = gset::fixed_points(x, lattice->rep_mask(k)).empty() ? 0 : 1;
  return SuperClassFunction{std::move(lattice), std::move(v)};
}

xalg::Vec64 to_omega_coordinates(const SuperClassFunction& f) {
  // f = sum_K c_K omega_{G/K} evaluates to f(J) = sum_{J <= K} c_K, i.e.
  // f = zeta * c; the stored Moebius table is exactly zeta^{-1}.
  return f.lattice->mobius * f.values;
}

SuperClassFunction from_omega_coordinates(grp::Lattice lattice, const xalg::Vec64& coords) {
  const int nc = lattice->num_classes();
  if (coords.size() != nc) throw std::invalid_argument("coordinate vector has wrong length");
  xalg::Vec64 v = xalg::Vec64::Zero(nc);
  for (int j = 0; j < nc; ++j)
    for (int k = 0; k < nc; ++k)
      if (lattice->leq(j, k)) v(j) += coords(k);
  return make_cfun(std::move(lattice), std::move(v));
}

std::int64_t evaluate_at_gset(const SuperClassFunction& f, const gset::GSet& x) {
  if (f.lattice->group->table != x.group->table)
    throw std::invalid_argument("evaluate_at_gset: group mismatch");
  std::int64_t total = 0;
  for (const auto& orbit : gset::orbits(x)) total += f.at_mask(gset::stabilizer(x, orbit[0]));
  return total;
}

SuperClassFunction jnd(const biset::Biset& u, const SuperClassFunction& f,
                       grp::Lattice left_lattice) {
  if (f.lattice->group->table != u.right->table)
    throw std::invalid_argument("jnd: class function is not over the biset's right group");
  if (left_lattice->group->table != u.left->table)
    throw std::invalid_argument("jnd: lattice is not over the biset's left group");
  const int nc = left_lattice->num_classes();
  xalg::Vec64 v = xalg::Vec64::Zero(nc);
  for (int c = 0; c < nc; ++c)
    for (grp::Mask lu : biset::orbit_decomposition_uop(u, left_lattice->rep_mask(c)))
      v(c) += f.at_mask(lu);
  return SuperClassFunction{std::move(left_lattice), std::move(v)};
}

SuperClassFunction jnd_via_opposite(const biset::Biset& u, const SuperClassFunction& f,
                                    grp::Lattice left_lattice) {
  if (f.lattice->group->table != u.right->table)
    throw std::invalid_argument("jnd: class function is not over the biset's right group");
  if (left_lattice->group->table != u.left->table)
    throw std::invalid_argument("jnd: lattice is not over the biset's left group");
  const auto uop = biset::opposite(u);
  const int nc = left_lattice->num_classes();
  xalg::Vec64 v = xalg::Vec64::Zero(nc);
  for (int c = 0; c < nc; ++c) {
    const auto cosets = gset::transitive_gset(left_lattice->group, left_lattice->rep_mask(c));
    v(c) = evaluate_at_gset(f, biset::apply_biset(uop, cosets));
  }
  return SuperClassFunction{std::move(left_lattice), std::move(v)};
}

}  // namespace dadelab::cfun
