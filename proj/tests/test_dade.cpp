#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "dadelab/biset.hpp"
#include "dadelab/cfun.hpp"
#include "dadelab/dade.hpp"
#include "dadelab/gposet.hpp"
#include "dadelab/group.hpp"
#include "dadelab/gset.hpp"
#include "dadelab/lattice.hpp"
#include "dadelab/moore.hpp"
#include "dadelab/xalg.hpp"

using namespace dadelab;
using grp::Mask;
using xalg::Int;
using xalg::Vec64;

namespace {

dade::BorelSmithBasis basis_of(const grp::Group& g) {
  return dade::borel_smith_lattice(grp::subgroup_lattice(g));
}

std::vector<Int> torsion_by_minors(const dade::BorelSmithBasis& b) {
  std::vector<Int> out;
  for (const Int& d : xalg::invariant_factors_by_minors(b.basis))
    if (d > 1) out.push_back(d);
  return out;
}

Vec64 random_values(std::mt19937& rng, int n) {
  std::uniform_int_distribution<std::int64_t> dist(-9, 9);
  Vec64 v(n);
  for (int i = 0; i < n; ++i) v(i) = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("order-2 group carries no conditions") {
  auto b = basis_of(grp::cyclic_group(2));
  CHECK(b.conditions.empty());
  CHECK(b.rank() == 2);
  auto st = dade::dade_structure(b);
  CHECK(st.free_rank == 0);
  CHECK(st.torsion.empty());
}

TEST_CASE("odd prime cyclic groups: parity lattice and order-2 quotient") {
  for (int p : {3, 5}) {
    auto b = basis_of(grp::cyclic_group(p));
    REQUIRE(b.conditions.size() == 1);
    CHECK(b.conditions[0].kind == grp::SubquotientType::CpOdd);
    CHECK(b.conditions[0].modulus == 2);

    // Hermite basis of {(a,b): a == b mod 2}
    REQUIRE(b.rank() == 2);
    CHECK(b.basis(0, 0) == 1);
    CHECK(b.basis(0, 1) == 1);
    CHECK(b.basis(1, 0) == 0);
    CHECK(b.basis(1, 1) == 2);

    auto st = dade::dade_structure(b);
    CHECK(st.free_rank == 0);
    REQUIRE(st.torsion.size() == 1);
    CHECK(st.torsion[0] == 2);
  }
}

TEST_CASE("psi on the odd cyclic anchors") {
  auto c3 = grp::cyclic_group(3);
  auto lat = grp::subgroup_lattice(c3);
  auto b = dade::borel_smith_lattice(lat);

  CHECK(dade::psi(b, cfun::omega_coset(lat, lat->full_class())).is_zero());
  CHECK(dade::psi(b, cfun::scale(2, cfun::omega_coset(lat, 0))).is_zero());

  auto nontrivial = dade::psi(b, cfun::omega_coset(lat, 0));
  CHECK_FALSE(nontrivial.is_zero());
  // canonical representative of the nonzero class
  CHECK(nontrivial.rep(0) == 0);
  CHECK(nontrivial.rep(1) == 1);
  // it is 2-torsion
  CHECK(dade::add(b, nontrivial, nontrivial).is_zero());
}

TEST_CASE("cyclic 2-groups: one parity condition per step of the tower") {
  auto b4 = basis_of(grp::cyclic_group(4));
  REQUIRE(b4.conditions.size() == 1);
  CHECK(b4.conditions[0].kind == grp::SubquotientType::C4);
  CHECK(b4.conditions[0].modulus == 2);
  // basis of {(a,b,c): a == b mod 2}: the full-group coordinate is free
  CHECK(b4.basis(0, 0) == 1);
  CHECK(b4.basis(0, 1) == 1);
  CHECK(b4.basis(1, 1) == 2);
  CHECK(b4.basis(2, 2) == 1);
  auto st4 = dade::dade_structure(b4);
  CHECK(st4.free_rank == 0);
  REQUIRE(st4.torsion.size() == 1);
  CHECK(st4.torsion[0] == 2);

  auto st8 = dade::dade_structure(basis_of(grp::cyclic_group(8)));
  CHECK(st8.free_rank == 0);
  REQUIRE(st8.torsion.size() == 2);
  CHECK(st8.torsion[0] == 2);
  CHECK(st8.torsion[1] == 2);

  auto st27 = dade::dade_structure(basis_of(grp::cyclic_group(27)));
  CHECK(st27.free_rank == 0);
  CHECK(st27.torsion == std::vector<Int>{2, 2, 2});
}

TEST_CASE("quotient structure goldens, cross-checked against the minors oracle") {
  struct Golden {
    grp::Group g;
    int free_rank;
    std::vector<Int> torsion;
  };
  std::vector<Golden> goldens;
  goldens.push_back({grp::elementary_abelian_group(2, 2), 1, {}});
  goldens.push_back({grp::elementary_abelian_group(3, 2), 1, {2, 2, 2, 2}});
  goldens.push_back({grp::elementary_abelian_group(5, 2), 1, {2, 2, 2, 2, 2, 2}});
  goldens.push_back({grp::quaternion_group(8), 1, {4}});
  goldens.push_back({grp::dihedral_group(8), 3, {}});
  goldens.push_back({grp::semidihedral_group(16), 4, {2}});
  goldens.push_back({grp::extraspecial_group(3), 5, {2, 2, 2, 2, 2}});

  for (const auto& gold : goldens) {
    CAPTURE(gold.g->name);
    auto b = basis_of(gold.g);
    auto st = dade::dade_structure(b);
    CHECK(st.free_rank == gold.free_rank);
    CHECK(st.torsion == gold.torsion);
    // independent exponential-cost oracle on the same basis
    CHECK(torsion_by_minors(b) == gold.torsion);
    CHECK(b.rank() + st.free_rank == b.lattice->num_classes());
  }
}

TEST_CASE("condition logs record the witnessing subquotients") {
  auto b33 = basis_of(grp::elementary_abelian_group(3, 2));
  REQUIRE(b33.conditions.size() == 9);
  int odd = 0, rank2 = 0;
  for (const auto& c : b33.conditions) {
    if (c.kind == grp::SubquotientType::CpOdd) ++odd;
    if (c.kind == grp::SubquotientType::CpxCp) {
      ++rank2;
      CHECK(c.modulus == 0);
      CHECK(c.l == Mask{1});
      CHECK(c.h == b33.lattice->group->all_mask());
    }
  }
  CHECK(odd == 8);
  CHECK(rank2 == 1);

  auto bq8 = basis_of(grp::quaternion_group(8));
  REQUIRE(bq8.conditions.size() == 5);
  int c4 = 0, q8 = 0, v4 = 0;
  for (const auto& c : bq8.conditions) {
    if (c.kind == grp::SubquotientType::C4) { ++c4; CHECK(c.modulus == 2); }
    if (c.kind == grp::SubquotientType::Q8) { ++q8; CHECK(c.modulus == 4); }
    if (c.kind == grp::SubquotientType::CpxCp) ++v4;
  }
  CHECK(c4 == 3);
  CHECK(q8 == 1);
  CHECK(v4 == 1);

  CHECK(basis_of(grp::dihedral_group(8)).conditions.size() == 4);
}

TEST_CASE("membership through conditions and through reduction agree") {
  std::mt19937 rng(20260814);
  for (auto g : {grp::cyclic_group(3), grp::cyclic_group(4), grp::quaternion_group(8),
                 grp::elementary_abelian_group(3, 2)}) {
    auto b = basis_of(g);
    const int nc = b.lattice->num_classes();
    int members = 0;
    for (int trial = 0; trial < 100; ++trial) {
      auto f = cfun::make_cfun(b.lattice, random_values(rng, nc));
      const bool direct = dade::satisfies_conditions(b, f.values);
      const bool reduced = dade::psi(b, f).is_zero();
      CHECK(direct == reduced);
      members += direct;
    }
    // integer combinations of the basis rows must always be members
    std::uniform_int_distribution<std::int64_t> coeff(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
      Vec64 v = Vec64::Zero(nc);
      for (int i = 0; i < b.basis.rows(); ++i) {
        const std::int64_t c = coeff(rng);
        for (int j = 0; j < nc; ++j)
          v(j) += c * static_cast<std::int64_t>(b.basis(i, j));
      }
      auto f = cfun::make_cfun(b.lattice, std::move(v));
      CHECK(dade::satisfies_conditions(b, f.values));
      CHECK(dade::psi(b, f).is_zero());
    }
  }
}

TEST_CASE("psi is additive and reduction is canonical") {
  std::mt19937 rng(7);
  for (auto g : {grp::elementary_abelian_group(3, 2), grp::quaternion_group(8)}) {
    auto b = basis_of(g);
    const int nc = b.lattice->num_classes();
    for (int trial = 0; trial < 100; ++trial) {
      auto f = cfun::make_cfun(b.lattice, random_values(rng, nc));
      auto h = cfun::make_cfun(b.lattice, random_values(rng, nc));
      auto sum = dade::psi(b, cfun::add(f, h));
      CHECK(dade::equal(sum, dade::add(b, dade::psi(b, f), dade::psi(b, h))));

      // reducing a canonical representative changes nothing
      Vec64 rep(nc);
      for (int i = 0; i < nc; ++i) rep(i) = static_cast<std::int64_t>(sum.rep(i));
      CHECK(xalg::vec_equal(dade::psi(b, cfun::make_cfun(b.lattice, rep)).rep, sum.rep));
    }
  }
}

TEST_CASE("syzygy classes of G-sets") {
  auto c3 = grp::cyclic_group(3);
  auto lat = grp::subgroup_lattice(c3);
  auto b = dade::borel_smith_lattice(lat);
  auto free_orbit = gset::transitive_gset(c3, Mask{1});
  auto fixed_pt = gset::transitive_gset(c3, c3->all_mask());

  CHECK(dade::omega_syzygy(b, fixed_pt).is_zero());
  CHECK(dade::omega_syzygy(b, gset::disjoint_union(fixed_pt, free_orbit)).is_zero());
  CHECK(dade::omega_syzygy(b, gset::make_gset(c3, 0, {})).is_zero());
  CHECK_FALSE(dade::omega_syzygy(b, free_orbit).is_zero());

  // G-sets with the same nonempty-fixed-point pattern give the same class
  auto doubled = gset::disjoint_union(free_orbit, free_orbit);
  CHECK(dade::equal(dade::omega_syzygy(b, free_orbit), dade::omega_syzygy(b, doubled)));
}

TEST_CASE("tensor induction formula: anchors and collapse") {
  // K = 1 <= H = C_p, X a point: (p-1) omega_{H/1} + omega_{H/H}
  for (int p : {3, 5}) {
    auto g = grp::cyclic_group(p);
    auto triv = grp::subgroup_group(g, Mask{1});
    auto h_lat = grp::subgroup_lattice(g);
    auto pt = gset::transitive_gset(triv.group, Mask{1});
    auto f = dade::tensor_induction_formula(triv, pt, h_lat);
    CHECK(f.values == Vec64{{p, 1}});
    auto expected = cfun::add(cfun::scale(p - 1, cfun::omega_coset(h_lat, 0)),
                              cfun::omega_coset(h_lat, 1));
    CHECK(cfun::equal(f, expected));
  }

  // K = H: the formula collapses to omega_X
  auto d8 = grp::dihedral_group(8);
  auto h_lat = grp::subgroup_lattice(d8);
  auto whole = grp::subgroup_group(d8, d8->all_mask());
  auto k_lat = grp::subgroup_lattice(whole.group);
  for (int j = 0; j < k_lat->num_classes(); ++j) {
    auto x = gset::transitive_gset(whole.group, k_lat->rep_mask(j));
    auto f = dade::tensor_induction_formula(whole, x, h_lat);
    auto om = cfun::omega_of_gset(k_lat, x);
    CHECK(f.values == om.values);  // identical class order for the same group
  }
}

TEST_CASE("tensor induction: biset route equals formula route on catalog groups") {
  for (auto g : {grp::cyclic_group(9), grp::dihedral_group(8), grp::quaternion_group(8),
                 grp::elementary_abelian_group(3, 2), grp::semidihedral_group(16)}) {
    CAPTURE(g->name);
    auto lat = grp::subgroup_lattice(g);
    for (int c = 0; c < lat->num_classes(); ++c) {
      auto k = grp::subgroup_group(g, lat->rep_mask(c));
      auto rep = dade::tensor_induction_check(k);
      CHECK(rep.formula_matches);
      CHECK(rep.preserves_borel_smith);
      CHECK(rep.mismatched_classes.empty());
    }
  }
}

TEST_CASE("induction along deflation carries the sublattice into the quotient's") {
  struct Case {
    grp::Group g;
    Mask normal;
  };
  std::vector<Case> cases;
  {
    auto c9 = grp::cyclic_group(9);
    cases.push_back({c9, grp::closure_mask(*c9, Mask{1} << 3)});
    auto d8 = grp::dihedral_group(8);
    cases.push_back({d8, grp::center_mask(*d8)});
  }
  for (const auto& [g, n] : cases) {
    auto q = grp::quotient_group(g, n);
    auto u = biset::deflation_biset(g, q);
    auto g_bs = basis_of(g);
    auto q_lat = grp::subgroup_lattice(q.group);
    auto q_bs = dade::borel_smith_lattice(q_lat);
    for (int i = 0; i < g_bs.basis.rows(); ++i) {
      Vec64 row(g_bs.lattice->num_classes());
      for (int j = 0; j < row.size(); ++j)
        row(j) = static_cast<std::int64_t>(g_bs.basis(i, j));
      auto image = cfun::jnd(u, cfun::make_cfun(g_bs.lattice, std::move(row)), q_lat);
      CHECK(dade::satisfies_conditions(q_bs, image.values));
      CHECK(dade::psi(q_bs, image).is_zero());
    }
  }
}

TEST_CASE("homology classes of tight complexes match the cell-sum formula") {
  auto c3 = grp::cyclic_group(3);
  auto lat = grp::subgroup_lattice(c3);
  auto b = dade::borel_smith_lattice(lat);
  auto orbit = gset::transitive_gset(c3, Mask{1});

  // join of two free orbits: both routes vanish
  auto join_rep = moore::analyze(
      gposet::join(gposet::discrete_gposet(orbit), gposet::discrete_gposet(orbit)), 3);
  CHECK(dade::hom_of_moore(b, join_rep).is_zero());
  auto tf = dade::tight_formula(b, join_rep);
  CHECK(tf.m == -1);
  CHECK(tf.n == 1);
  CHECK(tf.matches);
  CHECK(tf.cell_sum.is_zero());

  // two free orbits, discrete: both routes give the nonzero 2-torsion class
  auto disc_rep = moore::analyze(
      gposet::discrete_gposet(gset::disjoint_union(orbit, orbit)), 3);
  auto tf2 = dade::tight_formula(b, disc_rep);
  CHECK(tf2.m == -1);
  CHECK(tf2.n == 0);
  CHECK(tf2.matches);
  CHECK_FALSE(tf2.hom.is_zero());
  CHECK(dade::equal(tf2.hom, dade::psi(b, cfun::omega_coset(lat, 0))));

  // two fixed points: the sum over m+1..n is empty and the class is zero
  auto fixed_pt = gset::transitive_gset(c3, c3->all_mask());
  auto fixed_rep = moore::analyze(
      gposet::discrete_gposet(gset::disjoint_union(fixed_pt, fixed_pt)), 3);
  auto tf3 = dade::tight_formula(b, fixed_rep);
  CHECK(tf3.m == 0);
  CHECK(tf3.n == 0);
  CHECK(tf3.matches);
  CHECK(tf3.hom.is_zero());

  // sphere from join induction: dimension function (3,1) lies in the lattice
  auto triv = grp::subgroup_group(c3, Mask{1});
  auto u = biset::induction_biset(triv);
  auto two = gposet::discrete_gposet(gset::make_gset(triv.group, 2, {0, 1}));
  auto sphere_rep = moore::analyze(gposet::join_induce(u, two), 3);
  auto tf4 = dade::tight_formula(b, sphere_rep);
  CHECK(tf4.m == 0);
  CHECK(tf4.n == 2);
  CHECK(tf4.matches);
  CHECK(tf4.hom.is_zero());
}

TEST_CASE("tight formula and hom refuse unsuitable complexes") {
  auto c3 = grp::cyclic_group(3);
  auto lat = grp::subgroup_lattice(c3);
  auto b = dade::borel_smith_lattice(lat);

  // not capped: join induction of a single point is G-contractible
  auto triv = grp::subgroup_group(c3, Mask{1});
  auto u = biset::induction_biset(triv);
  auto one = gposet::discrete_gposet(gset::make_gset(triv.group, 1, {0}));
  auto acyclic = moore::analyze(gposet::join_induce(u, one), 3);
  REQUIRE(acyclic.is_moore);
  REQUIRE_FALSE(acyclic.is_capped);
  CHECK_THROWS_AS(dade::hom_of_moore(b, acyclic), std::invalid_argument);
  CHECK_THROWS_AS(dade::tight_formula(b, acyclic), std::invalid_argument);
}

TEST_CASE("non-tight wedge: cell sum misses the actual homology class") {
  // suspension of a free orbit wedged with a fixed edge (poset model)
  auto c3 = grp::cyclic_group(3);
  std::vector<std::pair<int, int>> rel;
  for (int x = 0; x < 3; ++x)
    for (int j = 0; j < 2; ++j) {
      rel.push_back({x, 5 + 2 * x + j});
      rel.push_back({3 + j, 5 + 2 * x + j});
    }
  rel.push_back({3, 11});
  auto order = poset::make_poset(12, rel);
  std::vector<int> action(3 * 12);
  for (int g = 0; g < 3; ++g) {
    for (int x = 0; x < 3; ++x) {
      int gx = c3->mul(g, x);
      action[g * 12 + x] = gx;
      for (int j = 0; j < 2; ++j) action[g * 12 + 5 + 2 * x + j] = 5 + 2 * gx + j;
    }
    for (int f : {3, 4, 11}) action[g * 12 + f] = f;
  }
  auto rep = moore::analyze(gposet::make_gposet(c3, order, action), 3);
  REQUIRE(rep.is_moore);
  REQUIRE_FALSE(rep.is_tight);
  REQUIRE(rep.is_capped);

  auto lat = grp::subgroup_lattice(c3);
  auto b = dade::borel_smith_lattice(lat);
  CHECK_THROWS_AS(dade::tight_formula(b, rep), std::invalid_argument);

  // the class of the homology is the nonzero element...
  auto hom = dade::hom_of_moore(b, rep);
  CHECK_FALSE(hom.is_zero());
  CHECK(dade::equal(hom, dade::psi(b, cfun::omega_coset(lat, 0))));

  // ...but the naive cell sum over degrees m+1..n collapses to zero
  const int m = rep.classes[lat->full_class()].n;
  const int n = rep.classes[lat->trivial_class()].n;
  CHECK(m == 0);
  CHECK(n == 1);
  auto naive = dade::omega_syzygy(b, rep.cells[1]);
  CHECK(naive.is_zero());
  CHECK_FALSE(dade::equal(naive, hom));
}

TEST_CASE("representation sphere oracle validates every tabulated group") {
  std::vector<grp::Group> groups = {
      grp::cyclic_group(2),  grp::cyclic_group(4),  grp::cyclic_group(8),
      grp::elementary_abelian_group(2, 2),          grp::quaternion_group(8),
      grp::cyclic_group(3),  grp::cyclic_group(9),  grp::cyclic_group(27),
      grp::elementary_abelian_group(3, 2),          grp::cyclic_group(5),
      grp::elementary_abelian_group(5, 2)};
  for (const auto& g : groups) {
    CAPTURE(g->name);
    auto b = basis_of(g);
    auto oracle = dade::representation_sphere_check(b);
    CHECK(oracle.all_members);
    CHECK(oracle.spans);
    CHECK(oracle.outside.empty());
  }

  // dimension counts of the real irreducibles
  CHECK(dade::representation_sphere_functions(grp::subgroup_lattice(grp::cyclic_group(4)))
            .size() == 3);
  CHECK(dade::representation_sphere_functions(
            grp::subgroup_lattice(grp::elementary_abelian_group(5, 2)))
            .size() == 7);
  CHECK(dade::representation_sphere_functions(grp::subgroup_lattice(grp::quaternion_group(8)))
            .size() == 5);
  CHECK_THROWS_AS(
      dade::representation_sphere_functions(grp::subgroup_lattice(grp::dihedral_group(8))),
      std::invalid_argument);
}

TEST_CASE("argument validation") {
  auto b3 = basis_of(grp::cyclic_group(3));
  auto lat9 = grp::subgroup_lattice(grp::cyclic_group(9));
  CHECK_THROWS_AS(dade::satisfies_conditions(b3, Vec64::Zero(5)), std::invalid_argument);
  CHECK_THROWS_AS(dade::psi(b3, cfun::zero_cfun(lat9)), std::invalid_argument);
  CHECK_THROWS_AS(
      dade::omega_syzygy(b3, gset::transitive_gset(lat9->group, Mask{1})),
      std::invalid_argument);
}
