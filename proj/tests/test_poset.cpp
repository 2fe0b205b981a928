#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "dadelab/gposet.hpp"
#include "dadelab/group.hpp"
#include "dadelab/lattice.hpp"
#include "dadelab/poset.hpp"

using namespace dadelab;
using grp::Mask;
using poset::Poset;

namespace {

int relation_count(const Poset& p) {
  int n = 0;
  for (char c : p.less) n += c != 0;
  return n;
}

/// Symmetric join of plain posets: product of cones minus the pair of
/// bottoms, which sits at the last product index.
Poset plain_join(const Poset& a, const Poset& b) {
  auto prod = poset::product_poset(poset::cone_poset(a), poset::cone_poset(b));
  std::vector<int> keep(prod.size - 1);
  std::iota(keep.begin(), keep.end(), 0);
  return poset::induced_subposet(prod, keep);
}

Poset plain_join_many(std::vector<Poset> parts) {
  REQUIRE(!parts.empty());
  Poset acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = plain_join(acc, parts[i]);
  return acc;
}

gposet::GPoset free_antichain(const grp::Group& g) {
  return gposet::discrete_gposet(gset::transitive_gset(g, Mask{1}));
}

std::mt19937 rng(321);

Poset random_poset(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng() % 3 == 0) rel.emplace_back(a, b);  // a<b only: acyclic by construction
  return poset::make_poset(n, rel);
}

Poset permuted(const Poset& p) {
  std::vector<int> perm(p.size);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<char> less(p.less.size(), 0);
  for (int a = 0; a < p.size; ++a)
    for (int b = 0; b < p.size; ++b)
      if (p.lt(a, b)) less[perm[a] * p.size + perm[b]] = 1;
  return poset::make_poset_from_table(p.size, std::move(less));
}

}  // namespace

TEST_CASE("poset construction and closure") {
  auto c = poset::chain(4);
  CHECK(relation_count(c) == 6);  // closure of 3 covers
  CHECK(c.lt(0, 3));
  CHECK_FALSE(c.lt(3, 0));
  CHECK(relation_count(poset::antichain(5)) == 0);
  CHECK_THROWS(poset::make_poset(3, {{0, 1}, {1, 2}, {2, 0}}));  // cycle
  CHECK_THROWS(poset::make_poset(2, {{0, 0}}));                  // reflexive input

  auto cone = poset::cone_poset(poset::antichain(3));
  CHECK(cone.size == 4);
  CHECK(relation_count(cone) == 3);
  for (int i = 0; i < 3; ++i) CHECK(cone.lt(3, i));
}

TEST_CASE("products, unions and induced subposets") {
  auto grid = poset::product_poset(poset::chain(2), poset::chain(2));
  CHECK(grid.size == 4);
  CHECK(relation_count(grid) == 5);

  auto two_chains = poset::disjoint_union_poset(poset::chain(2), poset::chain(3));
  CHECK(two_chains.size == 5);
  CHECK(relation_count(two_chains) == 1 + 3);
  CHECK_FALSE(two_chains.lt(0, 2));

  auto sub = poset::induced_subposet(poset::chain(4), {0, 2});
  CHECK(sub.size == 2);
  CHECK(sub.lt(0, 1));
}

TEST_CASE("chain enumeration") {
  auto c3 = poset::chain(3);
  auto chains = poset::chains_by_length(c3);
  REQUIRE(chains.size() == 3);
  CHECK(chains[0].size() == 3);
  CHECK(chains[1].size() == 3);
  CHECK(chains[2].size() == 1);
  CHECK(chains[2][0] == std::vector<int>{0, 1, 2});
  CHECK(poset::count_chains(c3) == 7);
  CHECK_THROWS(poset::count_chains(poset::chain(30), 100));
  CHECK_THROWS(poset::chains_by_length(poset::chain(30), 100));
  CHECK(poset::count_chains(poset::antichain(0)) == 0);

  // counting and enumeration agree on random posets
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_poset(8);
    std::int64_t total = 0;
    for (const auto& level : poset::chains_by_length(p)) total += level.size();
    CHECK(total == poset::count_chains(p));
  }
}

TEST_CASE("poset isomorphism") {
  CHECK(poset::posets_isomorphic(poset::chain(4), poset::chain(4)));
  CHECK_FALSE(poset::posets_isomorphic(poset::chain(3), poset::antichain(3)));
  CHECK_FALSE(poset::posets_isomorphic(poset::chain(3), poset::chain(4)));

  // diamond vs 2+2 with a bottom: same size, different structure
  auto diamond = poset::make_poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto vee = poset::make_poset(4, {{0, 1}, {0, 2}, {1, 3}});
  CHECK_FALSE(poset::posets_isomorphic(diamond, vee));

  for (int trial = 0; trial < 30; ++trial) {
    auto p = random_poset(9);
    CHECK(poset::posets_isomorphic(p, permuted(p)));
  }
}

TEST_CASE("discrete posets and cones over a group") {
  auto c3 = grp::cyclic_group(3);
  auto x = free_antichain(c3);
  CHECK(x.size() == 3);
  CHECK(relation_count(x.order) == 0);

  auto e = gposet::empty_gposet(c3);
  CHECK(e.size() == 0);
  auto ce = gposet::cone(e);
  CHECK(ce.size() == 1);

  auto cx = gposet::cone(x);
  CHECK(cx.size() == 4);
  CHECK(relation_count(cx.order) == 3);
  for (int g = 0; g < 3; ++g) CHECK(cx.act(g, 3) == 3);

  auto d8 = grp::dihedral_group(8);
  Mask s_grp = Mask{1} | Mask{1} << 4;
  CHECK(gposet::discrete_gposet(gset::transitive_gset(d8, s_grp)).size() == 4);

  // an action that breaks the order is rejected
  auto chain2 = poset::chain(2);
  auto c2 = grp::cyclic_group(2);
  CHECK_THROWS(gposet::make_gposet(c2, chain2, {0, 1, 1, 0}));
}

TEST_CASE("symmetric join of two free antichains") {
  auto c3 = grp::cyclic_group(3);
  auto x = free_antichain(c3);
  auto j = gposet::join(x, x);
  CHECK(j.size() == 15);
  auto flag = gposet::flag_complex(j.order);
  REQUIRE(flag.dimension() == 1);
  CHECK(flag.simplices[0].size() == 15);
  CHECK(flag.simplices[1].size() == 18);

  // cells are free G-sets: 5 vertex orbits and 6 edge orbits
  auto cells = gposet::cell_gsets(j);
  REQUIRE(cells.size() == 2);
  CHECK(gset::orbits(cells[0]).size() == 5);
  CHECK(gset::orbits(cells[1]).size() == 6);
  for (const auto& c : cells)
    for (const auto& orb : gset::orbits(c))
      CHECK(gset::stabilizer(c, orb[0]) == Mask{1});
}

TEST_CASE("join unit, commutativity and associativity") {
  auto c3 = grp::cyclic_group(3);
  auto x = free_antichain(c3);
  auto pt = gposet::discrete_gposet(gset::transitive_gset(c3, c3->all_mask()));
  auto e = gposet::empty_gposet(c3);

  CHECK(poset::posets_isomorphic(gposet::join(x, e).order, x.order));
  CHECK(poset::posets_isomorphic(gposet::join(e, x).order, x.order));
  CHECK(poset::posets_isomorphic(gposet::join(x, pt).order, gposet::join(pt, x).order));

  auto abc1 = gposet::join(gposet::join(x, pt), x);
  auto abc2 = gposet::join(x, gposet::join(pt, x));
  auto abc3 = gposet::join_many({x, pt, x});
  CHECK(poset::posets_isomorphic(abc1.order, abc3.order));
  CHECK(poset::posets_isomorphic(abc2.order, abc3.order));
  // and the n-ary join agrees with the plain-poset construction
  CHECK(poset::posets_isomorphic(abc3.order,
                                 plain_join_many({x.order, pt.order, x.order})));
}

TEST_CASE("map posets along the identity biset") {
  auto d8 = grp::dihedral_group(8);
  auto pts = gposet::discrete_gposet(gset::transitive_gset(d8, Mask{1} | Mask{1} << 4));
  auto x = gposet::cone(pts);
  auto t = gposet::tmap(biset::identity_biset(d8), x);
  // identical, not just isomorphic: the single orbit is represented by the
  // group identity, so coordinates are literally X-points
  CHECK(t.order.less == x.order.less);
  CHECK(t.action == x.action);

  auto jn = gposet::join_induce(biset::identity_biset(d8), pts);
  CHECK(jn.size() == pts.size());
  CHECK(poset::posets_isomorphic(jn.order, pts.order));
}

TEST_CASE("map poset sizes along induction") {
  auto c9 = grp::cyclic_group(9);
  Mask c3m = grp::closure_mask(*c9, Mask{1} << 3);
  auto k = grp::subgroup_group(c9, c3m);
  auto u = biset::induction_biset(k);
  auto x = gposet::cone(free_antichain(k.group));
  CHECK(x.size() == 4);
  auto t = gposet::tmap(u, x);
  CHECK(t.size() == 64);  // three free right orbits, 4 candidate values each
  CHECK_THROWS(gposet::tmap(u, x, 10));  // element cap

  auto jn = gposet::join_induce(u, free_antichain(k.group));
  CHECK(jn.size() == 63);  // 4^3 - 1
}

TEST_CASE("join induction of a point over the trivial subgroup") {
  auto c3 = grp::cyclic_group(3);
  auto triv = grp::subgroup_group(c3, Mask{1});
  auto u = biset::induction_biset(triv);
  auto two = gposet::discrete_gposet(
      gset::make_gset(triv.group, 2, {0, 1}));  // 2-point antichain
  auto jn = gposet::join_induce(u, two);
  CHECK(jn.size() == 26);  // 3^3 - 1

  auto one = gposet::discrete_gposet(gset::make_gset(triv.group, 1, {0}));
  auto jn1 = gposet::join_induce(u, one);
  CHECK(jn1.size() == 7);  // 2^3 - 1
}

TEST_CASE("fixed subposets of join induction") {
  auto c9 = grp::cyclic_group(9);
  Mask c3m = grp::closure_mask(*c9, Mask{1} << 3);
  auto k = grp::subgroup_group(c9, c3m);
  auto u = biset::induction_biset(k);
  auto jn = gposet::join_induce(u, free_antichain(k.group));
  auto fixed_c3 = gposet::fixed_subposet(jn, c3m);
  CHECK(fixed_c3.size == 0);
  auto fixed_all = gposet::fixed_subposet(jn, Mask{1});
  CHECK(fixed_all.size == jn.size());
}

TEST_CASE("fixed points of join induction match the double-coset join") {
  struct Pair {
    grp::Group g;
    Mask k;
  };
  std::vector<Pair> pairs;
  {
    auto c4 = grp::cyclic_group(4);
    pairs.push_back({c4, grp::closure_mask(*c4, Mask{1} << 2)});
    auto c9 = grp::cyclic_group(9);
    pairs.push_back({c9, grp::closure_mask(*c9, Mask{1} << 3)});
    auto d8 = grp::dihedral_group(8);
    pairs.push_back({d8, grp::closure_mask(*d8, Mask{1} << 1)});        // <r>
    pairs.push_back({d8, Mask{1} | Mask{1} << 2 | Mask{1} << 4 | Mask{1} << 6});
    auto v9 = grp::elementary_abelian_group(3, 2);
    pairs.push_back({v9, grp::closure_mask(*v9, Mask{1} << 1)});
  }
  for (const auto& [g, km] : pairs) {
    CAPTURE(g->name);
    auto lat = grp::subgroup_lattice(g);
    auto k = grp::subgroup_group(g, km);
    auto latk = grp::subgroup_lattice(k.group);
    auto u = biset::induction_biset(k);
    // a few K-sets: a free orbit, a fixed point plus free orbit, two fixed points
    std::vector<gposet::GPoset> xs;
    xs.push_back(free_antichain(k.group));
    xs.push_back(gposet::discrete_gposet(gset::disjoint_union(
        gset::transitive_gset(k.group, k.group->all_mask()),
        gset::transitive_gset(k.group, Mask{1}))));
    std::vector<int> trivial_on_two(k.group->order * 2);
    for (int e = 0; e < k.group->order; ++e) {
      trivial_on_two[e * 2] = 0;
      trivial_on_two[e * 2 + 1] = 1;
    }
    xs.push_back(gposet::discrete_gposet(gset::make_gset(k.group, 2, trivial_on_two)));
    for (const auto& x : xs) {
      auto jn = gposet::join_induce(u, x);
      for (int c = 0; c < lat->num_classes(); ++c) {
        Mask lm = lat->rep_mask(c);
        auto lhs = gposet::fixed_subposet(jn, lm);
        // right-hand side: join over double cosets of the L^u-fixed subposets
        std::vector<poset::Poset> parts;
        for (Mask lu : biset::orbit_decomposition_uop(u, lm))
          parts.push_back(gposet::fixed_subposet(x, lu));
        REQUIRE(!parts.empty());
        poset::Poset rhs = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) rhs = plain_join(rhs, parts[i]);
        CHECK(poset::posets_isomorphic(lhs, rhs));
      }
    }
  }
}

TEST_CASE("map poset composition law") {
  auto c8 = grp::cyclic_group(8);
  Mask c4m = grp::closure_mask(*c8, Mask{1} << 2);
  auto e4 = grp::subgroup_group(c8, c4m);
  Mask c2_local = e4.mask_from_parent(grp::closure_mask(*c8, Mask{1} << 4));
  auto e2 = grp::subgroup_group(e4.group, c2_local);

  auto u = biset::induction_biset(e2);  // (C_4, C_2)
  auto v = biset::induction_biset(e4);  // (C_8, C_4)
  auto vu = biset::compose(v, u);       // (C_8, C_2)

  auto x = gposet::cone(free_antichain(e2.group));  // cX with |X| = 2
  auto lhs = gposet::tmap(v, gposet::tmap(u, x));
  auto rhs = gposet::tmap(vu, x);
  CHECK(lhs.size() == 81);
  CHECK(rhs.size() == 81);
  CHECK(poset::posets_isomorphic(lhs.order, rhs.order));
  // equivariantly: fixed-point counts agree on every subgroup class
  auto lat = grp::subgroup_lattice(c8);
  for (int c = 0; c < lat->num_classes(); ++c) {
    Mask m = lat->rep_mask(c);
    CHECK(gposet::fixed_subposet(lhs, m).size == gposet::fixed_subposet(rhs, m).size);
  }
}

TEST_CASE("join induction over a disjoint union is the join of inductions") {
  auto c4 = grp::cyclic_group(4);
  Mask c2m = grp::closure_mask(*c4, Mask{1} << 2);
  auto k = grp::subgroup_group(c4, c2m);
  auto u = biset::induction_biset(k);
  auto uu = biset::disjoint_union(u, u);
  auto x = free_antichain(k.group);

  auto lhs = gposet::join_induce(uu, x);
  auto rhs = gposet::join(gposet::join_induce(u, x), gposet::join_induce(u, x));
  CHECK(lhs.size() == rhs.size());
  CHECK(poset::posets_isomorphic(lhs.order, rhs.order));
  auto lat = grp::subgroup_lattice(c4);
  for (int c = 0; c < lat->num_classes(); ++c) {
    Mask m = lat->rep_mask(c);
    CHECK(gposet::fixed_subposet(lhs, m).size == gposet::fixed_subposet(rhs, m).size);
  }
}

TEST_CASE("flag complexes of cones and discrete posets") {
  auto c3 = grp::cyclic_group(3);
  auto x = free_antichain(c3);
  auto fx = gposet::flag_complex(x.order);
  CHECK(fx.dimension() == 0);
  CHECK(fx.simplices[0].size() == 3);

  auto cx = gposet::cone(x);
  auto fc = gposet::flag_complex(cx.order);
  REQUIRE(fc.dimension() == 1);
  CHECK(fc.simplices[0].size() == 4);
  CHECK(fc.simplices[1].size() == 3);

  auto cells = gposet::cell_gsets(cx);
  REQUIRE(cells.size() == 2);
  CHECK(cells[1].size == 3);
  CHECK(gset::orbits(cells[1]).size() == 1);
}
