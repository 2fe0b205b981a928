#include "dadelab/verify.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "dadelab/biset.hpp"
#include "dadelab/cfun.hpp"
#include "dadelab/dade.hpp"
#include "dadelab/gset.hpp"
#include "dadelab/lattice.hpp"
#include "dadelab/moore.hpp"
#include "dadelab/poset.hpp"
#include "dadelab/xalg.hpp"

namespace dadelab::verify {

using xalg::Vec64;

int SuiteReport::passed() const {
  int n = 0;
  for (const auto& c : cases) n += c.status == Status::Pass;
  return n;
}
int SuiteReport::failed() const {
  int n = 0;
  for (const auto& c : cases) n += c.status == Status::Fail;
  return n;
}
int SuiteReport::skipped() const {
  int n = 0;
  for (const auto& c : cases) n += c.status == Status::Skipped;
  return n;
}

namespace {

std::string vec_str(const Vec64& v) {
  std::ostringstream ss;
  ss << "(";
  for (int i = 0; i < v.size(); ++i) ss << (i ? "," : "") << v(i);
  ss << ")";
  return ss.str();
}

std::int64_t pow64(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

CaseResult pass_case(std::string inputs, std::string expected) {
  return {std::move(inputs), expected, expected, Status::Pass};
}
CaseResult fail_case(std::string inputs, std::string expected, std::string got) {
  return {std::move(inputs), std::move(expected), std::move(got), Status::Fail};
}
CaseResult skip_case(std::string inputs, std::string expected, std::string why) {
  return {std::move(inputs), std::move(expected), std::move(why), Status::Skipped};
}

/// Run one task per index on a small worker pool; results keep index order,
/// so reports are deterministic regardless of thread count.
std::vector<std::vector<CaseResult>> run_tasks(
    int n, int threads, const std::function<std::vector<CaseResult>(int)>& task) {
  std::vector<std::vector<CaseResult>> out(n);
  auto safe = [&](int i) {
    try {
      out[i] = task(i);
    } catch (const std::exception& e) {
      out[i] = {fail_case("task " + std::to_string(i), "no exception",
                          std::string("exception: ") + e.what())};
    }
  };
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) safe(i);
    return out;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i; (i = next.fetch_add(1)) < n;) safe(i);
  };
  std::vector<std::thread> pool;
  const int nw = std::min(threads, n);
  pool.reserve(nw);
  for (int t = 0; t < nw; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

SuiteReport assemble(std::string name, int n, const Options& opt,
                     const std::function<std::vector<CaseResult>(int)>& task) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = std::move(name);
  for (auto& chunk : run_tasks(n, opt.threads, task))
    for (auto& c : chunk) rep.cases.push_back(std::move(c));
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

/// Build the lattice, optionally flipping one Möbius entry (fault injection).
grp::Lattice make_lattice(const grp::Group& g, const Options& opt) {
  auto lat = grp::subgroup_lattice(g);
  if (!opt.corrupt_mobius) return lat;
  grp::SubgroupLattice broken = *lat;
  broken.mobius(0, broken.num_classes() - 1) += 1;
  return std::make_shared<const grp::SubgroupLattice>(std::move(broken));
}

/// Symmetric join of plain posets: product of cones minus the all-bottoms
/// corner (which stays at the last index throughout the fold).
poset::Poset symmetric_join(const std::vector<poset::Poset>& parts) {
  if (parts.empty()) return poset::make_poset(0, {});
  poset::Poset acc = poset::cone_poset(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i)
    acc = poset::product_poset(acc, poset::cone_poset(parts[i]));
  std::vector<int> keep(acc.size - 1);
  std::iota(keep.begin(), keep.end(), 0);
  return poset::induced_subposet(acc, keep);
}

/// One (H, K, X) instance of the induction corpus: X is a small poset over
/// the subgroup K of H.
struct CorpusEntry {
  grp::Group h;
  grp::EmbeddedGroup k;
  int k_class;
  gposet::GPoset x;
  std::string key;  ///< "group=D8 K=#2 X=cone(K/#1)"
};

/// Generator set per K: antichains K/J (<= 4 points), their cones
/// (<= 4 total), and one join. Indices [H:K] <= opt.max_index.
std::vector<CorpusEntry> build_corpus(const std::vector<grp::Group>& groups,
                                      const Options& opt) {
  std::vector<CorpusEntry> out;
  for (const auto& h : groups) {
    auto h_lat = grp::subgroup_lattice(h);
    for (int c = 0; c < h_lat->num_classes(); ++c) {
      if (h->order / h_lat->rep_size(c) > opt.max_index) continue;
      auto k = grp::subgroup_group(h, h_lat->rep_mask(c));
      auto k_lat = grp::subgroup_lattice(k.group);
      const std::string prefix = "group=" + h->name + " K=#" + std::to_string(c) + " X=";
      for (int j = 0; j < k_lat->num_classes(); ++j) {
        auto orbit = gset::transitive_gset(k.group, k_lat->rep_mask(j));
        const std::string tok = "K/#" + std::to_string(j);
        if (orbit.size <= 4)
          out.push_back({h, k, c, gposet::discrete_gposet(orbit),
                         prefix + "antichain(" + tok + ")"});
        if (orbit.size + 1 <= 4)
          out.push_back({h, k, c, gposet::cone(gposet::discrete_gposet(orbit)),
                         prefix + "cone(" + tok + ")"});
      }
      auto pt = gposet::discrete_gposet(gset::transitive_gset(k.group, k.group->all_mask()));
      out.push_back({h, k, c, gposet::join(pt, pt), prefix + "join(K/G,K/G)"});
    }
  }
  return out;
}

bool is_abelian(const grp::FiniteGroup& g) {
  for (int a = 0; a < g.order; ++a)
    for (int b = a + 1; b < g.order; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

}  // namespace

std::vector<grp::Group> default_catalog() {
  return {grp::cyclic_group(2),
          grp::cyclic_group(4),
          grp::cyclic_group(8),
          grp::elementary_abelian_group(2, 2),
          grp::dihedral_group(8),
          grp::quaternion_group(8),
          grp::semidihedral_group(16),
          grp::cyclic_group(3),
          grp::cyclic_group(9),
          grp::cyclic_group(27),
          grp::elementary_abelian_group(3, 2),
          grp::extraspecial_group(3),
          grp::cyclic_group(5),
          grp::elementary_abelian_group(5, 2)};
}

SuiteReport mobius_suite(const std::vector<grp::Group>& groups, const Options& opt) {
  return assemble("mobius", static_cast<int>(groups.size()), opt, [&](int gi) {
    std::vector<CaseResult> out;
    const auto& g = groups[gi];
    auto lat = make_lattice(g, opt);
    const int n = lat->num_classes();

    xalg::Mat64 leq64(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) leq64(a, b) = lat->leq(a, b) ? 1 : 0;
    xalg::Mat64 ml = lat->mobius * leq64;
    xalg::Mat64 lm = leq64 * lat->mobius;
    const xalg::Mat64 id = xalg::Mat64::Identity(n, n);
    std::string inputs = "group=" + g->name + " mobius double inversion";
    bool support_ok = true;
    for (int a = 0; a < n && support_ok; ++a)
      for (int b = 0; b < n; ++b)
        if (!lat->leq(a, b) && lat->mobius(a, b) != 0) {
          support_ok = false;
          break;
        }
    if (ml == id && lm == id && support_ok) {
      out.push_back(pass_case(inputs, "both inverses exact"));
    } else {
      std::ostringstream got;
      if (!support_ok) got << "mobius nonzero outside the order relation; ";
      for (int a = 0; a < n && got.str().size() < 120; ++a)
        for (int b = 0; b < n; ++b)
          if (ml(a, b) != id(a, b) || lm(a, b) != id(a, b)) {
            got << "entry(" << a << "," << b << ")=(" << ml(a, b) << "," << lm(a, b) << ") ";
            break;
          }
      out.push_back(fail_case(inputs, "both inverses exact", got.str()));
    }

    // basis round trips: coset functions, idempotents, and seeded randoms
    std::mt19937 rng(1234 + gi);
    std::uniform_int_distribution<std::int64_t> dist(-9, 9);
    bool rt_ok = true;
    std::string rt_witness;
    auto check_rt = [&](const cfun::SuperClassFunction& f, const std::string& tag) {
      auto back = cfun::from_omega_coordinates(lat, cfun::to_omega_coordinates(f));
      if (!cfun::equal(back, f)) {
        rt_ok = false;
        if (rt_witness.empty()) rt_witness = tag + " -> " + vec_str(back.values);
      }
    };
    for (int c = 0; c < n; ++c) {
      check_rt(cfun::omega_coset(lat, c), "omega#" + std::to_string(c));
      check_rt(cfun::idempotent(lat, c), "e#" + std::to_string(c));
      auto om = cfun::omega_of_gset(lat, gset::transitive_gset(g, lat->rep_mask(c)));
      if (!cfun::equal(om, cfun::omega_coset(lat, c))) {
        rt_ok = false;
        if (rt_witness.empty()) rt_witness = "coset gset omega#" + std::to_string(c);
      }
    }
    for (int t = 0; t < 5; ++t) {
      Vec64 v(n);
      for (int i = 0; i < n; ++i) v(i) = dist(rng);
      check_rt(cfun::make_cfun(lat, std::move(v)), "random#" + std::to_string(t));
    }
    out.push_back(rt_ok ? pass_case("group=" + g->name + " basis round trips", "exact")
                        : fail_case("group=" + g->name + " basis round trips", "exact",
                                    rt_witness));
    return out;
  });
}

SuiteReport tensor_induction_suite(const std::vector<grp::Group>& groups,
                                   const Options& opt) {
  struct Unit {
    grp::Group h;
    int k_class;
  };
  std::vector<Unit> units;
  for (const auto& h : groups) {
    auto lat = grp::subgroup_lattice(h);
    for (int c = 0; c < lat->num_classes(); ++c) units.push_back({h, c});
  }
  return assemble("tensor-induction", static_cast<int>(units.size()), opt, [&](int ui) {
    std::vector<CaseResult> out;
    const auto& [h, c] = units[ui];
    auto h_lat = make_lattice(h, opt);
    auto k = grp::subgroup_group(h, h_lat->rep_mask(c));
    auto k_lat = grp::subgroup_lattice(k.group);
    auto u = biset::induction_biset(k);
    const std::string inputs = "group=" + h->name + " K=#" + std::to_string(c);

    std::string mismatch;
    for (int j = 0; j < k_lat->num_classes(); ++j) {
      auto lhs = cfun::jnd(u, cfun::omega_coset(k_lat, j), h_lat);
      auto rhs = dade::tensor_induction_formula(
          k, gset::transitive_gset(k.group, k_lat->rep_mask(j)), h_lat);
      if (lhs.values != rhs.values) {
        mismatch = "J=#" + std::to_string(j) + " biset " + vec_str(lhs.values) +
                   " vs formula " + vec_str(rhs.values);
        break;
      }
    }
    out.push_back(mismatch.empty()
                      ? pass_case(inputs + " formula", "biset route equals formula route")
                      : fail_case(inputs + " formula", "biset route equals formula route",
                                  mismatch));

    // the induced image of the congruence sublattice stays inside the target's
    auto k_bs = dade::borel_smith_lattice(k_lat);
    auto h_bs = dade::borel_smith_lattice(grp::subgroup_lattice(h));
    std::string escaped;
    for (int r = 0; r < k_bs.basis.rows() && escaped.empty(); ++r) {
      Vec64 row(k_bs.basis.cols());
      for (int i = 0; i < row.size(); ++i) row(i) = static_cast<std::int64_t>(k_bs.basis(r, i));
      auto image = cfun::jnd(u, cfun::make_cfun(k_lat, std::move(row)), h_lat);
      const bool direct = dade::satisfies_conditions(h_bs, image.values);
      if (!direct) escaped = "basis row " + std::to_string(r) + " -> " + vec_str(image.values);
    }
    out.push_back(escaped.empty()
                      ? pass_case(inputs + " sublattice", "image satisfies all conditions")
                      : fail_case(inputs + " sublattice", "image satisfies all conditions",
                                  escaped));
    return out;
  });
}

SuiteReport fixed_point_suite(const std::vector<grp::Group>& groups, const Options& opt) {
  auto corpus = build_corpus(groups, opt);
  return assemble("fixed-points", static_cast<int>(corpus.size()), opt, [&](int ci) {
    std::vector<CaseResult> out;
    const auto& e = corpus[ci];
    const std::string expected = "fixed subposets match symmetric joins for every L";
    auto u = biset::induction_biset(e.k);
    gposet::GPoset jn = gposet::empty_gposet(e.h);
    try {
      jn = gposet::join_induce(u, e.x);
    } catch (const std::length_error& err) {
      out.push_back(skip_case(e.key, expected, std::string("capped: ") + err.what()));
      return out;
    }
    auto h_lat = grp::subgroup_lattice(e.h);
    std::string mismatch;
    for (std::size_t si = 0; si < h_lat->subgroups.size() && mismatch.empty(); ++si) {
      const grp::Mask l = h_lat->subgroups[si];
      auto left = gposet::fixed_subposet(jn, l);
      std::vector<poset::Poset> parts;
      for (int rep : grp::double_coset_reps(*e.h, l, e.k.mask))
        parts.push_back(gposet::fixed_subposet(e.x, biset::l_u_subgroup(u, l, rep)));
      auto right = symmetric_join(parts);
      if (left.size != right.size || !poset::posets_isomorphic(left, right))
        mismatch = "L=subgroup#" + std::to_string(si) + " sizes " +
                   std::to_string(left.size) + " vs " + std::to_string(right.size);
    }
    out.push_back(mismatch.empty() ? pass_case(e.key, expected)
                                   : fail_case(e.key, expected, mismatch));
    return out;
  });
}

SuiteReport dim_functoriality_suite(const std::vector<grp::Group>& groups,
                                    const Options& opt) {
  auto corpus = build_corpus(groups, opt);
  // group corpus indices by (group name, K class) for the join-additivity pairs
  return assemble("dim-functoriality", static_cast<int>(corpus.size()), opt, [&](int ci) {
    std::vector<CaseResult> out;
    const auto& e = corpus[ci];
    const int p = e.h->prime;
    auto x_rep = moore::analyze(e.x, p);
    if (!x_rep.is_moore) {
      out.push_back(fail_case(e.key, "corpus poset has concentrated homology",
                              "not concentrated"));
      return out;
    }
    auto dim_x = x_rep.dim_function();
    auto u = biset::induction_biset(e.k);

    // induced join: Dim(jn X) = generalized induction of Dim X
    try {
      auto jn = gposet::join_induce(u, e.x);
      auto jn_rep = moore::analyze(jn, p, opt.chain_cap);
      if (!jn_rep.is_moore) {
        out.push_back(fail_case(e.key + " functoriality", "induced join is concentrated",
                                "not concentrated"));
      } else {
        auto lhs = jn_rep.dim_function();
        auto rhs = cfun::jnd(u, dim_x, jn_rep.lattice);
        out.push_back(lhs.values == rhs.values
                          ? pass_case(e.key + " functoriality", "Dim(jn X) = Jnd(Dim X)")
                          : fail_case(e.key + " functoriality", "Dim(jn X) = Jnd(Dim X)",
                                      vec_str(lhs.values) + " vs " + vec_str(rhs.values)));
      }
    } catch (const std::length_error& err) {
      out.push_back(skip_case(e.key + " functoriality", "Dim(jn X) = Jnd(Dim X)",
                              std::string("capped: ") + err.what()));
    }

    // join additivity against every corpus partner over the same subgroup
    for (std::size_t cj = ci; cj < corpus.size(); ++cj) {
      const auto& f = corpus[cj];
      if (f.h != e.h || f.k_class != e.k_class) continue;
      const std::string key = e.key + " * " + f.key.substr(f.key.find("X="));
      try {
        auto join_rep = moore::analyze(gposet::join(e.x, f.x), p);
        auto f_rep = moore::analyze(f.x, p);
        if (!join_rep.is_moore || !f_rep.is_moore) {
          out.push_back(fail_case(key, "join of corpus posets is concentrated",
                                  "not concentrated"));
          continue;
        }
        auto sum = cfun::add(dim_x, f_rep.dim_function());
        out.push_back(join_rep.dim_function().values == sum.values
                          ? pass_case(key, "Dim(X*Y) = Dim X + Dim Y")
                          : fail_case(key, "Dim(X*Y) = Dim X + Dim Y",
                                      vec_str(join_rep.dim_function().values) + " vs " +
                                          vec_str(sum.values)));
      } catch (const std::length_error& err) {
        out.push_back(skip_case(key, "Dim(X*Y) = Dim X + Dim Y",
                                std::string("capped: ") + err.what()));
      }
    }
    return out;
  });
}

SuiteReport tight_formula_suite(const std::vector<grp::Group>& groups, const Options& opt) {
  auto corpus = build_corpus(groups, opt);
  return assemble("tight-formula", static_cast<int>(corpus.size()), opt, [&](int ci) {
    std::vector<CaseResult> out;
    const auto& e = corpus[ci];
    const int p = e.h->prime;
    auto check = [&out](const std::string& key, const moore::MooreReport& rep) {
      if (!(rep.is_moore && rep.is_tight && rep.is_full && rep.is_capped)) {
        std::string why = "not applicable:";
        if (!rep.is_moore) why += " not-concentrated";
        if (!rep.is_tight) why += " not-tight";
        if (!rep.is_full) why += " not-full";
        if (!rep.is_capped) why += " not-capped";
        out.push_back(skip_case(key, "cell sum equals homology class", why));
        return;
      }
      auto b = dade::borel_smith_lattice(rep.lattice);
      auto tf = dade::tight_formula(b, rep);
      auto ds = moore::dimsum_check(rep);
      if (tf.matches && ds.applicable && ds.ok) {
        out.push_back(pass_case(key, "cell sum equals homology class"));
      } else {
        out.push_back(fail_case(key, "cell sum equals homology class",
                                std::string(tf.matches ? "" : "class sum mismatch ") +
                                    (ds.ok ? "" : "dimension sum mismatch")));
      }
    };
    check(e.key + " over K", moore::analyze(e.x, p));
    try {
      auto jn = gposet::join_induce(biset::induction_biset(e.k), e.x);
      check(e.key + " induced", moore::analyze(jn, p, opt.chain_cap));
    } catch (const std::length_error& err) {
      out.push_back(skip_case(e.key + " induced", "cell sum equals homology class",
                              std::string("capped: ") + err.what()));
    }
    return out;
  });
}

SuiteReport homology_shadow_suite(const std::vector<grp::Group>& groups,
                                  const Options& opt) {
  auto corpus = build_corpus(groups, opt);
  return assemble("homology-shadow", static_cast<int>(corpus.size()), opt, [&](int ci) {
    std::vector<CaseResult> out;
    const auto& e = corpus[ci];
    const int p = e.h->prime;
    const int index = e.h->order / static_cast<int>(grp::mask_size(e.k.mask));
    const std::string expected = "total homology dimension is the [H:K]-th power";
    try {
      auto jn = gposet::join_induce(biset::induction_biset(e.k), e.x);
      poset::count_chains(jn.order, opt.chain_cap);  // throws length_error over cap
      const std::int64_t base = moore::total_betti(e.x.order, p);
      const std::int64_t got = moore::total_betti(jn.order, p);
      const std::int64_t want = pow64(base, index);
      out.push_back(got == want
                        ? pass_case(e.key, expected)
                        : fail_case(e.key, expected,
                                    std::to_string(got) + " vs " + std::to_string(base) +
                                        "^" + std::to_string(index) + "=" +
                                        std::to_string(want)));
    } catch (const std::length_error& err) {
      out.push_back(skip_case(e.key, expected, std::string("capped: ") + err.what()));
    }
    return out;
  });
}

SuiteReport borel_smith_oracle_suite(const std::vector<grp::Group>& groups,
                                     const Options& opt) {
  return assemble("borel-smith-oracle", static_cast<int>(groups.size()), opt, [&](int gi) {
    std::vector<CaseResult> out;
    const auto& g = groups[gi];
    const std::string inputs = "group=" + g->name;
    const std::string expected =
        "sphere dimension functions are members and span the sublattice";
    auto b = dade::borel_smith_lattice(make_lattice(g, opt));
    try {
      auto oracle = dade::representation_sphere_check(b);
      if (oracle.all_members && oracle.spans) {
        out.push_back(pass_case(inputs, expected));
      } else {
        std::string got = oracle.all_members ? "" : "non-member function(s):";
        for (int i : oracle.outside) got += " #" + std::to_string(i);
        if (!oracle.spans) got += std::string(got.empty() ? "" : "; ") + "span too small";
        out.push_back(fail_case(inputs, expected, got));
      }
    } catch (const std::invalid_argument&) {
      const bool abelian = is_abelian(*g);
      if (abelian) {
        out.push_back(fail_case(inputs, expected, "no tabulated functions for an abelian group"));
      } else {
        out.push_back(skip_case(inputs, expected, "no tabulated sphere functions"));
      }
    }
    return out;
  });
}

std::vector<SuiteReport> all_suites(const std::vector<grp::Group>& groups,
                                    const Options& opt) {
  std::vector<SuiteReport> out;
  out.push_back(mobius_suite(groups, opt));
  out.push_back(tensor_induction_suite(groups, opt));
  out.push_back(fixed_point_suite(groups, opt));
  out.push_back(dim_functoriality_suite(groups, opt));
  out.push_back(tight_formula_suite(groups, opt));
  out.push_back(homology_shadow_suite(groups, opt));
  out.push_back(borel_smith_oracle_suite(groups, opt));
  return out;
}

gposet::GPoset nontight_demo_poset() {
  // Vertices 0..2: a free orbit; 3,4: fixed suspension poles; 11: a fixed
  // whisker endpoint over pole 3. Elements 5+2x+j: the edge from vertex x
  // to pole 3+j. The realization is a suspension of three points (a wedge
  // of two circles) with one extra contractible edge attached at a pole.
  auto g = grp::cyclic_group(3);
  std::vector<std::pair<int, int>> rel;
  for (int x = 0; x < 3; ++x)
    for (int j = 0; j < 2; ++j) {
      rel.push_back({x, 5 + 2 * x + j});
      rel.push_back({3 + j, 5 + 2 * x + j});
    }
  rel.push_back({3, 11});
  auto order = poset::make_poset(12, rel);
  std::vector<int> action(3 * 12);
  for (int e = 0; e < 3; ++e) {
    for (int x = 0; x < 3; ++x) {
      const int gx = g->mul(e, x);
      action[e * 12 + x] = gx;
      for (int j = 0; j < 2; ++j) action[e * 12 + 5 + 2 * x + j] = 5 + 2 * gx + j;
    }
    for (int f : {3, 4, 11}) action[e * 12 + f] = f;
  }
  return gposet::make_gposet(g, std::move(order), std::move(action));
}

gposet::GPoset wedge_demo_poset() {
  // Two suspensions glued at the shared apex 0: suspension of the orbit
  // G/H1 with poles {0, 1}, and of G/H2 with poles {0, 2}.
  //   0 = shared apex, 1, 2 = free poles,
  //   3..5  = orbit G/H1, 6..8 = orbit G/H2,
  //   9..11 = edges 0-(3+i), 12..14 = edges 1-(3+i),
  //   15..17 = edges 0-(6+i), 18..20 = edges 2-(6+i).
  auto g = grp::elementary_abelian_group(3, 2);
  auto lat = grp::subgroup_lattice(g);
  auto xa = gset::transitive_gset(g, lat->rep_mask(1));
  auto xb = gset::transitive_gset(g, lat->rep_mask(2));
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < 3; ++i) {
    rel.push_back({0, 9 + i});
    rel.push_back({3 + i, 9 + i});
    rel.push_back({1, 12 + i});
    rel.push_back({3 + i, 12 + i});
    rel.push_back({0, 15 + i});
    rel.push_back({6 + i, 15 + i});
    rel.push_back({2, 18 + i});
    rel.push_back({6 + i, 18 + i});
  }
  auto order = poset::make_poset(21, rel);
  std::vector<int> action(static_cast<std::size_t>(g->order) * 21);
  for (int e = 0; e < g->order; ++e) {
    for (int f : {0, 1, 2}) action[e * 21 + f] = f;
    for (int i = 0; i < 3; ++i) {
      const int ai = xa.act(e, i), bi = xb.act(e, i);
      action[e * 21 + 3 + i] = 3 + ai;
      action[e * 21 + 9 + i] = 9 + ai;
      action[e * 21 + 12 + i] = 12 + ai;
      action[e * 21 + 6 + i] = 6 + bi;
      action[e * 21 + 15 + i] = 15 + bi;
      action[e * 21 + 18 + i] = 18 + bi;
    }
  }
  return gposet::make_gposet(g, std::move(order), std::move(action));
}

}  // namespace dadelab::verify
