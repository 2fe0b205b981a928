// dade-lab: exact computations with super class functions, congruence
// sublattices, and equivariant poset homology over finite p-groups.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dadelab/biset.hpp"
#include "dadelab/cfun.hpp"
#include "dadelab/dade.hpp"
#include "dadelab/gposet.hpp"
#include "dadelab/group.hpp"
#include "dadelab/gset.hpp"
#include "dadelab/jsonio.hpp"
#include "dadelab/lattice.hpp"
#include "dadelab/moore.hpp"
#include "dadelab/verify.hpp"
#include "dadelab/xalg.hpp"

namespace {

using dadelab::jsonio::json;
using namespace dadelab;

struct Common {
  std::string group_spec;
  std::string format = "text";
  std::string out_path;
};

void add_common(CLI::App* cmd, Common& c, bool need_group = true) {
  auto* g = cmd->add_option("--group", c.group_spec,
                            "group spec: cyclic:N, elem:P:K, dihedral:N, quaternion:N, "
                            "semidihedral:N, extraspecial:P, inline JSON, or a file path");
  if (need_group) g->required();
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", c.out_path, "write the report to a file instead of stdout");
}

int emit(const Common& c, const std::string& text) {
  if (c.out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(c.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << c.out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

std::string vec_text(const xalg::Vec64& v) {
  std::ostringstream ss;
  ss << "(";
  for (int i = 0; i < v.size(); ++i) ss << (i ? "," : "") << v(i);
  ss << ")";
  return ss.str();
}

std::string intvec_text(const xalg::IntVec& v) {
  std::ostringstream ss;
  ss << "(";
  for (int i = 0; i < v.size(); ++i) ss << (i ? "," : "") << v(i);
  ss << ")";
  return ss.str();
}

json intvec_json(const xalg::IntVec& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(static_cast<std::int64_t>(v(i)));
  return a;
}

json vec_json(const xalg::Vec64& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

std::string kind_name(grp::SubquotientType t) {
  switch (t) {
    case grp::SubquotientType::CpOdd: return "cyclic-odd-p";
    case grp::SubquotientType::C4: return "cyclic-4";
    case grp::SubquotientType::CpxCp: return "rank-two-elementary";
    case grp::SubquotientType::Q8: return "quaternion-8";
    default: return "other";
  }
}

int default_threads() {
  if (const char* env = std::getenv("DADE_LAB_THREADS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      return 1;
    }
  }
  return 1;
}

// ---------------------------------------------------------------- group-info

int run_group_info(const Common& c) {
  auto g = jsonio::parse_group_spec(c.group_spec);
  auto lat = grp::subgroup_lattice(g);
  const int nc = lat->num_classes();
  if (c.format == "json") {
    json classes = json::array();
    for (int i = 0; i < nc; ++i) {
      json rep = json::array();
      for (int e : grp::mask_elements(lat->rep_mask(i))) rep.push_back(e);
      classes.push_back(json{{"class_size", static_cast<int>(lat->class_members[i].size())},
                             {"index", i},
                             {"order", lat->rep_size(i)},
                             {"rep", std::move(rep)}});
    }
    json mobius = json::array();
    for (int a = 0; a < nc; ++a) {
      json row = json::array();
      for (int b = 0; b < nc; ++b) row.push_back(lat->mobius(a, b));
      mobius.push_back(std::move(row));
    }
    json census = json::array();
    for (auto n : grp::order_census(*g)) census.push_back(n);
    return emit(c, json_text(json{{"classes", std::move(classes)},
                                  {"group", jsonio::group_to_json(g)},
                                  {"mobius", std::move(mobius)},
                                  {"name", g->name},
                                  {"num_classes", nc},
                                  {"order", g->order},
                                  {"order_census", std::move(census)},
                                  {"prime", g->prime},
                                  {"subgroups", static_cast<int>(lat->subgroups.size())}}));
  }
  std::ostringstream ss;
  ss << "group " << g->name << ": order " << g->order << ", prime " << g->prime << ", "
     << lat->subgroups.size() << " subgroups in " << nc << " classes\n";
  ss << "  class  order  class-size  representative\n";
  for (int i = 0; i < nc; ++i) {
    ss << "  #" << i << "     " << lat->rep_size(i) << "      " << lat->class_members[i].size()
       << "           {";
    bool first = true;
    for (int e : grp::mask_elements(lat->rep_mask(i))) {
      ss << (first ? "" : ",") << e;
      first = false;
    }
    ss << "}\n";
  }
  ss << "  mobius table (classes x classes):\n";
  for (int a = 0; a < nc; ++a) {
    ss << "   ";
    for (int b = 0; b < nc; ++b) ss << " " << lat->mobius(a, b);
    ss << "\n";
  }
  return emit(c, ss.str());
}

// ---------------------------------------------------------------------- cfun

int run_cfun_bases(const Common& c) {
  auto g = jsonio::parse_group_spec(c.group_spec);
  auto lat = grp::subgroup_lattice(g);
  const int nc = lat->num_classes();
  xalg::Mat64 omega(nc, nc);
  for (int h = 0; h < nc; ++h) omega.row(h) = cfun::omega_coset(lat, h).values.transpose();
  xalg::Mat64 prod = lat->mobius * omega.transpose();
  const bool ok = prod == xalg::Mat64::Identity(nc, nc);
  if (c.format == "json") {
    json rows = json::array();
    for (int h = 0; h < nc; ++h) rows.push_back(vec_json(omega.row(h).transpose()));
    json mob = json::array();
    for (int a = 0; a < nc; ++a) mob.push_back(vec_json(lat->mobius.row(a).transpose()));
    return emit(c, json_text(json{{"coset_function_values", std::move(rows)},
                                  {"group", jsonio::group_to_json(g)},
                                  {"inverse_check", ok},
                                  {"mobius", std::move(mob)}}));
  }
  std::ostringstream ss;
  ss << "coset-function basis over " << g->name << " (row h = values of the class-h coset "
        "function):\n";
  for (int h = 0; h < nc; ++h) ss << "  omega#" << h << " = " << vec_text(omega.row(h).transpose()) << "\n";
  ss << "mobius * transpose = identity: " << (ok ? "yes" : "NO") << "\n";
  return emit(c, ss.str());
}

int run_cfun_convert(const Common& c, const std::string& func, const std::string& coords) {
  auto g = jsonio::parse_group_spec(c.group_spec);
  auto lat = grp::subgroup_lattice(g);
  cfun::SuperClassFunction f = cfun::zero_cfun(lat);
  if (coords == "values") {
    f = jsonio::parse_cfun_arg(lat, func);
  } else {
    auto raw = jsonio::parse_cfun_arg(lat, func);
    f = cfun::from_omega_coordinates(lat, raw.values);
  }
  auto om = cfun::to_omega_coordinates(f);
  const bool ok = cfun::equal(cfun::from_omega_coordinates(lat, om), f);
  if (c.format == "json")
    return emit(c, json_text(json{{"group", jsonio::group_to_json(g)},
                                  {"omega_coordinates", vec_json(om)},
                                  {"round_trip_ok", ok},
                                  {"values", vec_json(f.values)}}));
  std::ostringstream ss;
  ss << "values            " << vec_text(f.values) << "\n";
  ss << "omega coordinates " << vec_text(om) << "\n";
  ss << "round trip exact: " << (ok ? "yes" : "NO") << "\n";
  return emit(c, ss.str());
}

int run_cfun_jnd(const Common& c, const std::string& from_tok, const std::string& func) {
  auto g = jsonio::parse_group_spec(c.group_spec);
  auto lat = grp::subgroup_lattice(g);
  auto k = grp::subgroup_group(g, jsonio::parse_subgroup_token(*lat, from_tok));
  auto k_lat = grp::subgroup_lattice(k.group);
  auto f = jsonio::parse_cfun_arg(k_lat, func);
  auto u = biset::induction_biset(k);
  auto image = cfun::jnd(u, f, lat);
  auto image2 = cfun::jnd_via_opposite(u, f, lat);
  const bool agree = cfun::equal(image, image2);
  if (c.format == "json")
    return emit(c, json_text(json{{"from", from_tok},
                                  {"function_values", vec_json(f.values)},
                                  {"group", jsonio::group_to_json(g)},
                                  {"image_omega_coordinates",
                                   vec_json(cfun::to_omega_coordinates(image))},
                                  {"image_values", vec_json(image.values)},
                                  {"routes_agree", agree}}));
  std::ostringstream ss;
  ss << "induction " << k.group->name << " -> " << g->name << "\n";
  ss << "input  " << vec_text(f.values) << "\n";
  ss << "image  " << vec_text(image.values) << " (omega coords "
     << vec_text(cfun::to_omega_coordinates(image)) << ")\n";
  ss << "orbit route and opposite route agree: " << (agree ? "yes" : "NO") << "\n";
  return emit(c, ss.str());
}

// ---------------------------------------------------------------------- dade

json conditions_json(const dade::BorelSmithBasis& b) {
  json conds = json::array();
  for (const auto& cond : b.conditions)
    conds.push_back(json{{"h_order", grp::mask_size(cond.h)},
                         {"kind", kind_name(cond.kind)},
                         {"l_order", grp::mask_size(cond.l)},
                         {"modulus", cond.modulus}});
  return conds;
}

int run_dade_borel_smith(const Common& c) {
  auto g = jsonio::parse_group_spec(c.group_spec);
  auto b = dade::borel_smith_lattice(grp::subgroup_lattice(g));
  if (c.format == "json") {
    json basis = json::array();
    for (int r = 0; r < b.basis.rows(); ++r) {
      json row = json::array();
      for (int i = 0; i < b.basis.cols(); ++i)
        row.push_back(static_cast<std::int64_t>(b.basis(r, i)));
      basis.push_back(std::move(row));
    }
    return emit(c, json_text(json{{"basis", std::move(basis)},
                                  {"conditions", conditions_json(b)},
                                  {"group", jsonio::group_to_json(g)},
                                  {"num_classes", b.lattice->num_classes()},
                                  {"rank", b.rank()}}));
  }
  std::ostringstream ss;
  ss << "congruence sublattice of " << g->name << ": rank " << b.rank() << " of "
     << b.lattice->num_classes() << " classes, " << b.conditions.size() << " conditions\n";
  for (const auto& cond : b.conditions)
    ss << "  " << kind_name(cond.kind) << " on |L|=" << grp::mask_size(cond.l)
       << " |H|=" << grp::mask_size(cond.h)
       << (cond.modulus ? " (mod " + std::to_string(cond.modulus) + ")" : " (equality)")
       << "\n";
  ss << "basis rows:\n";
  for (int r = 0; r < b.basis.rows(); ++r) {
    ss << "  (";
    for (int i = 0; i < b.basis.cols(); ++i)
      ss << (i ? "," : "") << b.basis(r, i);
    ss << ")\n";
  }
  return emit(c, ss.str());
}

int run_dade_structure(const Common& c) {
  auto g = jsonio::parse_group_spec(c.group_spec);
  auto b = dade::borel_smith_lattice(grp::subgroup_lattice(g));
  auto st = dade::dade_structure(b);
  json checks = json::array();
  bool blocked = false;

  // independent minors-based invariant factors (exponential; small ranks only)
  if (b.lattice->num_classes() <= 12) {
    std::vector<xalg::Int> expect;
    for (const auto& d : xalg::invariant_factors_by_minors(b.basis))
      if (d > 1) expect.push_back(d);
    const bool ok = expect == st.torsion;
    checks.push_back(json{{"name", "minors-cross-check"},
                          {"status", ok ? "pass" : "fail"},
                          {"witness", ok ? "" : "invariant factors disagree"}});
    if (!ok) blocked = true;
  } else {
    checks.push_back(json{{"name", "minors-cross-check"},
                          {"status", "skipped"},
                          {"witness", "lattice too large for the exponential oracle"}});
  }

  try {
    auto oracle = dade::representation_sphere_check(b);
    const bool ok = oracle.all_members && oracle.spans;
    std::string witness;
    for (int i : oracle.outside) witness += (witness.empty() ? "function #" : ", #") + std::to_string(i);
    if (!oracle.spans) witness += witness.empty() ? "span too small" : "; span too small";
    checks.push_back(json{{"name", "representation-sphere-oracle"},
                          {"status", ok ? "pass" : "fail"},
                          {"witness", witness}});
    if (!ok) blocked = true;
  } catch (const std::invalid_argument&) {
    checks.push_back(json{{"name", "representation-sphere-oracle"},
                          {"status", "skipped"},
                          {"witness", "no tabulated sphere functions for this group"}});
  }

  if (blocked) {
    std::cerr << "error: structure output blocked: an independent check failed for "
              << g->name << "\n"
              << json_text(checks);
    return 1;
  }

  json torsion = json::array();
  for (const auto& d : st.torsion) torsion.push_back(static_cast<std::int64_t>(d));
  if (c.format == "json")
    return emit(c, json_text(json{{"checks", std::move(checks)},
                                  {"free_rank", st.free_rank},
                                  {"group", jsonio::group_to_json(g)},
                                  {"torsion", std::move(torsion)}}));
  std::ostringstream ss;
  ss << "syzygy-class group of " << g->name << ": free rank " << st.free_rank;
  if (st.torsion.empty()) {
    ss << ", no torsion\n";
  } else {
    ss << ", torsion [";
    for (std::size_t i = 0; i < st.torsion.size(); ++i)
      ss << (i ? "," : "") << st.torsion[i];
    ss << "]\n";
  }
  for (const auto& ch : checks)
    ss << "  check " << ch.at("name").get<std::string>() << ": "
       << ch.at("status").get<std::string>() << "\n";
  return emit(c, ss.str());
}

int run_dade_psi(const Common& c, const std::string& func) {
  auto g = jsonio::parse_group_spec(c.group_spec);
  auto lat = grp::subgroup_lattice(g);
  auto b = dade::borel_smith_lattice(lat);
  auto f = jsonio::parse_cfun_arg(lat, func);
  auto e = dade::psi(b, f);
  const bool member = dade::satisfies_conditions(b, f.values);
  if (member != e.is_zero()) {
    std::cerr << "error: membership routes disagree (internal inconsistency)\n";
    return 1;
  }
  if (c.format == "json")
    return emit(c, json_text(json{{"function_values", vec_json(f.values)},
                                  {"group", jsonio::group_to_json(g)},
                                  {"member", member},
                                  {"rep", intvec_json(e.rep)},
                                  {"zero", e.is_zero()}}));
  std::ostringstream ss;
  ss << "psi" << vec_text(f.values) << " = " << intvec_text(e.rep)
     << (e.is_zero() ? " (zero: the function satisfies every condition)" : " (nonzero class)")
     << "\n";
  return emit(c, ss.str());
}

// --------------------------------------------------------------------- moore

int moore_prime(const grp::Group& g, int p_flag) {
  if (p_flag > 0) return p_flag;
  if (g->prime > 0) return g->prime;
  throw std::invalid_argument("--p is required for the order-1 group");
}

int run_moore_analyze(const Common& c, const std::string& poset_src, int p_flag) {
  auto g = jsonio::parse_group_spec(c.group_spec);
  auto x = jsonio::load_gposet(g, poset_src);
  auto rep = moore::analyze(x, moore_prime(g, p_flag));
  if (c.format == "json") return emit(c, json_text(jsonio::moore_report_to_json(rep)));
  std::ostringstream ss;
  ss << "poset with " << x.size() << " elements over " << g->name << ", homology mod "
     << rep.prime << "\n";
  ss << "flags: concentrated=" << (rep.is_moore ? "yes" : "no")
     << " tight=" << (rep.is_tight ? "yes" : "no") << " full=" << (rep.is_full ? "yes" : "no")
     << " capped=" << (rep.is_capped ? "yes" : "no") << "\n";
  ss << "  class  |H|  fixed  dim  n   reduced betti (degrees -1..dim)\n";
  for (const auto& cl : rep.classes) {
    ss << "  #" << cl.cls << "     " << rep.lattice->rep_size(cl.cls) << "    " << cl.fixed_size
       << "      " << cl.dim << "   " << cl.n << "   [";
    for (std::size_t i = 0; i < cl.betti.size(); ++i) ss << (i ? "," : "") << cl.betti[i];
    ss << "]\n";
  }
  if (rep.is_moore)
    ss << "dimension function: " << vec_text(rep.dim_function().values) << "\n";
  auto ds = moore::dimsum_check(rep);
  if (ds.applicable)
    ss << "orbit dimension sum matches: " << (ds.ok ? "yes" : "NO") << "\n";
  return emit(c, ss.str());
}

int run_moore_hom(const Common& c, const std::string& poset_src, int p_flag) {
  auto g = jsonio::parse_group_spec(c.group_spec);
  auto x = jsonio::load_gposet(g, poset_src);
  auto rep = moore::analyze(x, moore_prime(g, p_flag));
  auto b = dade::borel_smith_lattice(rep.lattice);
  auto e = dade::hom_of_moore(b, rep);
  if (c.format == "json") {
    json j = jsonio::dade_element_to_json(e);
    j["dim_function"] = vec_json(rep.dim_function().values);
    return emit(c, json_text(j));
  }
  std::ostringstream ss;
  ss << "dimension function " << vec_text(rep.dim_function().values) << "\n";
  ss << "homology class " << intvec_text(e.rep) << (e.is_zero() ? " (zero)" : " (nonzero)")
     << "\n";
  return emit(c, ss.str());
}

int run_moore_tight(const Common& c, const std::string& poset_src, int p_flag) {
  auto g = jsonio::parse_group_spec(c.group_spec);
  auto x = jsonio::load_gposet(g, poset_src);
  auto rep = moore::analyze(x, moore_prime(g, p_flag));
  auto b = dade::borel_smith_lattice(rep.lattice);
  auto tf = dade::tight_formula(b, rep);
  if (c.format == "json")
    return emit(c, json_text(json{{"cell_sum_rep", intvec_json(tf.cell_sum.rep)},
                                  {"group", jsonio::group_to_json(g)},
                                  {"hom_rep", intvec_json(tf.hom.rep)},
                                  {"m", tf.m},
                                  {"matches", tf.matches},
                                  {"n", tf.n}}));
  std::ostringstream ss;
  ss << "m = " << tf.m << ", n = " << tf.n << "\n";
  ss << "orbit-class sum over degrees m+1..n: " << intvec_text(tf.cell_sum.rep) << "\n";
  ss << "homology class:                      " << intvec_text(tf.hom.rep) << "\n";
  ss << "match: " << (tf.matches ? "yes" : "NO") << "\n";
  return emit(c, ss.str());
}

// --------------------------------------------------------------- join/induce

int run_join(const Common& c, const std::vector<std::string>& sources) {
  auto g = jsonio::parse_group_spec(c.group_spec);
  std::vector<gposet::GPoset> parts;
  parts.reserve(sources.size());
  for (const auto& s : sources) parts.push_back(jsonio::load_gposet(g, s));
  auto joined = gposet::join_many(parts);
  return emit(c, json_text(jsonio::gposet_to_json(joined)));
}

int run_induce(const Common& c, const std::string& from_tok, const std::string& poset_src) {
  auto g = jsonio::parse_group_spec(c.group_spec);
  auto lat = grp::subgroup_lattice(g);
  auto k = grp::subgroup_group(g, jsonio::parse_subgroup_token(*lat, from_tok));
  auto x = jsonio::load_gposet(k.group, poset_src);
  auto induced = gposet::join_induce(biset::induction_biset(k), x);
  return emit(c, json_text(jsonio::gposet_to_json(induced)));
}

// -------------------------------------------------------------------- verify

json suite_json(const verify::SuiteReport& rep) {
  json cases = json::array();
  for (const auto& cs : rep.cases) {
    const char* status = cs.status == verify::Status::Pass     ? "pass"
                         : cs.status == verify::Status::Fail   ? "fail"
                                                               : "skipped-by-cap";
    cases.push_back(json{{"expected", cs.expected},
                         {"got", cs.got},
                         {"inputs", cs.inputs},
                         {"status", status}});
  }
  return json{{"cases", std::move(cases)},
              {"suite", rep.suite},
              {"summary",
               json{{"fail", rep.failed()},
                    {"pass", rep.passed()},
                    {"skipped", rep.skipped()},
                    {"total", static_cast<int>(rep.cases.size())}}},
              {"wall_ms", rep.wall_ms}};
}

int run_verify(const Common& c, const std::string& suite, int threads, int max_index,
               const std::string& fault) {
  std::vector<grp::Group> groups;
  if (c.group_spec.empty()) {
    groups = verify::default_catalog();
  } else {
    groups = {jsonio::parse_group_spec(c.group_spec)};
  }
  verify::Options opt;
  opt.threads = threads;
  opt.max_index = max_index;
  opt.corrupt_mobius = fault == "mobius";

  std::vector<verify::SuiteReport> reports;
  if (suite == "all") {
    reports = verify::all_suites(groups, opt);
  } else if (suite == "tensor-induction") {
    reports = {verify::tensor_induction_suite(groups, opt)};
  } else if (suite == "fixed-points") {
    reports = {verify::fixed_point_suite(groups, opt)};
  } else if (suite == "dim-functoriality") {
    reports = {verify::dim_functoriality_suite(groups, opt)};
  } else if (suite == "tight-formula") {
    reports = {verify::tight_formula_suite(groups, opt)};
  } else if (suite == "borel-smith-oracle") {
    reports = {verify::borel_smith_oracle_suite(groups, opt)};
  } else {
    std::cerr << "error: unknown suite \"" << suite << "\"\n";
    return 2;
  }

  bool ok = true;
  for (const auto& rep : reports) ok = ok && rep.ok();

  if (c.format == "json") {
    json suites = json::array();
    for (const auto& rep : reports) suites.push_back(suite_json(rep));
    const int rc = emit(c, json_text(json{{"ok", ok}, {"suites", std::move(suites)}}));
    return rc != 0 ? rc : (ok ? 0 : 1);
  }
  std::ostringstream ss;
  for (const auto& rep : reports) {
    ss << "suite " << rep.suite << ": " << rep.passed() << " passed, " << rep.failed()
       << " failed, " << rep.skipped() << " skipped (" << static_cast<int>(rep.wall_ms)
       << " ms)\n";
    for (const auto& cs : rep.cases)
      if (cs.status == verify::Status::Fail)
        ss << "  FAIL " << cs.inputs << "\n       expected: " << cs.expected
           << "\n       got:      " << cs.got << "\n";
  }
  ss << (ok ? "all suites passed\n" : "FAILURES PRESENT\n");
  const int rc = emit(c, ss.str());
  return rc != 0 ? rc : (ok ? 0 : 1);
}

// ---------------------------------------------------------------------- demo

int run_demo(const Common& c, const std::string& name) {
  if (name == "c3-nontight") {
    auto x = verify::nontight_demo_poset();
    auto rep = moore::analyze(x, 3);
    auto b = dade::borel_smith_lattice(rep.lattice);
    auto hom = dade::hom_of_moore(b, rep);
    const int m = rep.classes[rep.lattice->full_class()].n;
    const int n = rep.classes[rep.lattice->trivial_class()].n;
    auto naive = dade::psi(b, cfun::zero_cfun(rep.lattice));
    for (int i = std::max(0, m + 1); i <= n; ++i)
      naive = dade::add(b, naive, dade::omega_syzygy(b, rep.cells[i]));
    const bool mismatch = !dade::equal(naive, hom);
    json j{{"demo", "c3-nontight"},
           {"group", jsonio::group_to_json(x.group)},
           {"homology_class_rep", intvec_json(hom.rep)},
           {"m", m},
           {"mismatch", mismatch},
           {"n", n},
           {"note",
            "this complex is concentrated but not tight: the orbit-class sum over "
            "degrees m+1..n vanishes while the homology class is the nonzero torsion "
            "element"},
           {"orbit_sum_rep", intvec_json(naive.rep)},
           {"report", jsonio::moore_report_to_json(rep)}};
    if (c.format == "json") return emit(c, json_text(j));
    std::ostringstream ss;
    ss << "demo c3-nontight: suspension of a free orbit wedged with a whiskered fixed edge\n";
    ss << "concentrated: yes; tight: " << (rep.is_tight ? "yes" : "no") << "; m = " << m
       << ", n = " << n << "\n";
    ss << "orbit-class sum over degrees m+1..n: " << intvec_text(naive.rep) << "\n";
    ss << "actual homology class:               " << intvec_text(hom.rep) << "\n";
    ss << "mismatch: " << (mismatch ? "yes (the sum misses the class)" : "no") << "\n";
    return emit(c, ss.str());
  }
  if (name == "c3xc3-wedge") {
    auto x = verify::wedge_demo_poset();
    auto rep = moore::analyze(x, 3);
    json badly = json::array();
    for (const auto& cl : rep.classes) {
      int nonzero = 0;
      for (auto v : cl.betti) nonzero += v != 0;
      if (nonzero > 1) badly.push_back(cl.cls);
    }
    json j{{"demo", "c3xc3-wedge"},
           {"group", jsonio::group_to_json(x.group)},
           {"moore", rep.is_moore},
           {"multi_degree_classes", std::move(badly)},
           {"note",
            "wedge of the suspensions of two distinct index-3 orbits: the fixed sets "
            "of the two stabilizing subgroups each have homology in two degrees, so "
            "no per-subgroup concentration degree exists"},
           {"report", jsonio::moore_report_to_json(rep)}};
    if (c.format == "json") return emit(c, json_text(j));
    std::ostringstream ss;
    ss << "demo c3xc3-wedge: suspensions of two index-3 orbits glued at a pole\n";
    ss << "concentrated: " << (rep.is_moore ? "yes" : "no") << "\n";
    ss << "  class  |H|  fixed  betti\n";
    for (const auto& cl : rep.classes) {
      ss << "  #" << cl.cls << "     " << rep.lattice->rep_size(cl.cls) << "    "
         << cl.fixed_size << "     [";
      for (std::size_t i = 0; i < cl.betti.size(); ++i) ss << (i ? "," : "") << cl.betti[i];
      ss << "]\n";
    }
    return emit(c, ss.str());
  }
  std::cerr << "error: unknown demo \"" << name << "\" (have: c3-nontight, c3xc3-wedge)\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for super class functions, congruence sublattices, and "
               "equivariant poset homology over finite p-groups"};
  app.require_subcommand(1);

  // group-info
  Common gi;
  auto* cmd_gi = app.add_subcommand("group-info", "orders, subgroup classes, mobius table");
  add_common(cmd_gi, gi);

  // cfun
  auto* cmd_cfun = app.add_subcommand("cfun", "super class function operations");
  cmd_cfun->require_subcommand(1);
  Common cf_bases, cf_conv, cf_jnd;
  auto* cmd_cf_bases = cmd_cfun->add_subcommand("bases", "coset-function basis and its inverse");
  add_common(cmd_cf_bases, cf_bases);
  auto* cmd_cf_conv = cmd_cfun->add_subcommand("convert", "values <-> coset-basis coordinates");
  add_common(cmd_cf_conv, cf_conv);
  std::string cf_conv_func, cf_conv_coords = "values";
  cmd_cf_conv->add_option("function", cf_conv_func,
                          "omega(TOK), comma-separated values, inline JSON, or @file")
      ->required();
  cmd_cf_conv->add_option("--coords", cf_conv_coords, "how to read the input vector")
      ->check(CLI::IsMember({"values", "omega"}))
      ->capture_default_str();
  auto* cmd_cf_jnd = cmd_cfun->add_subcommand("jnd", "generalized induction from a subgroup");
  add_common(cmd_cf_jnd, cf_jnd);
  std::string cf_jnd_from, cf_jnd_func;
  cmd_cf_jnd->add_option("--from", cf_jnd_from, "subgroup token: 1, G, or #k")->required();
  cmd_cf_jnd->add_option("function", cf_jnd_func, "class function over the subgroup")
      ->required();

  // dade
  auto* cmd_dade = app.add_subcommand("dade", "congruence sublattice and syzygy classes");
  cmd_dade->require_subcommand(1);
  Common dd_bs, dd_st, dd_psi;
  auto* cmd_dd_bs =
      cmd_dade->add_subcommand("borel-smith", "congruence conditions and sublattice basis");
  add_common(cmd_dd_bs, dd_bs);
  auto* cmd_dd_st = cmd_dade->add_subcommand("structure", "free rank and invariant factors");
  add_common(cmd_dd_st, dd_st);
  auto* cmd_dd_psi = cmd_dade->add_subcommand("psi", "canonical class of a function");
  add_common(cmd_dd_psi, dd_psi);
  std::string dd_psi_func;
  cmd_dd_psi->add_option("function", dd_psi_func, "class function over the group")->required();

  // moore
  auto* cmd_moore = app.add_subcommand("moore", "fixed-point homology of a G-poset");
  cmd_moore->require_subcommand(1);
  Common mo_an, mo_hom, mo_tf;
  std::string mo_an_poset, mo_hom_poset, mo_tf_poset;
  int mo_an_p = 0, mo_hom_p = 0, mo_tf_p = 0;
  auto* cmd_mo_an = cmd_moore->add_subcommand("analyze", "per-class Betti numbers and flags");
  add_common(cmd_mo_an, mo_an);
  cmd_mo_an->add_option("--poset", mo_an_poset, "builder expression, inline JSON, or file")
      ->required();
  cmd_mo_an->add_option("--p", mo_an_p, "homology coefficient prime (default: group prime)");
  auto* cmd_mo_hom =
      cmd_moore->add_subcommand("hom", "syzygy class of a concentrated capped complex");
  add_common(cmd_mo_hom, mo_hom);
  cmd_mo_hom->add_option("--poset", mo_hom_poset, "builder expression, inline JSON, or file")
      ->required();
  cmd_mo_hom->add_option("--p", mo_hom_p, "homology coefficient prime (default: group prime)");
  auto* cmd_mo_tf = cmd_moore->add_subcommand(
      "tight-formula", "orbit-class sum vs homology class for tight complexes");
  add_common(cmd_mo_tf, mo_tf);
  cmd_mo_tf->add_option("--poset", mo_tf_poset, "builder expression, inline JSON, or file")
      ->required();
  cmd_mo_tf->add_option("--p", mo_tf_p, "homology coefficient prime (default: group prime)");

  // join / induce
  Common jn, in;
  auto* cmd_join = app.add_subcommand("join", "join of G-posets, written as a poset file");
  add_common(cmd_join, jn);
  std::vector<std::string> jn_posets;
  cmd_join->add_option("--poset", jn_posets, "poset sources (repeatable)")
      ->required()
      ->expected(-1);
  auto* cmd_induce =
      app.add_subcommand("induce", "induced join of a subgroup poset, written as a poset file");
  add_common(cmd_induce, in);
  std::string in_from, in_poset;
  cmd_induce->add_option("--from", in_from, "subgroup token: 1, G, or #k")->required();
  cmd_induce->add_option("--poset", in_poset, "poset source over the subgroup")->required();

  // verify
  Common vf;
  auto* cmd_verify = app.add_subcommand("verify", "batch identity sweeps over the catalog");
  add_common(cmd_verify, vf, /*need_group=*/false);
  std::string vf_suite;
  int vf_threads = default_threads();
  int vf_max_index = 4;
  std::string vf_fault;
  cmd_verify
      ->add_option("suite", vf_suite,
                   "tensor-induction | fixed-points | dim-functoriality | tight-formula | "
                   "borel-smith-oracle | all")
      ->required()
      ->check(CLI::IsMember({"tensor-induction", "fixed-points", "dim-functoriality",
                             "tight-formula", "borel-smith-oracle", "all"}));
  cmd_verify->add_option("--threads", vf_threads, "worker threads (env DADE_LAB_THREADS)");
  cmd_verify->add_option("--max-index", vf_max_index, "cap on [H:K] for induction corpora")
      ->capture_default_str();
  cmd_verify
      ->add_option("--inject-fault", vf_fault,
                   "testing hook: corrupt an internal table to prove detection")
      ->check(CLI::IsMember({"mobius"}));

  // demo
  Common dm;
  auto* cmd_demo = app.add_subcommand("demo", "reproduce the worked counterexamples");
  add_common(cmd_demo, dm, /*need_group=*/false);
  std::string dm_name;
  cmd_demo->add_option("name", dm_name, "c3-nontight | c3xc3-wedge")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_gi->parsed()) return run_group_info(gi);
    if (cmd_cf_bases->parsed()) return run_cfun_bases(cf_bases);
    if (cmd_cf_conv->parsed()) return run_cfun_convert(cf_conv, cf_conv_func, cf_conv_coords);
    if (cmd_cf_jnd->parsed()) return run_cfun_jnd(cf_jnd, cf_jnd_from, cf_jnd_func);
    if (cmd_dd_bs->parsed()) return run_dade_borel_smith(dd_bs);
    if (cmd_dd_st->parsed()) return run_dade_structure(dd_st);
    if (cmd_dd_psi->parsed()) return run_dade_psi(dd_psi, dd_psi_func);
    if (cmd_mo_an->parsed()) return run_moore_analyze(mo_an, mo_an_poset, mo_an_p);
    if (cmd_mo_hom->parsed()) return run_moore_hom(mo_hom, mo_hom_poset, mo_hom_p);
    if (cmd_mo_tf->parsed()) return run_moore_tight(mo_tf, mo_tf_poset, mo_tf_p);
    if (cmd_join->parsed()) return run_join(jn, jn_posets);
    if (cmd_induce->parsed()) return run_induce(in, in_from, in_poset);
    if (cmd_verify->parsed()) return run_verify(vf, vf_suite, vf_threads, vf_max_index, vf_fault);
    if (cmd_demo->parsed()) return run_demo(dm, dm_name);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: size cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
