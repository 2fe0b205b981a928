#include "dadelab/jsonio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dadelab/biset.hpp"
#include "dadelab/lattice.hpp"

namespace dadelab::jsonio {

namespace {

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected an integer, got \"" + s + "\"");
  }
  if (used != s.size()) throw std::invalid_argument("expected an integer, got \"" + s + "\"");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string::npos ? pos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

grp::Group group_from_catalog(const std::string& kind, const json& j) {
  if (kind == "cyclic") return grp::cyclic_group(j.at("order").get<int>());
  if (kind == "elementary")
    return grp::elementary_abelian_group(j.at("p").get<int>(), j.at("rank").get<int>());
  if (kind == "dihedral") return grp::dihedral_group(j.at("order").get<int>());
  if (kind == "quaternion") return grp::quaternion_group(j.at("order").get<int>());
  if (kind == "semidihedral") return grp::semidihedral_group(j.at("order").get<int>());
  if (kind == "extraspecial") return grp::extraspecial_group(j.at("p").get<int>());
  throw std::invalid_argument("unknown catalog kind \"" + kind + "\"");
}

grp::Group group_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("group spec must be a JSON object");
  if (j.contains("catalog")) {
    const auto& c = j.at("catalog");
    return group_from_catalog(c.at("kind").get<std::string>(), c);
  }
  if (j.contains("table")) {
    const auto& rows = j.at("table");
    const int n = static_cast<int>(rows.size());
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n)
        throw std::invalid_argument("group table must be square");
      for (const auto& v : row) flat.push_back(v.get<int>());
    }
    return grp::make_group(std::move(flat), "table" + std::to_string(n));
  }
  if (j.contains("perm_gens")) {
    const int points = j.at("points").get<int>();
    std::vector<std::vector<int>> gens;
    for (const auto& cycles : j.at("perm_gens")) {
      std::vector<int> perm(points);
      for (int i = 0; i < points; ++i) perm[i] = i;
      for (const auto& cyc : cycles) {
        std::vector<int> c = cyc.get<std::vector<int>>();
        for (std::size_t i = 0; i < c.size(); ++i) {
          const int from = c[i], to = c[(i + 1) % c.size()];
          if (from < 0 || from >= points)
            throw std::invalid_argument("cycle entry out of range");
          perm[from] = to;
        }
      }
      gens.push_back(std::move(perm));
    }
    return grp::group_from_permutations(gens, points);
  }
  throw std::invalid_argument("group spec needs \"catalog\", \"table\", or \"perm_gens\"");
}

bool same_table(const grp::Group& a, const grp::Group& b) {
  return a->order == b->order && a->table == b->table;
}

/// Rebuild a catalog group from a short name like "C9", "C3xC3", "D8";
/// returns nullptr when the name is not of catalog shape.
grp::Group group_from_name(const std::string& name) {
  try {
    if (name.rfind("SD", 0) == 0) return grp::semidihedral_group(parse_int(name.substr(2)));
    if (name.rfind("ES", 0) == 0) {
      const int n = parse_int(name.substr(2));
      for (int p = 3; p * p * p <= n; ++p)
        if (p * p * p == n) return grp::extraspecial_group(p);
      return nullptr;
    }
    if (name.rfind("D", 0) == 0) return grp::dihedral_group(parse_int(name.substr(1)));
    if (name.rfind("Q", 0) == 0) return grp::quaternion_group(parse_int(name.substr(1)));
    if (name.rfind("C", 0) == 0) {
      if (name.find('x') == std::string::npos) return grp::cyclic_group(parse_int(name.substr(1)));
      auto parts = split(name, 'x');
      const int p = parse_int(parts[0].substr(1));
      for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] != "C" + std::to_string(p)) return nullptr;
      return grp::elementary_abelian_group(p, static_cast<int>(parts.size()));
    }
  } catch (const std::exception&) {
    return nullptr;
  }
  return nullptr;
}

json catalog_json(const grp::Group& g) {
  const std::string& name = g->name;
  json c;
  if (name.rfind("SD", 0) == 0) {
    c = {{"kind", "semidihedral"}, {"order", g->order}};
  } else if (name.rfind("ES", 0) == 0) {
    c = {{"kind", "extraspecial"}, {"p", g->prime}};
  } else if (name.rfind("D", 0) == 0) {
    c = {{"kind", "dihedral"}, {"order", g->order}};
  } else if (name.rfind("Q", 0) == 0) {
    c = {{"kind", "quaternion"}, {"order", g->order}};
  } else if (name.find('x') != std::string::npos) {
    int rank = 0, n = g->order;
    while (n > 1) n /= g->prime, ++rank;
    c = {{"kind", "elementary"}, {"p", g->prime}, {"rank", rank}};
  } else {
    c = {{"kind", "cyclic"}, {"order", g->order}};
  }
  return json{{"catalog", c}};
}

json action_to_json(const std::vector<int>& action, int order, int size) {
  json rows = json::array();
  for (int e = 0; e < order; ++e) {
    json row = json::array();
    for (int x = 0; x < size; ++x) row.push_back(action[e * size + x]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> action_from_json(const json& rows, int order, int size) {
  if (static_cast<int>(rows.size()) != order)
    throw std::invalid_argument("gen_action must list one permutation per group element");
  std::vector<int> action;
  action.reserve(static_cast<std::size_t>(order) * size);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != size)
      throw std::invalid_argument("gen_action permutation has the wrong length");
    for (const auto& v : row) action.push_back(v.get<int>());
  }
  return action;
}

json int64_array(const xalg::Vec64& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json betti_array(const std::vector<std::int64_t>& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

grp::Group parse_group_spec(const std::string& spec) {
  if (spec.empty()) throw std::invalid_argument("empty group spec");
  if (spec[0] == '{') return group_from_json(json::parse(spec));
  if (spec[0] == '@') return group_from_json(json::parse(read_text_file(spec.substr(1))));
  if (spec.find(':') != std::string::npos) {
    auto parts = split(spec, ':');
    const std::string& kind = parts[0];
    if (kind == "cyclic" && parts.size() == 2) return grp::cyclic_group(parse_int(parts[1]));
    if (kind == "elem" && parts.size() == 3)
      return grp::elementary_abelian_group(parse_int(parts[1]), parse_int(parts[2]));
    if (kind == "dihedral" && parts.size() == 2) return grp::dihedral_group(parse_int(parts[1]));
    if (kind == "quaternion" && parts.size() == 2)
      return grp::quaternion_group(parse_int(parts[1]));
    if (kind == "semidihedral" && parts.size() == 2)
      return grp::semidihedral_group(parse_int(parts[1]));
    if (kind == "extraspecial" && parts.size() == 2)
      return grp::extraspecial_group(parse_int(parts[1]));
    throw std::invalid_argument("unknown group spec \"" + spec + "\"");
  }
  return group_from_json(json::parse(read_text_file(spec)));
}

json group_to_json(const grp::Group& g) {
  if (auto rebuilt = group_from_name(g->name); rebuilt && same_table(rebuilt, g))
    return catalog_json(g);
  json rows = json::array();
  for (int i = 0; i < g->order; ++i) {
    json row = json::array();
    for (int j = 0; j < g->order; ++j) row.push_back(g->mul(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"table", rows}};
}

json gset_to_json(const gset::GSet& x) {
  return json{{"gen_action", action_to_json(x.action, x.group->order, x.size)},
              {"group", group_to_json(x.group)},
              {"points", x.size}};
}

gset::GSet gset_from_json(const json& j) {
  auto g = group_from_json(j.at("group"));
  const int n = j.at("points").get<int>();
  return gset::make_gset(g, n, action_from_json(j.at("gen_action"), g->order, n));
}

json gposet_to_json(const gposet::GPoset& x) {
  json names = json::array();
  for (int i = 0; i < x.size(); ++i) names.push_back("e" + std::to_string(i));
  json less = json::array();
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < x.size(); ++b)
      if (x.lt(a, b)) less.push_back(json::array({a, b}));
  return json{{"elements", std::move(names)},
              {"gen_action", action_to_json(x.action, x.group->order, x.size())},
              {"group", group_to_json(x.group)},
              {"less", std::move(less)},
              {"relation", "full"}};
}

gposet::GPoset gposet_from_json(const json& j) {
  auto g = group_from_json(j.at("group"));
  int n;
  if (j.contains("elements")) {
    n = static_cast<int>(j.at("elements").size());
  } else {
    n = j.at("points").get<int>();
  }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : j.at("less")) {
    if (e.size() != 2) throw std::invalid_argument("\"less\" entries must be pairs");
    pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  auto order = poset::make_poset(n, pairs);
  return gposet::make_gposet(g, std::move(order),
                             action_from_json(j.at("gen_action"), g->order, n));
}

json cfun_to_json(const cfun::SuperClassFunction& f) {
  const auto& lat = *f.lattice;
  json classes = json::array();
  for (int c = 0; c < lat.num_classes(); ++c) {
    json members = json::array();
    for (int e : grp::mask_elements(lat.rep_mask(c))) members.push_back(e);
    classes.push_back(json{{"index", c}, {"order", lat.rep_size(c)}, {"rep", std::move(members)}});
  }
  return json{{"classes", std::move(classes)},
              {"group", group_to_json(lat.group)},
              {"values", int64_array(f.values)}};
}

cfun::SuperClassFunction cfun_from_json(const json& j) {
  auto g = group_from_json(j.at("group"));
  auto lat = grp::subgroup_lattice(g);
  const auto& vals = j.at("values");
  if (static_cast<int>(vals.size()) != lat->num_classes())
    throw std::invalid_argument("values length does not match the class count");
  if (j.contains("classes")) {
    for (const auto& c : j.at("classes")) {
      const int idx = c.at("index").get<int>();
      if (idx < 0 || idx >= lat->num_classes())
        throw std::invalid_argument("class index out of range");
      grp::Mask m = 0;
      for (const auto& e : c.at("rep")) m |= grp::Mask{1} << e.get<int>();
      if (lat->class_index(m) != idx)
        throw std::invalid_argument("class descriptor does not match the canonical lattice");
    }
  }
  xalg::Vec64 v(lat->num_classes());
  for (int i = 0; i < v.size(); ++i) v(i) = vals[i].get<std::int64_t>();
  return cfun::make_cfun(std::move(lat), std::move(v));
}

json moore_report_to_json(const moore::MooreReport& rep) {
  const auto& lat = *rep.lattice;
  json classes = json::array();
  for (const auto& c : rep.classes) {
    classes.push_back(json{{"acyclic_nonempty", c.acyclic_nonempty},
                           {"betti", betti_array(c.betti)},
                           {"class", c.cls},
                           {"concentrated", c.concentrated},
                           {"dim", c.dim},
                           {"fixed_size", c.fixed_size},
                           {"n", c.n},
                           {"subgroup_order", lat.rep_size(c.cls)}});
  }
  json cells = json::array();
  for (std::size_t d = 0; d < rep.cells.size(); ++d) {
    cells.push_back(json{{"dim", static_cast<int>(d)},
                         {"orbits", static_cast<int>(gset::orbits(rep.cells[d]).size())},
                         {"points", rep.cells[d].size}});
  }
  json out{{"cells", std::move(cells)},
           {"classes", std::move(classes)},
           {"flags",
            json{{"capped", rep.is_capped},
                 {"full", rep.is_full},
                 {"moore", rep.is_moore},
                 {"tight", rep.is_tight}}},
           {"group", group_to_json(lat.group)},
           {"prime", rep.prime}};
  out["dim_function"] = rep.is_moore ? int64_array(rep.dim_function().values) : json(nullptr);
  return out;
}

json dade_element_to_json(const dade::DadeElement& e) {
  json rep = json::array();
  for (int i = 0; i < e.rep.size(); ++i) rep.push_back(static_cast<std::int64_t>(e.rep(i)));
  return json{{"group", group_to_json(e.lattice->group)},
              {"rep", std::move(rep)},
              {"zero", e.is_zero()}};
}

grp::Mask parse_subgroup_token(const grp::SubgroupLattice& lat, const std::string& tok) {
  if (tok == "1") return grp::Mask{1};
  if (tok == "G") return lat.group->all_mask();
  if (!tok.empty() && tok[0] == '#') {
    const int k = parse_int(tok.substr(1));
    if (k < 0 || k >= lat.num_classes())
      throw std::invalid_argument("class index " + tok + " out of range (group has " +
                                  std::to_string(lat.num_classes()) + " classes)");
    return lat.rep_mask(k);
  }
  throw std::invalid_argument("unknown subgroup token \"" + tok +
                              "\" (expected \"1\", \"G\", or \"#k\")");
}

namespace {

/// Recursive-descent evaluator for the builder grammar.
class ExprParser {
 public:
  ExprParser(const std::string& text) : text_(text) {}

  gposet::GPoset parse(const grp::Group& g) {
    auto out = expr(g);
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after expression");
    return out;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("poset expression error at offset " + std::to_string(pos_) +
                                ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a name");
    return text_.substr(start, pos_ - start);
  }

  std::string subgroup_token() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '#') {
      ++pos_;
      return "#" + ident();
    }
    return ident();
  }

  gposet::GPoset expr(const grp::Group& g) {
    skip_ws();
    const std::size_t mark = pos_;
    std::string head = ident();
    expect('(');
    if (head == "gset") return gset_body(g);
    if (head == "cone") {
      auto inner = expr(g);
      expect(')');
      return gposet::cone(inner);
    }
    if (head == "join") {
      std::vector<gposet::GPoset> factors;
      factors.push_back(expr(g));
      while (eat(',')) factors.push_back(expr(g));
      expect(')');
      return gposet::join_many(factors);
    }
    if (head == "induce") {
      auto lat = grp::subgroup_lattice(g);
      grp::Mask k_mask = parse_subgroup_token(*lat, subgroup_token());
      skip_ws();
      if (pos_ + 1 < text_.size() && text_[pos_] == '-' && text_[pos_ + 1] == '>') {
        pos_ += 2;
        ident();  // the ambient group's display name; always --group
      }
      expect(',');
      auto emb = grp::subgroup_group(g, k_mask);
      auto inner = expr(emb.group);
      expect(')');
      return gposet::join_induce(biset::induction_biset(emb), inner);
    }
    pos_ = mark;
    fail("unknown builder \"" + head + "\" (expected gset/cone/join/induce)");
  }

  gposet::GPoset gset_body(const grp::Group& g) {
    auto lat = grp::subgroup_lattice(g);
    gset::GSet acc = gset::make_gset(g, 0, {});
    do {
      int copies = 1;
      skip_ws();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        copies = parse_int(ident());
        expect('*');
        if (copies <= 0) fail("orbit multiplier must be positive");
      }
      ident();  // coset numerator name, cosmetic
      expect('/');
      grp::Mask h = parse_subgroup_token(*lat, subgroup_token());
      auto orbit = gset::transitive_gset(g, h);
      for (int i = 0; i < copies; ++i) acc = gset::disjoint_union(acc, orbit);
    } while (eat('+'));
    expect(')');
    return gposet::discrete_gposet(acc);
  }
};

}  // namespace

gposet::GPoset eval_poset_expr(const grp::Group& g, const std::string& expr) {
  return ExprParser(expr).parse(g);
}

bool is_poset_expr(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  for (const char* head : {"gset", "cone", "join", "induce"}) {
    const std::string h = head;
    if (s.compare(i, h.size(), h) == 0) {
      std::size_t j = i + h.size();
      while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '(') return true;
    }
  }
  return false;
}

gposet::GPoset load_gposet(const grp::Group& g, const std::string& source) {
  if (is_poset_expr(source)) return eval_poset_expr(g, source);
  json j;
  if (!source.empty() && source[0] == '{') {
    j = json::parse(source);
  } else if (!source.empty() && source[0] == '@') {
    j = json::parse(read_text_file(source.substr(1)));
  } else {
    j = json::parse(read_text_file(source));
  }
  auto parsed = gposet_from_json(j);
  if (!same_table(parsed.group, g))
    throw std::invalid_argument("poset file acts by a different group than --group");
  // rebind onto the caller's group object so lattice/report identities line up
  return gposet::make_gposet(g, parsed.order, parsed.action);
}

cfun::SuperClassFunction parse_cfun_arg(const grp::Lattice& lattice, const std::string& arg) {
  if (arg.rfind("omega(", 0) == 0 && !arg.empty() && arg.back() == ')') {
    std::string tok = arg.substr(6, arg.size() - 7);
    // trim whitespace
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.erase(0, 1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.pop_back();
    grp::Mask m = parse_subgroup_token(*lattice, tok);
    return cfun::omega_coset(lattice, lattice->class_index(m));
  }
  json j;
  if (!arg.empty() && arg[0] == '{') {
    j = json::parse(arg);
  } else if (!arg.empty() && arg[0] == '@') {
    j = json::parse(read_text_file(arg.substr(1)));
  } else {
    // comma-separated value list in class order
    xalg::Vec64 v(lattice->num_classes());
    auto parts = split(arg, ',');
    if (static_cast<int>(parts.size()) != lattice->num_classes())
      throw std::invalid_argument("expected " + std::to_string(lattice->num_classes()) +
                                  " comma-separated values, got " +
                                  std::to_string(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) v(static_cast<int>(i)) = parse_int(parts[i]);
    return cfun::make_cfun(lattice, std::move(v));
  }
  auto parsed = cfun_from_json(j);
  if (!same_table(parsed.lattice->group, lattice->group))
    throw std::invalid_argument("class function file uses a different group than --group");
  return cfun::make_cfun(lattice, parsed.values);
}

}  // namespace dadelab::jsonio
