#pragma once

// JSON serialization and parsing for groups, G-sets, G-posets, class
// functions, and analysis reports, plus the textual builder grammar for
// G-posets used on the command line:
//
//   expr    := gset | cone | join | induce
//   gset    := "gset" "(" orbit ("+" orbit)* ")"
//   orbit   := [INT "*"] NAME "/" subtok        (NAME is cosmetic)
//   cone    := "cone" "(" expr ")"
//   join    := "join" "(" expr ("," expr)+ ")"
//   induce  := "induce" "(" subtok "->" NAME "," expr ")"
//   subtok  := "1" | "G" | "#" INT              (INT = class index)
//
// Inside induce(...) the inner expression is evaluated over the chosen
// subgroup as a group in its own right; class indices then refer to the
// subgroup's own lattice. All emitted JSON has keys in sorted order, so
// identical inputs produce byte-identical output.

#include <string>

#include "json.hpp"

#include "dadelab/cfun.hpp"
#include "dadelab/dade.hpp"
#include "dadelab/gposet.hpp"
#include "dadelab/group.hpp"
#include "dadelab/gset.hpp"
#include "dadelab/moore.hpp"

namespace dadelab::jsonio {

using json = nlohmann::json;

/// Parse a group specification. Accepts short catalog strings
/// ("cyclic:9", "elem:3:2", "dihedral:8", "quaternion:8", "semidihedral:16",
/// "extraspecial:3"), inline JSON (starting with '{'), or "@path" /
/// a path to a JSON file. JSON forms:
///   {"catalog": {"kind": "cyclic", "order": 9}}
///   {"catalog": {"kind": "elementary", "p": 3, "rank": 2}}
///   {"catalog": {"kind": "extraspecial", "p": 3}}
///   {"table": [[0,1,...], ...]}
///   {"perm_gens": [[[0,1,2]], ...], "points": n}   (cycle notation)
/// Throws std::invalid_argument on malformed specs.
grp::Group parse_group_spec(const std::string& spec);

/// Canonical JSON form of a group (catalog form when recognized by name,
/// otherwise the explicit table).
json group_to_json(const grp::Group& g);

json gset_to_json(const gset::GSet& x);
gset::GSet gset_from_json(const json& j);

json gposet_to_json(const gposet::GPoset& x);
gposet::GPoset gposet_from_json(const json& j);

json cfun_to_json(const cfun::SuperClassFunction& f);
cfun::SuperClassFunction cfun_from_json(const json& j);

json moore_report_to_json(const moore::MooreReport& rep);
json dade_element_to_json(const dade::DadeElement& e);

/// Evaluate a builder expression over the given group.
gposet::GPoset eval_poset_expr(const grp::Group& g, const std::string& expr);

/// True if the string looks like a builder expression rather than a file
/// path or inline JSON.
bool is_poset_expr(const std::string& s);

/// Load a G-poset from a builder expression, inline JSON, or a JSON file
/// path, using `g` as the acting group for expressions (and checking that
/// file-loaded posets use an identical group table).
gposet::GPoset load_gposet(const grp::Group& g, const std::string& source);

/// Parse a class-function argument: "omega(TOK)" with TOK in the builder
/// subgroup-token grammar, a comma-separated value list "1,0,2", inline
/// JSON, or "@path"/path to a cfun JSON file.
cfun::SuperClassFunction parse_cfun_arg(const grp::Lattice& lattice,
                                        const std::string& arg);

/// Resolve a subgroup token ("1", "G", "#k") against a lattice.
grp::Mask parse_subgroup_token(const grp::SubgroupLattice& lat, const std::string& tok);

/// Read an entire file; throws std::invalid_argument if unreadable.
std::string read_text_file(const std::string& path);

}  // namespace dadelab::jsonio
