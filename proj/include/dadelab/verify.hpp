#pragma once

// Batch verification harness: exhaustive sweeps of exact identities over a
// group catalog, with per-case results suitable for machine-readable
// reports. Suites cover:
//   - Möbius double inversion and basis round trips,
//   - tensor induction vs. the Möbius/double-coset formula,
//   - fixed points of induced joins vs. symmetric joins over double cosets,
//   - functoriality and additivity of the dimension function,
//   - the degree-sum formula for tight complexes,
//   - the homology-dimension power law of induced joins,
//   - the representation-sphere oracle for the Borel-Smith basis.
// All checks are exact; caps make cases "skipped", never silently dropped.

#include <string>
#include <vector>

#include "dadelab/gposet.hpp"
#include "dadelab/group.hpp"

namespace dadelab::verify {

enum class Status { Pass, Fail, Skipped };

struct CaseResult {
  std::string inputs;    ///< deterministic case key
  std::string expected;
  std::string got;
  Status status = Status::Pass;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;
  double wall_ms = 0;

  int passed() const;
  int failed() const;
  int skipped() const;
  bool ok() const { return failed() == 0; }
};

struct Options {
  int threads = 1;      ///< worker threads for case evaluation
  int max_index = 4;    ///< cap on [H:K] for induction corpora
  /// Chain-count cap for the homology-computing suites; induced joins whose
  /// flag complexes exceed it are reported as skipped, never dropped.
  std::int64_t chain_cap = 50'000;
  /// Testing hook: deliberately corrupt one Möbius entry per lattice before
  /// running, to prove the harness detects broken tables.
  bool corrupt_mobius = false;
};

/// The standard catalog: every 2-group and odd-p group family needed to
/// exercise all four congruence-condition kinds and both parities.
std::vector<grp::Group> default_catalog();

SuiteReport mobius_suite(const std::vector<grp::Group>& groups, const Options& opt = {});
SuiteReport tensor_induction_suite(const std::vector<grp::Group>& groups,
                                   const Options& opt = {});
SuiteReport fixed_point_suite(const std::vector<grp::Group>& groups, const Options& opt = {});
SuiteReport dim_functoriality_suite(const std::vector<grp::Group>& groups,
                                    const Options& opt = {});
SuiteReport tight_formula_suite(const std::vector<grp::Group>& groups,
                                const Options& opt = {});
SuiteReport homology_shadow_suite(const std::vector<grp::Group>& groups,
                                  const Options& opt = {});
SuiteReport borel_smith_oracle_suite(const std::vector<grp::Group>& groups,
                                     const Options& opt = {});

/// Suites run by `verify all`, in order.
std::vector<SuiteReport> all_suites(const std::vector<grp::Group>& groups,
                                    const Options& opt = {});

/// Demo: a Moore poset over C_3 (suspension of a free orbit wedged with a
/// whiskered fixed edge) whose naive orbit sum over degrees m+1..n vanishes
/// even though its homology class is the nonzero torsion element.
gposet::GPoset nontight_demo_poset();

/// Demo: wedge of the suspensions of two distinct index-3 orbits of
/// C_3 x C_3, glued at a suspension pole; its two stabilizing subgroups have
/// fixed-point homology in two degrees each, so no concentration degree
/// exists for them.
gposet::GPoset wedge_demo_poset();

}  // namespace dadelab::verify
