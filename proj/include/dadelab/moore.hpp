#pragma once

// Reduced simplicial homology of flag complexes over GF(p), applied per fixed
// subcomplex of a G-poset, and the classification flags built on it: one
// concentrated homology degree per subgroup class, top-dimension agreement,
// downward-closed cell support, and nonvanishing at the full group.

#include <cstdint>
#include <vector>

#include "dadelab/cfun.hpp"
#include "dadelab/gposet.hpp"
#include "dadelab/lattice.hpp"
#include "dadelab/poset.hpp"

namespace dadelab::moore {

/// Boundary matrices of the augmented chain complex of a flag complex:
/// boundary[d] is the matrix of the map from d-chains to (d-1)-chains, with
/// d = 0 mapping vertices onto the augmentation line k.  The composite of
/// consecutive boundaries is checked to vanish at construction.
struct ChainComplex {
  int prime = 0;
  std::vector<std::int64_t> cells;       ///< cells[d+1] = number of d-simplices, from d = -1
  std::vector<xalg::SparseMat> boundary; ///< boundary[d] = matrix of del_d
};

ChainComplex chain_complex(const gposet::FlagComplex& flag, int p);

/// Reduced Betti numbers; entry i is the dimension of the homology in degree
/// i-1, so the empty complex yields the single entry 1 (degree -1).
std::vector<std::int64_t> reduced_betti(const ChainComplex& c);
std::vector<std::int64_t> reduced_betti(const poset::Poset& x, int p);

/// Sum of all reduced Betti numbers.
std::int64_t total_betti(const poset::Poset& x, int p);

struct ClassAnalysis {
  int cls = 0;            ///< subgroup class index
  int fixed_size = 0;     ///< number of fixed poset elements
  int dim = -1;           ///< topological dimension of the fixed flag complex; -1 if empty
  std::vector<std::int64_t> betti;  ///< as reduced_betti
  bool concentrated = false;        ///< at most one nonzero reduced Betti number
  bool acyclic_nonempty = false;    ///< nonempty with all reduced homology zero; in that
                                    ///< case n is the topological dimension by convention
  int n = -1;             ///< concentration degree (top nonzero degree if not concentrated)
};

struct MooreReport {
  grp::Lattice lattice;
  int prime = 0;
  std::vector<ClassAnalysis> classes;  ///< one entry per subgroup class
  std::vector<gset::GSet> cells;       ///< G-sets of d-simplices of the whole complex
  bool is_moore = false;   ///< every class concentrated (acyclic-nonempty counts, flagged)
  bool is_tight = false;   ///< n(H) equals the fixed complex dimension for every class
  bool is_full = false;    ///< cell support downward closed on every class
  bool is_capped = false;  ///< the full-group fixed complex has nonzero reduced homology

  /// H -> n(H) + 1.  Only callable when is_moore.
  cfun::SuperClassFunction dim_function() const;
};

MooreReport analyze(const gposet::GPoset& x, int p,
                    std::int64_t chain_cap = poset::kDefaultChainCap);

struct DimsumCheck {
  bool applicable = false;  ///< requires Moore + tight + full
  bool ok = false;
  xalg::Vec64 dim_values;   ///< class values of the dimension function
  xalg::Vec64 omega_sum;    ///< class values of the sum of cell-set omegas
};

/// Checks that the dimension function equals the sum of the omega functions
/// of the cell G-sets.
DimsumCheck dimsum_check(const MooreReport& report);

}  // namespace dadelab::moore
