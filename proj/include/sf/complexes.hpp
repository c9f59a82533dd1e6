#pragma once

#include <map>
#include <optional>

#include "sf/ci.hpp"

namespace sf {

struct GradedFree {
  std::vector<long> degs;
  size_t rank() const { return degs.size(); }
};

// Bounded-below complex of graded free R-modules. Differentials are stored
// as normal-form polynomial matrices; diff[j] maps comp[j] to comp[j-1]
// (homological indexing, j relative to `low`).
struct FreeComplex {
  const RingSetup* RS = nullptr;
  int low = 0;
  std::vector<GradedFree> comp;
  std::vector<PMatrix> diff;

  int top() const { return low + int(comp.size()) - 1; }
  size_t rank_at(int i) const {
    if (i < low || i > top()) return 0;
    return comp[size_t(i - low)].rank();
  }
  std::vector<long> degs_at(int i) const {
    if (i < low || i > top()) return {};
    return comp[size_t(i - low)].degs;
  }
  // The differential out of index i, as a rank_at(i-1) x rank_at(i) matrix.
  PMatrix diff_at(int i) const;

  // d^2 = 0 over R and homogeneity of every entry.
  void validate() const;
};

// Presentation of a finite graded R-module: coker of `rel` into the free
// module on `gen_degs`. Entries are kept in normal form; columns homogeneous.
struct ModulePresentation {
  const RingSetup* RS = nullptr;
  std::vector<long> gen_degs;
  PMatrix rel;

  bool is_zero() const { return gen_degs.empty(); }
  size_t ngens() const { return gen_degs.size(); }
  size_t nrels() const { return rel.cols(); }
  void validate() const;  // homogeneity of columns
};

ModulePresentation residue_field_module(const RingSetup& RS);
ModulePresentation free_module(const RingSetup& RS, const std::vector<long>& degs);
ModulePresentation cyclic_quotient(const RingSetup& RS, const std::vector<Poly>& ideal_gens);
ModulePresentation direct_sum_modules(const ModulePresentation& A, const ModulePresentation& B);
ModulePresentation twist_module(const ModulePresentation& M, long s);
// M / (z_1,...,z_m) M for ring elements z_i
ModulePresentation quotient_by_elements(const ModulePresentation& M, const std::vector<Poly>& zs);

struct Resolution {
  FreeComplex C;  // low = 0
  ModulePresentation resolved;
  bool minimal = true;
  int computed_to = 0;
  bool terminated = false;  // some F_i = 0 with i <= computed_to
};

// Graded Betti data: for each homological index the sorted generator degrees.
std::vector<std::vector<long>> graded_betti(const Resolution& P);

// Eliminate unit entries by row/column operations, then prune the relation
// columns to a minimal generating set; afterwards the graded data (b0, b1
// with degrees) are invariants of the module.
ModulePresentation minimize(const ModulePresentation& M);

Resolution minimal_resolution(const ModulePresentation& M, int D);

// Kernel of an R-matrix via lifting: syzygies of [A | f_1 I | ... | f_c I]
// over Q, projected to the leading block and reduced mod (f).
struct KernelCols {
  std::vector<std::vector<Poly>> cols;
  std::vector<long> degs;
};
KernelCols rker(const RingSetup& RS, const PMatrix& A, const std::vector<long>& src_degs);

// Greedy minimal generating set of the submodule generated by homogeneous
// columns of the free module on ambient_degs (lowest degree first, then
// input position).
KernelCols minimal_generators(const RingSetup& RS, const KernelCols& cand,
                              const std::vector<long>& ambient_degs);

// Degree-d self-map of a complex: components C_i -> C_{i-degree}, graded of
// internal twist `twist`; degree must be even (no sign bookkeeping needed).
struct ChainMap {
  const FreeComplex* C = nullptr;
  int degree = 0;
  long twist = 0;
  std::map<int, PMatrix> mats;

  PMatrix mat_at(int i) const;
  bool is_chain_map() const;
};

// Mapping cone on u: K_i = C_{i-d}(twisted) + C_{i-1}. Errors with
// NotAChainMap when the commutation check fails.
FreeComplex cone(const ChainMap& u);

FreeComplex direct_sum(const FreeComplex& A, const FreeComplex& B);

// H_i = ker d_i / im d_{i+1}, minimized; valid for low <= i < top.
ModulePresentation homology(const FreeComplex& C, int i);

// Largest index in [lo, hi] with nonzero homology; nullopt when all vanish.
std::optional<int> homology_bound(const FreeComplex& C, int lo, int hi);

// Minimized presentation of coker(d_{n+1}), which is H_0 of the shifted
// hard truncation; verifies H_i = 0 for n < i <= verify_hi (BoundTooLow).
ModulePresentation syzygy_module(const FreeComplex& C, int n, int verify_hi);

// Hook for the resolution cache (installed by the CLI; null disables).
class ResolutionCacheIface {
public:
  virtual ~ResolutionCacheIface() = default;
  virtual std::optional<Resolution> load(const ModulePresentation& M, int D) = 0;
  virtual void store(const ModulePresentation& M, int D, const Resolution& R) = 0;
};
void set_resolution_cache(ResolutionCacheIface* cache);

}  // namespace sf
