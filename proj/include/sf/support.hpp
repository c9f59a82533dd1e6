#pragma once

#include "sf/fmatrix.hpp"
#include "sf/operators.hpp"

namespace sf {

// Ext^*_R(M,N) as a table of k-dimensions with the operator action:
// act[j][i] maps Ext^i -> Ext^{i+2} in the chosen bases. Computed as the
// cohomology of Hom_R(P, N) with the action by precomposition with t_j.
struct ExtTable {
  const RingSetup* RS = nullptr;
  int maxdeg = 0;
  std::vector<size_t> dims;                // degrees 0..maxdeg
  std::vector<std::vector<FMatrix>> act;   // act[j][i], defined for i+2 <= maxdeg
};

// Requires N of finite length (NotFiniteLength otherwise) and D >= 4.
// The table covers degrees 0..D-1.
ExtTable ext_table(const ModulePresentation& M, const ModulePresentation& N, int D);

ExtTable truncate_table(const ExtTable& T, int newmax);

// Finite presentation over k[chi]: generators are the table basis slots in
// degrees [0, w]; relations are the kernel of the evaluation map, collected
// degree by degree up to the table horizon (new generators of the kernel
// only). surjective_stable records stabilization check (a): above the
// generator window the combined chi-action must span each degree.
struct ChiPresentation {
  const PolyRing* chi = nullptr;
  std::vector<long> gen_degs;
  std::vector<std::vector<Poly>> rel_cols;
  bool surjective_stable = false;
  int window = 0;
};

ChiPresentation chi_presentation(const ExtTable& T, int w);

// Annihilator of the presented module, as a reduced ideal basis, computed
// as the intersection over generators of the column-module colons.
std::vector<Poly> chi_annihilator(const ChiPresentation& P);

// The saturated cone cut out by the annihilator.
ConeIdeal support_cone(const ChiPresentation& P);

struct SupportResult {
  ConeIdeal cone;          // saturated
  std::vector<Poly> ann;   // annihilator at the full horizon (reduced basis)
  bool surj_ok = false;    // stabilization check (a)
  bool horizon_ok = false; // check (b): same annihilator at horizon D-2
  bool stabilized = false;
};

// ext_table -> chi_presentation -> annihilator -> saturation, with the two
// stabilization checks. Never throws on stabilization failure: the flags
// report it (callers map it to the unverified exit path).
SupportResult support_pair(const ModulePresentation& M, const ModulePresentation& N, int D, int w);

bool is_finite_length(const ModulePresentation& N);

// Pointwise support test, independent of the annihilator route: alpha lies
// in the support iff M has infinite projective dimension over the
// hypersurface Q_K/(sum alpha_j f_j); decided by resolving n+2 steps.
bool hypersurface_oracle(const ModulePresentation& M, const Field& K,
                         const std::vector<Fe>& alpha);

struct PerfectResult {
  bool perfect = false;
  bool terminated = false;
  SupportResult support;
};

// Finite projective dimension via resolution termination, cross-checked
// against support emptiness (Inconclusive when D cannot certify).
PerfectResult is_perfect(const ModulePresentation& M, int D, int w);

}  // namespace sf
