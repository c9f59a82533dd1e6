#pragma once

#include "sf/complexes.hpp"

namespace sf {

// The degree -2 operator family on a resolution over R: matrices t~_j over Q
// with d~^2 = sum_j f_j t~_j exactly, extracted by dividing the entries of
// the squared lifted differential against the basis of (f) with quotient
// tracking. Reduced mod (f), each t_j is a chain map of degree -2.
struct OperatorFamily {
  const Resolution* P = nullptr;
  // t[j][i] : F_i -> F_{i-2}, lifted matrices over Q, for 2 <= i <= top
  std::vector<std::map<int, PMatrix>> t;

  // the operator matrix over R (normal form), zero-filled outside range
  PMatrix matrix_R(size_t j, int i) const;
};

// Lift of a resolution to Q. The stored normal-form matrices are already
// canonical Q-representatives, so the lift reads them as Q-matrices.
struct Lift {
  const Resolution* P = nullptr;
  PMatrix matrix(int i) const { return P->C.diff_at(i); }
};

Lift lift_resolution(const Resolution& P);

OperatorFamily cohomology_operators(const Lift& L);
OperatorFamily cohomology_operators(const Resolution& P);

// Chain map realizing a homogeneous operator polynomial phi(t_1..t_c) on the
// resolution; monomials expand as composites in ascending variable order.
// Requires phi nonzero, homogeneous in the operator grading, and of a single
// internal weight (automatic when all f_j have equal degree).
ChainMap operator_chain_map(const Resolution& P, const OperatorFamily& F, const Poly& phi);

struct ConeStep {
  std::string op;   // "cone" or "syzygy"
  std::string phi;  // for cone steps
  int n = 0;        // for syzygy steps
};

struct KoszulConeResult {
  ModulePresentation module;
  std::vector<ConeStep> certificate;
};

// One operator at a time: build the chain map on a fresh minimal resolution,
// take the cone, truncate at the syzygy index n = deg(phi), minimize, repeat.
// The certificate lists every step (a thick-closure witness).
KoszulConeResult koszul_cone(const ModulePresentation& M, const std::vector<Poly>& phis);

// M tensor the Koszul complex on central ring elements z, as iterated cones
// of multiplication maps on the minimal resolution (computed to `depth`).
FreeComplex central_koszul(const ModulePresentation& M, const std::vector<Poly>& zs, int depth);

}  // namespace sf
