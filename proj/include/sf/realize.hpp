#pragma once

#include "sf/support.hpp"

namespace sf {

struct Params {
  int D = 12;        // resolution / table horizon
  int w = 2;         // generator window for presentations over the operator ring
  uint32_t emax = 2; // oracle points over F_{p^e} for e <= emax
};

struct OraclePoint {
  uint32_t e = 1;
  std::vector<Fe> alpha;   // codes over F_{p^e}
  bool in_ideal = false;   // annihilator route
  bool infinite_pd = false;  // hypersurface route
};

// Oracle sweep of an already saturated cone against a module, over all
// points of P^{c-1}(F_{p^e}) for e <= emax. Second value: all points agree.
std::pair<std::vector<OraclePoint>, bool> oracle_sweep(const ModulePresentation& M,
                                                       const ConeIdeal& cone, uint32_t emax);

struct Realization {
  ConeIdeal X;                 // requested target, saturated
  ConeIdeal X_eff;             // X intersected with the base support
  bool clipped = false;
  std::vector<Poly> phis;
  ModulePresentation output;
  std::vector<ConeStep> certificate;
  SupportResult base_support;  // of (M, k)
  SupportResult support;       // of (output, k)
  ProjRel cmp = ProjRel::incomparable;
  std::vector<OraclePoint> points;
  bool oracle_agree = false;
  bool verified = false;
};

// Cut the support of M down to X: cones on the generators of saturate(X)
// (ascending degree), then independent verification of the result.
Realization realize(const ModulePresentation& M, const ConeIdeal& Xin, const Params& par);

struct PairRealization {
  ConeIdeal X;
  ConeIdeal X_eff;
  bool clipped = false;
  std::vector<Poly> phis;
  ModulePresentation MX, NX;
  std::vector<ConeStep> cert_m, cert_n;
  bool same_output = false;  // N = M, single module
  SupportResult base;        // Supp(M, N)
  SupportResult s_mx_n, s_m_nx, s_mx_nx;
  ProjRel c1 = ProjRel::incomparable, c2 = ProjRel::incomparable, c3 = ProjRel::incomparable;
  bool gorenstein_ok = false;
  bool verified = false;
};

PairRealization realize_pair(const ModulePresentation& M, const ModulePresentation& N,
                             const ConeIdeal& Xin, const Params& par);

struct VanishingCertificate {
  int from = 0, to = 0;            // checked range (dim R, D]
  std::vector<int> nonzero;        // indices with nonzero Ext^i(M, R); must be empty
  bool ok = false;
  std::string justification;
};

// Ext^i(M, R) = 0 for dim R < i <= D, computed from Hom(P, R); the graded
// complete intersection R is Gorenstein of finite injective dimension, so
// failure signals a bug (VanishingFailed).
VanishingCertificate gorenstein_vanishing_check(const ModulePresentation& M, int D);

bool same_presentation(const ModulePresentation& A, const ModulePresentation& B);

}  // namespace sf
