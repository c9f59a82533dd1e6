#include "sf/realize.hpp"

#include <algorithm>

namespace sf {

std::pair<std::vector<OraclePoint>, bool> oracle_sweep(const ModulePresentation& M,
                                                       const ConeIdeal& cone, uint32_t emax) {
  const RingSetup& RS = *M.RS;
  std::vector<OraclePoint> pts;
  bool agree = true;
  for (uint32_t e = 1; e <= emax; ++e) {
    Field K = Field::extension(RS.Q->field().p(), e);
    for (const auto& alpha : proj_points(K, uint32_t(RS.c))) {
      OraclePoint pt;
      pt.e = e;
      pt.alpha = alpha;
      pt.in_ideal = cone_contains_point(cone, K, alpha);
      pt.infinite_pd = hypersurface_oracle(M, K, alpha);
      agree = agree && (pt.in_ideal == pt.infinite_pd);
      pts.push_back(std::move(pt));
    }
  }
  return {pts, agree};
}

namespace {

// ideal sum, saturated: the closed set V(A) intersect V(B)
ConeIdeal cone_intersection(const PolyRing* chi, const ConeIdeal& A, const ConeIdeal& B) {
  std::vector<Poly> gens = A.gens;
  gens.insert(gens.end(), B.gens.begin(), B.gens.end());
  return saturate_cone(chi, make_cone(chi, gens));
}

std::vector<Poly> phi_list(const ConeIdeal& satX) {
  // reduced basis is sorted ascending by leading term, hence by degree
  return satX.gens;
}

}  // namespace

Realization realize(const ModulePresentation& M, const ConeIdeal& Xin, const Params& par) {
  const RingSetup& RS = *M.RS;
  const PolyRing* chi = RS.chi.get();
  ModulePresentation k = residue_field_module(RS);

  Realization R;
  R.X = saturate_cone(chi, Xin);
  R.base_support = support_pair(M, k, par.D, par.w);
  R.X_eff = cone_intersection(chi, R.X, R.base_support.cone);
  ProjRel inbase = proj_compare(chi, R.X, R.base_support.cone);
  R.clipped = !(inbase == ProjRel::equal || inbase == ProjRel::subset);

  R.phis = phi_list(R.X);
  KoszulConeResult KC = koszul_cone(M, R.phis);
  R.output = KC.module;
  R.certificate = KC.certificate;

  R.support = support_pair(R.output, k, par.D, par.w);
  R.cmp = proj_compare(chi, R.support.cone, R.X_eff);

  std::tie(R.points, R.oracle_agree) = oracle_sweep(R.output, R.support.cone, par.emax);
  R.verified = R.cmp == ProjRel::equal && R.oracle_agree && R.support.stabilized &&
               R.base_support.stabilized;
  return R;
}

bool same_presentation(const ModulePresentation& A, const ModulePresentation& B) {
  return A.RS == B.RS && A.gen_degs == B.gen_degs && A.rel == B.rel;
}

PairRealization realize_pair(const ModulePresentation& M, const ModulePresentation& N,
                             const ConeIdeal& Xin, const Params& par) {
  const RingSetup& RS = *M.RS;
  const PolyRing* chi = RS.chi.get();

  PairRealization R;
  R.X = saturate_cone(chi, Xin);
  R.base = support_pair(M, N, par.D, par.w);
  R.X_eff = cone_intersection(chi, R.X, R.base.cone);
  ProjRel inbase = proj_compare(chi, R.X, R.base.cone);
  R.clipped = !(inbase == ProjRel::equal || inbase == ProjRel::subset);

  R.phis = phi_list(R.X);
  KoszulConeResult KM = koszul_cone(M, R.phis);
  R.MX = KM.module;
  R.cert_m = KM.certificate;
  R.same_output = same_presentation(M, N);
  if (R.same_output) {
    R.NX = R.MX;
    R.cert_n = R.cert_m;
  } else {
    KoszulConeResult KN = koszul_cone(N, R.phis);
    R.NX = KN.module;
    R.cert_n = KN.certificate;
  }

  R.s_mx_n = support_pair(R.MX, N, par.D, par.w);
  R.s_m_nx = support_pair(M, R.NX, par.D, par.w);
  R.s_mx_nx = support_pair(R.MX, R.NX, par.D, par.w);
  R.c1 = proj_compare(chi, R.s_mx_n.cone, R.X_eff);
  R.c2 = proj_compare(chi, R.s_m_nx.cone, R.X_eff);
  R.c3 = proj_compare(chi, R.s_mx_nx.cone, R.X_eff);

  VanishingCertificate V = gorenstein_vanishing_check(M, par.D);
  R.gorenstein_ok = V.ok;

  R.verified = R.c1 == ProjRel::equal && R.c2 == ProjRel::equal && R.c3 == ProjRel::equal &&
               R.gorenstein_ok && R.base.stabilized && R.s_mx_n.stabilized &&
               R.s_m_nx.stabilized && R.s_mx_nx.stabilized;
  return R;
}

VanishingCertificate gorenstein_vanishing_check(const ModulePresentation& M, int D) {
  const RingSetup& RS = *M.RS;
  VanishingCertificate V;
  V.from = RS.dimR + 1;
  V.to = D;
  V.justification =
      "graded complete intersections are Gorenstein with injective dimension dim R";

  if (RS.dimR == 0) {
    ModulePresentation Rmod = free_module(RS, {0});
    ExtTable T = ext_table(M, Rmod, D + 1);
    for (int i = V.from; i <= V.to && i <= T.maxdeg; ++i)
      if (T.dims[size_t(i)] != 0) V.nonzero.push_back(i);
  } else {
    Resolution P = minimal_resolution(M, D + 1);
    FreeComplex dual;
    dual.RS = &RS;
    dual.low = -(D + 1);
    dual.comp.assign(size_t(D + 2), GradedFree{});
    dual.diff.assign(size_t(D + 2), PMatrix(RS.Q.get(), 0, 0));
    for (int i = 0; i <= D + 1; ++i) {
      std::vector<long> degs = P.C.degs_at(i);
      for (auto& d : degs) d = -d;
      dual.comp[size_t(D + 1 - i)].degs = std::move(degs);  // index -i
    }
    for (int i = 0; i < D + 1; ++i) {
      // differential out of index -i is Hom(d_{i+1}, R)
      dual.diff[size_t(D + 1 - i)] = P.C.diff_at(i + 1).transpose();
    }
    dual.validate();
    for (int i = V.from; i <= V.to; ++i)
      if (!homology(dual, -i).is_zero()) V.nonzero.push_back(i);
  }

  V.ok = V.nonzero.empty();
  if (!V.ok) fail("VanishingFailed", "Ext^i(M, R) nonzero above dim R; implementation bug");
  return V;
}

}  // namespace sf
