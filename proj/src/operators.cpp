#include "sf/operators.hpp"

#include <algorithm>

namespace sf {

PMatrix OperatorFamily::matrix_R(size_t j, int i) const {
  const RingSetup& RS = *P->C.RS;
  auto it = t[j].find(i);
  if (it == t[j].end()) return PMatrix(RS.Q.get(), P->C.rank_at(i - 2), P->C.rank_at(i));
  return RS.nf_mat(it->second);
}

Lift lift_resolution(const Resolution& P) { return Lift{&P}; }

OperatorFamily cohomology_operators(const Resolution& P) {
  return cohomology_operators(lift_resolution(P));
}

OperatorFamily cohomology_operators(const Lift& L) {
  const Resolution& P = *L.P;
  const RingSetup& RS = *P.C.RS;
  OperatorFamily F;
  F.P = &P;
  F.t.assign(size_t(RS.c), {});

  for (int i = P.C.low + 2; i <= P.C.top(); ++i) {
    PMatrix sq = L.matrix(i - 1).mul(L.matrix(i));  // over Q, no reduction
    std::vector<PMatrix> tj;
    for (int j = 0; j < RS.c; ++j) tj.emplace_back(RS.Q.get(), sq.rows(), sq.cols());
    for (size_t r = 0; r < sq.rows(); ++r)
      for (size_t col = 0; col < sq.cols(); ++col) {
        if (sq.at(r, col).is_zero()) continue;
        std::optional<std::vector<Poly>> dec = RS.f_decompose(sq.at(r, col));
        if (!dec)
          fail("DecompositionFailed", "squared lift is not in (f); inconsistent resolution");
        for (int j = 0; j < RS.c; ++j) tj[size_t(j)].at(r, col) = (*dec)[size_t(j)];
      }
    for (int j = 0; j < RS.c; ++j) F.t[size_t(j)][i] = std::move(tj[size_t(j)]);
  }

  // the defining identity holds exactly by construction; verify the
  // chain-map property of each reduced operator
  for (int j = 0; j < RS.c; ++j) {
    ChainMap u;
    u.C = &P.C;
    u.degree = 2;
    u.twist = RS.fdeg[size_t(j)];
    for (const auto& [i, m] : F.t[size_t(j)]) u.mats[i] = RS.nf_mat(m);
    if (!u.is_chain_map())
      fail("InternalError", "operator t_" + std::to_string(j + 1) + " is not a chain map");
  }
  return F;
}

ChainMap operator_chain_map(const Resolution& P, const OperatorFamily& F, const Poly& phi) {
  const RingSetup& RS = *P.C.RS;
  const PolyRing* chi = RS.chi.get();
  if (phi.ring() != chi) fail("InputError", "operator polynomial must live in the operator ring");
  if (phi.is_zero()) fail("InputError", "zero operator polynomial");
  if (!phi.is_homogeneous())
    fail("NonHomogeneous", "operator polynomial not homogeneous: " + phi.to_string());

  long d2 = phi.hdeg();  // operator degree (vars weigh 2)
  int e = int(d2 / 2);

  long weight = -1;
  for (const auto& t : phi.terms()) {
    long w = 0;
    for (int j = 0; j < RS.c; ++j) w += long(t.m.e[size_t(j)]) * RS.fdeg[size_t(j)];
    if (weight < 0) weight = w;
    if (w != weight)
      fail("InhomogeneousOperator",
           "operator mixes internal weights (the f_j have unequal degrees): " + phi.to_string());
  }

  ChainMap u;
  u.C = &P.C;
  u.degree = int(d2);
  u.twist = weight;

  for (int i = P.C.low + int(d2); i <= P.C.top(); ++i) {
    PMatrix acc(RS.Q.get(), P.C.rank_at(i - int(d2)), P.C.rank_at(i));
    for (const auto& term : phi.terms()) {
      if (e == 0) {
        acc = acc.add(PMatrix::scalar(RS.Q.get(), P.C.rank_at(i),
                                      Poly::constant(RS.Q.get(), term.c)));
        continue;
      }
      std::vector<int> js;
      for (int j = 0; j < RS.c; ++j)
        for (int rep = 0; rep < term.m.e[size_t(j)]; ++rep) js.push_back(j);
      // ascending order composite; rightmost factor acts first
      PMatrix m = F.t[size_t(js.back())].at(i);
      for (int k = int(js.size()) - 2; k >= 0; --k) {
        int idx = i - 2 * (int(js.size()) - 1 - k);
        m = F.t[size_t(js[size_t(k)])].at(idx).mul(m);
      }
      acc = acc.add(m.scaled(Poly::constant(RS.Q.get(), term.c)));
    }
    u.mats[i] = RS.nf_mat(acc);
  }

  if (!u.is_chain_map()) fail("NotAChainMap", "operator polynomial failed the chain-map check");
  return u;
}

KoszulConeResult koszul_cone(const ModulePresentation& M, const std::vector<Poly>& phis) {
  KoszulConeResult res;
  res.module = minimize(M);
  for (const auto& phi : phis) {
    if (phi.is_zero()) fail("InputError", "zero operator polynomial in cone list");
    if (!phi.is_homogeneous())
      fail("NonHomogeneous", "cone operator not homogeneous: " + phi.to_string());
    int n = int(phi.is_constant() ? 0 : phi.hdeg());
    Resolution P = minimal_resolution(res.module, n + 3);
    OperatorFamily F = cohomology_operators(P);
    ChainMap u = operator_chain_map(P, F, phi);
    FreeComplex K = cone(u);
    res.certificate.push_back({"cone", phi.to_string(), 0});
    res.module = syzygy_module(K, n, n + 2);
    res.certificate.push_back({"syzygy", "", n});
  }
  return res;
}

FreeComplex central_koszul(const ModulePresentation& M, const std::vector<Poly>& zs, int depth) {
  const RingSetup& RS = *M.RS;
  Resolution P = minimal_resolution(M, depth);
  FreeComplex C = std::move(P.C);
  for (const auto& zraw : zs) {
    Poly z = RS.nf(zraw);
    if (!z.is_zero() && !z.is_homogeneous())
      fail("NonHomogeneous", "Koszul element not homogeneous: " + zraw.to_string());
    ChainMap u;
    u.C = &C;
    u.degree = 0;
    u.twist = z.is_zero() ? 0 : -z.hdeg();  // multiplication lands in the twisted copy
    for (int i = C.low; i <= C.top(); ++i)
      u.mats[i] = PMatrix::scalar(RS.Q.get(), C.rank_at(i), z);
    FreeComplex K = cone(u);
    C = std::move(K);
  }
  return C;
}

}  // namespace sf
