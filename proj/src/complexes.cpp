#include "sf/complexes.hpp"

#include <algorithm>
#include <numeric>

namespace sf {

namespace {

ResolutionCacheIface* g_cache = nullptr;

void check_homogeneous_entry(const Poly& p, long want, const char* what) {
  if (p.is_zero()) return;
  if (!p.is_homogeneous() || p.hdeg() != want)
    fail("InternalError", std::string(what) + ": entry not homogeneous of forced degree");
}

}  // namespace

void set_resolution_cache(ResolutionCacheIface* cache) { g_cache = cache; }

PMatrix FreeComplex::diff_at(int i) const {
  if (i > low && i <= top()) return diff[size_t(i - low)];
  return PMatrix(RS->Q.get(), rank_at(i - 1), rank_at(i));
}

void FreeComplex::validate() const {
  for (int i = low + 1; i <= top(); ++i) {
    const PMatrix& d = diff[size_t(i - low)];
    if (d.rows() != rank_at(i - 1) || d.cols() != rank_at(i))
      fail("InternalError", "differential dimensions disagree with components");
    std::vector<long> src = degs_at(i), tgt = degs_at(i - 1);
    for (size_t r = 0; r < d.rows(); ++r)
      for (size_t c = 0; c < d.cols(); ++c)
        check_homogeneous_entry(d.at(r, c), src[c] - tgt[r], "complex differential");
    if (i >= low + 2) {
      PMatrix sq = RS->nf_mat(diff[size_t(i - 1 - low)].mul(d));
      if (!sq.is_zero()) fail("InternalError", "d o d != 0 over R");
    }
  }
}

void ModulePresentation::validate() const {
  for (size_t c = 0; c < rel.cols(); ++c) {
    long coldeg = 0;
    bool seen = false;
    for (size_t r = 0; r < rel.rows(); ++r) {
      const Poly& p = rel.at(r, c);
      if (p.is_zero()) continue;
      if (!p.is_homogeneous()) fail("NonHomogeneous", "relation entry not homogeneous");
      long d = p.hdeg() + gen_degs[r];
      if (seen && d != coldeg) fail("NonHomogeneous", "relation column mixes degrees");
      coldeg = d;
      seen = true;
    }
  }
}

ModulePresentation residue_field_module(const RingSetup& RS) {
  ModulePresentation k;
  k.RS = &RS;
  k.gen_degs = {0};
  k.rel = PMatrix(RS.Q.get(), 1, size_t(RS.n));
  for (int i = 0; i < RS.n; ++i) k.rel.at(0, size_t(i)) = RS.nf(Poly::variable(RS.Q.get(), i));
  return k;
}

ModulePresentation free_module(const RingSetup& RS, const std::vector<long>& degs) {
  ModulePresentation m;
  m.RS = &RS;
  m.gen_degs = degs;
  m.rel = PMatrix(RS.Q.get(), degs.size(), 0);
  return m;
}

ModulePresentation cyclic_quotient(const RingSetup& RS, const std::vector<Poly>& ideal_gens) {
  ModulePresentation m;
  m.RS = &RS;
  m.gen_degs = {0};
  std::vector<Poly> nz;
  for (const auto& g : ideal_gens) {
    Poly r = RS.nf(g);
    if (!r.is_zero()) nz.push_back(r);
  }
  m.rel = PMatrix(RS.Q.get(), 1, nz.size());
  for (size_t j = 0; j < nz.size(); ++j) m.rel.at(0, j) = nz[j];
  return m;
}

ModulePresentation direct_sum_modules(const ModulePresentation& A, const ModulePresentation& B) {
  ModulePresentation m;
  m.RS = A.RS;
  m.gen_degs = A.gen_degs;
  m.gen_degs.insert(m.gen_degs.end(), B.gen_degs.begin(), B.gen_degs.end());
  m.rel = PMatrix(A.rel.ring(), m.gen_degs.size(), A.rel.cols() + B.rel.cols());
  for (size_t r = 0; r < A.rel.rows(); ++r)
    for (size_t c = 0; c < A.rel.cols(); ++c) m.rel.at(r, c) = A.rel.at(r, c);
  for (size_t r = 0; r < B.rel.rows(); ++r)
    for (size_t c = 0; c < B.rel.cols(); ++c)
      m.rel.at(A.rel.rows() + r, A.rel.cols() + c) = B.rel.at(r, c);
  return m;
}

ModulePresentation twist_module(const ModulePresentation& M, long s) {
  ModulePresentation m = M;
  for (auto& d : m.gen_degs) d += s;
  return m;
}

ModulePresentation quotient_by_elements(const ModulePresentation& M, const std::vector<Poly>& zs) {
  ModulePresentation m = M;
  size_t extra = 0;
  std::vector<Poly> nz;
  for (const auto& z : zs) {
    Poly r = M.RS->nf(z);
    if (!r.is_zero()) { nz.push_back(r); ++extra; }
  }
  PMatrix rel(M.rel.ring(), M.ngens(), M.rel.cols() + extra * M.ngens());
  for (size_t r = 0; r < M.rel.rows(); ++r)
    for (size_t c = 0; c < M.rel.cols(); ++c) rel.at(r, c) = M.rel.at(r, c);
  size_t col = M.rel.cols();
  for (const auto& z : nz)
    for (size_t r = 0; r < M.ngens(); ++r, ++col) rel.at(r, col) = z;
  m.rel = std::move(rel);
  return m;
}

std::vector<std::vector<long>> graded_betti(const Resolution& P) {
  std::vector<std::vector<long>> b;
  for (int i = 0; i <= P.computed_to; ++i) {
    std::vector<long> d = P.C.degs_at(i);
    std::sort(d.begin(), d.end());
    b.push_back(std::move(d));
  }
  return b;
}

// ---- minimize ---------------------------------------------------------------

ModulePresentation minimize(const ModulePresentation& Min) {
  const RingSetup& RS = *Min.RS;
  std::vector<long> gens = Min.gen_degs;
  PMatrix rel = RS.nf_mat(Min.rel);

  // eliminate unit entries (constants; entries are homogeneous)
  while (true) {
    size_t pr = rel.rows(), pc = rel.cols();
    for (size_t c = 0; c < rel.cols() && pr == rel.rows(); ++c)
      for (size_t r = 0; r < rel.rows(); ++r) {
        const Poly& p = rel.at(r, c);
        if (!p.is_zero() && p.is_constant()) { pr = r; pc = c; break; }
      }
    if (pr == rel.rows()) break;
    Fe u = rel.at(pr, pc).constant_value();
    Fe uinv = RS.Q->field().inv(u);
    for (size_t j = 0; j < rel.cols(); ++j) {
      if (j == pc) continue;
      Poly mult = rel.at(pr, j).scaled(uinv);
      if (mult.is_zero()) continue;
      for (size_t r = 0; r < rel.rows(); ++r)
        rel.at(r, j) = RS.nf(rel.at(r, j).sub(mult.mul(rel.at(r, pc))));
    }
    rel = rel.drop_row_col(pr, pc);
    gens.erase(gens.begin() + long(pr));
  }

  // prune the relation columns to a minimal generating set
  KernelCols cand;
  for (size_t j = 0; j < rel.cols(); ++j) {
    std::vector<Poly> col = rel.column(j);
    long deg = 0;
    bool nz = false;
    for (size_t r = 0; r < col.size(); ++r)
      if (!col[r].is_zero()) { deg = col[r].hdeg() + gens[r]; nz = true; break; }
    if (!nz) continue;
    cand.cols.push_back(std::move(col));
    cand.degs.push_back(deg);
  }
  KernelCols kept = minimal_generators(RS, cand, gens);

  ModulePresentation out;
  out.RS = &RS;
  out.gen_degs = gens;
  out.rel = PMatrix(RS.Q.get(), gens.size(), kept.cols.size());
  for (size_t j = 0; j < kept.cols.size(); ++j) out.rel.set_column(j, kept.cols[j]);
  return out;
}

// ---- kernels over R ---------------------------------------------------------

KernelCols rker(const RingSetup& RS, const PMatrix& A, const std::vector<long>& src_degs) {
  const PolyRing* Q = RS.Q.get();
  uint32_t s = uint32_t(A.rows());
  size_t t = A.cols();
  ModOrder plain{Q, 0};

  std::vector<ModElem> gens;
  for (size_t j = 0; j < t; ++j) gens.push_back(ModElem::from_column(Q, A.column(j), plain));
  for (int jf = 0; jf < RS.c; ++jf)
    for (uint32_t r = 0; r < s; ++r) {
      std::vector<MTerm> terms;
      for (const auto& term : RS.f[size_t(jf)].terms()) terms.push_back({term.m, r, term.c});
      gens.push_back(ModElem::from_terms(Q, std::move(terms), plain));
    }

  std::vector<ModElem> syz = syzygies(Q, s, gens);

  KernelCols K;
  for (const auto& sy : syz) {
    std::vector<Poly> all = sy.to_column(uint32_t(gens.size()));
    std::vector<Poly> col(all.begin(), all.begin() + long(t));
    bool nz = false;
    long deg = 0;
    for (size_t i = 0; i < t; ++i) {
      col[i] = RS.nf(col[i]);
      if (!col[i].is_zero() && !nz) {
        deg = col[i].hdeg() + src_degs[i];
        nz = true;
      }
    }
    if (!nz) continue;
    for (size_t i = 0; i < t; ++i)
      check_homogeneous_entry(col[i], deg - src_degs[i], "kernel column");
    K.cols.push_back(std::move(col));
    K.degs.push_back(deg);
  }
  return K;
}

KernelCols minimal_generators(const RingSetup& RS, const KernelCols& cand,
                              const std::vector<long>& ambient_degs) {
  const PolyRing* Q = RS.Q.get();
  uint32_t s = uint32_t(ambient_degs.size());
  ModOrder plain{Q, 0};

  std::vector<size_t> order(cand.cols.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return cand.degs[a] < cand.degs[b]; });

  // membership modulo (f)F is tested over Q against the selected lifts
  // plus the f-block
  std::vector<ModElem> base;
  for (int jf = 0; jf < RS.c; ++jf)
    for (uint32_t r = 0; r < s; ++r) {
      std::vector<MTerm> terms;
      for (const auto& term : RS.f[size_t(jf)].terms()) terms.push_back({term.m, r, term.c});
      base.push_back(ModElem::from_terms(Q, std::move(terms), plain));
    }
  GBasis B = buchberger(Q, plain, s, std::move(base));

  KernelCols out;
  for (size_t idx : order) {
    ModElem v = ModElem::from_column(Q, cand.cols[idx], plain);
    if (normal_form(v, B).is_zero()) continue;
    out.cols.push_back(cand.cols[idx]);
    out.degs.push_back(cand.degs[idx]);
    gb_extend(B, {v});
  }
  return out;
}

// ---- resolutions ------------------------------------------------------------

Resolution minimal_resolution(const ModulePresentation& Min, int D) {
  if (D < 1) fail("InputError", "resolution depth must be >= 1");
  if (g_cache != nullptr) {
    std::optional<Resolution> hit = g_cache->load(Min, D);
    if (hit) return *hit;
  }

  const RingSetup& RS = *Min.RS;
  ModulePresentation M = minimize(Min);

  Resolution P;
  P.resolved = M;
  P.computed_to = D;
  P.C.RS = &RS;
  P.C.low = 0;
  P.C.comp.assign(size_t(D) + 1, GradedFree{});
  P.C.diff.assign(size_t(D) + 1, PMatrix(RS.Q.get(), 0, 0));

  P.C.comp[0].degs = M.gen_degs;
  P.C.diff[0] = PMatrix(RS.Q.get(), 0, M.ngens());
  if (M.is_zero()) {
    P.terminated = true;
    for (int i = 1; i <= D; ++i) P.C.diff[size_t(i)] = PMatrix(RS.Q.get(), 0, 0);
    return P;
  }

  PMatrix d = M.rel;  // columns already a minimal generating set
  std::vector<long> src;
  for (size_t j = 0; j < d.cols(); ++j) {
    std::vector<Poly> col = d.column(j);
    for (size_t r = 0; r < col.size(); ++r)
      if (!col[r].is_zero()) { src.push_back(col[r].hdeg() + M.gen_degs[r]); break; }
  }

  for (int i = 1; i <= D; ++i) {
    P.C.comp[size_t(i)].degs = src;
    P.C.diff[size_t(i)] = d;
    if (src.empty()) {
      P.terminated = true;
      for (int j = i + 1; j <= D; ++j)
        P.C.diff[size_t(j)] = PMatrix(RS.Q.get(), 0, 0);
      break;
    }
    if (i == D) break;
    KernelCols K = rker(RS, d, src);
    KernelCols G = minimal_generators(RS, K, src);
    PMatrix nd(RS.Q.get(), src.size(), G.cols.size());
    for (size_t j = 0; j < G.cols.size(); ++j) nd.set_column(j, G.cols[j]);
    d = std::move(nd);
    src = G.degs;
  }

  if (g_cache != nullptr) g_cache->store(Min, D, P);
  return P;
}

// ---- chain maps and cones ---------------------------------------------------

PMatrix ChainMap::mat_at(int i) const {
  auto it = mats.find(i);
  if (it != mats.end()) return it->second;
  return PMatrix(C->RS->Q.get(), C->rank_at(i - degree), C->rank_at(i));
}

bool ChainMap::is_chain_map() const {
  if (degree % 2 != 0) return false;
  const RingSetup& RS = *C->RS;
  for (int i = C->low; i <= C->top(); ++i) {
    PMatrix u = mat_at(i);
    if (u.rows() != C->rank_at(i - degree) || u.cols() != C->rank_at(i)) return false;
    std::vector<long> src = C->degs_at(i), tgt = C->degs_at(i - degree);
    for (size_t r = 0; r < u.rows(); ++r)
      for (size_t c = 0; c < u.cols(); ++c) {
        const Poly& p = u.at(r, c);
        if (p.is_zero()) continue;
        if (!p.is_homogeneous() || p.hdeg() != src[c] - tgt[r] - twist) return false;
      }
    if (i > C->low) {
      PMatrix lhs = mat_at(i - 1).mul(C->diff_at(i));
      PMatrix rhs = C->diff_at(i - degree).mul(u);
      if (!RS.nf_mat(lhs.sub(rhs)).is_zero()) return false;
    }
  }
  return true;
}

FreeComplex cone(const ChainMap& u) {
  if (!u.is_chain_map()) fail("NotAChainMap", "cone input fails the commutation check");
  const FreeComplex& C = *u.C;
  const RingSetup& RS = *C.RS;
  int d = u.degree;

  FreeComplex K;
  K.RS = &RS;
  K.low = C.low;
  int ktop = C.top();
  K.comp.assign(size_t(ktop - K.low) + 1, GradedFree{});
  K.diff.assign(size_t(ktop - K.low) + 1, PMatrix(RS.Q.get(), 0, 0));

  for (int i = K.low; i <= ktop; ++i) {
    std::vector<long> degs;
    for (long x : C.degs_at(i - d)) degs.push_back(x + u.twist);
    for (long x : C.degs_at(i - 1)) degs.push_back(x);
    K.comp[size_t(i - K.low)].degs = std::move(degs);
  }
  for (int i = K.low; i <= ktop; ++i) {
    size_t tr = K.rank_at(i - 1), tc = K.rank_at(i);
    PMatrix m(RS.Q.get(), tr, tc);
    size_t at = C.rank_at(i - d), ac = C.rank_at(i - 1);        // source split
    size_t bt = C.rank_at(i - 1 - d);                            // target split
    PMatrix dT = C.diff_at(i - d);
    PMatrix ui = u.mat_at(i - 1);
    PMatrix dC = C.diff_at(i - 1);
    for (size_t r = 0; r < bt; ++r)
      for (size_t c = 0; c < at; ++c) m.at(r, c) = dT.at(r, c);
    for (size_t r = 0; r < ui.rows(); ++r)
      for (size_t c = 0; c < ac; ++c) m.at(r, at + c) = ui.at(r, c);
    for (size_t r = 0; r < dC.rows(); ++r)
      for (size_t c = 0; c < ac; ++c) m.at(bt + r, at + c) = dC.at(r, c).neg();
    K.diff[size_t(i - K.low)] = RS.nf_mat(m);
  }
  K.validate();
  return K;
}

FreeComplex direct_sum(const FreeComplex& A, const FreeComplex& B) {
  FreeComplex S;
  S.RS = A.RS;
  S.low = std::min(A.low, B.low);
  int top = std::max(A.top(), B.top());
  S.comp.assign(size_t(top - S.low) + 1, GradedFree{});
  S.diff.assign(size_t(top - S.low) + 1, PMatrix(A.RS->Q.get(), 0, 0));
  for (int i = S.low; i <= top; ++i) {
    std::vector<long> degs = A.degs_at(i);
    for (long x : B.degs_at(i)) degs.push_back(x);
    S.comp[size_t(i - S.low)].degs = std::move(degs);
  }
  for (int i = S.low; i <= top; ++i) {
    PMatrix da = A.diff_at(i), db = B.diff_at(i);
    PMatrix m(A.RS->Q.get(), S.rank_at(i - 1), S.rank_at(i));
    for (size_t r = 0; r < da.rows(); ++r)
      for (size_t c = 0; c < da.cols(); ++c) m.at(r, c) = da.at(r, c);
    for (size_t r = 0; r < db.rows(); ++r)
      for (size_t c = 0; c < db.cols(); ++c) m.at(da.rows() + r, da.cols() + c) = db.at(r, c);
    S.diff[size_t(i - S.low)] = m;
  }
  return S;
}

// ---- homology and syzygies --------------------------------------------------

ModulePresentation homology(const FreeComplex& C, int i) {
  if (i < C.low || i >= C.top()) fail("WindowOutOfRange", "homology index outside computed range");
  const RingSetup& RS = *C.RS;

  KernelCols U;
  if (i == C.low) {
    std::vector<long> degs = C.degs_at(i);
    for (size_t r = 0; r < degs.size(); ++r) {
      std::vector<Poly> col(degs.size(), Poly::zero(RS.Q.get()));
      col[r] = Poly::constant(RS.Q.get(), 1);
      U.cols.push_back(std::move(col));
      U.degs.push_back(degs[r]);
    }
  } else {
    U = minimal_generators(RS, rker(RS, C.diff_at(i), C.degs_at(i)), C.degs_at(i - 1));
  }
  if (U.cols.empty()) {
    ModulePresentation z;
    z.RS = &RS;
    z.rel = PMatrix(RS.Q.get(), 0, 0);
    return z;
  }

  PMatrix W = C.diff_at(i + 1);
  PMatrix UW(RS.Q.get(), C.rank_at(i), U.cols.size() + W.cols());
  for (size_t j = 0; j < U.cols.size(); ++j) UW.set_column(j, U.cols[j]);
  for (size_t j = 0; j < W.cols(); ++j)
    for (size_t r = 0; r < W.rows(); ++r) UW.at(r, U.cols.size() + j) = W.at(r, j);

  std::vector<long> uwdegs = U.degs;
  for (size_t j = 0; j < W.cols(); ++j) {
    std::vector<Poly> col = W.column(j);
    long deg = 0;
    for (size_t r = 0; r < col.size(); ++r)
      if (!col[r].is_zero()) { deg = col[r].hdeg() + C.degs_at(i)[r]; break; }
    uwdegs.push_back(deg);
  }

  KernelCols S = rker(RS, UW, uwdegs);
  ModulePresentation H;
  H.RS = &RS;
  H.gen_degs = U.degs;
  H.rel = PMatrix(RS.Q.get(), U.degs.size(), S.cols.size());
  for (size_t j = 0; j < S.cols.size(); ++j)
    for (size_t r = 0; r < U.degs.size(); ++r) H.rel.at(r, j) = S.cols[j][r];
  return minimize(H);
}

std::optional<int> homology_bound(const FreeComplex& C, int lo, int hi) {
  if (lo < C.low || hi >= C.top()) fail("WindowOutOfRange", "homology window outside computed range");
  for (int i = hi; i >= lo; --i)
    if (!homology(C, i).is_zero()) return i;
  return std::nullopt;
}

ModulePresentation syzygy_module(const FreeComplex& C, int n, int verify_hi) {
  if (n >= C.top()) fail("WindowOutOfRange", "syzygy index above computed range");
  int hi = std::min(verify_hi, C.top() - 1);
  for (int i = n + 1; i <= hi; ++i)
    if (!homology(C, i).is_zero())
      fail("BoundTooLow", "nonzero homology above the syzygy index at " + std::to_string(i));
  ModulePresentation S;
  S.RS = C.RS;
  S.gen_degs = C.degs_at(n);
  S.rel = C.diff_at(n + 1);
  return minimize(S);
}

}  // namespace sf
