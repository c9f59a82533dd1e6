#include "sf/support.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace sf {

namespace {

// Standard k-basis of a finite-length module over R = Q/(f): the monomials
// m e_r outside the leading-term module of (relations + f F), with the
// normal-form multiplication action.
struct NBasis {
  const RingSetup* RS = nullptr;
  uint32_t ncomps = 0;
  GBasis gb;
  std::vector<std::pair<uint32_t, Monomial>> basis;
  std::map<std::pair<uint32_t, std::array<uint16_t, kMaxVars>>, size_t> index;

  size_t dim() const { return basis.size(); }

  FMatrix mult(const Poly& g) const {
    const Field& F = RS->Q->field();
    FMatrix m(&F, dim(), dim());
    if (g.is_zero()) return m;
    ModOrder plain{RS->Q.get(), 0};
    for (size_t b = 0; b < basis.size(); ++b) {
      std::vector<MTerm> terms;
      for (const auto& t : g.terms())
        terms.push_back({mmul(t.m, basis[b].second), basis[b].first, t.c});
      ModElem v = ModElem::from_terms(RS->Q.get(), std::move(terms), plain);
      ModElem r = normal_form(v, gb);
      for (const auto& t : r.terms()) {
        auto it = index.find({t.comp, t.m.e});
        if (it == index.end()) fail("InternalError", "normal form left the standard basis");
        m.at(it->second, b) = F.add(m.at(it->second, b), t.c);
      }
    }
    return m;
  }
};

std::optional<NBasis> build_nbasis(const ModulePresentation& N) {
  const RingSetup& RS = *N.RS;
  const PolyRing* Q = RS.Q.get();
  ModOrder plain{Q, 0};
  uint32_t s = uint32_t(N.ngens());

  NBasis NB;
  NB.RS = &RS;
  NB.ncomps = s;

  std::vector<ModElem> gens;
  for (size_t j = 0; j < N.rel.cols(); ++j)
    gens.push_back(ModElem::from_column(Q, N.rel.column(j), plain));
  for (int jf = 0; jf < RS.c; ++jf)
    for (uint32_t r = 0; r < s; ++r) {
      std::vector<MTerm> terms;
      for (const auto& t : RS.f[size_t(jf)].terms()) terms.push_back({t.m, r, t.c});
      gens.push_back(ModElem::from_terms(Q, std::move(terms), plain));
    }
  NB.gb = buchberger(Q, plain, s, std::move(gens));
  interreduce(NB.gb);

  int n = Q->nvars();
  for (uint32_t r = 0; r < s; ++r) {
    std::vector<Monomial> leads;
    bool dead = false;
    for (const auto& g : NB.gb.g) {
      if (g.lt().comp != r) continue;
      if (g.lt().m.is_one()) { dead = true; break; }
      leads.push_back(g.lt().m);
    }
    if (dead) continue;
    std::vector<int> bound(size_t(n), -1);
    for (const auto& m : leads) {
      int support = 0, var = -1;
      for (int i = 0; i < n; ++i)
        if (m.e[size_t(i)]) { ++support; var = i; }
      if (support == 1 && (bound[size_t(var)] < 0 || int(m.e[size_t(var)]) < bound[size_t(var)]))
        bound[size_t(var)] = m.e[size_t(var)];
    }
    for (int i = 0; i < n; ++i)
      if (bound[size_t(i)] < 0) return std::nullopt;  // staircase not finite

    Monomial m;
    while (true) {
      bool reducible = false;
      for (const auto& l : leads)
        if (mdivides(l, m)) { reducible = true; break; }
      if (!reducible) NB.basis.push_back({r, m});
      int i = 0;
      while (i < n) {
        if (int(m.e[size_t(i)]) + 1 < bound[size_t(i)]) { ++m.e[size_t(i)]; break; }
        m.e[size_t(i)] = 0;
        ++i;
      }
      if (i == n) break;
    }
  }
  std::sort(NB.basis.begin(), NB.basis.end(),
            [&](const std::pair<uint32_t, Monomial>& a, const std::pair<uint32_t, Monomial>& b) {
              if (a.first != b.first) return a.first < b.first;
              return Q->mcmp(a.second, b.second) < 0;
            });
  for (size_t i = 0; i < NB.basis.size(); ++i)
    NB.index[{NB.basis[i].first, NB.basis[i].second.e}] = i;
  return NB;
}

// block matrix of a hom-complex map: (h,b') x (g,b) entries from mult(entry(g,h))
FMatrix hom_map(const NBasis& NB, const PMatrix& entries, size_t src_rank, size_t tgt_rank) {
  const Field& F = NB.RS->Q->field();
  size_t dn = NB.dim();
  FMatrix out(&F, tgt_rank * dn, src_rank * dn);
  for (size_t g = 0; g < src_rank; ++g)
    for (size_t h = 0; h < tgt_rank; ++h) {
      const Poly& p = entries.at(g, h);
      if (p.is_zero()) continue;
      FMatrix m = NB.mult(p);
      for (size_t b2 = 0; b2 < dn; ++b2)
        for (size_t b = 0; b < dn; ++b)
          out.at(h * dn + b2, g * dn + b) = m.at(b2, b);
    }
  return out;
}

std::vector<Fe> mat_vec(const FMatrix& m, const std::vector<Fe>& v) {
  const Field& F = *m.field();
  std::vector<Fe> out(m.rows(), 0);
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0 && v[j] != 0) out[i] = F.add(out[i], F.mul(m.at(i, j), v[j]));
  return out;
}

}  // namespace

ExtTable ext_table(const ModulePresentation& M, const ModulePresentation& N, int D) {
  if (D < 4) fail("InputError", "ext_table needs D >= 4");
  const RingSetup& RS = *M.RS;
  const Field& F = RS.Q->field();

  std::optional<NBasis> NB = build_nbasis(N);
  if (!NB) fail("NotFiniteLength", "second module is not of finite length");
  size_t dn = NB->dim();

  Resolution P = minimal_resolution(M, D);
  OperatorFamily OF = cohomology_operators(P);

  int maxdeg = D - 1;
  std::vector<size_t> rank(size_t(D) + 1);
  for (int i = 0; i <= D; ++i) rank[size_t(i)] = P.C.rank_at(i);

  std::vector<FMatrix> delta(static_cast<size_t>(D));  // delta[i] : C^i -> C^{i+1}
  for (int i = 0; i <= maxdeg; ++i)
    delta[size_t(i)] = hom_map(*NB, P.C.diff_at(i + 1), rank[size_t(i)], rank[size_t(i) + 1]);

  ExtTable T;
  T.RS = &RS;
  T.maxdeg = maxdeg;
  T.dims.assign(size_t(maxdeg) + 1, 0);

  std::vector<FMatrix> reps(size_t(maxdeg) + 1);    // columns: chosen cocycle reps
  std::vector<FMatrix> bound(size_t(maxdeg) + 1);   // columns spanning the coboundaries
  for (int i = 0; i <= maxdeg; ++i) {
    size_t cd = rank[size_t(i)] * dn;
    FMatrix B = i == 0 ? FMatrix(&F, cd, 0) : delta[size_t(i) - 1];
    FMatrix Z = delta[size_t(i)].kernel();
    FMatrix W = FMatrix::hstack({B, Z});
    FMatrix Wr = W;
    std::vector<size_t> piv = Wr.rref();
    std::vector<size_t> take;
    for (size_t pcol : piv)
      if (pcol >= B.cols()) take.push_back(pcol - B.cols());
    FMatrix R(&F, cd, take.size());
    for (size_t j = 0; j < take.size(); ++j)
      for (size_t r = 0; r < cd; ++r) R.at(r, j) = Z.at(r, take[j]);
    reps[size_t(i)] = R;
    bound[size_t(i)] = B;
    T.dims[size_t(i)] = take.size();
  }

  auto coords = [&](int i, const std::vector<Fe>& v) {
    FMatrix S = FMatrix::hstack({reps[size_t(i)], bound[size_t(i)]});
    std::optional<std::vector<Fe>> x = S.solve(v);
    if (!x) fail("InternalError", "operator image is not a cocycle class");
    return std::vector<Fe>(x->begin(), x->begin() + long(T.dims[size_t(i)]));
  };

  T.act.assign(size_t(RS.c), {});
  for (int j = 0; j < RS.c; ++j) {
    T.act[size_t(j)].reserve(size_t(maxdeg) + 1);
    for (int i = 0; i + 2 <= maxdeg; ++i) {
      FMatrix tm = hom_map(*NB, OF.matrix_R(size_t(j), i + 2), rank[size_t(i)], rank[size_t(i) + 2]);
      FMatrix X(&F, T.dims[size_t(i) + 2], T.dims[size_t(i)]);
      for (size_t col = 0; col < T.dims[size_t(i)]; ++col) {
        std::vector<Fe> v(reps[size_t(i)].rows());
        for (size_t r = 0; r < v.size(); ++r) v[r] = reps[size_t(i)].at(r, col);
        std::vector<Fe> w = mat_vec(tm, v);
        std::vector<Fe> cc = coords(i + 2, w);
        for (size_t r = 0; r < cc.size(); ++r) X.at(r, col) = cc[r];
      }
      T.act[size_t(j)].push_back(std::move(X));
    }
  }

  // the chi-action matrices commute on Ext even though the t's only
  // commute up to homotopy
  for (int j1 = 0; j1 < RS.c; ++j1)
    for (int j2 = j1 + 1; j2 < RS.c; ++j2)
      for (int i = 0; i + 4 <= maxdeg; ++i) {
        FMatrix a = T.act[size_t(j2)][size_t(i) + 2].mul(T.act[size_t(j1)][size_t(i)]);
        FMatrix b = T.act[size_t(j1)][size_t(i) + 2].mul(T.act[size_t(j2)][size_t(i)]);
        if (!(a == b)) fail("InternalError", "chi-action matrices fail to commute");
      }
  return T;
}

ExtTable truncate_table(const ExtTable& T, int newmax) {
  if (newmax > T.maxdeg || newmax < 0) fail("InternalError", "bad table truncation");
  ExtTable S;
  S.RS = T.RS;
  S.maxdeg = newmax;
  S.dims.assign(T.dims.begin(), T.dims.begin() + newmax + 1);
  S.act.assign(T.act.size(), {});
  for (size_t j = 0; j < T.act.size(); ++j)
    for (int i = 0; i + 2 <= newmax; ++i) S.act[j].push_back(T.act[j][size_t(i)]);
  return S;
}

namespace {

// monomials of the operator ring with the given weighted degree, sorted
// descending in the ring order
std::vector<Monomial> chi_monomials(const PolyRing* chi, long deg) {
  std::vector<Monomial> out;
  if (deg < 0 || deg % 2 != 0) return out;
  int c = chi->nvars();
  long e = deg / 2;
  std::vector<uint16_t> cur(size_t(c), 0);
  std::function<void(int, long)> rec = [&](int pos, long remaining) {
    if (pos == c - 1) {
      cur[size_t(pos)] = uint16_t(remaining);
      Monomial m;
      for (int i = 0; i < c; ++i) m.e[size_t(i)] = cur[size_t(i)];
      out.push_back(m);
      return;
    }
    for (long v = 0; v <= remaining; ++v) {
      cur[size_t(pos)] = uint16_t(v);
      rec(pos + 1, remaining - v);
    }
  };
  rec(0, e);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return chi->mcmp(a, b) > 0; });
  return out;
}

std::vector<Fe> eval_gen(const ExtTable& T, long gen_deg, size_t slot, const Monomial& m) {
  std::vector<Fe> v(T.dims[size_t(gen_deg)], 0);
  if (slot < v.size()) v[slot] = 1;
  long cur = gen_deg;
  for (int j = 0; j < T.RS->c; ++j)
    for (int rep = 0; rep < m.e[size_t(j)]; ++rep) {
      v = mat_vec(T.act[size_t(j)][size_t(cur)], v);
      cur += 2;
    }
  return v;
}

}  // namespace

ChiPresentation chi_presentation(const ExtTable& T, int w) {
  if (T.maxdeg < 2 * w + 2) fail("InputError", "table horizon too small for the window");
  const RingSetup& RS = *T.RS;
  const PolyRing* chi = RS.chi.get();
  const Field& F = RS.Q->field();

  ChiPresentation P;
  P.chi = chi;
  P.window = w;
  std::vector<size_t> gen_slot;
  for (long d = 0; d <= w && d <= T.maxdeg; ++d)
    for (size_t s = 0; s < T.dims[size_t(d)]; ++s) {
      P.gen_degs.push_back(d);
      gen_slot.push_back(s);
    }

  struct OldRel {
    long deg;
    std::vector<Poly> col;
  };
  std::vector<OldRel> old;

  for (long delta = 0; delta <= T.maxdeg; ++delta) {
    // column index: (gen, chi-monomial) pairs of total degree delta
    std::vector<std::pair<size_t, Monomial>> colindex;
    std::map<std::pair<size_t, std::array<uint16_t, kMaxVars>>, size_t> colpos;
    for (size_t gi = 0; gi < P.gen_degs.size(); ++gi) {
      for (const Monomial& m : chi_monomials(chi, delta - P.gen_degs[gi])) {
        colpos[{gi, m.e}] = colindex.size();
        colindex.push_back({gi, m});
      }
    }
    if (colindex.empty()) continue;

    FMatrix E(&F, T.dims[size_t(delta)], colindex.size());
    for (size_t cidx = 0; cidx < colindex.size(); ++cidx) {
      size_t gi = colindex[cidx].first;
      std::vector<Fe> v = eval_gen(T, P.gen_degs[gi], gen_slot[gi], colindex[cidx].second);
      for (size_t r = 0; r < v.size(); ++r) E.at(r, cidx) = v[r];
    }

    FMatrix Z = E.kernel();
    if (Z.cols() == 0) continue;

    // span of chi-multiples of the relations already collected
    std::vector<std::vector<Fe>> oldvecs;
    for (const OldRel& rel : old) {
      for (const Monomial& m : chi_monomials(chi, delta - rel.deg)) {
        std::vector<Fe> v(colindex.size(), 0);
        for (size_t gi = 0; gi < P.gen_degs.size(); ++gi) {
          Poly prod = rel.col[gi].mul(Poly::monomial(chi, m, 1));
          for (const auto& t : prod.terms()) {
            auto it = colpos.find({gi, t.m.e});
            if (it == colpos.end()) fail("InternalError", "relation multiple escaped the index");
            v[it->second] = F.add(v[it->second], t.c);
          }
        }
        oldvecs.push_back(std::move(v));
      }
    }
    FMatrix O(&F, colindex.size(), oldvecs.size());
    for (size_t j = 0; j < oldvecs.size(); ++j)
      for (size_t r = 0; r < colindex.size(); ++r) O.at(r, j) = oldvecs[j][r];

    FMatrix W = FMatrix::hstack({O, Z});
    std::vector<size_t> piv = W.rref();
    for (size_t pcol : piv) {
      if (pcol < O.cols()) continue;
      size_t zc = pcol - O.cols();
      std::vector<Poly> col(P.gen_degs.size(), Poly::zero(chi));
      for (size_t cidx = 0; cidx < colindex.size(); ++cidx) {
        Fe cval = Z.at(cidx, zc);
        if (cval == 0) continue;
        size_t gi = colindex[cidx].first;
        col[gi] = col[gi].add(Poly::monomial(chi, colindex[cidx].second, cval));
      }
      old.push_back({delta, col});
    }
  }

  for (auto& rel : old) P.rel_cols.push_back(std::move(rel.col));

  // stabilization check (a): above the generator window the combined action
  // must span every degree
  P.surjective_stable = true;
  for (long delta = w + 1; delta <= T.maxdeg; ++delta) {
    if (T.dims[size_t(delta)] == 0) continue;
    if (delta - 2 < 0) { P.surjective_stable = false; break; }
    std::vector<FMatrix> parts;
    for (int j = 0; j < RS.c; ++j) parts.push_back(T.act[size_t(j)][size_t(delta - 2)]);
    FMatrix comb = FMatrix::hstack(parts);
    if (comb.rank() != T.dims[size_t(delta)]) { P.surjective_stable = false; break; }
  }
  return P;
}

std::vector<Poly> chi_annihilator(const ChiPresentation& P) {
  const PolyRing* chi = P.chi;
  uint32_t s = uint32_t(P.gen_degs.size());
  if (s == 0) return {Poly::constant(chi, 1)};

  ModOrder plain{chi, 0};
  std::vector<ModElem> cols;
  for (const auto& col : P.rel_cols) cols.push_back(ModElem::from_column(chi, col, plain));

  std::vector<Poly> ann;
  bool first = true;
  for (uint32_t r = 0; r < s; ++r) {
    std::vector<ModElem> gens = cols;
    std::vector<MTerm> er = {{Monomial{}, r, 1}};
    gens.push_back(ModElem::from_terms(chi, std::move(er), plain));
    std::vector<ModElem> syz = syzygies(chi, s, gens);
    std::vector<Poly> cr;
    for (const auto& sy : syz) {
      std::vector<Poly> col = sy.to_column(uint32_t(gens.size()));
      if (!col.back().is_zero()) cr.push_back(col.back());
    }
    GBasis B = buchberger_ideal(chi, cr);
    std::vector<Poly> red;
    for (const auto& g : B.g) {
      std::vector<Poly> c1 = g.to_column(1);
      red.push_back(c1[0]);
    }
    ann = first ? red : intersect_ideals(chi, ann, red);
    first = false;
  }
  GBasis B = buchberger_ideal(chi, ann);
  std::vector<Poly> out;
  for (const auto& g : B.g) out.push_back(g.to_column(1)[0]);
  return out;
}

ConeIdeal support_cone(const ChiPresentation& P) {
  return saturate_cone(P.chi, make_cone(P.chi, chi_annihilator(P)));
}

SupportResult support_pair(const ModulePresentation& M, const ModulePresentation& N, int D,
                           int w) {
  const RingSetup& RS = *M.RS;
  ExtTable T = ext_table(M, N, D);
  ChiPresentation P1 = chi_presentation(T, w);
  std::vector<Poly> A1 = chi_annihilator(P1);

  ExtTable T2 = truncate_table(T, T.maxdeg - 2);
  ChiPresentation P2 = chi_presentation(T2, w);
  std::vector<Poly> A2 = chi_annihilator(P2);

  SupportResult S;
  S.ann = A1;
  S.surj_ok = P1.surjective_stable;
  S.horizon_ok = ideal_equal(RS.chi.get(), A1, A2);
  S.stabilized = S.surj_ok && S.horizon_ok;
  S.cone = saturate_cone(RS.chi.get(), make_cone(RS.chi.get(), A1));
  return S;
}

bool is_finite_length(const ModulePresentation& N) { return build_nbasis(N).has_value(); }

bool hypersurface_oracle(const ModulePresentation& M, const Field& K,
                         const std::vector<Fe>& alpha) {
  const RingSetup& RS = *M.RS;
  if (!RS.equigenerated)
    fail("MixedDegrees", "the pointwise oracle needs the f_j of equal degree");
  if (alpha.size() != size_t(RS.c)) fail("InputError", "point has wrong length");
  bool nz = false;
  for (Fe a : alpha) nz = nz || a != 0;
  if (!nz) fail("InputError", "zero is not a point of the projective space");

  RingSetup S = build_ci(K, RS.Q->vars(), RS.Q->order(), [&](const PolyRing* QK) {
    Poly fa = Poly::zero(QK);
    for (int j = 0; j < RS.c; ++j)
      fa = fa.add(RS.f[size_t(j)].map_ring(QK).scaled(alpha[size_t(j)]));
    return std::vector<Poly>{fa};
  });

  ModulePresentation MK;
  MK.RS = &S;
  MK.gen_degs = M.gen_degs;
  size_t extra = size_t(RS.c) * M.ngens();
  MK.rel = PMatrix(S.Q.get(), M.ngens(), M.rel.cols() + extra);
  for (size_t r = 0; r < M.ngens(); ++r)
    for (size_t cc = 0; cc < M.rel.cols(); ++cc)
      MK.rel.at(r, cc) = S.nf(M.rel.at(r, cc).map_ring(S.Q.get()));
  size_t col = M.rel.cols();
  for (int j = 0; j < RS.c; ++j)
    for (size_t r = 0; r < M.ngens(); ++r, ++col)
      MK.rel.at(r, col) = S.nf(RS.f[size_t(j)].map_ring(S.Q.get()));

  Resolution P = minimal_resolution(MK, RS.n + 2);
  return !P.terminated;
}

PerfectResult is_perfect(const ModulePresentation& M, int D, int w) {
  PerfectResult R;
  Resolution P = minimal_resolution(M, D);
  R.terminated = P.terminated;
  ModulePresentation k = residue_field_module(*M.RS);
  R.support = support_pair(M, k, D, w);
  bool empty = proj_empty(M.RS->chi.get(), R.support.cone);
  if (P.terminated) {
    if (!empty) fail("InternalError", "terminated resolution with nonempty support");
    R.perfect = true;
    return R;
  }
  if (!R.support.stabilized)
    fail("Inconclusive", "support did not stabilize at the given horizon");
  if (empty)
    fail("Inconclusive", "support is empty but the resolution did not terminate within D");
  R.perfect = false;
  return R;
}

}  // namespace sf
