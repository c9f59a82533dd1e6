#include "sf/groebner.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace sf {

namespace {

ModElem monic(const ModElem& u) {
  if (u.is_zero()) return u;
  const Field& F = u.ring()->field();
  return u.scaled(F.inv(u.lt().c));
}

bool lt_divides(const MTerm& d, const MTerm& t) {
  return d.comp == t.comp && mdivides(d.m, t.m);
}

// true when every term lives in one component (the coprimality criterion
// is only valid for such pairs)
bool pure_component(const ModElem& u) {
  for (const auto& t : u.terms())
    if (t.comp != u.terms()[0].comp) return false;
  return true;
}

ModElem drop_lead(const ModElem& u, const ModOrder& ord) {
  std::vector<MTerm> t(u.terms().begin() + 1, u.terms().end());
  return ModElem::from_terms(u.ring(), std::move(t), ord);
}

}  // namespace

ModElem divide(const ModElem& u, const std::vector<ModElem>& divisors, const ModOrder& ord,
               std::vector<Poly>* quot) {
  const PolyRing* R = u.ring();
  const Field& F = R->field();
  if (quot) quot->assign(divisors.size(), Poly::zero(R));
  ModElem cur = u;
  std::vector<MTerm> rem;
  while (!cur.is_zero()) {
    const MTerm t = cur.lt();
    size_t found = divisors.size();
    for (size_t l = 0; l < divisors.size(); ++l) {
      if (!divisors[l].is_zero() && lt_divides(divisors[l].lt(), t)) { found = l; break; }
    }
    if (found == divisors.size()) {
      rem.push_back(t);
      cur = drop_lead(cur, ord);
      continue;
    }
    const ModElem& d = divisors[found];
    Monomial mq = mdiv(t.m, d.lt().m);
    Fe cq = F.mul(t.c, F.inv(d.lt().c));
    cur = cur.axpy(F.neg(cq), mq, d, ord);
    if (quot) (*quot)[found] = (*quot)[found].add(Poly::monomial(R, mq, cq));
  }
  return ModElem::from_terms(R, std::move(rem), ord);
}

ModElem normal_form(const ModElem& u, const GBasis& B, std::vector<Poly>* quot) {
  return divide(u, B.g, B.ord, quot);
}

namespace {

void complete(GBasis& B, size_t first_new) {
  const Field& F = B.R->field();
  // pending pairs keyed by (lcm weighted degree, i, j), i < j
  std::set<std::array<long, 3>> pairs;

  auto add_pairs_for = [&](size_t k) {
    for (size_t i = 0; i < k; ++i) {
      if (B.g[i].lt().comp != B.g[k].lt().comp) continue;
      Monomial l = mlcm(B.g[i].lt().m, B.g[k].lt().m);
      pairs.insert({B.R->wdeg(l), long(i), long(k)});
    }
  };
  for (size_t k = first_new; k < B.g.size(); ++k) add_pairs_for(k);

  while (!pairs.empty()) {
    auto it = pairs.begin();
    long i = (*it)[1], j = (*it)[2];
    pairs.erase(it);

    const ModElem &gi = B.g[size_t(i)], &gj = B.g[size_t(j)];
    Monomial l = mlcm(gi.lt().m, gj.lt().m);

    if (mcoprime(gi.lt().m, gj.lt().m) && pure_component(gi) && pure_component(gj)) continue;

    // chain criterion, strict form: some lead term divides the lcm with
    // both mixed lcms proper divisors
    bool chained = false;
    for (size_t k = 0; k < B.g.size() && !chained; ++k) {
      if (long(k) == i || long(k) == j) continue;
      if (B.g[k].lt().comp != gi.lt().comp || !mdivides(B.g[k].lt().m, l)) continue;
      if (!(mlcm(gi.lt().m, B.g[k].lt().m) == l) && !(mlcm(gj.lt().m, B.g[k].lt().m) == l))
        chained = true;
    }
    if (chained) continue;

    ModElem s(B.R);
    s = s.axpy(1, mdiv(l, gi.lt().m), gi, B.ord);
    s = s.axpy(F.neg(1), mdiv(l, gj.lt().m), gj, B.ord);
    ModElem r = normal_form(s, B);
    if (!r.is_zero()) {
      B.g.push_back(monic(r));
      add_pairs_for(B.g.size() - 1);
    }
  }
}

}  // namespace

GBasis buchberger(const PolyRing* R, ModOrder ord, uint32_t ncomps, std::vector<ModElem> gens) {
  GBasis B;
  B.R = R;
  B.ord = ord;
  B.ncomps = ncomps;
  for (auto& g : gens)
    if (!g.is_zero()) B.g.push_back(monic(g));
  complete(B, 0);
  return B;
}

void gb_extend(GBasis& B, const std::vector<ModElem>& more) {
  size_t first_new = B.g.size();
  for (const auto& g : more)
    if (!g.is_zero()) B.g.push_back(monic(g));
  B.reduced = false;
  complete(B, first_new);
}

void interreduce(GBasis& B) {
  std::sort(B.g.begin(), B.g.end(),
            [&](const ModElem& a, const ModElem& b) { return B.ord.cmp(a.lt(), b.lt()) < 0; });
  std::vector<ModElem> kept;
  for (const auto& g : B.g) {
    bool redundant = false;
    for (const auto& k : kept)
      if (lt_divides(k.lt(), g.lt())) { redundant = true; break; }
    if (!redundant) kept.push_back(g);
  }
  std::vector<ModElem> out;
  for (size_t i = 0; i < kept.size(); ++i) {
    std::vector<ModElem> others;
    for (size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    out.push_back(monic(divide(kept[i], others, B.ord)));
  }
  std::sort(out.begin(), out.end(),
            [&](const ModElem& a, const ModElem& b) { return B.ord.cmp(a.lt(), b.lt()) < 0; });
  B.g = std::move(out);
  B.reduced = true;
}

std::vector<ModElem> syzygies(const PolyRing* R, uint32_t ncomps,
                              const std::vector<ModElem>& gens) {
  uint32_t t = uint32_t(gens.size());
  ModOrder orde{R, ncomps};
  std::vector<ModElem> ext;
  ext.reserve(t);
  for (uint32_t i = 0; i < t; ++i) {
    std::vector<MTerm> terms(gens[i].terms().begin(), gens[i].terms().end());
    terms.push_back({Monomial{}, ncomps + i, 1});
    ext.push_back(ModElem::from_terms(R, std::move(terms), orde));
  }
  GBasis B = buchberger(R, orde, ncomps + t, std::move(ext));
  interreduce(B);
  ModOrder plain{R, 0};
  std::vector<ModElem> out;
  for (const auto& g : B.g) {
    if (g.lt().comp < ncomps) continue;  // touches the eliminated block
    std::vector<MTerm> terms;
    for (const auto& mt : g.terms()) terms.push_back({mt.m, mt.comp - ncomps, mt.c});
    out.push_back(ModElem::from_terms(R, std::move(terms), plain));
  }
  return out;
}

std::optional<std::vector<Poly>> lin_rep(const PolyRing* R, uint32_t ncomps,
                                         const std::vector<ModElem>& gens, const ModElem& b) {
  uint32_t t = uint32_t(gens.size());
  ModOrder orde{R, ncomps};
  std::vector<ModElem> ext;
  for (uint32_t i = 0; i < t; ++i) {
    std::vector<MTerm> terms(gens[i].terms().begin(), gens[i].terms().end());
    terms.push_back({Monomial{}, ncomps + i, 1});
    ext.push_back(ModElem::from_terms(R, std::move(terms), orde));
  }
  GBasis B = buchberger(R, orde, ncomps + t, std::move(ext));
  ModElem bb = ModElem::from_terms(R, {b.terms().begin(), b.terms().end()}, orde);
  ModElem r = normal_form(bb, B);
  std::vector<std::vector<Term>> tag(t);
  for (const auto& mt : r.terms()) {
    if (mt.comp < ncomps) return std::nullopt;
    tag[mt.comp - ncomps].push_back({mt.m, R->field().neg(mt.c)});
  }
  std::vector<Poly> q;
  for (auto& terms : tag) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& c) { return R->mcmp(a.m, c.m) > 0; });
    q.push_back(Poly::from_sorted_terms(R, std::move(terms)));
  }
  return q;
}

// ---- ideal layer ------------------------------------------------------------

namespace {

ModElem wrap(const Poly& p, const ModOrder& ord) {
  std::vector<MTerm> t;
  for (const auto& term : p.terms()) t.push_back({term.m, 0, term.c});
  return ModElem::from_terms(p.ring(), std::move(t), ord);
}

Poly unwrap(const ModElem& u) {
  std::vector<Term> t;
  for (const auto& mt : u.terms()) t.push_back({mt.m, mt.c});
  return Poly::from_sorted_terms(u.ring(), std::move(t));
}

std::vector<Poly> reduced_basis(const PolyRing* R, const std::vector<Poly>& gens) {
  GBasis B = buchberger_ideal(R, gens);
  std::vector<Poly> out;
  for (const auto& g : B.g) out.push_back(unwrap(g));
  return out;
}

}  // namespace

GBasis buchberger_ideal(const PolyRing* R, std::vector<Poly> gens) {
  ModOrder ord{R, 0};
  std::vector<ModElem> wrapped;
  for (const auto& g : gens)
    if (!g.is_zero()) wrapped.push_back(wrap(g, ord));
  GBasis B = buchberger(R, ord, 1, std::move(wrapped));
  interreduce(B);
  return B;
}

Poly ideal_nf(const Poly& g, const GBasis& B) {
  return unwrap(normal_form(wrap(g, B.ord), B));
}

Poly poly_divide(const Poly& g, const std::vector<Poly>& divisors, std::vector<Poly>* quot) {
  const PolyRing* R = g.ring();
  ModOrder ord{R, 0};
  std::vector<ModElem> ds;
  for (const auto& d : divisors) ds.push_back(wrap(d, ord));
  return unwrap(divide(wrap(g, ord), ds, ord, quot));
}

bool ideal_member(const Poly& g, const GBasis& B) { return ideal_nf(g, B).is_zero(); }

bool ideal_equal(const PolyRing* R, const std::vector<Poly>& A, const std::vector<Poly>& B) {
  std::vector<Poly> ra = reduced_basis(R, A), rb = reduced_basis(R, B);
  if (ra.size() != rb.size()) return false;
  for (size_t i = 0; i < ra.size(); ++i)
    if (ra[i] != rb[i]) return false;
  return true;
}

bool radical_member(const Poly& g, const std::vector<Poly>& I) {
  if (g.is_zero()) return true;
  const PolyRing* R = g.ring();
  PolyRing Rt = R->with_extra_var("_t", 1);
  std::vector<Poly> gens;
  for (const auto& h : I) gens.push_back(h.map_ring(&Rt));
  Poly tg = g.map_ring(&Rt).mul(Poly::variable(&Rt, Rt.nvars() - 1));
  gens.push_back(Poly::constant(&Rt, 1).sub(tg));
  GBasis B = buchberger_ideal(&Rt, gens);
  return ideal_member(Poly::constant(&Rt, 1), B);
}

std::vector<Poly> colon(const PolyRing* R, const std::vector<Poly>& I, const Poly& g) {
  ModOrder ord{R, 0};
  std::vector<ModElem> gens;
  for (const auto& h : I)
    if (!h.is_zero()) gens.push_back(wrap(h, ord));
  gens.push_back(wrap(g, ord));
  std::vector<ModElem> syz = syzygies(R, 1, gens);
  std::vector<Poly> out;
  for (const auto& s : syz) {
    std::vector<Poly> col = s.to_column(uint32_t(gens.size()));
    if (!col.back().is_zero()) out.push_back(col.back());
  }
  return reduced_basis(R, out);
}

std::vector<Poly> intersect_ideals(const PolyRing* R, const std::vector<Poly>& A,
                                   const std::vector<Poly>& B) {
  ModOrder ord{R, 0};
  std::vector<ModElem> gens;
  size_t na = 0;
  for (const auto& h : A)
    if (!h.is_zero()) { gens.push_back(wrap(h, ord)); ++na; }
  for (const auto& h : B)
    if (!h.is_zero()) gens.push_back(wrap(h, ord));
  std::vector<ModElem> syz = syzygies(R, 1, gens);
  std::vector<Poly> out;
  for (const auto& s : syz) {
    std::vector<Poly> col = s.to_column(uint32_t(gens.size()));
    Poly v = Poly::zero(R);
    for (size_t i = 0; i < na; ++i) v = v.add(col[i].mul(A[i]));
    if (!v.is_zero()) out.push_back(v);
  }
  return reduced_basis(R, out);
}

std::vector<Poly> colon_ideal(const PolyRing* R, const std::vector<Poly>& I,
                              const std::vector<Poly>& J) {
  bool empty = true;
  std::vector<Poly> acc;
  for (const auto& g : J) {
    if (g.is_zero()) continue;
    std::vector<Poly> c = colon(R, I, g);
    acc = empty ? c : intersect_ideals(R, acc, c);
    empty = false;
  }
  if (empty) return {Poly::constant(R, 1)};  // (I : (0)) is the unit ideal
  return acc;
}

std::vector<Poly> saturate_ideal(const PolyRing* R, const std::vector<Poly>& I,
                                 const std::vector<Poly>& J) {
  std::vector<Poly> cur = reduced_basis(R, I);
  while (true) {
    std::vector<Poly> nxt = reduced_basis(R, colon_ideal(R, cur, J));
    if (nxt.size() == cur.size()) {
      bool same = true;
      for (size_t i = 0; i < cur.size() && same; ++i) same = cur[i] == nxt[i];
      if (same) return cur;
    }
    cur = std::move(nxt);
  }
}

int krull_dimension(const PolyRing* R, const std::vector<Poly>& I) {
  std::vector<Poly> gb = reduced_basis(R, I);
  for (const auto& g : gb)
    if (g.is_constant() && !g.is_zero()) return -1;
  int n = R->nvars();
  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(g.lt().m);
  int best = -1;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const auto& m : leads) {
      bool contained = true;
      for (int i = 0; i < n; ++i)
        if (m.e[size_t(i)] && !(mask & (1u << i))) { contained = false; break; }
      if (contained) { independent = false; break; }
    }
    if (independent) best = std::max(best, int(__builtin_popcount(mask)));
  }
  return best;
}

// ---- cones ------------------------------------------------------------------

ConeIdeal make_cone(const PolyRing* chi, std::vector<Poly> gens) {
  for (const auto& g : gens)
    if (!g.is_homogeneous()) fail("NonHomogeneous", "cone generator is not homogeneous: " + g.to_string());
  ConeIdeal X;
  X.gens = reduced_basis(chi, gens);
  X.saturated = false;
  return X;
}

ConeIdeal saturate_cone(const PolyRing* chi, const ConeIdeal& X) {
  if (X.saturated) return X;
  std::vector<Poly> irr;
  for (int i = 0; i < chi->nvars(); ++i) irr.push_back(Poly::variable(chi, i));
  ConeIdeal Y;
  Y.gens = saturate_ideal(chi, X.gens, irr);
  Y.saturated = true;
  return Y;
}

bool proj_empty(const PolyRing* chi, const ConeIdeal& X) {
  ConeIdeal S = saturate_cone(chi, X);
  for (const auto& g : S.gens)
    if (g.is_constant() && !g.is_zero()) return true;
  return false;
}

const char* proj_rel_name(ProjRel r) {
  switch (r) {
    case ProjRel::equal: return "equal";
    case ProjRel::subset: return "subset";
    case ProjRel::superset: return "superset";
    default: return "incomparable";
  }
}

ProjRel proj_compare(const PolyRing* chi, const ConeIdeal& X, const ConeIdeal& Y) {
  ConeIdeal sx = saturate_cone(chi, X), sy = saturate_cone(chi, Y);
  auto contained = [&](const ConeIdeal& a, const ConeIdeal& b) {
    // V(a) <= V(b): every generator of sat(b) is in rad(sat(a))
    for (const auto& h : b.gens)
      if (!radical_member(h, a.gens)) return false;
    return true;
  };
  bool xy = contained(sx, sy), yx = contained(sy, sx);
  if (xy && yx) return ProjRel::equal;
  if (xy) return ProjRel::subset;
  if (yx) return ProjRel::superset;
  return ProjRel::incomparable;
}

std::vector<std::vector<Fe>> proj_points(const Field& K, uint32_t c) {
  std::vector<std::vector<Fe>> pts;
  for (uint32_t lead = 0; lead < c; ++lead) {
    uint32_t tail = c - lead - 1;
    uint64_t count = 1;
    for (uint32_t i = 0; i < tail; ++i) count *= K.q();
    for (uint64_t code = 0; code < count; ++code) {
      std::vector<Fe> alpha(c, 0);
      alpha[lead] = 1;
      uint64_t v = code;
      for (uint32_t i = 0; i < tail; ++i) {
        alpha[lead + 1 + i] = Fe(v % K.q());
        v /= K.q();
      }
      pts.push_back(alpha);
    }
  }
  return pts;
}

bool cone_contains_point(const ConeIdeal& X_saturated, const Field& K,
                         const std::vector<Fe>& alpha) {
  for (const auto& g : X_saturated.gens)
    if (g.evaluate(K, alpha) != 0) return false;
  return true;
}

}  // namespace sf
