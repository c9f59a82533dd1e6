#include "sf/ci.hpp"

#include <algorithm>

namespace sf {

PMatrix RingSetup::nf_mat(const PMatrix& m) const {
  PMatrix r(m.ring(), m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r.at(i, j) = nf(m.at(i, j));
  return r;
}

std::optional<std::vector<Poly>> RingSetup::f_decompose(const Poly& g) const {
  const PolyRing* R = Q.get();
  ModOrder orde{R, 1};
  std::vector<MTerm> terms;
  for (const auto& t : g.terms()) terms.push_back({t.m, 0, t.c});
  ModElem b = ModElem::from_terms(R, std::move(terms), orde);
  ModElem r = normal_form(b, gb_f_tagged);
  std::vector<std::vector<Term>> tag(static_cast<size_t>(c));
  for (const auto& mt : r.terms()) {
    if (mt.comp == 0) return std::nullopt;
    tag[mt.comp - 1].push_back({mt.m, R->field().neg(mt.c)});
  }
  std::vector<Poly> q;
  for (auto& ts : tag) {
    std::sort(ts.begin(), ts.end(),
              [&](const Term& a, const Term& b2) { return R->mcmp(a.m, b2.m) > 0; });
    q.push_back(Poly::from_sorted_terms(R, std::move(ts)));
  }
  return q;
}

RingSetup build_ci(const Field& F, const std::vector<VarSpec>& vars, OrderKind ord,
                   const std::function<std::vector<Poly>(const PolyRing*)>& fgen) {
  RingSetup RS;
  RS.Q = std::make_shared<const PolyRing>(F, vars, ord);
  RS.n = RS.Q->nvars();
  RS.f = fgen(RS.Q.get());
  RS.c = int(RS.f.size());
  if (RS.f.empty()) fail("InvalidRing", "the sequence f must be nonempty");

  for (const auto& g : RS.f) {
    if (g.is_zero()) fail("NotRegularSequence", "zero entry in f");
    if (!g.is_homogeneous()) fail("NonHomogeneous", "f entry is not homogeneous: " + g.to_string());
    for (const auto& t : g.terms())
      if (t.m.total() < 2)
        fail("NotInSquareOfMaximalIdeal", "term of degree < 2 in: " + g.to_string());
    RS.fdeg.push_back(g.hdeg());
  }
  RS.equigenerated =
      std::all_of(RS.fdeg.begin(), RS.fdeg.end(), [&](long d) { return d == RS.fdeg[0]; });

  if (RS.c > RS.n)
    fail("NotRegularSequence", "more elements than variables");
  int dim = krull_dimension(RS.Q.get(), RS.f);
  if (dim != RS.n - RS.c)
    fail("NotRegularSequence", "dim V(f) = " + std::to_string(dim) + " but n - c = " +
                                   std::to_string(RS.n - RS.c));
  RS.dimR = dim;

  RS.gb_f = buchberger_ideal(RS.Q.get(), RS.f);

  ModOrder orde{RS.Q.get(), 1};
  std::vector<ModElem> tagged;
  for (int j = 0; j < RS.c; ++j) {
    std::vector<MTerm> terms;
    for (const auto& t : RS.f[size_t(j)].terms()) terms.push_back({t.m, 0, t.c});
    terms.push_back({Monomial{}, uint32_t(1 + j), 1});
    tagged.push_back(ModElem::from_terms(RS.Q.get(), std::move(terms), orde));
  }
  RS.gb_f_tagged = buchberger(RS.Q.get(), orde, uint32_t(1 + RS.c), std::move(tagged));

  std::vector<VarSpec> cv;
  for (int j = 1; j <= RS.c; ++j) cv.push_back({"x" + std::to_string(j), 2});
  RS.chi = std::make_shared<const PolyRing>(F, cv, OrderKind::grevlex);
  return RS;
}

RingSetup build_ci_text(const Field& F, const std::vector<VarSpec>& vars, OrderKind ord,
                        const std::vector<std::string>& ftexts) {
  return build_ci(F, vars, ord, [&](const PolyRing* Q) {
    std::vector<Poly> f;
    for (const auto& s : ftexts) f.push_back(parse_poly(Q, s));
    return f;
  });
}

std::vector<Monomial> standard_monomials(const RingSetup& RS) {
  if (RS.dimR != 0) fail("InternalError", "standard_monomials needs an artinian quotient");
  const PolyRing* Q = RS.Q.get();
  int n = Q->nvars();
  std::vector<Monomial> leads;
  for (const auto& g : RS.gb_f.g) leads.push_back(g.lt().m);

  std::vector<int> bound(size_t(n), -1);
  for (const auto& m : leads) {
    int support = 0, var = -1;
    for (int i = 0; i < n; ++i)
      if (m.e[size_t(i)]) { ++support; var = i; }
    if (support == 1) {
      int b = m.e[size_t(var)];
      if (bound[size_t(var)] < 0 || b < bound[size_t(var)]) bound[size_t(var)] = b;
    }
  }
  for (int i = 0; i < n; ++i)
    if (bound[size_t(i)] < 0) fail("InternalError", "leading-term staircase is not finite");

  std::vector<Monomial> out;
  Monomial m;
  // odometer over the box of exponents below the pure-power bounds
  while (true) {
    bool reducible = false;
    for (const auto& l : leads)
      if (mdivides(l, m)) { reducible = true; break; }
    if (!reducible) out.push_back(m);
    int i = 0;
    while (i < n) {
      if (int(m.e[size_t(i)]) + 1 < bound[size_t(i)]) { ++m.e[size_t(i)]; break; }
      m.e[size_t(i)] = 0;
      ++i;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    int cc = Q->mcmp(a, b);
    return cc < 0;
  });
  return out;
}

}  // namespace sf
