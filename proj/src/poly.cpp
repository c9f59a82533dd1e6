#include "sf/poly.hpp"

#include <algorithm>
#include <cctype>

namespace sf {

Poly Poly::constant(const PolyRing* R, Fe c) {
  Poly p(R);
  if (c != 0) p.t_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(const PolyRing* R, int i) {
  Monomial m;
  m.e[size_t(i)] = 1;
  return monomial(R, m, 1);
}

Poly Poly::monomial(const PolyRing* R, const Monomial& m, Fe c) {
  Poly p(R);
  if (c != 0) p.t_.push_back({m, c});
  return p;
}

Poly Poly::from_sorted_terms(const PolyRing* R, std::vector<Term> t) {
  Poly p(R);
  p.t_ = std::move(t);
  return p;
}

bool Poly::is_homogeneous() const {
  if (t_.empty()) return true;
  long d = R_->wdeg(t_[0].m);
  for (const auto& t : t_)
    if (R_->wdeg(t.m) != d) return false;
  return true;
}

long Poly::hdeg() const {
  if (t_.empty()) fail("InternalError", "hdeg of zero polynomial");
  return R_->wdeg(t_[0].m);
}

Poly Poly::add(const Poly& o) const {
  const Field& F = R_->field();
  Poly r(R_);
  r.t_.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    int c = R_->mcmp(t_[i].m, o.t_[j].m);
    if (c > 0) {
      r.t_.push_back(t_[i++]);
    } else if (c < 0) {
      r.t_.push_back(o.t_[j++]);
    } else {
      Fe v = F.add(t_[i].c, o.t_[j].c);
      if (v != 0) r.t_.push_back({t_[i].m, v});
      ++i; ++j;
    }
  }
  for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
  for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
  return r;
}

Poly Poly::neg() const {
  const Field& F = R_->field();
  Poly r(R_);
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({t.m, F.neg(t.c)});
  return r;
}

Poly Poly::sub(const Poly& o) const { return add(o.neg()); }

Poly Poly::scaled(Fe c) const {
  const Field& F = R_->field();
  Poly r(R_);
  if (c == 0) return r;
  r.t_.reserve(t_.size());
  for (const auto& t : t_) {
    Fe v = F.mul(t.c, c);
    if (v != 0) r.t_.push_back({t.m, v});
  }
  return r;
}

Poly Poly::mul_term(const Monomial& m, Fe c) const {
  const Field& F = R_->field();
  Poly r(R_);
  if (c == 0) return r;
  r.t_.reserve(t_.size());
  for (const auto& t : t_) {
    Fe v = F.mul(t.c, c);
    if (v != 0) r.t_.push_back({mmul(t.m, m), v});
  }
  return r;
}

Poly Poly::mul(const Poly& o) const {
  Poly acc(R_);
  for (const auto& t : o.t_) acc = acc.add(mul_term(t.m, t.c));
  return acc;
}

Fe Poly::evaluate(const Field& K, const std::vector<Fe>& point) const {
  Fe s = 0;
  for (const auto& t : t_) {
    Fe v = t.c;  // F_p code embeds into K unchanged
    for (int i = 0; i < R_->nvars(); ++i)
      if (t.m.e[size_t(i)]) v = K.mul(v, K.pow(point.at(size_t(i)), t.m.e[size_t(i)]));
    s = K.add(s, v);
  }
  return s;
}

Poly Poly::map_ring(const PolyRing* R2) const {
  if (R2->nvars() < R_->nvars()) fail("InternalError", "map_ring shrinks the ring");
  Poly r(R2);
  std::vector<Term> t = t_;
  std::sort(t.begin(), t.end(),
            [&](const Term& a, const Term& b) { return R2->mcmp(a.m, b.m) > 0; });
  r = from_sorted_terms(R2, std::move(t));
  return r;
}

std::string Poly::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& t : t_) {
    if (!s.empty()) s += " + ";
    bool one_mono = t.m.is_one();
    if (t.c != 1 || one_mono) {
      s += R_->field().to_string(t.c);
      if (!one_mono) s += "*";
    }
    if (!one_mono) s += R_->mono_to_string(t.m);
  }
  return s;
}

Poly parse_poly(const PolyRing* R, const std::string& s) {
  const Field& F = R->field();
  Poly acc(R);
  size_t i = 0;
  auto ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
  ws();
  if (i == s.size()) fail("ParseError", "empty polynomial");
  bool first = true;
  while (true) {
    ws();
    if (i == s.size()) break;
    bool negate = false;
    if (!first || s[i] == '+' || s[i] == '-') {
      if (i == s.size() || (s[i] != '+' && s[i] != '-'))
        fail("ParseError", "expected '+' or '-' in: " + s);
      negate = s[i] == '-';
      ++i;
      ws();
    }
    first = false;
    // term: [int] { '*'? (var [^int]) }*
    Fe coef = 1;
    bool saw_any = false;
    if (i < s.size() && std::isdigit((unsigned char)s[i])) {
      long long v = 0;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
      coef = F.from_int(v);
      saw_any = true;
    }
    Monomial m;
    while (true) {
      ws();
      size_t save = i;
      if (i < s.size() && s[i] == '*') { ++i; ws(); }
      if (i == s.size() || !(std::isalpha((unsigned char)s[i]) || s[i] == '_')) {
        i = save;
        break;
      }
      std::string name;
      while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_'))
        name.push_back(s[i++]);
      int vi = R->find_var(name);
      if (vi < 0) fail("ParseError", "unknown variable '" + name + "' in: " + s);
      long long expo = 1;
      ws();
      if (i < s.size() && s[i] == '^') {
        ++i; ws();
        if (i == s.size() || !std::isdigit((unsigned char)s[i]))
          fail("ParseError", "expected exponent in: " + s);
        expo = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) expo = expo * 10 + (s[i++] - '0');
      }
      if (expo < 0 || m.e[size_t(vi)] + expo > 60000) fail("ParseError", "exponent out of range");
      m.e[size_t(vi)] = uint16_t(m.e[size_t(vi)] + expo);
      saw_any = true;
    }
    if (!saw_any) fail("ParseError", "expected a term in: " + s);
    if (negate) coef = F.neg(coef);
    acc = acc.add(Poly::monomial(R, m, coef));
    ws();
    if (i == s.size()) break;
  }
  return acc;
}

// ---- ModElem --------------------------------------------------------------

ModElem ModElem::scaled(Fe c) const {
  const Field& F = R_->field();
  ModElem r(R_);
  if (c == 0) return r;
  r.t_.reserve(t_.size());
  for (const auto& t : t_) {
    Fe v = F.mul(t.c, c);
    if (v != 0) r.t_.push_back({t.m, t.comp, v});
  }
  return r;
}

ModElem ModElem::axpy(Fe c, const Monomial& m, const ModElem& v, const ModOrder& ord) const {
  const Field& F = R_->field();
  ModElem r(R_);
  if (c == 0) return *this;
  r.t_.reserve(t_.size() + v.t_.size());
  size_t i = 0, j = 0;
  auto vterm = [&](size_t k) {
    return MTerm{mmul(v.t_[k].m, m), v.t_[k].comp, F.mul(v.t_[k].c, c)};
  };
  while (i < t_.size() && j < v.t_.size()) {
    MTerm b = vterm(j);
    int cc = ord.cmp(t_[i], b);
    if (cc > 0) {
      r.t_.push_back(t_[i++]);
    } else if (cc < 0) {
      r.t_.push_back(b);
      ++j;
    } else {
      Fe s = F.add(t_[i].c, b.c);
      if (s != 0) r.t_.push_back({t_[i].m, t_[i].comp, s});
      ++i; ++j;
    }
  }
  for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
  for (; j < v.t_.size(); ++j) r.t_.push_back(vterm(j));
  return r;
}

ModElem ModElem::from_terms(const PolyRing* R, std::vector<MTerm> t, const ModOrder& ord) {
  std::sort(t.begin(), t.end(), [&](const MTerm& a, const MTerm& b) { return ord.cmp(a, b) > 0; });
  ModElem r(R);
  const Field& F = R->field();
  for (auto& term : t) {
    if (term.c == 0) continue;
    if (!r.t_.empty() && r.t_.back().m == term.m && r.t_.back().comp == term.comp) {
      r.t_.back().c = F.add(r.t_.back().c, term.c);
      if (r.t_.back().c == 0) r.t_.pop_back();
    } else {
      r.t_.push_back(term);
    }
  }
  return r;
}

ModElem ModElem::from_column(const PolyRing* R, const std::vector<Poly>& col, const ModOrder& ord) {
  std::vector<MTerm> t;
  for (size_t r = 0; r < col.size(); ++r)
    for (const auto& term : col[r].terms()) t.push_back({term.m, uint32_t(r), term.c});
  return from_terms(R, std::move(t), ord);
}

std::vector<Poly> ModElem::to_column(uint32_t ncomps) const {
  std::vector<std::vector<Term>> rows(ncomps);
  for (const auto& t : t_) rows.at(t.comp).push_back({t.m, t.c});
  std::vector<Poly> col;
  col.reserve(ncomps);
  for (auto& terms : rows) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return R_->mcmp(a.m, b.m) > 0; });
    col.push_back(Poly::from_sorted_terms(R_, std::move(terms)));
  }
  return col;
}

}  // namespace sf
