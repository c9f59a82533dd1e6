#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sf/polyring.hpp"

namespace sf {

struct Term {
  Monomial m;
  Fe c = 0;
};

// Sparse polynomial, terms strictly descending in the session order with
// nonzero coefficients: the representation is canonical per ring.
class Poly {
public:
  Poly() = default;
  explicit Poly(const PolyRing* R) : R_(R) {}

  static Poly zero(const PolyRing* R) { return Poly(R); }
  static Poly constant(const PolyRing* R, Fe c);
  static Poly variable(const PolyRing* R, int i);
  static Poly monomial(const PolyRing* R, const Monomial& m, Fe c);

  const PolyRing* ring() const { return R_; }
  bool is_zero() const { return t_.empty(); }
  const std::vector<Term>& terms() const { return t_; }
  const Term& lt() const { return t_.front(); }

  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  Fe constant_value() const { return t_.empty() ? 0 : t_[0].c; }

  bool is_homogeneous() const;
  long hdeg() const;  // weighted degree of a nonzero homogeneous poly

  Poly add(const Poly& o) const;
  Poly sub(const Poly& o) const;
  Poly neg() const;
  Poly mul(const Poly& o) const;
  Poly scaled(Fe c) const;
  Poly mul_term(const Monomial& m, Fe c) const;

  // Evaluation at a point of an extension of the coefficient field
  // (coefficients embed code-for-code).
  Fe evaluate(const Field& K, const std::vector<Fe>& point) const;

  // Reinterpret over a ring with the same variable layout and order
  // (different field, or a superset of variables appended at the end).
  Poly map_ring(const PolyRing* R2) const;

  std::string to_string() const;

  bool operator==(const Poly& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
      if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Internal: terms must be normalized (descending, nonzero).
  static Poly from_sorted_terms(const PolyRing* R, std::vector<Term> t);

private:
  const PolyRing* R_ = nullptr;
  std::vector<Term> t_;
};

Poly parse_poly(const PolyRing* R, const std::string& s);

// ---- free-module elements ----------------------------------------------

struct MTerm {
  Monomial m;
  uint32_t comp = 0;
  Fe c = 0;
};

// Order on free-module terms. Components below `split` form a dominant
// block (used for elimination); within a block the session order compares
// monomials and lower component index wins ties.
struct ModOrder {
  const PolyRing* R = nullptr;
  uint32_t split = 0;

  int cmp(const MTerm& a, const MTerm& b) const {
    int ba = a.comp < split ? 0 : 1, bb = b.comp < split ? 0 : 1;
    if (ba != bb) return ba < bb ? 1 : -1;
    int c = R->mcmp(a.m, b.m);
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }
};

// Element of a free module, terms strictly descending under a ModOrder.
class ModElem {
public:
  ModElem() = default;
  explicit ModElem(const PolyRing* R) : R_(R) {}

  const PolyRing* ring() const { return R_; }
  bool is_zero() const { return t_.empty(); }
  const std::vector<MTerm>& terms() const { return t_; }
  const MTerm& lt() const { return t_.front(); }

  ModElem scaled(Fe c) const;
  // this + c * x^m * v   (all under ord)
  ModElem axpy(Fe c, const Monomial& m, const ModElem& v, const ModOrder& ord) const;

  static ModElem from_terms(const PolyRing* R, std::vector<MTerm> t, const ModOrder& ord);
  static ModElem from_column(const PolyRing* R, const std::vector<Poly>& col, const ModOrder& ord);
  std::vector<Poly> to_column(uint32_t ncomps) const;

  bool operator==(const ModElem& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
      if (!(t_[i].m == o.t_[i].m) || t_[i].comp != o.t_[i].comp || t_[i].c != o.t_[i].c)
        return false;
    return true;
  }

private:
  const PolyRing* R_ = nullptr;
  std::vector<MTerm> t_;
};

}  // namespace sf
