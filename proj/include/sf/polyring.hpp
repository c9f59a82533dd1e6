#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sf/field.hpp"

namespace sf {

constexpr int kMaxVars = 12;

// Exponent vector. Slots beyond the ring's variable count stay zero, so
// componentwise operations may run over the whole array.
struct Monomial {
  std::array<uint16_t, kMaxVars> e{};

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool is_one() const {
    for (auto v : e)
      if (v) return false;
    return true;
  }
  int total() const {
    int s = 0;
    for (auto v : e) s += v;
    return s;
  }
};

inline Monomial mmul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = uint16_t(a.e[i] + b.e[i]);
  return r;
}
inline bool mdivides(const Monomial& a, const Monomial& b) {  // a | b
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}
inline Monomial mdiv(const Monomial& b, const Monomial& a) {  // b / a
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = uint16_t(b.e[i] - a.e[i]);
  return r;
}
inline Monomial mlcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}
inline bool mcoprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

struct VarSpec {
  std::string name;
  int deg = 1;
};

enum class OrderKind { grevlex, lex };

// A polynomial ring over a Field with weighted variables and a fixed
// monomial order (the session order). Immutable; polynomials keep a
// pointer to their ring.
class PolyRing {
public:
  PolyRing(Field F, std::vector<VarSpec> vars, OrderKind ord);

  const Field& field() const { return F_; }
  int nvars() const { return int(vars_.size()); }
  const VarSpec& var(int i) const { return vars_[size_t(i)]; }
  const std::vector<VarSpec>& vars() const { return vars_; }
  int find_var(const std::string& name) const;  // -1 when absent
  OrderKind order() const { return ord_; }
  std::string order_name() const { return ord_ == OrderKind::grevlex ? "grevlex" : "lex"; }

  long wdeg(const Monomial& m) const {
    long s = 0;
    for (int i = 0; i < nvars(); ++i) s += long(m.e[size_t(i)]) * vars_[size_t(i)].deg;
    return s;
  }

  // Session order; returns +1 when a > b, 0 on equality, -1 otherwise.
  int mcmp(const Monomial& a, const Monomial& b) const;

  std::string mono_to_string(const Monomial& m) const;

  // Same variables and order over another coefficient field (constants
  // embed code-for-code).
  PolyRing with_field(const Field& F2) const { return PolyRing(F2, vars_, ord_); }
  PolyRing with_extra_var(const std::string& name, int deg) const;

  bool same_structure(const PolyRing& o) const;

private:
  Field F_;
  std::vector<VarSpec> vars_;
  OrderKind ord_;
};

}  // namespace sf
