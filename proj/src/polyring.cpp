#include "sf/polyring.hpp"

namespace sf {

PolyRing::PolyRing(Field F, std::vector<VarSpec> vars, OrderKind ord)
    : F_(std::move(F)), vars_(std::move(vars)), ord_(ord) {
  if (vars_.empty()) fail("InvalidRing", "ring needs at least one variable");
  if (int(vars_.size()) > kMaxVars - 1)
    fail("InvalidRing", "too many variables (limit " + std::to_string(kMaxVars - 1) + ")");
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name.empty()) fail("InvalidRing", "empty variable name");
    if (vars_[i].deg < 1) fail("InvalidRing", "variable degrees must be positive");
    for (size_t j = 0; j < i; ++j)
      if (vars_[j].name == vars_[i].name)
        fail("InvalidRing", "duplicate variable name: " + vars_[i].name);
  }
}

int PolyRing::find_var(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return int(i);
  return -1;
}

int PolyRing::mcmp(const Monomial& a, const Monomial& b) const {
  if (ord_ == OrderKind::lex) {
    for (int i = 0; i < nvars(); ++i) {
      if (a.e[size_t(i)] != b.e[size_t(i)]) return a.e[size_t(i)] > b.e[size_t(i)] ? 1 : -1;
    }
    return 0;
  }
  long da = wdeg(a), db = wdeg(b);
  if (da != db) return da > db ? 1 : -1;
  for (int i = nvars() - 1; i >= 0; --i) {
    if (a.e[size_t(i)] != b.e[size_t(i)]) return a.e[size_t(i)] < b.e[size_t(i)] ? 1 : -1;
  }
  return 0;
}

std::string PolyRing::mono_to_string(const Monomial& m) const {
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    uint16_t x = m.e[size_t(i)];
    if (x == 0) continue;
    if (!s.empty()) s += "*";
    s += vars_[size_t(i)].name;
    if (x > 1) s += "^" + std::to_string(x);
  }
  return s.empty() ? "1" : s;
}

PolyRing PolyRing::with_extra_var(const std::string& name, int deg) const {
  std::vector<VarSpec> v = vars_;
  v.push_back({name, deg});
  return PolyRing(F_, std::move(v), ord_);
}

bool PolyRing::same_structure(const PolyRing& o) const {
  if (!(F_ == o.F_) || ord_ != o.ord_ || vars_.size() != o.vars_.size()) return false;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name != o.vars_[i].name || vars_[i].deg != o.vars_[i].deg) return false;
  return true;
}

}  // namespace sf
