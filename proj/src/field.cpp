#include "sf/field.hpp"

#include <algorithm>
#include <cctype>

namespace sf {

namespace {

constexpr uint32_t kMaxPrime = 1u << 15;  // SIMD row kernels assume p < 2^15
constexpr uint32_t kMaxQ = 2048;          // extension tables stay small

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Digits = std::vector<uint32_t>;  // ascending coefficients over F_p

// c = a*b mod m over F_p, schoolbook; all operands ascending-coefficient.
Digits polmul_mod(const Digits& a, const Digits& b, const Digits& m, uint32_t p) {
  Digits c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = uint32_t((c[i + j] + uint64_t(a[i]) * b[j]) % p);
  // reduce by monic m of degree e
  size_t e = m.size() - 1;
  for (size_t i = c.size(); i-- > e;) {
    uint32_t lead = c[i];
    if (lead == 0) continue;
    c[i] = 0;
    for (size_t j = 0; j < e; ++j) {
      uint64_t t = uint64_t(lead) * m[j] % p;
      c[i - e + j] = uint32_t((c[i - e + j] + p - t) % p);
    }
  }
  c.resize(e, 0);
  return c;
}

// Trial division by all monic polynomials of degree 1..deg/2.
bool is_irreducible(const Digits& f, uint32_t p) {
  size_t deg = f.size() - 1;
  for (size_t d = 1; 2 * d <= deg; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
      Digits g(d + 1, 0);
      uint64_t c = code;
      for (size_t i = 0; i < d; ++i) { g[i] = uint32_t(c % p); c /= p; }
      g[d] = 1;
      // remainder of f divided by g
      Digits r = f;
      for (size_t i = r.size(); i-- > d;) {
        uint32_t lead = r[i];
        if (lead == 0) continue;
        r[i] = 0;
        for (size_t j = 0; j < d; ++j) {
          uint64_t t = uint64_t(lead) * g[j] % p;
          r[i - d + j] = uint32_t((r[i - d + j] + p - t) % p);
        }
      }
      bool zero = true;
      for (size_t i = 0; i < d; ++i)
        if (r[i] != 0) { zero = false; break; }
      if (zero) return false;
    }
  }
  return true;
}

Digits decode(Fe a, uint32_t p, uint32_t e) {
  Digits d(e, 0);
  for (uint32_t i = 0; i < e; ++i) { d[i] = a % p; a /= p; }
  return d;
}

Fe encode(const Digits& d, uint32_t p) {
  Fe a = 0;
  for (size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

}  // namespace

Field Field::prime(uint32_t p) {
  if (!is_prime_u32(p)) fail("InvalidField", "p = " + std::to_string(p) + " is not prime");
  if (p >= kMaxPrime) fail("InvalidField", "p exceeds the supported bound 2^15");
  Field F;
  F.p_ = p;
  F.e_ = 1;
  F.q_ = p;
  return F;
}

Field Field::extension(uint32_t p, uint32_t e) {
  if (e == 0) fail("InvalidField", "extension degree must be positive");
  if (e == 1) return prime(p);
  if (!is_prime_u32(p)) fail("InvalidField", "p = " + std::to_string(p) + " is not prime");
  uint64_t q = 1;
  for (uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxQ) fail("ExtensionTooLarge", "p^e exceeds the supported bound " + std::to_string(kMaxQ));
  }
  Field F;
  F.p_ = p;
  F.e_ = e;
  F.q_ = uint32_t(q);

  // smallest-code search for the modulus: iterate the non-leading
  // coefficient tuples in base-p code order, take the first irreducible
  for (uint64_t code = 0;; ++code) {
    if (code >= q) fail("InvalidField", "no irreducible modulus found");
    Digits f(e + 1, 0);
    uint64_t c = code;
    for (uint32_t i = 0; i < e; ++i) { f[i] = uint32_t(c % p); c /= p; }
    f[e] = 1;
    if (is_irreducible(f, p)) { F.mod_ = f; break; }
  }

  F.multab_.resize(size_t(F.q_) * F.q_);
  for (Fe a = 0; a < F.q_; ++a) {
    Digits da = decode(a, p, e);
    for (Fe b = 0; b < F.q_; ++b) {
      Digits db = decode(b, p, e);
      F.multab_[size_t(a) * F.q_ + b] = encode(polmul_mod(da, db, F.mod_, p), p);
    }
  }
  return F;
}

Fe Field::add_ext(Fe a, Fe b) const {
  Digits da = decode(a, p_, e_), db = decode(b, p_, e_);
  for (uint32_t i = 0; i < e_; ++i) da[i] = (da[i] + db[i]) % p_;
  return encode(da, p_);
}

Fe Field::neg_ext(Fe a) const {
  Digits da = decode(a, p_, e_);
  for (uint32_t i = 0; i < e_; ++i) da[i] = da[i] == 0 ? 0 : p_ - da[i];
  return encode(da, p_);
}

Fe Field::pow(Fe a, uint64_t n) const {
  Fe r = 1, base = a;
  while (n) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

Fe Field::inv(Fe a) const {
  if (a == 0) fail("DivisionByZero", "inverse of zero");
  return pow(a, uint64_t(q_) - 2);
}

std::string Field::to_string(Fe a) const {
  if (e_ == 1) return std::to_string(a);
  Digits d = decode(a, p_, e_);
  std::string s;
  for (size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) { s += std::to_string(d[i]); continue; }
    if (d[i] != 1) s += std::to_string(d[i]) + "*";
    s += "a";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

Fe Field::parse_elem(const std::string& s) const {
  Digits d(e_, 0);
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
  skip_ws();
  bool first = true;
  while (i < s.size()) {
    if (!first) {
      if (s[i] != '+') fail("ParseError", "bad field element: " + s);
      ++i;
      skip_ws();
    }
    first = false;
    uint64_t coef = 1;
    bool saw_coef = false;
    if (i < s.size() && std::isdigit((unsigned char)s[i])) {
      coef = 0;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) coef = coef * 10 + (s[i++] - '0');
      saw_coef = true;
      skip_ws();
      if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
    }
    uint32_t expo = 0;
    if (i < s.size() && s[i] == 'a') {
      ++i;
      expo = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        expo = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) expo = expo * 10 + (s[i++] - '0');
      }
    } else if (!saw_coef) {
      fail("ParseError", "bad field element: " + s);
    }
    if (expo >= e_) fail("ParseError", "exponent out of range in: " + s);
    d[expo] = uint32_t((d[expo] + coef) % p_);
    skip_ws();
  }
  return encode(d, p_);
}

}  // namespace sf
