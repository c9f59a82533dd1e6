#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sf/util.hpp"

namespace sf {

// Element code. For F_p the residue in [0,p). For F_{p^e} the base-p digit
// encoding of the residue polynomial: code = sum c_i * p^i, where the residue
// is c_0 + c_1*a + ... + c_{e-1}*a^{e-1} and a is a root of the modulus.
using Fe = uint32_t;

// A prime field F_p or a small extension F_{p^e} with a fixed irreducible
// modulus. The modulus is found by the smallest-code search, so (p, e)
// determines the field and all element codes deterministically. Constants
// embed as identical codes: F_p -> F_{p^e} is the identity on [0, p).
class Field {
public:
  static Field prime(uint32_t p);
  static Field extension(uint32_t p, uint32_t e);

  uint32_t p() const { return p_; }
  uint32_t e() const { return e_; }
  uint32_t q() const { return q_; }
  bool is_prime_field() const { return e_ == 1; }

  Fe zero() const { return 0; }
  Fe one() const { return 1; }

  Fe add(Fe a, Fe b) const {
    if (e_ == 1) { uint32_t s = a + b; return s >= p_ ? s - p_ : s; }
    return add_ext(a, b);
  }
  Fe neg(Fe a) const {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_ext(a);
  }
  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
  Fe mul(Fe a, Fe b) const {
    if (e_ == 1) return Fe((uint64_t(a) * b) % p_);
    return multab_[size_t(a) * q_ + b];
  }
  Fe inv(Fe a) const;
  Fe pow(Fe a, uint64_t n) const;

  // Reduction of an integer into the prime subfield.
  Fe from_int(long long v) const {
    long long r = v % (long long)p_;
    if (r < 0) r += p_;
    return Fe(r);
  }

  // Modulus coefficients c_0..c_e (ascending, monic), empty for prime fields.
  const std::vector<uint32_t>& modulus() const { return mod_; }

  // Text form: integers for the prime subfield, polynomials in "a" otherwise,
  // e.g. "a + 1". parse_elem accepts the same forms (spaces optional).
  std::string to_string(Fe a) const;
  Fe parse_elem(const std::string& s) const;

  bool operator==(const Field& o) const { return p_ == o.p_ && e_ == o.e_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

private:
  Field() = default;
  Fe add_ext(Fe a, Fe b) const;
  Fe neg_ext(Fe a) const;

  uint32_t p_ = 2, e_ = 1, q_ = 2;
  std::vector<uint32_t> mod_;    // irreducible modulus, ascending coeffs
  std::vector<Fe> multab_;       // q*q multiplication table when e > 1
};

}  // namespace sf
