#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "sf/groebner.hpp"
#include "sf/pmatrix.hpp"

namespace sf {

// The ambient data of a graded complete intersection: Q = F[vars], the
// homogeneous regular sequence f inside (vars)^2, the quotient R = Q/(f)
// whose elements are handled as normal-form representatives in Q, and the
// operator ring k[x1..xc] with deg xj = 2.
struct RingSetup {
  std::shared_ptr<const PolyRing> Q;
  std::shared_ptr<const PolyRing> chi;
  std::vector<Poly> f;
  std::vector<long> fdeg;
  bool equigenerated = true;  // all f_j of one internal degree
  GBasis gb_f;                // reduced basis of (f) over Q
  GBasis gb_f_tagged;         // elimination basis of {(f_j, e_j)}, for exact decompositions
  int n = 0, c = 0, dimR = 0;

  // canonical representative modulo (f)
  Poly nf(const Poly& g) const { return ideal_nf(g, gb_f); }
  PMatrix nf_mat(const PMatrix& m) const;

  // g = sum q_j f_j exactly over Q, or nullopt when g is not in (f)
  std::optional<std::vector<Poly>> f_decompose(const Poly& g) const;

  Poly parse(const std::string& s) const { return parse_poly(Q.get(), s); }
  Poly parse_chi(const std::string& s) const { return parse_poly(chi.get(), s); }
};

// Validates and assembles the setup. Errors: NonHomogeneous,
// NotInSquareOfMaximalIdeal, NotRegularSequence (certified by the
// codimension check dim V(f) = n - c).
RingSetup build_ci(const Field& F, const std::vector<VarSpec>& vars, OrderKind ord,
                   const std::function<std::vector<Poly>(const PolyRing*)>& fgen);

RingSetup build_ci_text(const Field& F, const std::vector<VarSpec>& vars, OrderKind ord,
                        const std::vector<std::string>& ftexts);

// Monomials of Q outside the leading-term ideal of (f); requires dim R = 0.
std::vector<Monomial> standard_monomials(const RingSetup& RS);

}  // namespace sf
