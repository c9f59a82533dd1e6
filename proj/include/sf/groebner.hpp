#pragma once

#include <optional>
#include <vector>

#include "sf/poly.hpp"

namespace sf {

// Groebner basis of a submodule of a free module (ideals are the rank-1
// case). Elements are monic. After interreduce() the basis is the reduced
// one, sorted ascending by leading term: a canonical form usable for
// ideal-equality tests.
struct GBasis {
  const PolyRing* R = nullptr;
  ModOrder ord;
  uint32_t ncomps = 1;
  std::vector<ModElem> g;
  bool reduced = false;
};

// Buchberger completion, normal pair-selection strategy (smallest lcm
// degree first, then input order), with the coprimality criterion (applied
// only when both elements live in a single common component) and the chain
// criterion.
GBasis buchberger(const PolyRing* R, ModOrder ord, uint32_t ncomps, std::vector<ModElem> gens);

// Add generators to an existing basis and re-complete. Clears `reduced`.
void gb_extend(GBasis& B, const std::vector<ModElem>& more);

void interreduce(GBasis& B);

// Normal form against the basis elements in stored order; divisor choice is
// the first whose leading term divides. With `quot`, fills one polynomial
// per basis element so that u = sum quot[l]*g[l] + remainder.
ModElem normal_form(const ModElem& u, const GBasis& B, std::vector<Poly>* quot = nullptr);

// Division by an arbitrary ordered divisor list (not necessarily a GB).
ModElem divide(const ModElem& u, const std::vector<ModElem>& divisors, const ModOrder& ord,
               std::vector<Poly>* quot = nullptr);

// Generators of {(a_1..a_t) : sum a_i gens_i = 0} in R^t, via an
// elimination order on the tagged module R^ncomps + R^t.
std::vector<ModElem> syzygies(const PolyRing* R, uint32_t ncomps, const std::vector<ModElem>& gens);

// Express b in terms of gens: b = sum q_i gens_i, or nullopt when b is not
// in the generated submodule. Deterministic representative.
std::optional<std::vector<Poly>> lin_rep(const PolyRing* R, uint32_t ncomps,
                                         const std::vector<ModElem>& gens, const ModElem& b);

// ---- ideal layer ----------------------------------------------------------

GBasis buchberger_ideal(const PolyRing* R, std::vector<Poly> gens);

// Multivariate division with quotient tracking: g = sum quot[i]*divisors[i]
// + remainder, no remainder term divisible by a divisor leading term.
Poly poly_divide(const Poly& g, const std::vector<Poly>& divisors, std::vector<Poly>* quot);

bool ideal_member(const Poly& g, const GBasis& B);
Poly ideal_nf(const Poly& g, const GBasis& B);
bool ideal_equal(const PolyRing* R, const std::vector<Poly>& A, const std::vector<Poly>& B);

// Rabinowitsch membership test: g in rad(I) iff 1 in I + (1 - t g) in R[t].
bool radical_member(const Poly& g, const std::vector<Poly>& I);

// (I : g) and (I : J) = intersection over generators of J.
std::vector<Poly> colon(const PolyRing* R, const std::vector<Poly>& I, const Poly& g);
std::vector<Poly> colon_ideal(const PolyRing* R, const std::vector<Poly>& I,
                              const std::vector<Poly>& J);
std::vector<Poly> intersect_ideals(const PolyRing* R, const std::vector<Poly>& A,
                                   const std::vector<Poly>& B);

// (I : J^infinity) by iterated colon; stabilization certified by equality of
// reduced bases of consecutive iterates.
std::vector<Poly> saturate_ideal(const PolyRing* R, const std::vector<Poly>& I,
                                 const std::vector<Poly>& J);

// Dimension of V(I) as an affine cone, from the leading-term ideal via
// maximal independent variable sets; -1 for the unit ideal.
int krull_dimension(const PolyRing* R, const std::vector<Poly>& I);

// ---- closed cones in Proj of the operator ring -----------------------------

struct ConeIdeal {
  std::vector<Poly> gens;  // reduced basis, homogeneous
  bool saturated = false;
};

ConeIdeal make_cone(const PolyRing* chi, std::vector<Poly> gens);
ConeIdeal saturate_cone(const PolyRing* chi, const ConeIdeal& X);
bool proj_empty(const PolyRing* chi, const ConeIdeal& X);

enum class ProjRel { equal, subset, superset, incomparable };
const char* proj_rel_name(ProjRel r);

// Containment of the closed subsets of Proj defined by X and Y:
// V(X) <= V(Y) iff every generator of saturate(Y) lies in rad(saturate(X)).
ProjRel proj_compare(const PolyRing* chi, const ConeIdeal& X, const ConeIdeal& Y);

// Representatives of P^{c-1}(F_{p^e}), first nonzero coordinate 1,
// enumerated in code order.
std::vector<std::vector<Fe>> proj_points(const Field& K, uint32_t c);
bool cone_contains_point(const ConeIdeal& X_saturated, const Field& K,
                         const std::vector<Fe>& alpha);

}  // namespace sf
