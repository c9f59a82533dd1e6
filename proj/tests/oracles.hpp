#pragma once

// Test-side oracles. These deliberately avoid the code paths they check:
// membership goes through dense linear algebra on monomial bases, and the
// Betti oracle resolves degreewise with multiplication tables instead of
// syzygy computations.

#include <cstdint>
#include <map>
#include <vector>

#include "sf/ci.hpp"
#include "sf/complexes.hpp"
#include "sf/fmatrix.hpp"

namespace sforacle {

// split-mix style generator, deterministic across platforms
struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  uint32_t below(uint32_t bound) { return uint32_t(next() % bound); }
};

inline std::vector<sf::Monomial> monomials_of_degree(const sf::PolyRing* R, long d) {
  std::vector<sf::Monomial> out;
  int n = R->nvars();
  sf::Monomial m;
  std::function<void(int, long)> rec = [&](int pos, long rem) {
    if (pos == n) {
      if (rem == 0) out.push_back(m);
      return;
    }
    long w = R->var(pos).deg;
    for (long v = 0; v * w <= rem; ++v) {
      m.e[size_t(pos)] = uint16_t(v);
      rec(pos + 1, rem - v * w);
      m.e[size_t(pos)] = 0;
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end(),
            [&](const sf::Monomial& a, const sf::Monomial& b) { return R->mcmp(a, b) > 0; });
  return out;
}

// membership of a homogeneous g in the ideal generated by homogeneous gens,
// decided by linear algebra in the single relevant degree
inline bool brute_force_member(const sf::Poly& g, const std::vector<sf::Poly>& gens) {
  const sf::PolyRing* R = g.ring();
  const sf::Field& F = R->field();
  if (g.is_zero()) return true;
  long d = g.hdeg();
  std::vector<sf::Monomial> basis = monomials_of_degree(R, d);
  std::map<std::array<uint16_t, sf::kMaxVars>, size_t> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i].e] = i;

  std::vector<std::vector<sf::Fe>> cols;
  for (const auto& h : gens) {
    if (h.is_zero()) continue;
    long dh = h.hdeg();
    if (dh > d) continue;
    for (const auto& m : monomials_of_degree(R, d - dh)) {
      sf::Poly prod = h.mul_term(m, 1);
      std::vector<sf::Fe> v(basis.size(), 0);
      for (const auto& t : prod.terms()) v[index.at(t.m.e)] = t.c;
      cols.push_back(std::move(v));
    }
  }
  sf::FMatrix A(&F, basis.size(), cols.size() + 1);
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t r = 0; r < basis.size(); ++r) A.at(r, j) = cols[j][r];
  sf::FMatrix B(&F, basis.size(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t r = 0; r < basis.size(); ++r) B.at(r, j) = cols[j][r];
  for (const auto& t : g.terms()) A.at(index.at(t.m.e), cols.size()) = t.c;
  return A.rank() == B.rank();
}

// k-dimension of the degree-delta slice of a presented module over R,
// by linear algebra on the ambient monomial basis: subtract the rank of
// the slice spanned by monomial multiples of the relations and of f F.
inline size_t graded_dim(const sf::ModulePresentation& M, long delta) {
  const sf::RingSetup& RS = *M.RS;
  const sf::PolyRing* Q = RS.Q.get();
  const sf::Field& F = Q->field();

  std::vector<std::pair<size_t, sf::Monomial>> basis;
  std::map<std::pair<size_t, std::array<uint16_t, sf::kMaxVars>>, size_t> index;
  for (size_t r = 0; r < M.ngens(); ++r)
    for (const auto& m : monomials_of_degree(Q, delta - M.gen_degs[r])) {
      index[{r, m.e}] = basis.size();
      basis.push_back({r, m});
    }
  if (basis.empty()) return 0;

  std::vector<std::vector<sf::Fe>> cols;
  auto add_multiples = [&](const std::vector<sf::Poly>& col, long coldeg) {
    for (const auto& m : monomials_of_degree(Q, delta - coldeg)) {
      std::vector<sf::Fe> v(basis.size(), 0);
      bool nz = false;
      for (size_t r = 0; r < col.size(); ++r) {
        sf::Poly prod = col[r].mul_term(m, 1);
        for (const auto& t : prod.terms()) {
          v[index.at({r, t.m.e})] = t.c;
          nz = true;
        }
      }
      if (nz) cols.push_back(std::move(v));
    }
  };
  for (size_t j = 0; j < M.rel.cols(); ++j) {
    std::vector<sf::Poly> col = M.rel.column(j);
    long coldeg = 0;
    for (size_t r = 0; r < col.size(); ++r)
      if (!col[r].is_zero()) { coldeg = col[r].hdeg() + M.gen_degs[r]; break; }
    add_multiples(col, coldeg);
  }
  for (int jf = 0; jf < RS.c; ++jf)
    for (size_t r = 0; r < M.ngens(); ++r) {
      std::vector<sf::Poly> col(M.ngens(), sf::Poly::zero(Q));
      col[r] = RS.f[size_t(jf)];
      add_multiples(col, RS.fdeg[size_t(jf)] + M.gen_degs[r]);
    }

  sf::FMatrix A(&F, basis.size(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t r = 0; r < basis.size(); ++r) A.at(r, j) = cols[j][r];
  return basis.size() - A.rank();
}

// Betti numbers of M over an artinian graded quotient by degreewise dense
// linear algebra: kernels of the differential, minimal generators as a
// complement of R_+ * kernel, iterated.
inline std::vector<size_t> linear_algebra_betti(const sf::RingSetup& RS,
                                                const sf::ModulePresentation& M, int D) {
  const sf::PolyRing* Q = RS.Q.get();
  const sf::Field& F = Q->field();
  std::vector<sf::Monomial> rb = sf::standard_monomials(RS);
  size_t dr = rb.size();
  std::map<std::array<uint16_t, sf::kMaxVars>, size_t> rindex;
  for (size_t i = 0; i < dr; ++i) rindex[rb[i].e] = i;

  // multiplication of a basis monomial by a normal-form polynomial
  auto mul_into = [&](const sf::Poly& p, size_t b, std::vector<std::pair<size_t, sf::Fe>>& out) {
    sf::Poly prod = RS.nf(p.mul_term(rb[b], 1));
    for (const auto& t : prod.terms()) out.push_back({rindex.at(t.m.e), t.c});
  };

  struct Free {
    std::vector<long> gdeg;  // generator degrees
  };
  // basis of a free module: pairs (gen, monomial); flat index gen*dr + b
  auto dim_of = [&](const Free& f) { return f.gdeg.size() * dr; };
  auto deg_of = [&](const Free& f, size_t idx) {
    return f.gdeg[idx / dr] + Q->wdeg(rb[idx % dr]);
  };

  // columns of the map F1 -> F0 sending gen j to the vector vecs[j]
  auto map_matrix = [&](const Free& f0, const Free& f1,
                        const std::vector<std::vector<sf::Fe>>& vecs) {
    sf::FMatrix m(&F, dim_of(f0), dim_of(f1));
    for (size_t g = 0; g < f1.gdeg.size(); ++g)
      for (size_t b = 0; b < dr; ++b) {
        // image of gen_g * monomial b = b * vecs[g]
        for (size_t i = 0; i < dim_of(f0); ++i) {
          if (vecs[g][i] == 0) continue;
          std::vector<std::pair<size_t, sf::Fe>> prod;
          mul_into(sf::Poly::monomial(Q, rb[i % dr], 1), b, prod);
          // prod holds rb-monomial products; combine with the gen part of i
          for (const auto& [bb, cc] : prod)
            m.at((i / dr) * dr + bb, g * dr + b) =
                F.add(m.at((i / dr) * dr + bb, g * dr + b), F.mul(cc, vecs[g][i]));
        }
      }
    return m;
  };

  Free F0{M.gen_degs};
  // presentation columns as vectors in F0
  Free F1;
  std::vector<std::vector<sf::Fe>> cols;
  for (size_t j = 0; j < M.rel.cols(); ++j) {
    std::vector<sf::Fe> v(dim_of(F0), 0);
    long coldeg = 0;
    for (size_t r = 0; r < M.ngens(); ++r) {
      sf::Poly p = RS.nf(M.rel.at(r, j));
      if (p.is_zero()) continue;
      coldeg = p.hdeg() + M.gen_degs[r];
      for (const auto& t : p.terms()) v[r * dr + rindex.at(t.m.e)] = t.c;
    }
    F1.gdeg.push_back(coldeg);
    cols.push_back(std::move(v));
  }

  std::vector<size_t> betti{M.gen_degs.size()};
  // assumes a minimal input presentation for b1; callers pass minimized M
  for (int step = 1; step <= D; ++step) {
    betti.push_back(F1.gdeg.size());
    if (F1.gdeg.empty()) {
      while (int(betti.size()) <= D) betti.push_back(0);
      break;
    }
    if (step == D) break;
    sf::FMatrix d = map_matrix(F0, F1, cols);
    sf::FMatrix K = d.kernel();

    // minimal generators of the kernel, degree by degree: complement of the
    // span of variable multiples of lower kernel elements
    std::vector<std::vector<sf::Fe>> kv;
    for (size_t j = 0; j < K.cols(); ++j) {
      std::vector<sf::Fe> v(dim_of(F1), 0);
      for (size_t r = 0; r < dim_of(F1); ++r) v[r] = K.at(r, j);
      kv.push_back(std::move(v));
    }
    // split each kernel vector into homogeneous parts (the map is graded,
    // so the parts are kernel vectors again)
    std::map<long, std::vector<std::vector<sf::Fe>>> bydeg;
    for (const auto& v : kv) {
      std::map<long, std::vector<sf::Fe>> parts;
      for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        auto& pv = parts[deg_of(F1, i)];
        if (pv.empty()) pv.assign(v.size(), 0);
        pv[i] = v[i];
      }
      for (auto& [dd, pv] : parts) bydeg[dd].push_back(pv);
    }

    Free F2;
    std::vector<std::vector<sf::Fe>> newcols;
    for (auto& [deg, vecs] : bydeg) {
      // span of x_i * (kernel elements of lower degree): the kernel in each
      // degree is the degree slice of K; multiples of lower kernel slices
      std::vector<std::vector<sf::Fe>> low;
      for (auto& [d2, vecs2] : bydeg) {
        if (d2 >= deg) break;
        for (int var = 0; var < Q->nvars(); ++var) {
          if (d2 + Q->var(var).deg != deg) continue;
          for (const auto& v : vecs2) {
            std::vector<sf::Fe> w(dim_of(F1), 0);
            for (size_t i = 0; i < v.size(); ++i) {
              if (v[i] == 0) continue;
              std::vector<std::pair<size_t, sf::Fe>> prod;
              mul_into(sf::Poly::variable(Q, var), i % dr, prod);
              for (const auto& [bb, cc] : prod)
                w[(i / dr) * dr + bb] = F.add(w[(i / dr) * dr + bb], F.mul(cc, v[i]));
            }
            low.push_back(std::move(w));
          }
        }
      }
      // extend span(low) by vecs; additions are new generators
      size_t dim = dim_of(F1);
      sf::FMatrix W(&F, dim, low.size() + vecs.size());
      for (size_t j = 0; j < low.size(); ++j)
        for (size_t r = 0; r < dim; ++r) W.at(r, j) = low[j][r];
      for (size_t j = 0; j < vecs.size(); ++j)
        for (size_t r = 0; r < dim; ++r) W.at(r, low.size() + j) = vecs[j][r];
      std::vector<size_t> piv = W.rref();
      for (size_t p : piv) {
        if (p < low.size()) continue;
        F2.gdeg.push_back(deg);
        newcols.push_back(vecs[p - low.size()]);
      }
    }
    F0 = F1;
    F1 = F2;
    cols = newcols;
  }
  return betti;
}

}  // namespace sforacle
