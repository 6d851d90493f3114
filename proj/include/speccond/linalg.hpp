#pragma once
#include <cstdint>
#include <vector>

#include "speccond/fq.hpp"
#include "speccond/matrix.hpp"
#include "speccond/poly.hpp"
#include "speccond/residue.hpp"

namespace speccond {

// ---- ranks over finite fields -------------------------------------------

// entries are F_q indices
uint32_t rank_fq(const FqField& F, MatU64 A);
// entries mod prime p
uint32_t rank_mod_p(MatU64 A, uint64_t p);
// basis of { u : u^T A = 0 } over F_p
std::vector<std::vector<uint64_t>> left_nullspace_mod_p(const MatU64& A, uint64_t p);

// ---- division-free characteristic polynomial ----------------------------

// coefficients of det(xI - A), ascending, length n+1, monic
template <class Ops>
std::vector<typename Ops::E> charpoly_berkowitz(const Ops& R, const Mat<typename Ops::E>& A) {
  using E = typename Ops::E;
  size_t n = A.rows;
  if (n != A.cols) throw std::invalid_argument("square matrix required");
  if (n == 0) return {R.one()};
  std::vector<E> c{R.one(), R.neg(A(0, 0))};  // descending
  std::vector<E> v, t, cn;
  for (size_t r = 2; r <= n; ++r) {
    size_t k = r - 1;
    t.assign(r + 1, R.zero());
    t[0] = R.one();
    t[1] = R.neg(A(k, k));
    v.assign(k, R.zero());
    for (size_t i = 0; i < k; ++i) v[i] = A(i, k);
    for (size_t j = 2; j <= r; ++j) {
      E dot = R.zero();
      for (size_t i = 0; i < k; ++i) dot = R.add(dot, R.mul(A(k, i), v[i]));
      t[j] = R.neg(dot);
      if (j < r) {
        std::vector<E> nv(k, R.zero());
        for (size_t i = 0; i < k; ++i) {
          E acc = R.zero();
          for (size_t l = 0; l < k; ++l) acc = R.add(acc, R.mul(A(i, l), v[l]));
          nv[i] = acc;
        }
        v = std::move(nv);
      }
    }
    cn.assign(r + 1, R.zero());
    for (size_t i = 0; i <= r; ++i) {
      E acc = R.zero();
      size_t jlo = i > r - 1 ? i - (r - 1) : 0;  // c has r entries; t index <= r
      for (size_t j = jlo; j <= i && j < r; ++j) acc = R.add(acc, R.mul(t[i - j], c[j]));
      cn[i] = acc;
    }
    c = std::move(cn);
  }
  std::vector<E> asc(c.rbegin(), c.rend());
  return asc;
}

struct ZOps {
  using E = BigInt;
  E zero() const { return BigInt(0); }
  E one() const { return BigInt(1); }
  E add(const E& a, const E& b) const { return a + b; }
  E mul(const E& a, const E& b) const { return a * b; }
  E neg(const E& a) const { return -a; }
};

struct ModOps {
  using E = uint64_t;
  ResidueRing r;
  explicit ModOps(uint64_t m) : r(m) {}
  E zero() const { return 0; }
  E one() const { return 1 % r.m; }
  E add(E a, E b) const { return r.add(a, b); }
  E mul(E a, E b) const { return r.mul(a, b); }
  E neg(E a) const { return r.neg(a); }
};

// charpoly of an integer matrix, exact
std::vector<BigInt> charpoly_z(const MatZ& A);
// charpoly mod m (entries reduced), ascending; m >= 2
std::vector<uint64_t> charpoly_mod(const MatU64& A, uint64_t m);
// convert ascending mod-p coefficient vector to a polynomial
PolyFp coeffs_to_poly(uint64_t p, const std::vector<uint64_t>& asc);

// ---- determinant valuation mod p^c, capped ------------------------------

struct DetVal {
  bool capped;         // true: v_p(det) >= c, unit not meaningful
  uint32_t valuation;  // exact when !capped
  uint64_t unit;       // det / p^v mod p^(c-v), sign folded in
};

// A square, entries mod p^c. Min-valuation pivoting makes every division
// exact, so the reported valuation is the true v_p(det) whenever it is < c.
DetVal det_valuation_capped(MatU64 A, uint64_t p, uint32_t c);

// ---- diagonalization over chain rings ------------------------------------
// A finite chain ring has a single maximal ideal (pi) and every matrix is
// equivalent to diag(pi^e_1, ..). chain_exponents returns the multiset
// {e_i} of the cokernel R^rows / col-span(A): one exponent per generator,
// capped at ring.cap() (cap = untouched full factor), sorted ascending.

template <class Ring>
std::vector<uint32_t> chain_exponents(const Ring& ring, Mat<typename Ring::Elem> A) {
  const uint32_t cap = ring.cap();
  size_t rows = A.rows, cols = A.cols;
  size_t t = 0;
  std::vector<uint32_t> out;
  while (t < rows && t < cols) {
    uint32_t best = cap;
    size_t bi = t, bj = t;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        uint32_t v = ring.val(A(i, j));
        if (v < best) { best = v; bi = i; bj = j; }
      }
    if (best >= cap) break;
    for (size_t j = 0; j < cols; ++j) std::swap(A(t, j), A(bi, j));
    for (size_t i = 0; i < rows; ++i) std::swap(A(i, t), A(i, bj));
    // scale pivot row so the pivot becomes pi^v exactly
    auto uinv = ring.unit_inv(ring.div_by_pi(A(t, t), best));
    for (size_t j = t; j < cols; ++j) A(t, j) = ring.mul(A(t, j), uinv);
    for (size_t i = t + 1; i < rows; ++i) {
      if (ring.val(A(i, t)) >= cap) continue;
      auto m = ring.div_by_pi(A(i, t), best);
      for (size_t j = t; j < cols; ++j)
        A(i, j) = ring.sub(A(i, j), ring.mul(m, A(t, j)));
    }
    for (size_t j = t + 1; j < cols; ++j) A(t, j) = ring.zero();
    out.push_back(best);
    ++t;
  }
  while (out.size() < rows) out.push_back(cap);
  std::sort(out.begin(), out.end());
  return out;
}

// Z[x]/(p^c, B) for monic B of degree d (d = 1 gives Z/p^c); pi = p.
struct GaloisRingChain {
  using Elem = std::vector<uint64_t>;  // d coefficients mod p^c
  uint64_t p, pc;
  uint32_t c, d;
  std::vector<uint64_t> blift;  // d+1 coeffs
  const FqField* fq;            // residue field, needed for d > 1 inversion

  GaloisRingChain(uint64_t p_, uint32_t c_, std::vector<uint64_t> blift_, const FqField* fq_);

  uint32_t cap() const { return c; }
  Elem zero() const { return Elem(d, 0); }
  uint32_t val(const Elem& x) const;
  Elem div_by_pi(const Elem& x, uint32_t v) const;
  Elem unit_inv(const Elem& x) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
};

// F_p[x]/(beta^e); pi = beta.
struct FpxQuotChain {
  using Elem = PolyFp;  // degree < d*e
  PolyFp beta;
  uint32_t e;
  PolyFp bpow;  // beta^e

  FpxQuotChain(PolyFp beta_, uint32_t e_);

  uint32_t cap() const { return e; }
  Elem zero() const { return poly_zero(beta.p); }
  uint32_t val(const Elem& x) const;
  Elem div_by_pi(const Elem& x, uint32_t v) const;
  Elem unit_inv(const Elem& x) const;
  Elem mul(const Elem& a, const Elem& b) const { return poly_mod(poly_mul(a, b), bpow); }
  Elem sub(const Elem& a, const Elem& b) const { return poly_sub(a, b); }
};

}  // namespace speccond
