#include "speccond/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace speccond {

uint32_t rank_fq(const FqField& F, MatU64 A) {
  size_t rows = A.rows, cols = A.cols;
  uint32_t rank = 0;
  size_t rc = 0;
  for (size_t col = 0; col < cols && rc < rows; ++col) {
    size_t piv = rc;
    while (piv < rows && A(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    for (size_t j = col; j < cols; ++j) std::swap(A(rc, j), A(piv, j));
    uint64_t inv = F.inv(A(rc, col));
    for (size_t j = col; j < cols; ++j) A(rc, j) = F.mul(A(rc, j), inv);
    for (size_t i = 0; i < rows; ++i) {
      if (i == rc || A(i, col) == 0) continue;
      uint64_t f = A(i, col);
      for (size_t j = col; j < cols; ++j)
        A(i, j) = F.sub(A(i, j), F.mul(f, A(rc, j)));
    }
    ++rc;
    ++rank;
  }
  return rank;
}

uint32_t rank_mod_p(MatU64 A, uint64_t p) {
  ResidueRing fp(p);
  size_t rows = A.rows, cols = A.cols;
  for (auto& x : A.a) x %= p;
  uint32_t rank = 0;
  size_t rc = 0;
  for (size_t col = 0; col < cols && rc < rows; ++col) {
    size_t piv = rc;
    while (piv < rows && A(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    for (size_t j = col; j < cols; ++j) std::swap(A(rc, j), A(piv, j));
    uint64_t inv = fp.inv(A(rc, col));
    for (size_t j = col; j < cols; ++j) A(rc, j) = fp.mul(A(rc, j), inv);
    for (size_t i = 0; i < rows; ++i) {
      if (i == rc || A(i, col) == 0) continue;
      uint64_t f = A(i, col);
      for (size_t j = col; j < cols; ++j) A(i, j) = fp.sub(A(i, j), fp.mul(f, A(rc, j)));
    }
    ++rc;
    ++rank;
  }
  return rank;
}

std::vector<std::vector<uint64_t>> left_nullspace_mod_p(const MatU64& A, uint64_t p) {
  // kernel of A^T: vectors u with u^T A = 0
  ResidueRing fp(p);
  size_t rows = A.cols, cols = A.rows;  // working on A^T
  MatU64 T(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) T(i, j) = A(j, i) % p;
  std::vector<size_t> pivot_col;
  size_t rc = 0;
  for (size_t col = 0; col < cols && rc < rows; ++col) {
    size_t piv = rc;
    while (piv < rows && T(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    for (size_t j = col; j < cols; ++j) std::swap(T(rc, j), T(piv, j));
    uint64_t inv = fp.inv(T(rc, col));
    for (size_t j = col; j < cols; ++j) T(rc, j) = fp.mul(T(rc, j), inv);
    for (size_t i = 0; i < rows; ++i) {
      if (i == rc || T(i, col) == 0) continue;
      uint64_t f = T(i, col);
      for (size_t j = col; j < cols; ++j) T(i, j) = fp.sub(T(i, j), fp.mul(f, T(rc, j)));
    }
    pivot_col.push_back(col);
    ++rc;
  }
  std::vector<char> is_pivot(cols, 0);
  for (size_t c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<uint64_t>> basis;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<uint64_t> v(cols, 0);
    v[fc] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = fp.neg(T(r, fc));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<BigInt> charpoly_z(const MatZ& A) { return charpoly_berkowitz(ZOps{}, A); }

std::vector<uint64_t> charpoly_mod(const MatU64& A, uint64_t m) {
  MatU64 B = A;
  for (auto& x : B.a) x %= m;
  return charpoly_berkowitz(ModOps(m), B);
}

PolyFp coeffs_to_poly(uint64_t p, const std::vector<uint64_t>& asc) {
  std::vector<uint32_t> c(asc.size());
  for (size_t i = 0; i < asc.size(); ++i) c[i] = (uint32_t)(asc[i] % p);
  return PolyFp(p, std::move(c));
}

DetVal det_valuation_capped(MatU64 A, uint64_t p, uint32_t c) {
  if (A.rows != A.cols) throw std::invalid_argument("square matrix required");
  size_t n = A.rows;
  uint64_t pc = 1;
  for (uint32_t i = 0; i < c; ++i) pc *= p;
  ResidueRing R(pc);
  for (auto& x : A.a) x %= pc;
  uint32_t vtotal = 0;
  uint64_t unit = 1 % pc;
  bool negate = false;
  for (size_t k = 0; k < n; ++k) {
    uint32_t best = c;
    size_t bi = k, bj = k;
    for (size_t i = k; i < n; ++i)
      for (size_t j = k; j < n; ++j) {
        uint32_t v = vp_capped(A(i, j), p, c);
        if (v < best) { best = v; bi = i; bj = j; }
      }
    if (vtotal + best >= c || best >= c) return {true, c, 0};
    if (bi != k) {
      for (size_t j = k; j < n; ++j) std::swap(A(k, j), A(bi, j));
      negate = !negate;
    }
    if (bj != k) {
      for (size_t i = k; i < n; ++i) std::swap(A(i, k), A(i, bj));
      negate = !negate;
    }
    vtotal += best;
    uint64_t pv = 1;
    for (uint32_t i = 0; i < best; ++i) pv *= p;
    uint64_t u = (A(k, k) / pv) % pc;
    unit = R.mul(unit, u);
    uint64_t uinv = R.inv(u);
    for (size_t i = k + 1; i < n; ++i) {
      if (A(i, k) == 0) continue;
      uint64_t m = R.mul(A(i, k) / pv, uinv);
      if (m == 0) continue;
      for (size_t j = k; j < n; ++j) A(i, j) = R.sub(A(i, j), R.mul(m, A(k, j)));
    }
  }
  uint64_t mod_out = 1;
  for (uint32_t i = 0; i < c - vtotal; ++i) mod_out *= p;
  unit %= mod_out;
  if (negate) unit = unit == 0 ? 0 : mod_out - unit;
  return {false, vtotal, unit};
}

GaloisRingChain::GaloisRingChain(uint64_t p_, uint32_t c_, std::vector<uint64_t> blift_,
                                 const FqField* fq_)
    : p(p_), c(c_), blift(std::move(blift_)), fq(fq_) {
  d = (uint32_t)blift.size() - 1;
  if (d < 1 || blift[d] != 1) throw std::invalid_argument("monic lift required");
  if (d > 1 && fq == nullptr) throw std::invalid_argument("residue field required for d > 1");
  pc = 1;
  for (uint32_t i = 0; i < c; ++i) pc *= p;
}

uint32_t GaloisRingChain::val(const Elem& x) const {
  uint32_t v = c;
  for (uint64_t e : x) v = std::min(v, vp_capped(e % pc, p, c));
  return v;
}

GaloisRingChain::Elem GaloisRingChain::div_by_pi(const Elem& x, uint32_t v) const {
  uint64_t pv = 1;
  for (uint32_t i = 0; i < v; ++i) pv *= p;
  Elem r(d);
  for (uint32_t i = 0; i < d; ++i) {
    if (x[i] % pv != 0) throw std::invalid_argument("inexact division by uniformizer");
    r[i] = x[i] / pv;
  }
  return r;
}

GaloisRingChain::Elem GaloisRingChain::mul(const Elem& a, const Elem& b) const {
  std::vector<uint64_t> acc(2 * d - 1, 0);
  for (uint32_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (uint32_t j = 0; j < d; ++j)
      acc[i + j] = (uint64_t)(((__uint128_t)a[i] * b[j] + acc[i + j]) % pc);
  }
  for (int k = (int)(2 * d - 2); k >= (int)d; --k) {
    uint64_t f = acc[k];
    if (f == 0) continue;
    acc[k] = 0;
    for (uint32_t j = 0; j < d; ++j) {
      uint64_t sub = (uint64_t)((__uint128_t)f * blift[j] % pc);
      uint64_t& t = acc[k - d + j];
      t = t >= sub ? t - sub : t + pc - sub;
    }
  }
  acc.resize(d);
  return acc;
}

GaloisRingChain::Elem GaloisRingChain::sub(const Elem& a, const Elem& b) const {
  Elem r(d);
  for (uint32_t i = 0; i < d; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + pc - b[i];
  return r;
}

GaloisRingChain::Elem GaloisRingChain::unit_inv(const Elem& x) const {
  if (val(x) != 0) throw std::invalid_argument("not a unit");
  if (d == 1) return {ResidueRing(pc).inv(x[0] % pc)};
  // initial inverse in the residue field, then Newton against (p)
  std::vector<uint32_t> red(d);
  for (uint32_t i = 0; i < d; ++i) red[i] = (uint32_t)(x[i] % p);
  PolyFp xbar(p, std::move(red));
  Elem y(d, 0);
  {
    PolyFp inv0 = fq->decode(fq->inv(fq->encode(poly_mod(xbar, fq->beta))));
    for (int i = 0; i <= inv0.deg(); ++i) y[i] = inv0.c[i];
  }
  Elem two(d, 0);
  two[0] = 2 % pc;
  for (int it = 0; it < 6; ++it) {
    Elem xy = mul(x, y);
    bool done = xy[0] == 1;
    for (uint32_t i = 1; i < d && done; ++i) done = xy[i] == 0;
    if (done) return y;
    y = mul(y, sub(two, xy));
  }
  throw std::logic_error("inverse iteration failed");
}

FpxQuotChain::FpxQuotChain(PolyFp beta_, uint32_t e_) : beta(std::move(beta_)), e(e_) {
  if (beta.deg() < 1 || !beta.is_monic()) throw std::invalid_argument("monic beta required");
  bpow = poly_one(beta.p);
  for (uint32_t i = 0; i < e; ++i) bpow = poly_mul(bpow, beta);
}

uint32_t FpxQuotChain::val(const Elem& x) const {
  if (x.is_zero()) return e;
  uint32_t v = 0;
  PolyFp cur = x;
  while (v < e) {
    PolyFp q, r;
    poly_divmod(cur, beta, q, r);
    if (!r.is_zero()) break;
    ++v;
    cur = std::move(q);
    if (cur.is_zero()) return e;
  }
  return v;
}

FpxQuotChain::Elem FpxQuotChain::div_by_pi(const Elem& x, uint32_t v) const {
  PolyFp cur = x;
  for (uint32_t i = 0; i < v; ++i) cur = poly_div_exact(cur, beta);
  return cur;
}

FpxQuotChain::Elem FpxQuotChain::unit_inv(const Elem& x) const {
  PolyFp u, vv;
  PolyFp g = poly_egcd(x, bpow, u, vv);
  if (g.deg() != 0) throw std::invalid_argument("not a unit");
  return poly_mod(u, bpow);
}

}  // namespace speccond
