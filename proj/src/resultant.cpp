#include "speccond/resultant.hpp"

#include <stdexcept>

namespace speccond {

int deg_z(const PolyZ& f) {
  for (int i = (int)f.size() - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

PolyZ derivative_z(const PolyZ& f) {
  if (f.size() <= 1) return {};
  PolyZ d(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * (long)i;
  return d;
}

BigInt eval_z(const PolyZ& f, const BigInt& x) {
  BigInt acc = 0;
  for (int i = (int)f.size() - 1; i >= 0; --i) acc = acc * x + f[i];
  return acc;
}

MatZ sylvester_z(const PolyZ& f, int df, const PolyZ& g, int dg) {
  if (df < 0 || dg < 0) throw std::invalid_argument("negative formal degree");
  size_t n = (size_t)(df + dg);
  MatZ S(n, n);
  auto cf = [&](const PolyZ& h, int i) { return i >= 0 && i < (int)h.size() ? h[i] : BigInt(0); };
  for (int r = 0; r < dg; ++r)
    for (int k = 0; k <= df; ++k) S(r, r + k) = cf(f, df - k);
  for (int r = 0; r < df; ++r)
    for (int k = 0; k <= dg; ++k) S(dg + r, r + k) = cf(g, dg - k);
  return S;
}

MatU64 sylvester_mod(const PolyZ& f, int df, const PolyZ& g, int dg, uint64_t m) {
  MatZ S = sylvester_z(f, df, g, dg);
  MatU64 R(S.rows, S.cols);
  BigInt mm = (unsigned long)m;
  for (size_t i = 0; i < S.a.size(); ++i) {
    BigInt r = S.a[i] % mm;
    if (r < 0) r += mm;
    R.a[i] = mpz_get_ui(r.get_mpz_t());
  }
  return R;
}

BigInt det_bareiss_z(MatZ A) {
  if (A.rows != A.cols) throw std::invalid_argument("square matrix required");
  size_t n = A.rows;
  if (n == 0) return 1;
  BigInt prev = 1;
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      size_t s = k + 1;
      while (s < n && A(s, k) == 0) ++s;
      if (s == n) return 0;
      for (size_t j = k; j < n; ++j) std::swap(A(k, j), A(s, j));
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        BigInt t = A(i, j) * A(k, k) - A(i, k) * A(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        A(i, j) = t;
      }
    prev = A(k, k);
  }
  BigInt d = A(n - 1, n - 1);
  return negate ? BigInt(-d) : d;
}

BigInt resultant_z(const PolyZ& f, const PolyZ& g) {
  int df = deg_z(f), dg = deg_z(g);
  if (df < 0 || dg < 0) return 0;
  if (df == 0 && dg == 0) return 1;
  if (df == 0) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), f[0].get_mpz_t(), (unsigned long)dg);
    return r;
  }
  if (dg == 0) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), g[0].get_mpz_t(), (unsigned long)df);
    return r;
  }
  return det_bareiss_z(sylvester_z(f, df, g, dg));
}

BigInt discriminant_z(const PolyZ& f) {
  int n = deg_z(f);
  if (n < 1) throw std::invalid_argument("degree >= 1 required");
  if (f[n] != 1) throw std::invalid_argument("monic polynomial required");
  PolyZ d = derivative_z(f);
  BigInt res = det_bareiss_z(sylvester_z(f, n, d, n - 1));
  int e = (n * (n - 1) / 2) % 2;
  return e ? BigInt(-res) : res;
}

}  // namespace speccond
