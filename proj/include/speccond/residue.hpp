#pragma once
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace speccond {

// Arithmetic on residues mod m for m that fits a machine word; intermediate
// products go through 128 bits. Canonical representative in [0, m).
struct ResidueRing {
  uint64_t m;

  explicit ResidueRing(uint64_t modulus) : m(modulus) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
  }

  uint64_t reduce(uint64_t a) const { return a % m; }
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    if (s >= m || s < a) s -= m;
    return s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + m - b; }
  uint64_t neg(uint64_t a) const { return a ? m - a : 0; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return (uint64_t)((__uint128_t)a * b % m);
  }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  // inverse of a unit; throws if gcd(a, m) != 1
  uint64_t inv(uint64_t a) const {
    int64_t t = 0, nt = 1;
    int64_t r = (int64_t)m, nr = (int64_t)(a % m);
    while (nr != 0) {
      int64_t q = r / nr;
      int64_t tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw std::invalid_argument("not a unit");
    return t < 0 ? (uint64_t)(t + (int64_t)m) : (uint64_t)t;
  }
  bool is_unit(uint64_t a) const {
    uint64_t x = a % m, y = m;
    while (x) { uint64_t t = y % x; y = x; x = t; }
    return y == 1;
  }
};

inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// p-adic valuation capped at `cap`; returns cap for a == 0 mod p^cap
inline uint32_t vp_capped(uint64_t a, uint64_t p, uint32_t cap) {
  uint32_t v = 0;
  while (v < cap && a % p == 0) { a /= p; ++v; }
  if (a == 0 && v < cap) v = cap;
  return v;
}

inline uint64_t pow_u64(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Flat multiplication table for small moduli; hot kernels index it directly.
struct SmallModTable {
  uint64_t m;
  std::vector<uint16_t> mul;
  explicit SmallModTable(uint64_t modulus) : m(modulus), mul(m * m) {
    if (m > 4096) throw std::invalid_argument("table modulus too large");
    for (uint64_t a = 0; a < m; ++a)
      for (uint64_t b = 0; b < m; ++b) mul[a * m + b] = (uint16_t)(a * b % m);
  }
  uint64_t operator()(uint64_t a, uint64_t b) const { return mul[a * m + b]; }
};

}  // namespace speccond
