#include "speccond/fq.hpp"

#include <stdexcept>

#include "speccond/residue.hpp"

namespace speccond {

FqField::FqField(uint64_t p_, PolyFp beta_) : p(p_), beta(std::move(beta_)) {
  if (!is_prime_u64(p)) throw std::invalid_argument("field characteristic must be prime");
  if (beta.p != p || beta.deg() < 1 || !beta.is_monic() || !is_irreducible(beta))
    throw std::invalid_argument("beta must be monic irreducible over F_p");
  d = (uint32_t)beta.deg();
  q = 1;
  for (uint32_t i = 0; i < d; ++i) {
    if (q > (1ull << 40) / p) throw std::invalid_argument("field too large");
    q *= p;
  }
  tabled = q <= 256;
  if (tabled) {
    addt.resize(q * q);
    mult.resize(q * q);
    negt.resize(q);
    invt.assign(q, 0);
    for (uint64_t a = 0; a < q; ++a) {
      negt[a] = (uint32_t)slow_neg(a);
      for (uint64_t b = 0; b < q; ++b) {
        addt[a * q + b] = (uint32_t)slow_add(a, b);
        mult[a * q + b] = (uint32_t)slow_mul(a, b);
      }
    }
    for (uint64_t a = 1; a < q; ++a)
      for (uint64_t b = 1; b < q; ++b)
        if (mult[a * q + b] == 1) { invt[a] = (uint32_t)b; break; }
  }
}

uint64_t FqField::encode(const PolyFp& f) const {
  if (f.deg() >= (int)d) throw std::invalid_argument("encode needs deg < d");
  uint64_t idx = 0, pw = 1;
  for (uint32_t i = 0; i < d; ++i) { idx += f.coeff(i) * pw; pw *= p; }
  return idx;
}

PolyFp FqField::decode(uint64_t idx) const {
  std::vector<uint32_t> c(d, 0);
  for (uint32_t i = 0; i < d; ++i) { c[i] = (uint32_t)(idx % p); idx /= p; }
  return PolyFp(p, std::move(c));
}

uint64_t FqField::slow_add(uint64_t a, uint64_t b) const {
  uint64_t r = 0, pw = 1;
  for (uint32_t i = 0; i < d; ++i) {
    r += ((a % p) + (b % p)) % p * pw;
    a /= p; b /= p; pw *= p;
  }
  return r;
}

uint64_t FqField::slow_neg(uint64_t a) const {
  uint64_t r = 0, pw = 1;
  for (uint32_t i = 0; i < d; ++i) {
    uint64_t c = a % p;
    r += (c ? p - c : 0) * pw;
    a /= p; pw *= p;
  }
  return r;
}

uint64_t FqField::slow_mul(uint64_t a, uint64_t b) const {
  return encode(poly_mod(poly_mul(decode(a), decode(b)), beta));
}

uint64_t FqField::inv(uint64_t a) const {
  if (a == 0) throw std::invalid_argument("zero has no inverse");
  if (tabled) return invt[a];
  PolyFp u, v;
  PolyFp g = poly_egcd(decode(a), beta, u, v);
  if (g.deg() != 0) throw std::logic_error("beta not irreducible");
  return encode(poly_mod(u, beta));
}

}  // namespace speccond
