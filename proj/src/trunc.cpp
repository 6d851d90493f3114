#include "speccond/trunc.hpp"

#include <cstring>
#include <stdexcept>

#include "speccond/residue.hpp"

namespace speccond {

TruncatedRing::TruncatedRing(uint64_t p_, PolyFp beta_, uint32_t pprec_, uint32_t bprec_)
    : p(p_), pprec(pprec_), bprec(bprec_), beta(std::move(beta_)), fq(p_, beta) {
  if (pprec < 1 || bprec < 1) throw std::invalid_argument("precision must be >= 1");
  if (pprec > 4 || bprec > 8) throw std::invalid_argument("precision out of supported range");
  d = (uint32_t)beta.deg();
  w = d * bprec;
  if (w > 64) throw std::invalid_argument("deg(beta) * beta-precision too large");
  pc = 1;
  for (uint32_t i = 0; i < pprec; ++i) {
    if (pc > (1ull << 31)) throw std::invalid_argument("p^c too large");
    pc *= p;
  }
  blift.assign(d + 1, 0);
  for (uint32_t i = 0; i <= d; ++i) blift[i] = beta.coeff(i) % pc;
  // B^e mod p^c
  std::vector<uint64_t> acc{1};
  for (uint32_t k = 0; k < bprec; ++k) {
    std::vector<uint64_t> nxt(acc.size() + d, 0);
    for (size_t i = 0; i < acc.size(); ++i)
      for (size_t j = 0; j <= d; ++j)
        nxt[i + j] = (uint64_t)(((__uint128_t)acc[i] * blift[j] + nxt[i + j]) % pc);
    acc = std::move(nxt);
  }
  bpow = std::move(acc);
}

uint64_t TruncatedRing::size() const {
  uint64_t s = 1;
  for (uint32_t i = 0; i < w; ++i) {
    if (s > (1ull << 62) / pc) throw std::overflow_error("ring too large to count");
    s *= pc;
  }
  return s;
}

TruncElem t_zero(const TruncatedRing& R) { return TruncElem(R.w, 0); }
TruncElem t_one(const TruncatedRing& R) {
  TruncElem e(R.w, 0);
  e[0] = 1 % R.pc;
  return e;
}
TruncElem t_from_int(const TruncatedRing& R, uint64_t v) {
  TruncElem e(R.w, 0);
  e[0] = v % R.pc;
  return e;
}

TruncElem t_from_poly(const TruncatedRing& R, const PolyFp& f) {
  if (f.deg() >= (int)R.w) throw std::invalid_argument("lift needs deg < w");
  TruncElem e(R.w, 0);
  for (int i = 0; i <= f.deg(); ++i) e[i] = f.c[i] % R.pc;
  return e;
}

TruncElem t_add(const TruncatedRing& R, const TruncElem& a, const TruncElem& b) {
  TruncElem r(R.w);
  for (uint32_t i = 0; i < R.w; ++i) {
    uint64_t s = a[i] + b[i];
    r[i] = s >= R.pc ? s - R.pc : s;
  }
  return r;
}

TruncElem t_sub(const TruncatedRing& R, const TruncElem& a, const TruncElem& b) {
  TruncElem r(R.w);
  for (uint32_t i = 0; i < R.w; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + R.pc - b[i];
  return r;
}

TruncElem t_neg(const TruncatedRing& R, const TruncElem& a) {
  TruncElem r(R.w);
  for (uint32_t i = 0; i < R.w; ++i) r[i] = a[i] ? R.pc - a[i] : 0;
  return r;
}

void t_mul_raw(const TruncatedRing& R, const uint64_t* a, const uint64_t* b,
               uint64_t* out, uint64_t* scratch) {
  const uint32_t w = R.w;
  const uint64_t pc = R.pc;
  for (uint32_t i = 0; i < 2 * w - 1; ++i) scratch[i] = 0;
  for (uint32_t i = 0; i < w; ++i) {
    if (a[i] == 0) continue;
    for (uint32_t j = 0; j < w; ++j)
      scratch[i + j] = (uint64_t)(((__uint128_t)a[i] * b[j] + scratch[i + j]) % pc);
  }
  // reduce by the monic degree-w polynomial B^e
  for (int k = (int)(2 * w - 2); k >= (int)w; --k) {
    uint64_t f = scratch[k];
    if (f == 0) continue;
    scratch[k] = 0;
    for (uint32_t j = 0; j < w; ++j) {
      uint64_t sub = (uint64_t)((__uint128_t)f * R.bpow[j] % pc);
      uint64_t& tgt = scratch[k - w + j];
      tgt = tgt >= sub ? tgt - sub : tgt + pc - sub;
    }
  }
  for (uint32_t i = 0; i < w; ++i) out[i] = scratch[i];
}

void t_submul_raw(const TruncatedRing& R, uint64_t* acc, const uint64_t* m,
                  const uint64_t* b, uint64_t* scratch) {
  uint64_t prod[64];
  t_mul_raw(R, m, b, prod, scratch);
  for (uint32_t i = 0; i < R.w; ++i) {
    uint64_t& t = acc[i];
    t = t >= prod[i] ? t - prod[i] : t + R.pc - prod[i];
  }
}

TruncElem t_mul(const TruncatedRing& R, const TruncElem& a, const TruncElem& b) {
  TruncElem out(R.w);
  std::vector<uint64_t> scratch(2 * R.w - 1);
  t_mul_raw(R, a.data(), b.data(), out.data(), scratch.data());
  return out;
}

bool t_is_zero(const TruncElem& a) {
  for (uint64_t x : a)
    if (x) return false;
  return true;
}

uint64_t t_fq_reduce(const TruncatedRing& R, const uint64_t* a) {
  PolyFp f = t_mod_p(R, a);
  return R.fq.encode(poly_mod(f, R.beta));
}

bool t_is_unit(const TruncatedRing& R, const TruncElem& a) {
  return t_fq_reduce(R, a.data()) != 0;
}

TruncElem t_inv(const TruncatedRing& R, const TruncElem& a) {
  uint64_t a0 = t_fq_reduce(R, a.data());
  if (a0 == 0) throw std::invalid_argument("not a unit");
  TruncElem x = t_from_poly(R, R.fq.decode(R.fq.inv(a0)));
  TruncElem two = t_from_int(R, 2);
  // Newton: x <- x(2 - a x); error lives in the nilpotent maximal ideal
  for (int it = 0; it < 6; ++it) {
    TruncElem ax = t_mul(R, a, x);
    TruncElem corr = t_sub(R, two, ax);
    x = t_mul(R, x, corr);
    TruncElem check = t_mul(R, a, x);
    if (check == t_one(R)) return x;
  }
  throw std::logic_error("inverse iteration failed");
}

PolyFp t_mod_p(const TruncatedRing& R, const uint64_t* a) {
  std::vector<uint32_t> c(R.w);
  for (uint32_t i = 0; i < R.w; ++i) c[i] = (uint32_t)(a[i] % R.p);
  return PolyFp(R.p, std::move(c));
}

uint32_t t_beta_val_modp(const TruncatedRing& R, const uint64_t* a) {
  PolyFp f = t_mod_p(R, a);
  if (f.is_zero()) return R.bprec;
  uint32_t v = 0;
  while (v < R.bprec) {
    PolyFp q, r;
    poly_divmod(f, R.beta, q, r);
    if (!r.is_zero()) break;
    ++v;
    f = std::move(q);
    if (f.is_zero()) { v = R.bprec; break; }
  }
  return v;
}

std::vector<uint64_t> t_mod_beta(const TruncatedRing& R, const uint64_t* a) {
  std::vector<uint64_t> rem(a, a + R.w);
  for (int k = (int)R.w - 1; k >= (int)R.d; --k) {
    uint64_t f = rem[k];
    if (f == 0) continue;
    rem[k] = 0;
    for (uint32_t j = 0; j < R.d; ++j) {
      uint64_t sub = (uint64_t)((__uint128_t)f * R.blift[j] % R.pc);
      uint64_t& t = rem[k - R.d + j];
      t = t >= sub ? t - sub : t + R.pc - sub;
    }
  }
  rem.resize(R.d);
  return rem;
}

std::pair<uint64_t, uint64_t> t_mm2_coords(const TruncatedRing& R, const uint64_t* a) {
  if (R.bprec < 2) throw std::invalid_argument("need beta-precision >= 2");
  PolyFp abar = t_mod_p(R, a);
  PolyFp tbar, rr;
  if (!abar.is_zero()) {
    poly_divmod(abar, R.beta, tbar, rr);
    if (!rr.is_zero()) throw std::invalid_argument("element not in the maximal ideal");
  } else {
    tbar = poly_zero(R.p);
  }
  uint64_t u2 = R.fq.encode(poly_mod(tbar, R.beta));
  // subtract B * lift(tbar), divide by p, reduce mod (p, beta)
  TruncElem bt(R.w, 0);
  {
    TruncElem tl = t_from_poly(R, tbar);
    TruncElem bl(R.w, 0);
    for (uint32_t i = 0; i <= R.d && i < R.w; ++i) bl[i] = R.blift[i];
    std::vector<uint64_t> scratch(2 * R.w - 1);
    t_mul_raw(R, bl.data(), tl.data(), bt.data(), scratch.data());
  }
  std::vector<uint32_t> sc(R.w);
  for (uint32_t i = 0; i < R.w; ++i) {
    uint64_t diff = a[i] >= bt[i] ? a[i] - bt[i] : a[i] + R.pc - bt[i];
    if (diff % R.p != 0) throw std::logic_error("maximal-ideal decomposition failed");
    sc[i] = (uint32_t)(diff / R.p % R.p);
  }
  PolyFp sbar(R.p, std::move(sc));
  uint64_t u1 = R.fq.encode(poly_mod(sbar, R.beta));
  return {u1, u2};
}

TruncElem t_sample_uniform(const TruncatedRing& R, SampleRng& rng) {
  TruncElem e(R.w);
  for (uint32_t i = 0; i < R.w; ++i) e[i] = rng.below(R.pc);
  return e;
}

void t_sample_uniform_raw(const TruncatedRing& R, SampleRng& rng, uint64_t* out) {
  for (uint32_t i = 0; i < R.w; ++i) out[i] = rng.below(R.pc);
}

}  // namespace speccond
