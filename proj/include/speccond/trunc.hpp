#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "speccond/fq.hpp"
#include "speccond/poly.hpp"
#include "speccond/rng.hpp"

namespace speccond {

// Finite truncation Z[x]/(p^c, B^e) of the completed local ring at (p, beta),
// where B is the integer lift of beta with coefficients in [0, p). Elements
// are coefficient vectors of length w = deg(beta)*e with entries mod p^c. The
// default truncation (c = e = 2) decides membership in the maximal ideal and
// its square; event evaluators that must separate "beta-valuation exactly 2"
// from ">= 3" run on a ring built with e = 3.
struct TruncatedRing {
  uint64_t p;
  uint32_t pprec;   // c
  uint32_t bprec;   // e
  uint64_t pc;      // p^c
  PolyFp beta;
  uint32_t d;       // deg beta
  uint32_t w;       // d*e
  std::vector<uint64_t> blift;  // lift of beta, d+1 coeffs
  std::vector<uint64_t> bpow;   // B^e mod p^c, monic, w+1 coeffs
  FqField fq;

  TruncatedRing(uint64_t p_, PolyFp beta_, uint32_t pprec_ = 2, uint32_t bprec_ = 2);

  // ring cardinality (p^c)^w; throws on overflow
  uint64_t size() const;
};

using TruncElem = std::vector<uint64_t>;

TruncElem t_zero(const TruncatedRing& R);
TruncElem t_one(const TruncatedRing& R);
TruncElem t_from_int(const TruncatedRing& R, uint64_t v);
// lift of a polynomial over F_p (degree < w after reduction mod B^e is required)
TruncElem t_from_poly(const TruncatedRing& R, const PolyFp& f);

TruncElem t_add(const TruncatedRing& R, const TruncElem& a, const TruncElem& b);
TruncElem t_sub(const TruncatedRing& R, const TruncElem& a, const TruncElem& b);
TruncElem t_neg(const TruncatedRing& R, const TruncElem& a);
TruncElem t_mul(const TruncatedRing& R, const TruncElem& a, const TruncElem& b);
bool t_is_zero(const TruncElem& a);

// raw kernels: out, a, b are w-wide; scratch is (2w-1)-wide; aliasing of out
// with a or b is allowed
void t_mul_raw(const TruncatedRing& R, const uint64_t* a, const uint64_t* b,
               uint64_t* out, uint64_t* scratch);
void t_submul_raw(const TruncatedRing& R, uint64_t* acc, const uint64_t* m,
                  const uint64_t* b, uint64_t* scratch);  // acc -= m*b

// reduction to the residue field F_q = F_p[x]/beta, as an FqField index
uint64_t t_fq_reduce(const TruncatedRing& R, const uint64_t* a);
inline uint64_t t_fq_reduce(const TruncatedRing& R, const TruncElem& a) {
  return t_fq_reduce(R, a.data());
}
bool t_is_unit(const TruncatedRing& R, const TruncElem& a);
// inverse of a unit (Newton iteration against the nilpotent maximal ideal)
TruncElem t_inv(const TruncatedRing& R, const TruncElem& a);

// reduction mod p as an element of F_p[x]/(beta^e), returned as a polynomial
// of degree < w
PolyFp t_mod_p(const TruncatedRing& R, const uint64_t* a);
// beta-valuation of (a mod p) in F_p[x]/beta^e, capped at e
uint32_t t_beta_val_modp(const TruncatedRing& R, const uint64_t* a);
// reduction mod beta: element of Z[x]/(p^c, B), d coefficients mod p^c
std::vector<uint64_t> t_mod_beta(const TruncatedRing& R, const uint64_t* a);

// coordinates of an element of the maximal ideal m in m/m^2 with respect to
// the basis {p, beta}: a = u1*p + u2*beta mod m^2, u1 and u2 as F_q indices.
// Requires a in m and e >= 2.
std::pair<uint64_t, uint64_t> t_mm2_coords(const TruncatedRing& R, const uint64_t* a);

TruncElem t_sample_uniform(const TruncatedRing& R, SampleRng& rng);
void t_sample_uniform_raw(const TruncatedRing& R, SampleRng& rng, uint64_t* out);

}  // namespace speccond
