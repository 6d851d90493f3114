#pragma once
#include <cstdint>
#include <vector>

#include "speccond/poly.hpp"

namespace speccond {

// F_q = F_p[x]/(beta), beta monic irreducible. Elements are indices in
// [0, q): the polynomial sum c_i x^i maps to sum c_i p^i. Small fields get
// flat operation tables; larger ones fall back to polynomial arithmetic.
struct FqField {
  uint64_t p;
  PolyFp beta;
  uint32_t d;   // deg beta
  uint64_t q;   // p^d
  bool tabled;
  std::vector<uint32_t> addt, mult, negt, invt;

  FqField(uint64_t p_, PolyFp beta_);

  uint64_t encode(const PolyFp& f) const;  // deg f < d required after reduction
  PolyFp decode(uint64_t idx) const;

  uint64_t add(uint64_t a, uint64_t b) const {
    return tabled ? addt[a * q + b] : slow_add(a, b);
  }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return tabled ? mult[a * q + b] : slow_mul(a, b);
  }
  uint64_t neg(uint64_t a) const { return tabled ? negt[a] : slow_neg(a); }
  uint64_t sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }
  uint64_t inv(uint64_t a) const;  // a != 0

  uint64_t slow_add(uint64_t a, uint64_t b) const;
  uint64_t slow_mul(uint64_t a, uint64_t b) const;
  uint64_t slow_neg(uint64_t a) const;
};

}  // namespace speccond
