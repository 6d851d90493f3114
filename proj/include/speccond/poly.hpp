#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace speccond {

// Dense polynomial over F_p, ascending coefficients, no trailing zeros.
// The zero polynomial has an empty coefficient vector.
struct PolyFp {
  uint64_t p = 0;
  std::vector<uint32_t> c;

  PolyFp() = default;
  PolyFp(uint64_t prime, std::vector<uint32_t> coeffs);

  bool is_zero() const { return c.empty(); }
  int deg() const { return (int)c.size() - 1; }
  uint32_t lc() const { return c.back(); }
  uint32_t coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
  bool is_monic() const { return !c.empty() && c.back() == 1; }
  void normalize();

  bool operator==(const PolyFp& o) const { return p == o.p && c == o.c; }
  std::string str() const;  // e.g. "x^2+x+1"
};

PolyFp poly_zero(uint64_t p);
PolyFp poly_one(uint64_t p);
PolyFp poly_x(uint64_t p);
// x - a over F_p
PolyFp poly_x_minus(uint64_t p, uint64_t a);

PolyFp poly_add(const PolyFp& a, const PolyFp& b);
PolyFp poly_sub(const PolyFp& a, const PolyFp& b);
PolyFp poly_mul(const PolyFp& a, const PolyFp& b);
PolyFp poly_scale(const PolyFp& a, uint64_t s);
// quotient and remainder; divisor must be nonzero
void poly_divmod(const PolyFp& a, const PolyFp& b, PolyFp& q, PolyFp& r);
PolyFp poly_mod(const PolyFp& a, const PolyFp& b);
// monic gcd; gcd(0,0) = 0
PolyFp poly_gcd(PolyFp a, PolyFp b);
// g = gcd(a,b) monic, with u*a + v*b = g
PolyFp poly_egcd(const PolyFp& a, const PolyFp& b, PolyFp& u, PolyFp& v);
PolyFp poly_derivative(const PolyFp& a);
uint64_t poly_eval(const PolyFp& a, uint64_t x);
// a^e mod f
PolyFp poly_powmod(const PolyFp& a, uint64_t e, const PolyFp& f);
// exact division; throws if b does not divide a
PolyFp poly_div_exact(const PolyFp& a, const PolyFp& b);
// multiplicity of the factor b in a (a nonzero, deg b >= 1)
uint32_t poly_multiplicity(const PolyFp& a, const PolyFp& b);

// true iff gcd(f, f') is constant (constants count as square-free)
bool squarefree_mod_p(const PolyFp& f);
// Rabin irreducibility test, deg >= 1
bool is_irreducible(const PolyFp& f);
// all monic irreducibles over F_p of degree 1..maxdeg, sorted by (degree, coeffs)
std::vector<PolyFp> enumerate_irreducibles(uint64_t p, uint32_t maxdeg);
// count of monic irreducibles of degree d over F_p (necklace formula)
uint64_t irreducible_count(uint64_t p, uint32_t d);

}  // namespace speccond
