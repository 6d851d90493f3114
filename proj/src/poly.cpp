#include "speccond/poly.hpp"

#include <stdexcept>

#include "speccond/residue.hpp"

namespace speccond {

PolyFp::PolyFp(uint64_t prime, std::vector<uint32_t> coeffs) : p(prime), c(std::move(coeffs)) {
  if (p < 2) throw std::invalid_argument("poly characteristic must be >= 2");
  for (auto& x : c) x = (uint32_t)(x % p);
  normalize();
}

void PolyFp::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::string PolyFp::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = deg(); i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
    if (i >= 1) {
      if (c[i] != 1) s += "*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

PolyFp poly_zero(uint64_t p) { return PolyFp(p, {}); }
PolyFp poly_one(uint64_t p) { return PolyFp(p, {1}); }
PolyFp poly_x(uint64_t p) { return PolyFp(p, {0, 1}); }
PolyFp poly_x_minus(uint64_t p, uint64_t a) {
  return PolyFp(p, {(uint32_t)((p - a % p) % p), 1});
}

static void check_same_field(const PolyFp& a, const PolyFp& b) {
  if (a.p != b.p) throw std::invalid_argument("mixed characteristics");
}

PolyFp poly_add(const PolyFp& a, const PolyFp& b) {
  check_same_field(a, b);
  std::vector<uint32_t> r(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = (uint32_t)(((uint64_t)a.coeff(i) + b.coeff(i)) % a.p);
  return PolyFp(a.p, std::move(r));
}

PolyFp poly_sub(const PolyFp& a, const PolyFp& b) {
  check_same_field(a, b);
  std::vector<uint32_t> r(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = (uint32_t)(((uint64_t)a.coeff(i) + a.p - b.coeff(i)) % a.p);
  return PolyFp(a.p, std::move(r));
}

PolyFp poly_mul(const PolyFp& a, const PolyFp& b) {
  check_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return poly_zero(a.p);
  std::vector<uint64_t> acc(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      acc[i + j] = (acc[i + j] + (uint64_t)a.c[i] * b.c[j]) % a.p;
  }
  std::vector<uint32_t> r(acc.begin(), acc.end());
  return PolyFp(a.p, std::move(r));
}

PolyFp poly_scale(const PolyFp& a, uint64_t s) {
  std::vector<uint32_t> r(a.c.size());
  s %= a.p;
  for (size_t i = 0; i < a.c.size(); ++i) r[i] = (uint32_t)(a.c[i] * s % a.p);
  return PolyFp(a.p, std::move(r));
}

void poly_divmod(const PolyFp& a, const PolyFp& b, PolyFp& q, PolyFp& r) {
  check_same_field(a, b);
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  ResidueRing fp(a.p);
  uint64_t li = fp.inv(b.lc());
  std::vector<uint32_t> rem(a.c), quo;
  int db = b.deg();
  if (a.deg() >= db) quo.assign(a.deg() - db + 1, 0);
  for (int i = a.deg(); i >= db; --i) {
    uint64_t f = fp.mul(rem[i], li);
    if (f == 0) continue;
    quo[i - db] = (uint32_t)f;
    for (int j = 0; j <= db; ++j)
      rem[i - db + j] = (uint32_t)fp.sub(rem[i - db + j], fp.mul(f, b.c[j]));
  }
  if (a.deg() >= db) rem.resize(db > 0 ? db : 0);
  q = PolyFp(a.p, std::move(quo));
  r = PolyFp(a.p, std::move(rem));
}

PolyFp poly_mod(const PolyFp& a, const PolyFp& b) {
  PolyFp q, r;
  poly_divmod(a, b, q, r);
  return r;
}

PolyFp poly_gcd(PolyFp a, PolyFp b) {
  check_same_field(a, b);
  while (!b.is_zero()) {
    PolyFp r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.lc() != 1) {
    ResidueRing fp(a.p);
    a = poly_scale(a, fp.inv(a.lc()));
  }
  return a;
}

PolyFp poly_egcd(const PolyFp& a, const PolyFp& b, PolyFp& u, PolyFp& v) {
  check_same_field(a, b);
  PolyFp r0 = a, r1 = b;
  PolyFp s0 = poly_one(a.p), s1 = poly_zero(a.p);
  PolyFp t0 = poly_zero(a.p), t1 = poly_one(a.p);
  while (!r1.is_zero()) {
    PolyFp q, r;
    poly_divmod(r0, r1, q, r);
    r0 = std::move(r1); r1 = std::move(r);
    PolyFp s = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1); s1 = std::move(s);
    PolyFp t = poly_sub(t0, poly_mul(q, t1));
    t0 = std::move(t1); t1 = std::move(t);
  }
  if (!r0.is_zero() && r0.lc() != 1) {
    ResidueRing fp(a.p);
    uint64_t li = fp.inv(r0.lc());
    r0 = poly_scale(r0, li);
    s0 = poly_scale(s0, li);
    t0 = poly_scale(t0, li);
  }
  u = std::move(s0);
  v = std::move(t0);
  return r0;
}

PolyFp poly_derivative(const PolyFp& a) {
  if (a.deg() < 1) return poly_zero(a.p);
  std::vector<uint32_t> r(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i)
    r[i - 1] = (uint32_t)((uint64_t)a.c[i] * (i % a.p) % a.p);
  return PolyFp(a.p, std::move(r));
}

uint64_t poly_eval(const PolyFp& a, uint64_t x) {
  ResidueRing fp(a.p);
  x %= a.p;
  uint64_t r = 0;
  for (int i = a.deg(); i >= 0; --i) r = fp.add(fp.mul(r, x), a.c[i]);
  return r;
}

PolyFp poly_powmod(const PolyFp& a, uint64_t e, const PolyFp& f) {
  PolyFp base = poly_mod(a, f);
  PolyFp r = poly_one(a.p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base), f);
    base = poly_mod(poly_mul(base, base), f);
    e >>= 1;
  }
  return r;
}

PolyFp poly_div_exact(const PolyFp& a, const PolyFp& b) {
  PolyFp q, r;
  poly_divmod(a, b, q, r);
  if (!r.is_zero()) throw std::invalid_argument("inexact polynomial division");
  return q;
}

uint32_t poly_multiplicity(const PolyFp& a, const PolyFp& b) {
  if (a.is_zero() || b.deg() < 1) throw std::invalid_argument("multiplicity needs a != 0, deg b >= 1");
  uint32_t m = 0;
  PolyFp cur = a, q, r;
  for (;;) {
    poly_divmod(cur, b, q, r);
    if (!r.is_zero()) return m;
    ++m;
    cur = std::move(q);
    if (cur.deg() < b.deg()) return m;
  }
}

bool squarefree_mod_p(const PolyFp& f) {
  if (f.deg() <= 0) return true;
  return poly_gcd(f, poly_derivative(f)).deg() == 0;
}

bool is_irreducible(const PolyFp& f) {
  int d = f.deg();
  if (d < 1) return false;
  if (d == 1) return true;
  // x^(p^d) == x mod f, and x^(p^(d/l)) - x coprime to f for prime l | d
  PolyFp x = poly_x(f.p);
  PolyFp xp = x;
  std::vector<PolyFp> frob;  // frob[k] = x^(p^(k+1)) mod f
  for (int k = 0; k < d; ++k) {
    xp = poly_powmod(xp, f.p, f);
    frob.push_back(xp);
  }
  if (!(frob[d - 1] == poly_mod(x, f))) return false;
  for (int l = 2; l <= d; ++l) {
    if (d % l != 0) continue;
    bool lprime = true;
    for (int t = 2; t * t <= l; ++t)
      if (l % t == 0) { lprime = false; break; }
    if (!lprime) continue;
    PolyFp g = poly_gcd(poly_sub(frob[d / l - 1], x), f);
    if (g.deg() != 0) return false;
  }
  return true;
}

std::vector<PolyFp> enumerate_irreducibles(uint64_t p, uint32_t maxdeg) {
  std::vector<PolyFp> out;
  for (uint32_t d = 1; d <= maxdeg; ++d) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) {
      if (count > (1ull << 40)) throw std::invalid_argument("enumeration too large");
      count *= p;
    }
    std::vector<uint32_t> coeffs(d + 1, 0);
    coeffs[d] = 1;
    for (uint64_t idx = 0; idx < count; ++idx) {
      uint64_t t = idx;
      for (uint32_t i = 0; i < d; ++i) { coeffs[i] = (uint32_t)(t % p); t /= p; }
      PolyFp f(p, coeffs);
      if (is_irreducible(f)) out.push_back(std::move(f));
    }
  }
  return out;
}

static int mobius(uint32_t n) {
  int mu = 1;
  for (uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

uint64_t irreducible_count(uint64_t p, uint32_t d) {
  if (d == 0) throw std::invalid_argument("degree must be >= 1");
  // (1/d) * sum_{e | d} mu(e) p^(d/e)
  int64_t sum = 0;
  for (uint32_t e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    int mu = mobius(e);
    if (mu == 0) continue;
    int64_t pw = 1;
    for (uint32_t i = 0; i < d / e; ++i) pw *= (int64_t)p;
    sum += mu * pw;
  }
  return (uint64_t)(sum / d);
}

}  // namespace speccond
