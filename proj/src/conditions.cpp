#include "speccond/conditions.hpp"

#include <stdexcept>

#include "speccond/group_type.hpp"
#include "speccond/residue.hpp"
#include "speccond/smith.hpp"

namespace speccond {

namespace {

struct FqOps {
  using E = uint64_t;
  const FqField* F;
  explicit FqOps(const FqField& f) : F(&f) {}
  E zero() const { return 0; }
  E one() const { return 1; }
  E add(E a, E b) const { return F->add(a, b); }
  E sub(E a, E b) const { return F->sub(a, b); }
  E mul(E a, E b) const { return F->mul(a, b); }
  E neg(E a) const { return F->neg(a); }
};

// encoded F_q[x] helpers, ascending coefficient vectors
void fqp_trim(std::vector<uint64_t>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::vector<uint64_t> fqp_derivative(const FqField& F, const std::vector<uint64_t>& f) {
  std::vector<uint64_t> d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(F.mul(f[i], i % F.p));
  fqp_trim(d);
  return d;
}

// remainder of a by b, b nonzero
std::vector<uint64_t> fqp_rem(const FqField& F, std::vector<uint64_t> a,
                              const std::vector<uint64_t>& b) {
  uint64_t lcinv = F.inv(b.back());
  while (a.size() >= b.size()) {
    uint64_t q = F.mul(a.back(), lcinv);
    size_t off = a.size() - b.size();
    if (q != 0)
      for (size_t i = 0; i < b.size(); ++i) a[off + i] = F.sub(a[off + i], F.mul(q, b[i]));
    a.pop_back();
    fqp_trim(a);
    if (a.size() < b.size()) break;
  }
  return a;
}

int fqp_gcd_deg(const FqField& F, std::vector<uint64_t> a, std::vector<uint64_t> b) {
  fqp_trim(a);
  fqp_trim(b);
  while (!b.empty()) {
    auto r = fqp_rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return (int)a.size() - 1;
}

}  // namespace

MatZ walk_matrix_z(const MatZ& M, const std::vector<BigInt>& z) {
  size_t n = M.rows;
  if (M.cols != n || z.size() != n) throw std::invalid_argument("dimension mismatch");
  MatZ W(n, n);
  std::vector<BigInt> v = z;
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < n; ++i) W(i, j) = v[i];
    if (j + 1 == n) break;
    std::vector<BigInt> nv(n, BigInt(0));
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) nv[i] += M(i, k) * v[k];
    v = std::move(nv);
  }
  return W;
}

MatU64 walk_matrix_mod(const MatU64& M, const std::vector<uint64_t>& z, uint64_t m) {
  size_t n = M.rows;
  if (M.cols != n || z.size() != n) throw std::invalid_argument("dimension mismatch");
  ResidueRing R(m);
  MatU64 W(n, n);
  std::vector<uint64_t> v(n);
  for (size_t i = 0; i < n; ++i) v[i] = z[i] % m;
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < n; ++i) W(i, j) = v[i];
    if (j + 1 == n) break;
    std::vector<uint64_t> nv(n, 0);
    for (size_t i = 0; i < n; ++i) {
      __uint128_t acc = 0;
      for (size_t k = 0; k < n; ++k) acc += (__uint128_t)(M(i, k) % m) * v[k];
      nv[i] = (uint64_t)(acc % m);
    }
    v = std::move(nv);
  }
  return W;
}

namespace {

// eigenvalue of M^T on the one-dimensional left kernel of W mod p
uint64_t v1_scalar(const MatU64& M, const MatU64& W, uint64_t p) {
  auto basis = left_nullspace_mod_p(W, p);
  if (basis.size() != 1) throw std::logic_error("left kernel not one-dimensional");
  const auto& u = basis[0];
  size_t n = W.rows;
  ResidueRing fp(p);
  std::vector<uint64_t> uM(n, 0);
  for (size_t j = 0; j < n; ++j) {
    __uint128_t acc = 0;
    for (size_t i = 0; i < n; ++i) acc += (__uint128_t)u[i] * (M(i, j) % p);
    uM[j] = (uint64_t)(acc % p);
  }
  size_t idx = 0;
  while (idx < n && u[idx] == 0) ++idx;
  if (idx == n) throw std::logic_error("zero kernel vector");
  uint64_t a = fp.mul(uM[idx], fp.inv(u[idx]));
  for (size_t j = 0; j < n; ++j)
    if (uM[j] != fp.mul(a, u[j])) throw std::logic_error("left kernel not an eigenvector");
  return a;
}

}  // namespace

WalkVerdict walk_condition(const MatU64& M, const std::vector<uint64_t>& z, uint64_t p) {
  uint64_t p2 = p * p;
  MatU64 W = walk_matrix_mod(M, z, p2);
  DetVal dv = det_valuation_capped(W, p, 2);
  if (!dv.capped && dv.valuation == 0) return {WalkClass::V0, false, 0};
  if (!dv.capped && dv.valuation == 1) return {WalkClass::V1, true, v1_scalar(M, W, p)};
  return {WalkClass::V2, false, 0};
}

WalkVerdict walk_condition_module_oracle(const MatZ& M, const std::vector<BigInt>& z,
                                         uint64_t p) {
  MatZ W = walk_matrix_z(M, z);
  SmithZ s = smith_z(W);
  LocalGroup g = localize_invariants(s.d, p);
  if (g.trivial()) return {WalkClass::V0, false, 0};
  if (g.free_rank == 0 && g.exps.size() == 1 && g.exps[0] == 1) {
    size_t n = W.rows;
    MatU64 Mm(n, n), Wm(n, n);
    for (size_t i = 0; i < n * n; ++i) {
      BigInt r = M.a[i] % (long)p;
      if (r < 0) r += (long)p;
      Mm.a[i] = mpz_get_ui(r.get_mpz_t());
      BigInt w = W.a[i] % (long)p;
      if (w < 0) w += (long)p;
      Wm.a[i] = mpz_get_ui(w.get_mpz_t());
    }
    return {WalkClass::V1, true, v1_scalar(Mm, Wm, p)};
  }
  return {WalkClass::V2, false, 0};
}

bool disc_divisible_mod_p(const MatU64& M, uint64_t p) {
  auto cp = charpoly_mod(M, p);
  PolyFp f = coeffs_to_poly(p, cp);
  return !squarefree_mod_p(f);
}

DiscVerdict disc_exact_divisibility(const MatU64& M, uint64_t p) {
  if (p == 2) throw std::invalid_argument("odd prime required");
  if (!is_prime_u64(p)) throw std::invalid_argument("prime required");
  uint64_t p2 = p * p;
  auto cp2 = charpoly_mod(M, p2);  // monic lift of charpoly mod p^2
  PolyFp f = coeffs_to_poly(p, cp2);
  if (squarefree_mod_p(f)) return {DiscClass::NotDiv, false, 0};

  // v_p(disc) = 1 forces the shape (x-a)^2 * xi with xi squarefree and
  // xi(a) != 0; any other repetition pattern pushes the valuation to 2+
  bool found = false;
  uint64_t wit = 0;
  for (uint64_t a = 0; a < p; ++a) {
    PolyFp lin = poly_x_minus(p, (uint32_t)(a % p));
    uint32_t mult = poly_multiplicity(f, lin);
    if (mult != 2) continue;
    PolyFp xi = f;
    xi = poly_div_exact(xi, lin);
    xi = poly_div_exact(xi, lin);
    if (poly_eval(xi, (uint32_t)a) == 0) continue;  // cannot happen at mult 2, kept as a guard
    if (!squarefree_mod_p(xi)) continue;
    if (found) throw std::logic_error("double-root witness not unique");
    found = true;
    wit = a;
  }
  if (!found) return {DiscClass::SquareDiv, false, 0};

  // evaluate the mod p^2 lift at the witness: valuation 1 there is exactly
  // the discriminant valuation 1 condition (odd p)
  ResidueRing R2(p2);
  uint64_t val = 0;
  for (size_t i = cp2.size(); i-- > 0;) val = R2.add(R2.mul(val, wit), cp2[i] % p2);
  if (val % p != 0) throw std::logic_error("witness is not a root mod p");
  if (val == 0 || (val / p) % p == 0) return {DiscClass::SquareDiv, true, wit};
  return {DiscClass::ExactlyDiv, true, wit};
}

std::vector<uint64_t> charpoly_fq(const FqField& F, const MatU64& M) {
  return charpoly_berkowitz(FqOps(F), M);
}

bool charpoly_squarefree_fq(const FqField& F, const MatU64& M) {
  auto cp = charpoly_fq(F, M);
  auto d = fqp_derivative(F, cp);
  if (d.empty()) return false;  // derivative vanished, charpoly is a p-th power
  return fqp_gcd_deg(F, cp, d) == 0;
}

bool length_identity_check(const MatU64& M, uint64_t p, uint32_t max_beta_deg) {
  size_t n = M.rows;
  PolyFp f = coeffs_to_poly(p, charpoly_mod(M, p));

  Mat<PolyFp> X(n, n, poly_zero(p));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      uint32_t mij = (uint32_t)(M(i, j) % p);
      if (i == j)
        X(i, j) = poly_x_minus(p, mij);
      else if (mij != 0)
        X(i, j) = poly_scale(poly_one(p), (uint32_t)((p - mij) % p));
    }
  SmithFpx s = smith_fpx(X);

  PolyFp prod = poly_one(p);
  for (size_t i = 0; i + 1 < s.d.size(); ++i) {
    if (s.d[i].is_zero()) return false;  // xI - M is nonsingular
    PolyFp q, r;
    poly_divmod(s.d[i + 1], s.d[i], q, r);
    if (!r.is_zero()) return false;  // divisibility chain broken
  }
  for (const auto& di : s.d) {
    if (di.is_zero()) return false;
    prod = poly_mul(prod, di);
  }
  if (!(prod == f)) return false;

  for (const auto& beta : enumerate_irreducibles(p, max_beta_deg)) {
    uint32_t lhs = poly_multiplicity(f, beta);
    uint32_t rhs = 0;
    for (const auto& di : s.d) rhs += poly_multiplicity(di, beta);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace speccond
