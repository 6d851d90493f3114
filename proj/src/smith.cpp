#include "speccond/smith.hpp"

#include <stdexcept>

#include "speccond/residue.hpp"

namespace speccond {

namespace {

// Euclidean-domain hooks shared by the diagonalization loop.
struct ZTrait {
  using E = BigInt;
  bool is_zero(const E& a) const { return a == 0; }
  bool smaller(const E& a, const E& b) const {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
  }
  void divmod(const E& a, const E& b, E& q, E& r) const {
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  bool divides(const E& b, const E& a) const {
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
  }
  // unit u with a*u canonical (nonnegative); a != 0
  E canon_unit(const E& a) const { return a < 0 ? E(-1) : E(1); }
  E mul(const E& a, const E& b) const { return a * b; }
  E submul(const E& a, const E& q, const E& b) const { return a - q * b; }
  E add(const E& a, const E& b) const { return a + b; }
  E zero() const { return E(0); }
  E unit() const { return E(1); }
};

struct FpxTrait {
  using E = PolyFp;
  uint64_t p;
  bool is_zero(const E& a) const { return a.is_zero(); }
  bool smaller(const E& a, const E& b) const { return a.deg() < b.deg(); }
  void divmod(const E& a, const E& b, E& q, E& r) const { poly_divmod(a, b, q, r); }
  bool divides(const E& b, const E& a) const {
    E q, r;
    poly_divmod(a, b, q, r);
    return r.is_zero();
  }
  E canon_unit(const E& a) const {
    ResidueRing fp(p);
    return PolyFp(p, std::vector<uint32_t>{(uint32_t)fp.inv(a.lc())});
  }
  E mul(const E& a, const E& b) const { return poly_mul(a, b); }
  E submul(const E& a, const E& q, const E& b) const { return poly_sub(a, poly_mul(q, b)); }
  E add(const E& a, const E& b) const { return poly_add(a, b); }
  E zero() const { return poly_zero(p); }
  E unit() const { return poly_one(p); }
};

template <class Tr>
struct SnfResult {
  std::vector<typename Tr::E> d;
  Mat<typename Tr::E> U, V;
};

template <class Tr>
SnfResult<Tr> snf(const Tr& tr, Mat<typename Tr::E> A, bool transforms) {
  using E = typename Tr::E;
  size_t rows = A.rows, cols = A.cols;
  Mat<E> U, V;
  if (transforms) {
    U = Mat<E>(rows, rows, tr.zero());
    V = Mat<E>(cols, cols, tr.zero());
    for (size_t i = 0; i < rows; ++i) U(i, i) = tr.unit();
    for (size_t j = 0; j < cols; ++j) V(j, j) = tr.unit();
  }

  auto row_swap = [&](size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < cols; ++j) std::swap(A(a, j), A(b, j));
    if (transforms)
      for (size_t j = 0; j < rows; ++j) std::swap(U(a, j), U(b, j));
  };
  auto col_swap = [&](size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < rows; ++i) std::swap(A(i, a), A(i, b));
    if (transforms)
      for (size_t i = 0; i < cols; ++i) std::swap(V(i, a), V(i, b));
  };
  auto row_submul = [&](size_t a, const E& q, size_t b) {  // row a -= q * row b
    for (size_t j = 0; j < cols; ++j) A(a, j) = tr.submul(A(a, j), q, A(b, j));
    if (transforms)
      for (size_t j = 0; j < rows; ++j) U(a, j) = tr.submul(U(a, j), q, U(b, j));
  };
  auto col_submul = [&](size_t a, const E& q, size_t b) {  // col a -= q * col b
    for (size_t i = 0; i < rows; ++i) A(i, a) = tr.submul(A(i, a), q, A(i, b));
    if (transforms)
      for (size_t i = 0; i < cols; ++i) V(i, a) = tr.submul(V(i, a), q, V(i, b));
  };
  auto row_add = [&](size_t a, size_t b) {  // row a += row b
    for (size_t j = 0; j < cols; ++j) A(a, j) = tr.add(A(a, j), A(b, j));
    if (transforms)
      for (size_t j = 0; j < rows; ++j) U(a, j) = tr.add(U(a, j), U(b, j));
  };
  auto row_scale = [&](size_t a, const E& u) {
    for (size_t j = 0; j < cols; ++j) A(a, j) = tr.mul(A(a, j), u);
    if (transforms)
      for (size_t j = 0; j < rows; ++j) U(a, j) = tr.mul(U(a, j), u);
  };

  size_t nmin = std::min(rows, cols);
  bool tail_zero = false;
  for (size_t t = 0; t < nmin && !tail_zero; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing submatrix becomes the pivot
      size_t bi = t, bj = t;
      bool found = false;
      for (size_t i = t; i < rows; ++i)
        for (size_t j = t; j < cols; ++j) {
          if (tr.is_zero(A(i, j))) continue;
          if (!found || tr.smaller(A(i, j), A(bi, bj))) { bi = i; bj = j; found = true; }
        }
      if (!found) { tail_zero = true; break; }  // remaining invariants are zero
      row_swap(t, bi);
      col_swap(t, bj);

      bool touched = false;
      for (size_t i = t + 1; i < rows; ++i) {
        if (tr.is_zero(A(i, t))) continue;
        E q, r;
        tr.divmod(A(i, t), A(t, t), q, r);
        row_submul(i, q, t);
        if (!tr.is_zero(A(i, t))) touched = true;  // remainder left, pivot will shrink
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (tr.is_zero(A(t, j))) continue;
        E q, r;
        tr.divmod(A(t, j), A(t, t), q, r);
        col_submul(j, q, t);
        if (!tr.is_zero(A(t, j))) touched = true;
      }
      if (touched) continue;

      // divisibility sweep: the pivot must divide everything that remains
      bool clean = true;
      for (size_t i = t + 1; i < rows && clean; ++i)
        for (size_t j = t + 1; j < cols && clean; ++j)
          if (!tr.divides(A(t, t), A(i, j))) {
            row_add(t, i);  // drags the offending entry into the pivot row
            clean = false;
          }
      if (clean) break;
    }
    if (!tail_zero && !tr.is_zero(A(t, t))) row_scale(t, tr.canon_unit(A(t, t)));
  }
  SnfResult<Tr> out;
  out.d.reserve(nmin);
  for (size_t t = 0; t < nmin; ++t) out.d.push_back(A(t, t));
  out.U = std::move(U);
  out.V = std::move(V);
  return out;
}

}  // namespace

SmithZ smith_z(const MatZ& A, bool transforms) {
  auto r = snf(ZTrait{}, A, transforms);
  return {std::move(r.d), std::move(r.U), std::move(r.V), transforms};
}

SmithFpx smith_fpx(const Mat<PolyFp>& A, bool transforms) {
  uint64_t p = 0;
  for (const auto& e : A.a)
    if (e.p >= 2) { p = e.p; break; }
  if (p == 0) throw std::invalid_argument("polynomial entries lack a characteristic");
  Mat<PolyFp> B = A;  // normalize default-constructed zero entries
  for (auto& e : B.a)
    if (e.p < 2) e = poly_zero(p);
  auto r = snf(FpxTrait{p}, std::move(B), transforms);
  return {std::move(r.d), std::move(r.U), std::move(r.V), transforms};
}

}  // namespace speccond
