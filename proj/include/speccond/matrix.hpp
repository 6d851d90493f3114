#pragma once
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace speccond {

using BigInt = mpz_class;

template <class T>
struct Mat {
  size_t rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
  Mat(size_t r, size_t c, const T& fill) : rows(r), cols(c), a(r * c, fill) {}

  T& operator()(size_t i, size_t j) { return a[i * cols + j]; }
  const T& operator()(size_t i, size_t j) const { return a[i * cols + j]; }

  static Mat identity(size_t n) {
    Mat m(n, n, T(0));
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
};

using MatU64 = Mat<uint64_t>;
using MatZ = Mat<BigInt>;

inline MatZ to_matz(const MatU64& m) {
  MatZ z(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) z.a[i] = (unsigned long)m.a[i];
  return z;
}

// p-adic valuation of a nonzero integer
inline uint32_t vp_bigint(const BigInt& a, uint64_t p) {
  if (a == 0) throw std::invalid_argument("valuation of zero");
  BigInt rem = abs(a);
  uint32_t v = 0;
  while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
    mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
    ++v;
  }
  return v;
}

}  // namespace speccond
