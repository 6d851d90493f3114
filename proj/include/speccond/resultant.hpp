#pragma once

#include "speccond/matrix.hpp"

namespace speccond {

// Integer polynomials, ascending coefficients (index = power). Trailing
// zeros are tolerated; formal degree helpers below ignore them.
using PolyZ = std::vector<BigInt>;

int deg_z(const PolyZ& f);  // -1 for zero
PolyZ derivative_z(const PolyZ& f);
BigInt eval_z(const PolyZ& f, const BigInt& x);

// Sylvester matrix of f and g at formal degrees (df, dg). Rows are the
// shifted coefficient sequences of f (dg of them) then of g (df of them),
// highest power leftmost; det = Res(f, g) at those degrees.
MatZ sylvester_z(const PolyZ& f, int df, const PolyZ& g, int dg);

// entrywise reduction of the same matrix mod m (for valuation probes)
MatU64 sylvester_mod(const PolyZ& f, int df, const PolyZ& g, int dg, uint64_t m);

BigInt det_bareiss_z(MatZ A);

// resultant at true degrees; zero input gives 0, two constants give 1
BigInt resultant_z(const PolyZ& f, const PolyZ& g);

// discriminant of a monic integer polynomial of degree n >= 1:
// (-1)^(n(n-1)/2) * Res(f, f') with f' taken at formal degree n-1
BigInt discriminant_z(const PolyZ& f);

}  // namespace speccond
