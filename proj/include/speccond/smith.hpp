#pragma once

#include "speccond/matrix.hpp"
#include "speccond/poly.hpp"

namespace speccond {

// Smith normal form over a Euclidean domain: U * A * V = diag(d), with
// d_1 | d_2 | ... and min(rows, cols) entries (zeros trail). U, V are
// invertible over the base ring; they are only filled in when requested.

struct SmithZ {
  std::vector<BigInt> d;  // nonnegative, divisibility chain
  MatZ U, V;
  bool has_transforms = false;
};

struct SmithFpx {
  std::vector<PolyFp> d;  // monic or zero, divisibility chain
  Mat<PolyFp> U, V;
  bool has_transforms = false;
};

SmithZ smith_z(const MatZ& A, bool transforms = false);
SmithFpx smith_fpx(const Mat<PolyFp>& A, bool transforms = false);

}  // namespace speccond
