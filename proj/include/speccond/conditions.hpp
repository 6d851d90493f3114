#pragma once

#include "speccond/fq.hpp"
#include "speccond/linalg.hpp"
#include "speccond/matrix.hpp"

namespace speccond {

// walk matrix: columns z, Mz, M^2 z, ..., M^(n-1) z
MatZ walk_matrix_z(const MatZ& M, const std::vector<BigInt>& z);
MatU64 walk_matrix_mod(const MatU64& M, const std::vector<uint64_t>& z, uint64_t m);

// trichotomy for one prime p:
//   V0: p does not divide det W          (cokernel p-part trivial)
//   V1: p divides det W exactly once     (p-part is Z/p, carries a scalar)
//   V2: p^2 divides det W
// For V1 the scalar is the eigenvalue of M^T on the left kernel of W mod p.
enum class WalkClass { V0, V1, V2 };

struct WalkVerdict {
  WalkClass cls;
  bool has_scalar = false;
  uint64_t scalar = 0;  // mod p, valid when has_scalar

  bool operator==(const WalkVerdict& o) const {
    return cls == o.cls && has_scalar == o.has_scalar && scalar == o.scalar;
  }
};

// determinant-valuation route; M, z are taken mod p^2
WalkVerdict walk_condition(const MatU64& M, const std::vector<uint64_t>& z, uint64_t p);

// exact route: Smith form of the integer walk matrix, localized at p
WalkVerdict walk_condition_module_oracle(const MatZ& M, const std::vector<BigInt>& z, uint64_t p);

// discriminant of the characteristic polynomial at one odd prime:
//   NotDiv:     p does not divide disc
//   ExactlyDiv: p divides disc exactly once (forces a unique double root
//               a mod p, reported as the witness)
//   SquareDiv:  p^2 divides disc
enum class DiscClass { NotDiv, ExactlyDiv, SquareDiv };

struct DiscVerdict {
  DiscClass cls;
  bool has_witness = false;
  uint64_t witness = 0;  // double root mod p, valid when has_witness

  bool operator==(const DiscVerdict& o) const {
    return cls == o.cls && has_witness == o.has_witness && witness == o.witness;
  }
};

// p | disc(charpoly(M)) i.e. charpoly mod p not squarefree
bool disc_divisible_mod_p(const MatU64& M, uint64_t p);

// mod p^2 refinement; requires odd p (the quadratic analysis needs 2 invertible)
DiscVerdict disc_exact_divisibility(const MatU64& M, uint64_t p);

// charpoly over F_q squarefree? (q | disc test for the prime-power columns)
bool charpoly_squarefree_fq(const FqField& F, const MatU64& M);

// characteristic polynomial over F_q via the division-free recurrence,
// ascending, encoded entries
std::vector<uint64_t> charpoly_fq(const FqField& F, const MatU64& M);

// consistency of two independent computations: the invariant factors of
// xI - M over F_p[x] must multiply to the characteristic polynomial, and
// per-irreducible multiplicities must agree (checked to deg <= max_beta_deg)
bool length_identity_check(const MatU64& M, uint64_t p, uint32_t max_beta_deg = 2);

}  // namespace speccond
