#pragma once

#include <string>

#include "speccond/matrix.hpp"

namespace speccond {

// p-primary part of a finitely generated abelian group:
// direct sum of Z/p^e over exps (ascending), plus free_rank copies of Z.
struct LocalGroup {
  uint64_t p = 0;
  std::vector<uint32_t> exps;
  uint32_t free_rank = 0;

  bool trivial() const { return exps.empty() && free_rank == 0; }
  bool operator==(const LocalGroup& o) const {
    return p == o.p && exps == o.exps && free_rank == o.free_rank;
  }
};

// read the p-part off a divisibility chain of invariant factors
// (zero entries contribute to the free rank; unit entries drop out)
LocalGroup localize_invariants(const std::vector<BigInt>& d, uint64_t p);

// full primary decomposition via trial division; pairs (prime, exponent)
// sorted by prime then exponent. Throws if a cofactor survives the trial
// bound, so reserve this for small invariant factors.
struct AbelianGroupType {
  std::vector<std::pair<uint64_t, uint32_t>> primary;
  uint32_t free_rank = 0;

  bool operator==(const AbelianGroupType& o) const {
    return primary == o.primary && free_rank == o.free_rank;
  }
  std::string str() const;  // e.g. "Z/4 x Z/2 x Z"
};

AbelianGroupType factor_invariants(const std::vector<BigInt>& d);

}  // namespace speccond
