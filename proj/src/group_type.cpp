#include "speccond/group_type.hpp"

#include <algorithm>
#include <stdexcept>

namespace speccond {

LocalGroup localize_invariants(const std::vector<BigInt>& d, uint64_t p) {
  LocalGroup g;
  g.p = p;
  for (const auto& x : d) {
    if (x == 0) {
      ++g.free_rank;
      continue;
    }
    uint32_t v = vp_bigint(x, p);
    if (v > 0) g.exps.push_back(v);
  }
  std::sort(g.exps.begin(), g.exps.end());
  return g;
}

AbelianGroupType factor_invariants(const std::vector<BigInt>& d) {
  constexpr uint64_t kTrialBound = 1u << 20;
  AbelianGroupType g;
  for (const auto& x : d) {
    if (x == 0) {
      ++g.free_rank;
      continue;
    }
    BigInt rem = abs(x);
    for (uint64_t p = 2; p <= kTrialBound && rem > 1; p += (p == 2 ? 1 : 2)) {
      if (!mpz_divisible_ui_p(rem.get_mpz_t(), p)) continue;
      uint32_t e = 0;
      while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
        mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
        ++e;
      }
      g.primary.emplace_back(p, e);
    }
    if (rem > 1) {
      if (mpz_probab_prime_p(rem.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("invariant factor too hard to factor");
      if (!rem.fits_ulong_p()) throw std::invalid_argument("prime factor exceeds word size");
      g.primary.emplace_back(mpz_get_ui(rem.get_mpz_t()), 1);
    }
  }
  std::sort(g.primary.begin(), g.primary.end());
  return g;
}

std::string AbelianGroupType::str() const {
  std::string s;
  auto append = [&s](const std::string& part) {
    if (!s.empty()) s += " x ";
    s += part;
  };
  for (const auto& [p, e] : primary) {
    BigInt q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, e);
    append("Z/" + q.get_str());
  }
  if (free_rank == 1) append("Z");
  if (free_rank > 1) append("Z^" + std::to_string(free_rank));
  if (s.empty()) s = "0";
  return s;
}

}  // namespace speccond
