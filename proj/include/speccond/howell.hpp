#pragma once

#include "speccond/matrix.hpp"

namespace speccond {

// Canonical row form over Z/p^c. Two generating sets span the same row
// module iff their forms are identical, so the form doubles as a span
// fingerprint. Pivots are p^v at strictly increasing columns, entries
// below a pivot are zero, entries above are reduced mod p^v, and the
// span is closed under the annihilator rows p^(c-v) * pivot_row.
struct HowellForm {
  uint64_t p = 0;
  uint32_t c = 0;
  uint64_t pc = 0;
  size_t n = 0;                    // ambient dimension (columns)
  MatU64 rows;                     // canonical generators, one pivot each
  std::vector<size_t> pivot_col;   // strictly increasing
  std::vector<uint32_t> pivot_val; // pivot = p^val

  bool operator==(const HowellForm& o) const {
    return p == o.p && c == o.c && n == o.n && rows.a == o.rows.a &&
           pivot_col == o.pivot_col && pivot_val == o.pivot_val;
  }
};

// generators = rows of G (entries reduced mod p^c internally)
HowellForm howell_form(const MatU64& G, uint64_t p, uint32_t c);

// is v in the row span?
bool howell_member(const HowellForm& H, std::vector<uint64_t> v);

}  // namespace speccond
