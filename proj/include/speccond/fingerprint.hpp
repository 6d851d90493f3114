#pragma once

#include <optional>

#include "speccond/matrix.hpp"
#include "speccond/trunc.hpp"

namespace speccond {

// Isomorphism data of coker(A) for A over the truncated local ring, at the
// granularity the per-(p,beta) limit laws distinguish.
//
//   rank_q        rank of the reduction mod (p, beta) over F_q
//   modp_exps     beta-exponents of coker(A mod p) over F_p[x]/beta^e,
//                 one per row, capped at e, ascending
//   modbeta_exps  p-exponents of coker(A mod beta) over Z[x]/(p^c, B),
//                 one per row, capped at c, ascending
//   killed_by_p   p * coker(A) = 0
//   killed_by_b   beta * coker(A) = 0
//
// A capped exponent means "at least this deep"; the truncation cannot see
// further. The class readers below collapse the exponent lists to the named
// isomorphism classes.
struct ModuleFingerprint {
  uint64_t p = 0;
  uint32_t d = 0;  // deg beta
  uint32_t pprec = 0, bprec = 0;
  size_t rows = 0, cols = 0;
  uint32_t rank_q = 0;
  std::vector<uint32_t> modp_exps;
  std::vector<uint32_t> modbeta_exps;
  bool killed_by_p = false;
  bool killed_by_b = false;

  bool operator==(const ModuleFingerprint& o) const {
    return p == o.p && d == o.d && pprec == o.pprec && bprec == o.bprec && rows == o.rows &&
           cols == o.cols && rank_q == o.rank_q && modp_exps == o.modp_exps &&
           modbeta_exps == o.modbeta_exps && killed_by_p == o.killed_by_p &&
           killed_by_b == o.killed_by_b;
  }
};

// coker(A mod p) as an F_p[x]/beta^e-module, collapsed
enum class ModPClass { Trivial, Fq, FqFq, BetaSquare, Larger };
// coker(A mod beta) over Z[x]/(p^c, B), collapsed
enum class ModBetaClass { Trivial, Fq, Other };

ModPClass modp_class(const ModuleFingerprint& f);
ModBetaClass modbeta_class(const ModuleFingerprint& f);

// layered reference route: rank over F_q; Smith form over F_p[x] of the
// block [A mod p | beta^e I]; diagonalization over Z[x]/(p^c, B) of
// A mod beta; killed-by flags through the expanded Z/p^c presentation
// (dimension w per ring element) with Howell membership tests.
ModuleFingerprint fingerprint_reference(const TruncatedRing& R, const Mat<TruncElem>& A);

// production route: eliminate unit pivots to a core with all entries in the
// maximal ideal, classify the small core. Equal to fingerprint_reference on
// every input; kept separate so the two can be tested against each other.
ModuleFingerprint fingerprint_fast(const TruncatedRing& R, const Mat<TruncElem>& A);

// convenience: append z as an extra column
Mat<TruncElem> augment_column(const TruncatedRing& R, const Mat<TruncElem>& A,
                              const std::vector<TruncElem>& z);

// ---- per-sample limit-law events ------------------------------------------
// W events concern coker([A|z]), D events concern coker(A):
//   WTrivial  coker([A|z]) = 0
//   WFq       coker([A|z]) isomorphic to F_q
//   DTrivial  coker(A)/p coker(A) = 0
//   DFq       coker(A)/p coker(A) isomorphic to F_q
//   DPair     coker(A)/p coker(A) iso F_p[x]/beta^2 and coker(A)/beta coker(A)
//             iso F_q  (requires a ring with beta-precision e >= 3: at e = 2
//             the exact valuation 2 cannot be separated from >= 3)
enum class EventTag { WTrivial, WFq, DTrivial, DFq, DPair };

struct EventResults {
  bool wtrivial = false, wfq = false, dtrivial = false, dfq = false, dpair = false;
  bool get(EventTag t) const;
};

// raw sample layout: n rows, n+1 columns ([A | z]), entry (i,j) occupies
// w consecutive words at buf[(i*(n+1) + j)*w]. The buffer is clobbered.
// work grows as needed and can be reused across calls.
EventResults evaluate_events_raw(const TruncatedRing& R, uint64_t* buf, size_t n,
                                 std::vector<uint64_t>& work);

// allocation-friendly wrapper over the raw evaluator
EventResults evaluate_events(const TruncatedRing& R, const Mat<TruncElem>& A,
                             const std::vector<TruncElem>& z);

// single event via the reference fingerprint machinery (slow; used to
// cross-check the raw evaluator)
bool event_reference(const TruncatedRing& R, EventTag tag, const Mat<TruncElem>& A,
                     const std::vector<TruncElem>& z);

}  // namespace speccond
