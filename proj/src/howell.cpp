#include "speccond/howell.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "speccond/residue.hpp"

namespace speccond {

HowellForm howell_form(const MatU64& G, uint64_t p, uint32_t c) {
  if (!is_prime_u64(p)) throw std::invalid_argument("prime modulus base required");
  if (c < 1 || c > 20) throw std::invalid_argument("precision out of range");
  uint64_t pc = 1;
  for (uint32_t i = 0; i < c; ++i) {
    if (pc > UINT64_MAX / p) throw std::invalid_argument("modulus overflow");
    pc *= p;
  }
  ResidueRing R(pc);
  size_t n = G.cols;

  std::map<size_t, std::vector<uint64_t>> piv;  // pivot column -> normalized row
  std::map<size_t, uint32_t> pval;
  std::deque<std::vector<uint64_t>> work;
  for (size_t i = 0; i < G.rows; ++i) {
    std::vector<uint64_t> r(n);
    for (size_t j = 0; j < n; ++j) r[j] = G(i, j) % pc;
    work.push_back(std::move(r));
  }

  auto normalize = [&](std::vector<uint64_t>& r, size_t j, uint32_t v) {
    // r[j] = p^v * u; scale r by u^-1 so the pivot reads exactly p^v
    uint64_t pv = 1;
    for (uint32_t i = 0; i < v; ++i) pv *= p;
    uint64_t uinv = R.inv(r[j] / pv);
    for (auto& x : r) x = R.mul(x, uinv);
  };
  auto annihilator = [&](const std::vector<uint64_t>& r, uint32_t v) {
    uint64_t f = 1;
    for (uint32_t i = 0; i < c - v; ++i) f = R.mul(f, p % pc);
    std::vector<uint64_t> s(n);
    for (size_t j = 0; j < n; ++j) s[j] = R.mul(f, r[j]);
    return s;
  };

  while (!work.empty()) {
    std::vector<uint64_t> r = std::move(work.front());
    work.pop_front();
    for (size_t j = 0; j < n;) {
      if (r[j] == 0) { ++j; continue; }
      uint32_t w = vp_capped(r[j], p, c);
      auto it = piv.find(j);
      if (it == piv.end()) {
        normalize(r, j, w);
        if (w > 0) work.push_back(annihilator(r, w));
        piv.emplace(j, std::move(r));
        pval.emplace(j, w);
        r.clear();
        break;
      }
      uint32_t v = pval[j];
      if (w >= v) {
        // clear position j against the pivot
        uint64_t pv = 1;
        for (uint32_t i = 0; i < v; ++i) pv *= p;
        uint64_t m = R.reduce(r[j] / pv);
        const auto& e = it->second;
        for (size_t k = j; k < n; ++k) r[k] = R.sub(r[k], R.mul(m, e[k]));
      } else {
        // strictly smaller valuation: the new row takes over the pivot slot
        normalize(r, j, w);
        std::vector<uint64_t> old = std::move(it->second);
        it->second = r;
        pval[j] = w;
        if (w > 0) work.push_back(annihilator(r, w));
        r = std::move(old);  // keep reducing the displaced row
      }
    }
  }

  // upward pass: entries above each pivot reduced mod p^v
  std::vector<size_t> cols;
  for (auto& kv : piv) cols.push_back(kv.first);
  for (size_t a = 0; a < cols.size(); ++a)
    for (size_t b = a + 1; b < cols.size(); ++b) {
      size_t j = cols[b];
      uint32_t v = pval[j];
      uint64_t pv = 1;
      for (uint32_t i = 0; i < v; ++i) pv *= p;
      auto& hi = piv[cols[a]];
      const auto& lo = piv[j];
      uint64_t m = hi[j] / pv;  // leaves hi[j] mod p^v
      if (m == 0) continue;
      for (size_t k = j; k < n; ++k) hi[k] = R.sub(hi[k], R.mul(R.reduce(m), lo[k]));
    }

  HowellForm H;
  H.p = p;
  H.c = c;
  H.pc = pc;
  H.n = n;
  H.rows = MatU64(cols.size(), n);
  for (size_t a = 0; a < cols.size(); ++a) {
    H.pivot_col.push_back(cols[a]);
    H.pivot_val.push_back(pval[cols[a]]);
    const auto& r = piv[cols[a]];
    for (size_t j = 0; j < n; ++j) H.rows(a, j) = r[j];
  }
  return H;
}

bool howell_member(const HowellForm& H, std::vector<uint64_t> v) {
  if (v.size() != H.n) throw std::invalid_argument("dimension mismatch");
  ResidueRing R(H.pc);
  for (auto& x : v) x %= H.pc;
  for (size_t a = 0; a < H.pivot_col.size(); ++a) {
    size_t j = H.pivot_col[a];
    for (size_t k = (a == 0 ? 0 : H.pivot_col[a - 1] + 1); k < j; ++k)
      if (v[k] != 0) return false;  // nonzero in a pivot-free column
    if (v[j] == 0) continue;
    uint32_t pv_val = H.pivot_val[a];
    if (vp_capped(v[j], H.p, H.c) < pv_val) return false;
    uint64_t pv = 1;
    for (uint32_t i = 0; i < pv_val; ++i) pv *= H.p;
    uint64_t m = R.reduce(v[j] / pv);
    for (size_t k = j; k < H.n; ++k) v[k] = R.sub(v[k], R.mul(m, H.rows(a, k)));
  }
  for (uint64_t x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace speccond
