#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>

#include "modva/fp.hpp"

namespace modva {

// binomial(m, k) mod p for any integer m and k >= 0 (k < 0 yields 0, as in Z).
//
// For m >= 0 this is evaluated with Lucas' theorem: write m and k base p and
// take the product of the digit binomials.  For m < 0 reduce to the
// nonnegative case through binomial(m, k) = (-1)^k binomial(k - m - 1, k),
// which holds in Z before reduction.
uint32_t binomMod(long long m, long long k, uint32_t p);

// (-1)^k mod p
inline uint32_t signPow(long long k, uint32_t p) { return (k % 2 == 0) ? 1u : p - 1u; }

// Memo cache in front of binomMod for one fixed modulus.  Shared across
// worker threads, hence the lock; the maps stay small enough that contention
// is a non-issue at the scale this library targets.
class BinomTable {
 public:
  explicit BinomTable(uint32_t p) : p_(p) {}

  uint32_t p() const { return p_; }

  uint32_t operator()(long long m, long long k) const {
    if (k < 0) return 0;
    // cache key packs (m, k) into 64 bits; fall through uncached if they don't fit
    if (m < INT32_MIN || m > INT32_MAX || k > UINT32_MAX) return binomMod(m, k, p_);
    uint64_t key = (static_cast<uint64_t>(static_cast<uint32_t>(static_cast<int32_t>(m))) << 32) |
                   static_cast<uint32_t>(k);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    uint32_t v = binomMod(m, k, p_);
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(key, v);
    return v;
  }

 private:
  uint32_t p_;
  mutable std::mutex mu_;
  mutable std::unordered_map<uint64_t, uint32_t> cache_;
};

}  // namespace modva
