#pragma once

// Test-side oracles, kept deliberately independent of the library's own
// arithmetic paths: exact big-integer binomials, a Pascal-recurrence table
// mod p, and generating-function dimension counts.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracle {

// Minimal unsigned bignum (base 10^9 limbs), just enough for factorials of a
// few hundred and exact small division.
class BigNat {
 public:
  BigNat() : limbs_{0} {}
  explicit BigNat(uint64_t v) {
    limbs_.clear();
    do { limbs_.push_back(static_cast<uint32_t>(v % kBase)); v /= kBase; } while (v);
  }

  void mulSmall(uint64_t f) {
    uint64_t carry = 0;
    for (auto& limb : limbs_) {
      uint64_t cur = static_cast<uint64_t>(limb) * f + carry;
      limb = static_cast<uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    while (carry) { limbs_.push_back(static_cast<uint32_t>(carry % kBase)); carry /= kBase; }
  }

  // exact division by a small divisor; throws if a remainder is left over
  void divExactSmall(uint64_t d) {
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
      uint64_t cur = rem * kBase + limbs_[i];
      limbs_[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    if (rem != 0) throw std::logic_error("divExactSmall: inexact division");
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
  }

  uint32_t modSmall(uint32_t m) const {
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) rem = (rem * kBase + limbs_[i]) % m;
    return static_cast<uint32_t>(rem);
  }

 private:
  static constexpr uint64_t kBase = 1000000000ull;
  std::vector<uint32_t> limbs_;  // little-endian
};

inline BigNat factorial(long long n) {
  BigNat r(1);
  for (long long i = 2; i <= n; ++i) r.mulSmall(static_cast<uint64_t>(i));
  return r;
}

// binomial(m, k) mod p computed literally as m! / (k! (m-k)!), 0 <= k <= m
inline uint32_t binomFactorialMod(long long m, long long k, uint32_t p) {
  if (k < 0 || k > m) return 0;
  BigNat r = factorial(m);
  for (long long i = 2; i <= k; ++i) r.divExactSmall(static_cast<uint64_t>(i));
  for (long long i = 2; i <= m - k; ++i) r.divExactSmall(static_cast<uint64_t>(i));
  return r.modSmall(p);
}

// binomial(m, k) mod p via the stepwise product binom(m,i+1) = binom(m,i)*(m-i)/(i+1),
// exact in Z at every step
inline uint32_t binomProductMod(long long m, long long k, uint32_t p) {
  if (k < 0 || k > m) return 0;
  BigNat r(1);
  for (long long i = 0; i < k; ++i) {
    r.mulSmall(static_cast<uint64_t>(m - i));
    r.divExactSmall(static_cast<uint64_t>(i + 1));
  }
  return r.modSmall(p);
}

// Pascal triangle rows 0..maxM reduced mod p; reduction commutes with the
// additive recurrence, so this is an independent route to binomials mod p.
inline std::vector<std::vector<uint32_t>> pascalMod(int maxM, uint32_t p) {
  std::vector<std::vector<uint32_t>> rows(maxM + 1);
  for (int m = 0; m <= maxM; ++m) {
    rows[m].assign(static_cast<size_t>(m) + 1, 0);
    rows[m][0] = 1 % p;
    for (int k = 1; k <= m; ++k) {
      uint64_t s = rows[m - 1][k - 1];
      if (k < m) s += rows[m - 1][k];
      rows[m][static_cast<size_t>(k)] = static_cast<uint32_t>(s % p);
    }
  }
  return rows;
}

// Coefficients of prod_{s in parts} (1 - q^s)^(-colors) up to q^N: the number
// of multisets of (s, color) pairs with total s-weight n.  Used as the
// dimension count for PBW bases.
inline std::vector<long long> gradedDims(const std::vector<int>& parts, int colors, int N) {
  std::vector<long long> c(static_cast<size_t>(N) + 1, 0);
  c[0] = 1;
  for (int s : parts)
    for (int rep = 0; rep < colors; ++rep)
      for (int n = s; n <= N; ++n) c[static_cast<size_t>(n)] += c[static_cast<size_t>(n - s)];
  return c;
}

}  // namespace oracle
