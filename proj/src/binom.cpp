#include "modva/binom.hpp"

namespace modva {

namespace {

// binomial(a, b) mod p for digits 0 <= a, b < p, via the falling-factorial
// product a(a-1)...(a-b+1) / b!.  Every factor in the denominator is < p, so
// it is invertible.
uint32_t digitBinom(uint32_t a, uint32_t b, uint32_t p) {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  uint32_t num = 1, den = 1;
  for (uint32_t i = 0; i < b; ++i) {
    num = mulMod(num, a - i, p);
    den = mulMod(den, i + 1, p);
  }
  return mulMod(num, invMod(den, p), p);
}

}  // namespace

uint32_t binomMod(long long m, long long k, uint32_t p) {
  if (k < 0) return 0;
  if (k == 0) return 1 % p;
  if (m < 0) {
    // binomial(m, k) = (-1)^k binomial(k - m - 1, k) over Z
    return mulMod(signPow(k, p), binomMod(k - m - 1, k, p), p);
  }
  if (k > m) return 0;
  // Lucas: digit-wise base-p product
  uint32_t r = 1;
  unsigned long long mm = m, kk = k;
  while (kk > 0 || mm > 0) {
    uint32_t md = static_cast<uint32_t>(mm % p), kd = static_cast<uint32_t>(kk % p);
    r = mulMod(r, digitBinom(md, kd, p), p);
    if (r == 0) return 0;
    mm /= p;
    kk /= p;
  }
  return r;
}

}  // namespace modva
