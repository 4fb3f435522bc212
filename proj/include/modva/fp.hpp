#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace modva {

// Modular arithmetic on canonical residues in [0, p).  The modulus is a
// runtime parameter; callers are expected to have validated that p is an odd
// prime < 2^31 (checkModulus below does exactly that).

inline uint32_t normMod(long long x, uint32_t p) {
  long long r = x % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<uint32_t>(r);
}

inline uint32_t addMod(uint32_t a, uint32_t b, uint32_t p) {
  uint64_t s = static_cast<uint64_t>(a) + b;
  return static_cast<uint32_t>(s >= p ? s - p : s);
}

inline uint32_t subMod(uint32_t a, uint32_t b, uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline uint32_t negMod(uint32_t a, uint32_t p) { return a ? p - a : 0; }

inline uint32_t mulMod(uint32_t a, uint32_t b, uint32_t p) {
  return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

inline uint32_t powMod(uint32_t a, uint64_t e, uint32_t p) {
  uint64_t r = 1 % p, b = a;
  while (e) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

// extended Euclid; p prime and a != 0 mod p
inline uint32_t invMod(uint32_t a, uint32_t p) {
  if (a == 0) throw std::domain_error("invMod: zero is not invertible");
  int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    int64_t q = r / nr;
    int64_t tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  assert(r == 1);
  return normMod(t, p);
}

// symmetric residue in (-p/2, p/2], used by the human-readable output format
inline long long symMod(uint32_t a, uint32_t p) {
  long long v = a;
  if (v > static_cast<long long>(p) / 2) v -= p;
  return v;
}

// Throws unless p is an odd prime < 2^31.  Trial division is plenty: moduli
// at this scale are entered by hand, not generated.
inline void checkModulus(long long p) {
  if (p < 3 || p >= (1LL << 31) || p % 2 == 0)
    throw std::domain_error("modulus must be an odd prime < 2^31, got " + std::to_string(p));
  for (long long d = 3; d * d <= p; d += 2)
    if (p % d == 0)
      throw std::domain_error("modulus must be prime, got " + std::to_string(p) +
                              " = " + std::to_string(d) + " * " + std::to_string(p / d));
}

// A scalar carrying its modulus.  Containers that live inside a fixed
// context store bare uint32_t residues instead; this type is for values that
// cross API boundaries on their own.
struct Fp {
  uint32_t v = 0;
  uint32_t p = 0;

  Fp() = default;
  Fp(long long x, uint32_t mod) : v(normMod(x, mod)), p(mod) {}

  static Fp zero(uint32_t mod) { return Fp(0, mod); }
  static Fp one(uint32_t mod) { return Fp(1, mod); }

  bool isZero() const { return v == 0; }
  long long sym() const { return symMod(v, p); }

  Fp operator+(Fp o) const { assert(p == o.p); return raw(addMod(v, o.v, p), p); }
  Fp operator-(Fp o) const { assert(p == o.p); return raw(subMod(v, o.v, p), p); }
  Fp operator*(Fp o) const { assert(p == o.p); return raw(mulMod(v, o.v, p), p); }
  Fp operator-() const { return raw(negMod(v, p), p); }
  Fp inv() const { return raw(invMod(v, p), p); }

  Fp& operator+=(Fp o) { *this = *this + o; return *this; }
  Fp& operator-=(Fp o) { *this = *this - o; return *this; }
  Fp& operator*=(Fp o) { *this = *this * o; return *this; }

  bool operator==(Fp o) const { assert(p == o.p); return v == o.v; }
  bool operator!=(Fp o) const { return !(*this == o); }

  static Fp raw(uint32_t v, uint32_t p) { Fp f; f.v = v; f.p = p; return f; }
};

}  // namespace modva
