#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "modva/binom.hpp"
#include "modva/fp.hpp"

namespace modva {

// Basis monomial D^(i) H^(j) E^(k) of the divided-power Hopf algebra built on
// sl2: D = lowering, E = raising, H^(n) the binomial divided power of the
// Cartan element, i.e. binom(-2*L0, n).  Monomials in this order form a PBW
// basis; products of generators in any other order straighten into it.
struct HMono {
  uint32_t i = 0, j = 0, k = 0;
  auto operator<=>(const HMono&) const = default;
};

// grading: deg D^(i) H^(j) E^(k) = i - k
inline long long hGrade(HMono m) { return static_cast<long long>(m.i) - static_cast<long long>(m.k); }

// Element of the Hopf algebra: sorted monomial -> residue map, no zeros kept.
class HElement {
 public:
  explicit HElement(uint32_t p) : p_(p) {}

  uint32_t p() const { return p_; }
  const std::map<HMono, uint32_t>& terms() const { return t_; }
  bool isZero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }

  uint32_t coeff(HMono m) const {
    auto it = t_.find(m);
    return it == t_.end() ? 0u : it->second;
  }

  void add(HMono m, uint32_t c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
      it->second = addMod(it->second, c, p_);
      if (it->second == 0) t_.erase(it);
    }
  }

  HElement operator+(const HElement& o) const {
    HElement r = *this;
    for (auto& [m, c] : o.t_) r.add(m, c);
    return r;
  }
  HElement operator-(const HElement& o) const {
    HElement r = *this;
    for (auto& [m, c] : o.t_) r.add(m, negMod(c, p_));
    return r;
  }
  HElement scaled(long long s) const {
    HElement r(p_);
    uint32_t sc = normMod(s, p_);
    for (auto& [m, c] : t_) r.add(m, mulMod(c, sc, p_));
    return r;
  }

  bool operator==(const HElement& o) const { return p_ == o.p_ && t_ == o.t_; }
  bool operator!=(const HElement& o) const { return !(*this == o); }

  // homogeneous in the i - k grading?  degree reported through *deg when so
  bool homogeneous(long long* deg = nullptr) const;

 private:
  uint32_t p_;
  std::map<HMono, uint32_t> t_;
};

// Element of the two-fold tensor square, same conventions.
class HTensor {
 public:
  using Key = std::pair<HMono, HMono>;

  explicit HTensor(uint32_t p) : p_(p) {}
  uint32_t p() const { return p_; }
  const std::map<Key, uint32_t>& terms() const { return t_; }
  bool isZero() const { return t_.empty(); }

  void add(HMono a, HMono b, uint32_t c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(Key{a, b}, c);
    if (!fresh) {
      it->second = addMod(it->second, c, p_);
      if (it->second == 0) t_.erase(it);
    }
  }

  HTensor operator+(const HTensor& o) const {
    HTensor r = *this;
    for (auto& [k, c] : o.t_) r.add(k.first, k.second, c);
    return r;
  }
  HTensor operator-(const HTensor& o) const {
    HTensor r = *this;
    for (auto& [k, c] : o.t_) r.add(k.first, k.second, negMod(c, p_));
    return r;
  }

  bool operator==(const HTensor& o) const { return p_ == o.p_ && t_ == o.t_; }
  bool operator!=(const HTensor& o) const { return !(*this == o); }

 private:
  uint32_t p_;
  std::map<Key, uint32_t> t_;
};

// three-fold tensors only show up when checking coassociativity
struct HTensor3 {
  uint32_t p;
  std::map<std::array<HMono, 3>, uint32_t> t;

  explicit HTensor3(uint32_t mod) : p(mod) {}
  void add(HMono a, HMono b, HMono c, uint32_t coef) {
    if (coef == 0) return;
    std::array<HMono, 3> key{a, b, c};
    auto [it, fresh] = t.emplace(key, coef);
    if (!fresh) {
      it->second = addMod(it->second, coef, p);
      if (it->second == 0) t.erase(it);
    }
  }
  bool operator==(const HTensor3& o) const { return p == o.p && t == o.t; }
};

// The algebra context: owns the modulus, the binomial cache, and the memo
// table of straightened monomial products.  Elements are plain values; all
// structure maps live here.
class Hopf {
 public:
  explicit Hopf(uint32_t p);

  uint32_t p() const { return p_; }
  const BinomTable& binomTable() const { return binom_; }

  HElement zero() const { return HElement(p_); }
  HElement one() const { return mono(0, 0, 0); }
  HElement mono(uint32_t i, uint32_t j, uint32_t k, long long c = 1) const;

  // product with straightening into the PBW basis (memoized per monomial pair)
  HElement product(const HElement& a, const HElement& b) const;
  HElement monoProduct(HMono a, HMono b) const;
  // reference into the memo table, valid for the lifetime of this context;
  // requires every exponent to fit the memo key (< 1024)
  const HElement& monoProductRef(HMono a, HMono b) const;

  HTensor coproduct(const HElement& a) const;
  Fp counit(const HElement& a) const;

  // anti-automorphism swapping raising and lowering (fixes the Cartan powers)
  HElement theta(const HElement& a) const;
  // automorphism from the Lie-level map that also negates the Cartan element
  HElement sigma(const HElement& a) const;

  // tensor-square helpers
  HTensor tensorProduct(const HTensor& a, const HTensor& b) const;
  HTensor3 coproductLeft(const HTensor& a) const;   // (Delta x id)
  HTensor3 coproductRight(const HTensor& a) const;  // (id x Delta)
  HElement collapseCounitLeft(const HTensor& a) const;
  HElement collapseCounitRight(const HTensor& a) const;

  // text syntax: terms like "D^(1) H^(2) E^(1)" with integer coefficients,
  // joined by + and -; factors may appear in any order and are multiplied out
  HElement parse(const std::string& text) const;
  static std::string print(const HElement& a, bool symmetric = true);

 private:
  struct Block {
    uint8_t type;  // 0 = D, 1 = H, 2 = E
    uint32_t n;
  };
  using Word = std::vector<Block>;

  void normalizeInto(Word w, uint32_t c, HElement& out) const;
  HElement straightenPair(HMono a, HMono b) const;
  const HElement& memoProduct(HMono a, HMono b, uint64_t key) const;

  uint32_t p_;
  BinomTable binom_;
  mutable std::mutex memoMu_;
  mutable std::unordered_map<uint64_t, HElement> memo_;
};

}  // namespace modva
