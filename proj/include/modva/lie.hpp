#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "modva/binom.hpp"
#include "modva/fp.hpp"

#include "json.hpp"

namespace modva {

// Finite-dimensional Lie algebra data over F_p: basis names, structure
// constants and a symmetric invariant bilinear form, all stored dense (the
// algebras in scope have a handful of basis vectors).
struct LieSpec {
  uint32_t p = 0;
  std::vector<std::string> basis;
  // bracket[a][b] = coefficient vector of [basis_a, basis_b]
  std::vector<std::vector<std::vector<uint32_t>>> bracket;
  std::vector<std::vector<uint32_t>> form;

  size_t dim() const { return basis.size(); }
  uint32_t structure(size_t a, size_t b, size_t d) const { return bracket[a][b][d]; }
};

// Validation failure carrying the violated axiom and a witness triple of
// basis indices (unused slots are -1).
class LieValidationError : public std::runtime_error {
 public:
  LieValidationError(std::string axiom_, std::array<int, 3> witness_, const std::string& detail)
      : std::runtime_error("lie spec violates " + axiom_ + " at (" + witnessStr(witness_) + "): " + detail),
        axiom(std::move(axiom_)),
        witness(witness_) {}

  std::string axiom;
  std::array<int, 3> witness;

 private:
  static std::string witnessStr(const std::array<int, 3>& w) {
    std::string s;
    for (int v : w) {
      if (v < 0) continue;
      if (!s.empty()) s += ",";
      s += std::to_string(v);
    }
    return s;
  }
};

// throws LieValidationError; checks shape, antisymmetry, Jacobi, form
// symmetry and form invariance over all basis triples
void validateLieSpec(const LieSpec& spec);

LieSpec sl2Spec(uint32_t p);
LieSpec abelian1Spec(uint32_t p);

// JSON layout: {"p": int, "basis": [names...],
//               "brackets": [[a, b, d, coeff], ...],   // [x_a, x_b] += coeff x_d
//               "form": [[...], ...]}
// Each brackets entry also installs the antisymmetric counterpart, so only
// one orientation per pair is listed.  overrideP, when set, must match the
// file's "p" if both are present.
LieSpec lieSpecFromJson(const nlohmann::json& j, std::optional<uint32_t> overrideP = std::nullopt);
nlohmann::json lieSpecToJson(const LieSpec& spec);

// named builtin or a path to a JSON file
LieSpec resolveLieSpec(const std::string& nameOrPath, std::optional<uint32_t> overrideP = std::nullopt);

// ---- abstract modes --------------------------------------------------------

// A linear combination of modes x_gen(n) plus a symbolic central term.  For
// the affinization the central element is k and n ranges over Z; for the
// Virasoro algebra gen is always 0, the mode is L_n and the central element
// is c.  The central stays symbolic here; vacuum modules substitute their
// level for it.
class ModeElement {
 public:
  using Key = std::pair<int, long long>;  // (generator index, mode index)

  explicit ModeElement(uint32_t p) : p_(p) {}

  uint32_t p() const { return p_; }
  const std::map<Key, uint32_t>& terms() const { return t_; }
  uint32_t central() const { return central_; }
  bool isZero() const { return t_.empty() && central_ == 0; }

  void add(int gen, long long n, uint32_t c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(Key{gen, n}, c);
    if (!fresh) {
      it->second = addMod(it->second, c, p_);
      if (it->second == 0) t_.erase(it);
    }
  }
  void addCentral(uint32_t c) { central_ = addMod(central_, c, p_); }

  ModeElement operator+(const ModeElement& o) const {
    ModeElement r = *this;
    for (auto& [k, c] : o.t_) r.add(k.first, k.second, c);
    r.addCentral(o.central_);
    return r;
  }
  ModeElement operator-(const ModeElement& o) const {
    ModeElement r = *this;
    for (auto& [k, c] : o.t_) r.add(k.first, k.second, negMod(c, p_));
    r.addCentral(negMod(o.central_, p_));
    return r;
  }
  ModeElement scaled(long long s) const {
    ModeElement r(p_);
    uint32_t sc = normMod(s, p_);
    for (auto& [k, c] : t_) r.add(k.first, k.second, mulMod(c, sc, p_));
    r.central_ = mulMod(central_, sc, p_);
    return r;
  }

  bool operator==(const ModeElement& o) const {
    return p_ == o.p_ && central_ == o.central_ && t_ == o.t_;
  }
  bool operator!=(const ModeElement& o) const { return !(*this == o); }

 private:
  uint32_t p_;
  std::map<Key, uint32_t> t_;
  uint32_t central_ = 0;
};

// [a(m), b(n)] = [a,b](m+n) + m <a,b> delta_{m+n,0} k
ModeElement affineBracket(const LieSpec& spec, int ga, long long m, int gb, long long n);

// [L_m, L_n] = (m-n) L_{m+n} + binomial(m+1, 3)/2 delta_{m+n,0} c
ModeElement virasoroBracket(uint32_t p, long long m, long long n);

// divided-power generator families of the Hopf algebra acting on modes
enum class HFam { Lower, Diag, Raise };  // D^(r), H^(r), E^(r)

// affine: D^(r) a(n) = (-1)^r binom(n,r) a(n-r), H^(r) a(n) = binom(2n,r) a(n),
//         E^(r) a(n) = binom(-n,r) a(n+r); the central scales by delta_{r,0}
ModeElement hActionAffineMode(uint32_t p, HFam f, long long r, int gen, long long n);

// Virasoro: D^(r) L_n = (-1)^r binom(n+1,r) L_{n-r}, H^(r) L_n = binom(2n,r) L_n,
//           E^(r) L_n = binom(-n+1,r) L_{n+r}; central again delta_{r,0}
ModeElement hActionVirMode(uint32_t p, HFam f, long long r, long long n);

// action extended linearly, including the delta_{r,0} central part
ModeElement hActionAffine(const LieSpec& spec, HFam f, long long r, const ModeElement& x);
ModeElement hActionVir(uint32_t p, HFam f, long long r, const ModeElement& x);

}  // namespace modva
