#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "modva/hopf.hpp"
#include "modva/lie.hpp"

namespace modva {

// One mode in a PBW word: x_gen(n) for the affinization, L_n for Virasoro
// (gen fixed at 0 there).  n < 0 creates, and a mode sits in degree -n.
struct PbwMode {
  long long n = 0;
  int gen = 0;
  auto operator<=>(const PbwMode&) const = default;
};

// A normal-ordered word of creation modes applied to the vacuum.  Canonical
// order: degrees non-increasing left to right, ties broken by ascending
// generator index.  The empty word is the vacuum itself.
struct PbwWord {
  std::vector<PbwMode> modes;

  long long degree() const {
    long long d = 0;
    for (auto& m : modes) d -= m.n;
    return d;
  }
  bool operator==(const PbwWord&) const = default;
  bool operator<(const PbwWord& o) const {
    long long da = degree(), db = o.degree();
    if (da != db) return da < db;
    return modes < o.modes;
  }
};

// sparse vector in the carrier, keyed by canonical words
class GradedVector {
 public:
  explicit GradedVector(uint32_t p) : p_(p) {}

  uint32_t p() const { return p_; }
  const std::map<PbwWord, uint32_t>& terms() const { return t_; }
  bool isZero() const { return t_.empty(); }

  uint32_t coeff(const PbwWord& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? 0u : it->second;
  }

  void add(const PbwWord& w, uint32_t c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(w, c);
    if (!fresh) {
      it->second = addMod(it->second, c, p_);
      if (it->second == 0) t_.erase(it);
    }
  }

  GradedVector operator+(const GradedVector& o) const {
    GradedVector r = *this;
    for (auto& [w, c] : o.t_) r.add(w, c);
    return r;
  }
  GradedVector operator-(const GradedVector& o) const {
    GradedVector r = *this;
    for (auto& [w, c] : o.t_) r.add(w, negMod(c, p_));
    return r;
  }
  GradedVector scaled(long long s) const {
    GradedVector r(p_);
    uint32_t sc = normMod(s, p_);
    for (auto& [w, c] : t_) r.add(w, mulMod(c, sc, p_));
    return r;
  }

  bool operator==(const GradedVector& o) const { return p_ == o.p_ && t_ == o.t_; }
  bool operator!=(const GradedVector& o) const { return !(*this == o); }

  bool homogeneous(long long* deg = nullptr) const {
    if (t_.empty()) {
      if (deg) *deg = 0;
      return true;
    }
    long long d = t_.begin()->first.degree();
    for (auto& [w, c] : t_)
      if (w.degree() != d) return false;
    if (deg) *deg = d;
    return true;
  }

  long long maxDegree() const {
    long long d = 0;
    for (auto& [w, c] : t_) d = std::max(d, w.degree());
    return d;
  }

  GradedVector slice(long long degree) const {
    GradedVector r(p_);
    for (auto& [w, c] : t_)
      if (w.degree() == degree) r.add(w, c);
    return r;
  }

 private:
  uint32_t p_;
  std::map<PbwWord, uint32_t> t_;
};

// an operation asked for a degree beyond the truncation window
class CarrierOverflow : public std::runtime_error {
 public:
  explicit CarrierOverflow(const std::string& what) : std::runtime_error(what) {}
};

enum class CarrierKind { Affine, Virasoro };

// Truncated vacuum module carrier: the graded slices of the level-l
// affinization vacuum module or the central-charge-c Virasoro vacuum module,
// up to degree N.  Operations whose declared result window pokes above N
// throw CarrierOverflow; intermediate steps may roam a little higher, since
// bases per degree are enumerated lazily.
class Carrier {
 public:
  // affine carrier over a validated Lie spec
  Carrier(LieSpec spec, long long level, int N);
  // Virasoro carrier
  Carrier(uint32_t p, long long charge, int N);

  CarrierKind kind() const { return kind_; }
  uint32_t p() const { return p_; }
  int truncation() const { return N_; }
  const LieSpec& lie() const { return lie_; }
  uint32_t centralValue() const { return central_; }  // level or charge, as a residue
  int numGens() const { return kind_ == CarrierKind::Affine ? static_cast<int>(lie_.dim()) : 1; }
  // conformal-style weight of the generator states (1 for affine, 2 for Virasoro)
  long long genWeight() const { return kind_ == CarrierKind::Affine ? 1 : 2; }
  // does x(n) kill the vacuum?
  bool annihilates(long long n) const { return kind_ == CarrierKind::Affine ? n >= 0 : n >= -1; }

  GradedVector zero() const { return GradedVector(p_); }
  GradedVector vacuum() const;
  // the degree-(wt) generator state: a(-1)|0> or L_{ -2}|0>
  GradedVector genState(int gen) const;

  const std::vector<PbwWord>& basis(long long degree) const;
  long long dim(long long degree) const { return static_cast<long long>(basis(degree).size()); }

  // apply arbitrary mode words and straighten into the canonical basis;
  // the whole word is applied to the vacuum (leftmost mode acts last)
  GradedVector normalOrderWord(const std::vector<PbwMode>& modes, long long coeff = 1) const;

  // single Lie mode x_gen(n) applied to v
  GradedVector applyMode(int gen, long long n, const GradedVector& v) const;

  // vertex-operator mode of the generator state: index m shifts degree by
  // wt - 1 - m (affine a_m = a(m); Virasoro omega_m = L_{m-1})
  GradedVector generatorMode(int gen, long long m, const GradedVector& v) const;

  // mode (v)_m of an arbitrary state, through the iterate expansion
  GradedVector compositeMode(const GradedVector& v, long long m, const GradedVector& w) const;

  // divided-power family action, Leibniz-split across the word factors
  GradedVector hAction(HFam f, long long r, const GradedVector& v) const;

  // action of a full Hopf-algebra element: each PBW monomial D^(i)H^(j)E^(k)
  // acts as the composite of the three families, rightmost first
  GradedVector hActionVector(const HElement& a, const GradedVector& v) const;

  std::string wordStr(const PbwWord& w) const;
  std::string str(const GradedVector& v, bool symmetric = true) const;

 private:
  GradedVector applyModeWord(int gen, long long n, const PbwWord& w) const;  // memoized
  GradedVector normalOrderRaw(const std::vector<PbwMode>& modes, uint32_t coeff) const;
  GradedVector compositeWordMode(const PbwWord& u, long long m, const PbwWord& w) const;  // memoized
  ModeElement bracket(const PbwMode& x, const PbwMode& y) const;
  ModeElement hActionMode(HFam f, long long r, const PbwMode& x) const;
  void enforceWindow(const GradedVector& v, const char* op) const;

  CarrierKind kind_;
  uint32_t p_;
  LieSpec lie_;  // affine only; empty otherwise
  uint32_t central_;
  int N_;

  mutable std::mutex mu_;
  mutable std::map<long long, std::vector<PbwWord>> basisCache_;
  mutable std::map<std::tuple<int, long long, PbwWord>, GradedVector> applyMemo_;
  mutable std::map<std::tuple<PbwWord, long long, PbwWord>, GradedVector> compositeMemo_;
};

}  // namespace modva
