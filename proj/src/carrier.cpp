#include "modva/carrier.hpp"

#include <algorithm>
#include <sstream>

namespace modva {

namespace {

// May x sit immediately left of y in a canonical word?  Degrees
// non-increasing, equal degrees resolved by generator index.
bool orderedPair(const PbwMode& x, const PbwMode& y) {
  long long sx = -x.n, sy = -y.n;
  if (sx != sy) return sx > sy;
  return x.gen <= y.gen;
}

}  // namespace

Carrier::Carrier(LieSpec spec, long long level, int N)
    : kind_(CarrierKind::Affine),
      p_(spec.p),
      lie_(std::move(spec)),
      central_(0),
      N_(N) {
  checkModulus(p_);
  validateLieSpec(lie_);
  if (N < 0) throw std::invalid_argument("carrier truncation must be nonnegative");
  central_ = normMod(level, p_);
}

Carrier::Carrier(uint32_t p, long long charge, int N)
    : kind_(CarrierKind::Virasoro), p_(p), central_(0), N_(N) {
  checkModulus(p_);
  if (N < 0) throw std::invalid_argument("carrier truncation must be nonnegative");
  central_ = normMod(charge, p_);
}

GradedVector Carrier::vacuum() const {
  GradedVector v(p_);
  v.add(PbwWord{}, 1);
  return v;
}

GradedVector Carrier::genState(int gen) const {
  if (gen < 0 || gen >= numGens()) throw std::out_of_range("generator index out of range");
  long long wt = genWeight();
  if (wt > N_)
    throw CarrierOverflow("generator state lives in degree " + std::to_string(wt) +
                          ", beyond truncation " + std::to_string(N_));
  GradedVector v(p_);
  v.add(PbwWord{{PbwMode{-wt, gen}}}, 1);
  return v;
}

const std::vector<PbwWord>& Carrier::basis(long long degree) const {
  if (degree < 0 || degree > N_)
    throw CarrierOverflow("basis degree " + std::to_string(degree) + " outside window [0, " +
                          std::to_string(N_) + "]");
  std::lock_guard<std::mutex> lock(mu_);
  auto it = basisCache_.find(degree);
  if (it != basisCache_.end()) return it->second;

  // Enumerate canonical words of the given total degree in ascending word
  // order: choose modes left to right, degree of each step at most the
  // previous one (generator index at least the previous one on ties).
  long long minS = kind_ == CarrierKind::Affine ? 1 : 2;
  int gens = numGens();
  std::vector<PbwWord> out;
  std::vector<PbwMode> cur;
  auto rec = [&](auto&& self, long long rem) -> void {
    if (rem == 0) {
      out.push_back(PbwWord{cur});
      return;
    }
    long long sMax = cur.empty() ? rem : std::min<long long>(rem, -cur.back().n);
    for (long long s = sMax; s >= minS; --s) {
      if (rem - s != 0 && rem - s < minS) continue;
      int g0 = (!cur.empty() && -cur.back().n == s) ? cur.back().gen : 0;
      for (int g = g0; g < gens; ++g) {
        cur.push_back(PbwMode{-s, g});
        self(self, rem - s);
        cur.pop_back();
      }
    }
  };
  rec(rec, degree);
  auto [slot, fresh] = basisCache_.emplace(degree, std::move(out));
  (void)fresh;
  return slot->second;
}

ModeElement Carrier::bracket(const PbwMode& x, const PbwMode& y) const {
  return kind_ == CarrierKind::Affine ? affineBracket(lie_, x.gen, x.n, y.gen, y.n)
                                      : virasoroBracket(p_, x.n, y.n);
}

ModeElement Carrier::hActionMode(HFam f, long long r, const PbwMode& x) const {
  return kind_ == CarrierKind::Affine ? hActionAffineMode(p_, f, r, x.gen, x.n)
                                      : hActionVirMode(p_, f, r, x.n);
}

// Straighten one mode into an already-canonical word.  Memoized; this is the
// workhorse every higher-level operation funnels through.
GradedVector Carrier::applyModeWord(int gen, long long n, const PbwWord& w) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = applyMemo_.find({gen, n, w});
    if (it != applyMemo_.end()) return it->second;
  }

  GradedVector out(p_);
  PbwMode x{n, gen};
  if (w.modes.empty()) {
    if (!annihilates(n)) out.add(PbwWord{{x}}, 1);
  } else if (orderedPair(x, w.modes.front())) {
    PbwWord r;
    r.modes.reserve(w.modes.size() + 1);
    r.modes.push_back(x);
    r.modes.insert(r.modes.end(), w.modes.begin(), w.modes.end());
    out.add(r, 1);
  } else {
    // x y tail = y x tail + [x, y] tail
    PbwMode y = w.modes.front();
    PbwWord tail{std::vector<PbwMode>(w.modes.begin() + 1, w.modes.end())};
    GradedVector xt = applyModeWord(gen, n, tail);
    for (auto& [w2, c2] : xt.terms()) {
      GradedVector yr = applyModeWord(y.gen, y.n, w2);
      for (auto& [w3, c3] : yr.terms()) out.add(w3, mulMod(c2, c3, p_));
    }
    ModeElement br = bracket(x, y);
    for (auto& [key, bc] : br.terms()) {
      GradedVector zr = applyModeWord(key.first, key.second, tail);
      for (auto& [w3, c3] : zr.terms()) out.add(w3, mulMod(bc, c3, p_));
    }
    // the symbolic central acts as the fixed level / charge
    uint32_t cc = mulMod(br.central(), central_, p_);
    if (cc != 0) out.add(tail, cc);
  }

  std::lock_guard<std::mutex> lock(mu_);
  auto [it, fresh] = applyMemo_.emplace(std::make_tuple(gen, n, w), std::move(out));
  (void)fresh;
  return it->second;
}

GradedVector Carrier::normalOrderRaw(const std::vector<PbwMode>& modes, uint32_t coeff) const {
  GradedVector acc(p_);
  acc.add(PbwWord{}, coeff);
  // rightmost mode hits the vacuum first
  for (auto it = modes.rbegin(); it != modes.rend(); ++it) {
    GradedVector next(p_);
    for (auto& [w, c] : acc.terms()) {
      GradedVector r = applyModeWord(it->gen, it->n, w);
      for (auto& [w2, c2] : r.terms()) next.add(w2, mulMod(c, c2, p_));
    }
    acc = std::move(next);
    if (acc.isZero()) break;
  }
  return acc;
}

GradedVector Carrier::normalOrderWord(const std::vector<PbwMode>& modes, long long coeff) const {
  long long total = 0;
  for (auto& m : modes) {
    if (m.gen < 0 || m.gen >= numGens()) throw std::out_of_range("generator index out of range");
    total -= m.n;
  }
  if (total > N_)
    throw CarrierOverflow("word of degree " + std::to_string(total) + " exceeds truncation " +
                          std::to_string(N_));
  return normalOrderRaw(modes, normMod(coeff, p_));
}

GradedVector Carrier::applyMode(int gen, long long n, const GradedVector& v) const {
  if (gen < 0 || gen >= numGens()) throw std::out_of_range("generator index out of range");
  if (v.p() != p_) throw std::invalid_argument("vector modulus does not match carrier");
  GradedVector out(p_);
  for (auto& [w, c] : v.terms()) {
    long long target = w.degree() - n;
    if (target > N_)
      throw CarrierOverflow("mode application lands in degree " + std::to_string(target) +
                            ", beyond truncation " + std::to_string(N_));
    GradedVector r = applyModeWord(gen, n, w);
    for (auto& [w2, c2] : r.terms()) out.add(w2, mulMod(c, c2, p_));
  }
  return out;
}

GradedVector Carrier::generatorMode(int gen, long long m, const GradedVector& v) const {
  // vertex-mode index m; the underlying mode is a(m) resp. L_{m-1}
  long long lieIndex = kind_ == CarrierKind::Affine ? m : m - 1;
  return applyMode(gen, lieIndex, v);
}

// (u)_m w for a canonical word u, through the iterate expansion
//   (g_n u')_m = sum_i (-1)^i binom(n, i)
//                [ g_{n-i} (u')_{m+i}  -  (-1)^n (u')_{n+m-i} g_i ]
// with n the vertex-mode index of the leading factor of u.
GradedVector Carrier::compositeWordMode(const PbwWord& u, long long m, const PbwWord& w) const {
  if (u.modes.empty()) {
    GradedVector r(p_);
    if (m == -1) r.add(w, 1);
    return r;
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = compositeMemo_.find({u, m, w});
    if (it != compositeMemo_.end()) return it->second;
  }

  GradedVector out(p_);
  long long wt = genWeight();
  long long dw = w.degree();
  long long target = u.degree() + dw - m - 1;
  if (target >= 0) {
    PbwMode x = u.modes.front();
    PbwWord up{std::vector<PbwMode>(u.modes.begin() + 1, u.modes.end())};
    long long dup = up.degree();
    // vertex index of the leading mode (lie index x.n; they differ by wt - 1)
    long long n = x.n + wt - 1;
    uint32_t sn = signPow(n, p_);
    long long iMax = std::max(dup + dw - m - 1, dw + wt - 1);
    for (long long i = 0; i <= iMax; ++i) {
      uint32_t coef = mulMod(signPow(i, p_), binomMod(n, i, p_), p_);
      if (coef == 0) continue;
      if (dup + dw - m - i - 1 >= 0) {
        GradedVector inner = compositeWordMode(up, m + i, w);
        for (auto& [wi, ci] : inner.terms()) {
          GradedVector outer = applyModeWord(x.gen, x.n - i, wi);
          uint32_t cc = mulMod(coef, ci, p_);
          for (auto& [wo, co] : outer.terms()) out.add(wo, mulMod(cc, co, p_));
        }
      }
      if (dw + wt - 1 - i >= 0) {
        // lie index of the vertex mode g_i
        GradedVector gw = applyModeWord(x.gen, i - (wt - 1), w);
        uint32_t cc = mulMod(coef, mulMod(sn, p_ - 1u, p_), p_);  // times -(-1)^n
        for (auto& [wg, cg] : gw.terms()) {
          GradedVector inner = compositeWordMode(up, n + m - i, wg);
          uint32_t cc2 = mulMod(cc, cg, p_);
          for (auto& [wo, co] : inner.terms()) out.add(wo, mulMod(cc2, co, p_));
        }
      }
    }
  }

  std::lock_guard<std::mutex> lock(mu_);
  auto [it, fresh] = compositeMemo_.emplace(std::make_tuple(u, m, w), std::move(out));
  (void)fresh;
  return it->second;
}

GradedVector Carrier::compositeMode(const GradedVector& v, long long m, const GradedVector& w) const {
  if (v.p() != p_ || w.p() != p_) throw std::invalid_argument("vector modulus does not match carrier");
  GradedVector out(p_);
  for (auto& [u, cu] : v.terms()) {
    for (auto& [ww, cw] : w.terms()) {
      long long target = u.degree() + ww.degree() - m - 1;
      if (target > N_)
        throw CarrierOverflow("composite mode lands in degree " + std::to_string(target) +
                              ", beyond truncation " + std::to_string(N_));
      GradedVector r = compositeWordMode(u, m, ww);
      uint32_t cc = mulMod(cu, cw, p_);
      for (auto& [wo, co] : r.terms()) out.add(wo, mulMod(cc, co, p_));
    }
  }
  return out;
}

GradedVector Carrier::hAction(HFam f, long long r, const GradedVector& v) const {
  if (r < 0) throw std::invalid_argument("divided-power order must be nonnegative");
  if (v.p() != p_) throw std::invalid_argument("vector modulus does not match carrier");
  GradedVector out(p_);
  for (auto& [w, cw] : v.terms()) {
    long long target = w.degree() + (f == HFam::Lower ? r : f == HFam::Raise ? -r : 0);
    if (target > N_)
      throw CarrierOverflow("divided-power action lands in degree " + std::to_string(target) +
                            ", beyond truncation " + std::to_string(N_));
    // split the order r over the word factors (the vacuum absorbs only r = 0)
    auto rec = [&](auto&& self, size_t idx, long long budget) -> GradedVector {
      GradedVector acc(p_);
      if (idx == w.modes.size()) {
        if (budget == 0) acc.add(PbwWord{}, 1);
        return acc;
      }
      for (long long ri = 0; ri <= budget; ++ri) {
        ModeElement me = hActionMode(f, ri, w.modes[idx]);
        if (me.isZero()) continue;
        GradedVector suffix = self(self, idx + 1, budget - ri);
        for (auto& [key, mc] : me.terms()) {
          for (auto& [ws, cs] : suffix.terms()) {
            GradedVector stepped = applyModeWord(key.first, key.second, ws);
            uint32_t cc = mulMod(mc, cs, p_);
            for (auto& [wo, co] : stepped.terms()) acc.add(wo, mulMod(cc, co, p_));
          }
        }
      }
      return acc;
    };
    GradedVector r1 = rec(rec, 0, r);
    for (auto& [wo, co] : r1.terms()) out.add(wo, mulMod(cw, co, p_));
  }
  return out;
}

GradedVector Carrier::hActionVector(const HElement& a, const GradedVector& v) const {
  if (a.p() != p_ || v.p() != p_) throw std::invalid_argument("modulus mismatch with carrier");
  GradedVector out(p_);
  for (auto& [m, c] : a.terms()) {
    GradedVector r = hAction(HFam::Raise, m.k, v);
    r = hAction(HFam::Diag, m.j, r);
    r = hAction(HFam::Lower, m.i, r);
    for (auto& [w, cw] : r.terms()) out.add(w, mulMod(c, cw, p_));
  }
  return out;
}

std::string Carrier::wordStr(const PbwWord& w) const {
  if (w.modes.empty()) return "1";
  std::string s;
  for (auto& m : w.modes) {
    s += kind_ == CarrierKind::Affine ? lie_.basis[static_cast<size_t>(m.gen)] : std::string("L");
    s += "(" + std::to_string(m.n) + ") ";
  }
  return s + "1";
}

std::string Carrier::str(const GradedVector& v, bool symmetric) const {
  if (v.isZero()) return "0";
  std::string s;
  bool first = true;
  for (auto& [w, c] : v.terms()) {
    long long val = symmetric ? symMod(c, p_) : static_cast<long long>(c);
    bool neg = val < 0;
    long long mag = neg ? -val : val;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (mag != 1) s += std::to_string(mag) + " ";
    s += wordStr(w);
  }
  return s;
}

}  // namespace modva
