#include "modva/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <thread>

#include "modva/forms.hpp"
#include "modva/hopf.hpp"
#include "modva/laurent.hpp"
#include "modva/lie.hpp"
#include "modva/linalg.hpp"

namespace modva {

namespace {

// ---- check plumbing --------------------------------------------------------

struct CheckOutcome {
  long long attempted = 0;
  std::vector<FailureWitness> failures;
};

using Check = std::function<CheckOutcome()>;

// Runs every check and merges outcomes in list order, so the report is
// independent of the worker count.  Checks only read shared carriers (their
// caches are internally synchronized).
void executeChecks(std::vector<Check>& checks, int workers, SuiteReport& rep) {
  size_t n = checks.size();
  std::vector<CheckOutcome> out(n);
  int w = std::max(1, workers);
  w = static_cast<int>(std::min<size_t>(static_cast<size_t>(w), n == 0 ? 1 : n));
  if (w <= 1) {
    for (size_t i = 0; i < n; ++i) out[i] = checks[i]();
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errs(static_cast<size_t>(w));
    std::vector<std::thread> pool;
    for (int t = 0; t < w; ++t)
      pool.emplace_back([&, t] {
        try {
          for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) out[i] = checks[i]();
        } catch (...) {
          errs[static_cast<size_t>(t)] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }
  for (auto& o : out) {
    rep.attempted += o.attempted;
    for (auto& f : o.failures) rep.failures.push_back(f);
  }
  rep.passed = rep.attempted - static_cast<long long>(rep.failures.size());
}

std::string fmtMono(HMono m) {
  std::ostringstream os;
  os << "D^(" << m.i << ")H^(" << m.j << ")E^(" << m.k << ")";
  return os.str();
}

const char* famName(HFam f) {
  switch (f) {
    case HFam::Lower: return "D";
    case HFam::Diag: return "H";
    default: return "E";
  }
}

std::unique_ptr<Carrier> buildCarrier(const SuiteParams& P, int truncation) {
  return makeCarrier(P.carrier, P.p, P.central, truncation);
}

void validateParams(const SuiteParams& P) {
  checkModulus(P.p);
  if (P.maxDegree < 0) throw std::invalid_argument("maxDegree must be nonnegative");
  if (P.bound < 0) throw std::invalid_argument("bound must be nonnegative");
}

GradedVector wordState(const Carrier& c, const PbwWord& w) {
  GradedVector v = c.zero();
  v.add(w, 1);
  return v;
}

}  // namespace

// ---- truncated operator-series engine --------------------------------------

namespace {

OpSeries applyOne(const Carrier& c, const OpFactor& f, const OpSeries& st, const TruncOrders& t);

void accumulate(OpSeries& out, std::pair<int, int> key, const GradedVector& v, uint32_t scale,
                uint32_t p) {
  if (scale == 0 || v.isZero()) return;
  auto it = out.try_emplace(key, GradedVector(p)).first;
  for (auto& [w, cw] : v.terms()) it->second.add(w, mulMod(cw, scale, p));
}

// divided-power action with out-of-window degree slices dropped instead of
// thrown: such slices only feed coefficients beyond the comparable range
GradedVector clippedHAction(const Carrier& c, HFam f, long long n, const GradedVector& v) {
  GradedVector out = c.zero();
  long long N = c.truncation();
  for (long long d = 0; d <= N; ++d) {
    GradedVector s = v.slice(d);
    if (s.isZero()) continue;
    if (f == HFam::Lower && d + n > N) continue;
    GradedVector img = c.hAction(f, n, s);
    for (auto& [w, cw] : img.terms()) out.add(w, cw);
  }
  return out;
}

OpSeries applyExp(const Carrier& c, HFam fam, const TruncSeries& S, const OpSeries& st,
                  const TruncOrders& t) {
  if (S.constantTerm() != 0)
    throw std::invalid_argument("exp factor needs a zero-constant-term series");
  uint32_t p = c.p();
  OpSeries out;
  TruncSeries Spow = TruncSeries::one(p, 2, S.cutoff());
  for (long long n = 0; !Spow.isZero(); ++n) {
    for (auto& [key, v] : st) {
      GradedVector hv = n == 0 ? v : clippedHAction(c, fam, n, v);
      if (hv.isZero()) continue;
      for (auto& [ex, cc] : Spow.terms()) {
        std::pair<int, int> nk{key.first + ex[0], key.second + ex[1]};
        if (nk.first > t.zMax || nk.second > t.z0Max) continue;
        accumulate(out, nk, hv, cc, p);
      }
    }
    Spow = Spow * S;
  }
  return out;
}

OpSeries applyDegSeries(const Carrier& c, const OpSeries& st, const TruncOrders& t) {
  // (1 - z z0)^{-2 deg} = sum_k (-z z0)^k H^(k), by the Vandermonde property
  uint32_t p = c.p();
  OpSeries out;
  int kMax = std::min(t.zMax, t.z0Max);
  for (auto& [key, v] : st)
    for (int k = 0; key.first + k <= t.zMax && key.second + k <= t.z0Max; ++k) {
      if (k > kMax) break;
      GradedVector hv = c.hAction(HFam::Diag, k, v);
      accumulate(out, {key.first + k, key.second + k}, hv, signPow(k, p), p);
    }
  return out;
}

OpSeries applyScalar(const Carrier& c, const TruncSeries& S, const OpSeries& st,
                     const TruncOrders& t) {
  uint32_t p = c.p();
  OpSeries out;
  for (auto& [key, v] : st)
    for (auto& [ex, cc] : S.terms()) {
      std::pair<int, int> nk{key.first + ex[0], key.second + ex[1]};
      if (nk.first > t.zMax || nk.second > t.z0Max) continue;
      accumulate(out, nk, v, cc, p);
    }
  return out;
}

OpSeries applyVertex(const Carrier& c, const OpFactor& f, const OpSeries& st,
                     const TruncOrders& t) {
  uint32_t p = c.p();
  long long N = c.truncation();
  OpSeries arg{{{0, 0}, *f.insert}};
  for (auto it = f.insertOps.rbegin(); it != f.insertOps.rend(); ++it)
    arg = applyOne(c, *it, arg, t);
  OpSeries out;
  for (auto& [ka, va] : arg)
    for (long long dv = 0; dv <= N; ++dv) {
      GradedVector vs = va.slice(dv);
      if (vs.isZero()) continue;
      for (auto& [kw, u] : st)
        for (long long du = 0; du <= N; ++du) {
          GradedVector us = u.slice(du);
          if (us.isZero()) continue;
          for (long long m = dv + du - 1 - N; m <= dv + du - 1; ++m) {
            GradedVector img = c.compositeMode(vs, m, us);
            if (img.isZero()) continue;
            int base_z = ka.first + kw.first;
            long long base_t = ka.second + kw.second - m - 1;
            if (!f.moebius) {
              if (base_z > t.zMax || base_t > t.z0Max || base_t < t.z0Min) continue;
              accumulate(out, {base_z, static_cast<int>(base_t)}, img, 1 % p, p);
              continue;
            }
            // x^{-m-1} with x = z0/(1 - z z0): multiply by (1 - z z0)^{m+1}
            for (long long i = 0; base_z + i <= t.zMax && base_t + i <= t.z0Max; ++i) {
              long long tt = base_t + i;
              if (tt < t.z0Min) continue;
              uint32_t cc = mulMod(binomMod(m + 1, i, p), signPow(i, p), p);
              accumulate(out, {static_cast<int>(base_z + i), static_cast<int>(tt)}, img, cc, p);
            }
          }
        }
    }
  return out;
}

// single-factor application, also reachable from applyVertex's recursion
OpSeries applyOne(const Carrier& c, const OpFactor& f, const OpSeries& st, const TruncOrders& t) {
  switch (f.kind) {
    case OpFactor::Kind::Exp: return applyExp(c, f.fam, *f.coeff, st, t);
    case OpFactor::Kind::DegSeries: return applyDegSeries(c, st, t);
    case OpFactor::Kind::Scalar: return applyScalar(c, *f.coeff, st, t);
    default: return applyVertex(c, f, st, t);
  }
}

}  // namespace

OpSeries evalOpSeries(const Carrier& c, const std::vector<OpFactor>& ops, const GradedVector& w,
                      const TruncOrders& t) {
  OpSeries st{{{0, 0}, w}};
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) st = applyOne(c, *it, st, t);
  return st;
}

std::optional<FailureWitness> verifyTruncatedIdentity(const Carrier& c,
                                                      const std::vector<OpFactor>& lhs,
                                                      const std::vector<OpFactor>& rhs,
                                                      const TruncOrders& t, long long degreeMax,
                                                      long long insertDegree,
                                                      long long* attempted) {
  long long N = c.truncation();
  for (long long d = 0; d <= degreeMax; ++d) {
    const std::vector<PbwWord>& basis = c.basis(d);
    // z0 exponents above this may be clipped by the carrier window
    long long z0Hi = std::min<long long>(t.z0Max, N - d - insertDegree);
    for (size_t bi = 0; bi < basis.size(); ++bi) {
      GradedVector w = wordState(c, basis[bi]);
      OpSeries L = evalOpSeries(c, lhs, w, t);
      OpSeries R = evalOpSeries(c, rhs, w, t);
      std::map<std::pair<int, int>, char> keys;
      for (auto& [k, v] : L)
        if (!v.isZero()) keys[k] = 1;
      for (auto& [k, v] : R)
        if (!v.isZero()) keys[k] = 1;
      for (auto& [k, mark] : keys) {
        (void)mark;
        if (k.second > z0Hi) continue;
        if (attempted) ++*attempted;
        auto li = L.find(k), ri = R.find(k);
        const GradedVector* lv = li == L.end() ? nullptr : &li->second;
        const GradedVector* rv = ri == R.end() ? nullptr : &ri->second;
        bool eq;
        if (lv && rv) eq = *lv == *rv;
        else if (lv) eq = lv->isZero();
        else eq = rv->isZero();
        if (!eq) {
          FailureWitness fw;
          std::ostringstream in;
          in << "degree=" << d << " basis=" << c.wordStr(basis[bi]) << " z^" << k.first
             << " z0^" << k.second;
          fw.inputs = in.str();
          fw.lhs = lv ? c.str(*lv) : "0";
          fw.rhs = rv ? c.str(*rv) : "0";
          return fw;
        }
      }
    }
  }
  return std::nullopt;
}

// ---- individual suites -----------------------------------------------------

namespace {

// hopf-axioms: associativity over all monomial triples, coassociativity and
// the counit laws per monomial, coproduct multiplicativity / theta / sigma /
// counit over all pairs, everything with exponents <= bound, plus seeded
// random triples with exponents up to 2*bound
// flat accumulator over exponent boxes for Hopf-element expansions
struct DenseHAcc {
  static constexpr uint32_t CAP = 32;
  std::vector<uint32_t> v = std::vector<uint32_t>(CAP * CAP * CAP, 0);
  std::vector<uint32_t> touched;
  bool wide = false;  // an exponent fell outside the box; result unusable

  void addIdx(uint32_t idx, uint32_t c, uint32_t p) {
    uint32_t& slot = v[idx];
    if (slot == 0) touched.push_back(idx);
    slot = addMod(slot, c, p);
  }
  void reset() {
    for (uint32_t idx : touched) v[idx] = 0;
    touched.clear();
    wide = false;
  }
};

constexpr uint32_t kNoSpan = UINT32_MAX;
constexpr uint32_t kWideBox = UINT32_MAX;
constexpr uint32_t kBoxSize = DenseHAcc::CAP * DenseHAcc::CAP * DenseHAcc::CAP;

inline uint32_t boxOf(HMono m) {
  if ((m.i | m.j | m.k) >= DenseHAcc::CAP) return kWideBox;
  return (m.i * DenseHAcc::CAP + m.j) * DenseHAcc::CAP + m.k;
}

bool denseEqual(const DenseHAcc& a, const DenseHAcc& b) {
  for (uint32_t i : a.touched)
    if (a.v[i] != b.v[i]) return false;
  for (uint32_t i : b.touched)
    if (a.v[i] != b.v[i]) return false;
  return true;
}

void suiteHopfAxioms(const SuiteParams& P, SuiteReport& rep) {
  auto hopf = std::make_shared<Hopf>(P.p);
  int b = P.bound;
  auto monos = std::make_shared<std::vector<HMono>>();
  for (uint32_t i = 0; i <= static_cast<uint32_t>(b); ++i)
    for (uint32_t j = 0; j <= static_cast<uint32_t>(b); ++j)
      for (uint32_t k = 0; k <= static_cast<uint32_t>(b); ++k) monos->push_back({i, j, k});
  // pairwise products, computed once up front and shared read-only
  auto prods = std::make_shared<std::vector<std::vector<HElement>>>();
  for (auto a : *monos) {
    std::vector<HElement> row;
    row.reserve(monos->size());
    for (auto b2 : *monos) row.push_back(hopf->monoProduct(a, b2));
    prods->push_back(std::move(row));
  }

  std::vector<Check> checks;
  for (size_t ia = 0; ia < monos->size(); ++ia)
    checks.push_back([=]() {
      CheckOutcome o;
      const Hopf& H = *hopf;
      HMono a = (*monos)[ia];
      HElement ea = H.mono(a.i, a.j, a.k);
      auto fail = [&](const std::string& what, const std::string& l, const std::string& r) {
        o.failures.push_back({what, l, r});
      };

      // unary: coassociativity, counit collapse, theta/sigma involutive
      ++o.attempted;
      if (H.coproductLeft(H.coproduct(ea)) != H.coproductRight(H.coproduct(ea)))
        fail("coassociativity at " + fmtMono(a), "(Delta x id)Delta", "(id x Delta)Delta");
      ++o.attempted;
      if (H.collapseCounitLeft(H.coproduct(ea)) != ea ||
          H.collapseCounitRight(H.coproduct(ea)) != ea)
        fail("counit law at " + fmtMono(a), "(eps x id)Delta", "id");
      ++o.attempted;
      if (H.theta(H.theta(ea)) != ea) fail("theta^2 at " + fmtMono(a), "theta^2", "id");
      ++o.attempted;
      if (H.sigma(H.sigma(ea)) != ea) fail("sigma^2 at " + fmtMono(a), "sigma^2", "id");

      // Flat machinery for the associativity sweep, which is the bulk of the
      // suite.  Both sides expand into exponent boxes through flattened
      // product slices; slices are found by direct indexing (rhs by the box
      // of the varying factor, lhs striped per third factor so the lookups
      // stay cache-resident), no hashing anywhere on the hot path.  Anything
      // outside the box (never hit at desk bounds) falls back to the exact
      // element arithmetic.
      DenseHAcc accL, accR;
      std::vector<std::pair<uint32_t, uint32_t>> spans;  // (begin, end) into arena
      std::vector<std::pair<uint32_t, uint32_t>> arena;  // (box index, coeff)
      std::vector<uint32_t> lhsHeads(monos->size() * kBoxSize, kNoSpan);
      std::vector<uint32_t> rhsHeads(kBoxSize, kNoSpan);
      auto flatten = [&](HMono x, HMono y) {
        uint32_t begin = static_cast<uint32_t>(arena.size());
        for (auto& [m, c] : H.monoProductRef(x, y).terms()) arena.emplace_back(boxOf(m), c);
        spans.emplace_back(begin, static_cast<uint32_t>(arena.size()));
        return static_cast<uint32_t>(spans.size()) - 1;
      };
      struct AbTerm {
        HMono m;
        uint32_t box;
        uint32_t c;
      };
      std::vector<AbTerm> abTerms;

      for (size_t ib = 0; ib < monos->size(); ++ib) {
        HMono bm = (*monos)[ib];
        const HElement& ab = (*prods)[ia][ib];
        HElement eb = H.mono(bm.i, bm.j, bm.k);
        abTerms.clear();
        bool abBoxed = true;
        for (auto& [m1, c1] : ab.terms()) {
          uint32_t bx = boxOf(m1);
          abBoxed = abBoxed && bx != kWideBox;
          abTerms.push_back({m1, bx, c1});
        }
        // associativity across every third factor
        for (size_t ic = 0; ic < monos->size(); ++ic) {
          HMono cm = (*monos)[ic];
          const HElement& bc = (*prods)[ib][ic];
          accL.reset();
          accR.reset();
          bool exact = !abBoxed;
          if (!exact)
            for (auto& t : abTerms) {
              uint32_t& h = lhsHeads[ic * kBoxSize + t.box];
              if (h == kNoSpan) h = flatten(t.m, cm);
              auto [t0, t1] = spans[h];
              for (uint32_t s = t0; s < t1; ++s) {
                auto [idx, c2] = arena[s];
                if (idx == kWideBox)
                  accL.wide = true;
                else
                  accL.addIdx(idx, mulMod(t.c, c2, P.p), P.p);
              }
            }
          if (!exact)
            for (auto& [m1, c1] : bc.terms()) {
              uint32_t bx = boxOf(m1);
              if (bx == kWideBox) {
                exact = true;
                break;
              }
              uint32_t& h = rhsHeads[bx];
              if (h == kNoSpan) h = flatten(a, m1);
              auto [t0, t1] = spans[h];
              for (uint32_t s = t0; s < t1; ++s) {
                auto [idx, c2] = arena[s];
                if (idx == kWideBox)
                  accR.wide = true;
                else
                  accR.addIdx(idx, mulMod(c1, c2, P.p), P.p);
              }
            }
          ++o.attempted;
          bool eq = (exact || accL.wide || accR.wide)
                        ? H.product(ab, H.mono(cm.i, cm.j, cm.k)) == H.product(ea, bc)
                        : denseEqual(accL, accR);
          if (!eq)
            fail("associativity at " + fmtMono(a) + " " + fmtMono(bm) + " " + fmtMono(cm),
                 Hopf::print(H.product(ab, H.mono(cm.i, cm.j, cm.k))),
                 Hopf::print(H.product(ea, bc)));
        }
        // coproduct is an algebra map
        ++o.attempted;
        if (H.coproduct(ab) != H.tensorProduct(H.coproduct(ea), H.coproduct(eb)))
          fail("coproduct multiplicativity at " + fmtMono(a) + " " + fmtMono(bm), "Delta(ab)",
               "Delta(a)Delta(b)");
        // counit is an algebra map
        ++o.attempted;
        if (H.counit(ab).v != mulMod(H.counit(ea).v, H.counit(eb).v, P.p))
          fail("counit multiplicativity at " + fmtMono(a) + " " + fmtMono(bm), "eps(ab)",
               "eps(a)eps(b)");
        // theta reverses, sigma preserves products
        ++o.attempted;
        if (H.theta(ab) != H.product(H.theta(eb), H.theta(ea)))
          fail("theta anti-homomorphism at " + fmtMono(a) + " " + fmtMono(bm), "theta(ab)",
               "theta(b)theta(a)");
        ++o.attempted;
        if (H.sigma(ab) != H.product(H.sigma(ea), H.sigma(eb)))
          fail("sigma homomorphism at " + fmtMono(a) + " " + fmtMono(bm), "sigma(ab)",
               "sigma(a)sigma(b)");
      }
      return o;
    });

  // seeded random triples above the exhaustive bound
  checks.push_back([=]() {
    CheckOutcome o;
    const Hopf& H = *hopf;
    std::mt19937_64 rng(P.seed);
    std::uniform_int_distribution<uint32_t> pick(0, static_cast<uint32_t>(2 * P.bound));
    for (int s = 0; s < 60; ++s) {
      HMono a{pick(rng), pick(rng), pick(rng)};
      HMono bm{pick(rng), pick(rng), pick(rng)};
      HMono cm{pick(rng), pick(rng), pick(rng)};
      HElement ea = H.mono(a.i, a.j, a.k), eb = H.mono(bm.i, bm.j, bm.k),
               ec = H.mono(cm.i, cm.j, cm.k);
      ++o.attempted;
      if (H.product(H.product(ea, eb), ec) != H.product(ea, H.product(eb, ec)))
        o.failures.push_back({"random associativity at " + fmtMono(a) + " " + fmtMono(bm) + " " +
                                  fmtMono(cm),
                              "(ab)c", "a(bc)"});
      ++o.attempted;
      if (H.coproduct(H.product(ea, eb)) !=
          H.tensorProduct(H.coproduct(ea), H.coproduct(eb)))
        o.failures.push_back(
            {"random coproduct multiplicativity at " + fmtMono(a) + " " + fmtMono(bm), "Delta(ab)",
             "Delta(a)Delta(b)"});
    }
    return o;
  });

  executeChecks(checks, P.workers, rep);
}

// module-lie: the bracket is a map of divided-power modules,
// b [u,v] = sum [b' u, b'' v] over the coproduct splits of b
void suiteModuleLie(const SuiteParams& P, SuiteReport& rep) {
  bool vir = P.carrier == "virasoro";
  std::shared_ptr<LieSpec> spec;
  int ngen = 1;
  if (!vir) {
    if (P.carrier.rfind("affine:", 0) != 0)
      throw std::invalid_argument("unknown carrier kind: " + P.carrier);
    spec = std::make_shared<LieSpec>(resolveLieSpec(P.carrier.substr(7), P.p));
    ngen = static_cast<int>(spec->dim());
  }
  uint32_t p = P.p;
  auto bracketLin = [=](const ModeElement& u, const ModeElement& v) {
    ModeElement r(p);
    for (auto& [ku, cu] : u.terms())
      for (auto& [kv, cv] : v.terms()) {
        ModeElement br = vir ? virasoroBracket(p, ku.second, kv.second)
                             : affineBracket(*spec, ku.first, ku.second, kv.first, kv.second);
        r = r + br.scaled(mulMod(cu, cv, p));
      }
    return r;
  };
  auto act = [=](HFam f, long long r, const ModeElement& x) {
    return vir ? hActionVir(p, f, r, x) : hActionAffine(*spec, f, r, x);
  };

  std::vector<Check> checks;
  for (HFam f : {HFam::Lower, HFam::Diag, HFam::Raise})
    for (long long r = 0; r <= P.bound; ++r)
      checks.push_back([=]() {
        CheckOutcome o;
        for (int ga = 0; ga < ngen; ++ga)
          for (int gb = 0; gb < ngen; ++gb)
            for (long long m = -P.bound; m <= P.bound; ++m)
              for (long long n = -P.bound; n <= P.bound; ++n) {
                ModeElement u(p), v(p);
                u.add(ga, m, 1);
                v.add(gb, n, 1);
                ModeElement lhs = act(f, r, bracketLin(u, v));
                ModeElement rhs(p);
                for (long long r1 = 0; r1 <= r; ++r1)
                  rhs = rhs + bracketLin(act(f, r1, u), act(f, r - r1, v));
                ++o.attempted;
                if (lhs != rhs) {
                  std::ostringstream in;
                  in << famName(f) << "^(" << r << ") on [x" << ga << "(" << m << "), x" << gb
                     << "(" << n << ")]";
                  o.failures.push_back({in.str(), "action of bracket", "bracket of actions"});
                }
              }
        return o;
      });
  executeChecks(checks, P.workers, rep);
}

// laurent-example: F[x, 1/x] is a module algebra for the divided-power
// generators, b(fg) = sum (b' f)(b'' g), with r <= 4 and |exponent| <= 5
void suiteLaurentExample(const SuiteParams& P, SuiteReport& rep) {
  uint32_t p = P.p;
  auto act = [p](HFam f, long long r, const LaurentPoly& g) {
    switch (f) {
      case HFam::Lower: return actLower(r, g);
      case HFam::Diag: return actDiagonal(r, g);
      default: return actRaise(r, g);
    }
  };
  std::vector<Check> checks;
  for (HFam f : {HFam::Lower, HFam::Diag, HFam::Raise})
    checks.push_back([=]() {
      CheckOutcome o;
      for (long long r = 0; r <= 4; ++r)
        for (long long m = -5; m <= 5; ++m)
          for (long long n = -5; n <= 5; ++n) {
            LaurentPoly xm = LaurentPoly::monomial(p, m), xn = LaurentPoly::monomial(p, n);
            LaurentPoly lhs = act(f, r, xm * xn);
            LaurentPoly rhs(p);
            for (long long r1 = 0; r1 <= r; ++r1) rhs = rhs + act(f, r1, xm) * act(f, r - r1, xn);
            ++o.attempted;
            if (lhs != rhs) {
              std::ostringstream in;
              in << famName(f) << "^(" << r << ") on x^" << m << " * x^" << n;
              o.failures.push_back({in.str(), lhs.str(), rhs.str()});
            }
          }
      return o;
    });
  executeChecks(checks, P.workers, rep);
}

// weight-law: w is homogeneous of degree n exactly when
// (1-x)^{-2 deg} w = (1-x)^{-2n} w through order x^(2N)
void suiteWeightLaw(const SuiteParams& P, SuiteReport& rep) {
  auto c = std::shared_ptr<Carrier>(buildCarrier(P, P.maxDegree));
  long long N = c->truncation();
  uint32_t p = P.p;
  std::vector<Check> checks;
  // homogeneous vectors match their own degree series
  for (long long d = 0; d <= N; ++d)
    checks.push_back([=]() {
      CheckOutcome o;
      const std::vector<PbwWord>& basis = c->basis(d);
      for (auto& word : basis) {
        GradedVector w = wordState(*c, word);
        for (long long k = 0; k <= 2 * N; ++k) {
          ++o.attempted;
          GradedVector lhs = c->hAction(HFam::Diag, k, w);
          GradedVector rhs = w.scaled(binomMod(-2 * d, k, p));
          if (!(lhs == rhs)) {
            std::ostringstream in;
            in << "degree " << d << " word " << c->wordStr(word) << " coefficient x^" << k;
            o.failures.push_back({in.str(), c->str(lhs), c->str(rhs)});
          }
        }
      }
      return o;
    });
  // a mix of two degrees matches no single degree series
  for (long long d1 = 0; d1 <= N; ++d1)
    for (long long d2 = d1 + 1; d2 <= N; ++d2)
      checks.push_back([=]() {
        CheckOutcome o;
        if (c->basis(d1).empty() || c->basis(d2).empty()) return o;
        GradedVector w = wordState(*c, c->basis(d1)[0]) + wordState(*c, c->basis(d2)[0]);
        std::vector<GradedVector> diag;
        for (long long k = 0; k <= 2 * N; ++k) diag.push_back(c->hAction(HFam::Diag, k, w));
        for (long long n = 0; n <= N; ++n) {
          ++o.attempted;
          bool separated = false;
          for (long long k = 0; k <= 2 * N && !separated; ++k)
            if (!(diag[static_cast<size_t>(k)] == w.scaled(binomMod(-2 * n, k, p))))
              separated = true;
          if (!separated) {
            std::ostringstream in;
            in << "mixed degrees " << d1 << "+" << d2 << " vs claimed degree " << n;
            o.failures.push_back({in.str(), "series agrees through x^" + std::to_string(2 * N),
                                  "must differ for inhomogeneous input"});
          }
        }
        return o;
      });
  executeChecks(checks, P.workers, rep);
}

// standard scalar series used by the conjugation recipes
struct EngineSeries {
  TruncSeries z, z0, omz;  // omz = 1 - z z0
  explicit EngineSeries(uint32_t p, int K)
      : z(TruncSeries::var(p, 2, K, 0)),
        z0(TruncSeries::var(p, 2, K, 1)),
        omz(TruncSeries::one(p, 2, K) - TruncSeries::var(p, 2, K, 0) *
                TruncSeries::var(p, 2, K, 1)) {}
};

// conj-E: e^{zL1} Y(a, z0) e^{-zL1} = Y(e^{z(1-zz0)L1}(1-zz0)^{-2deg}a,
// z0/(1-zz0)); for the generator states the inserted side collapses to
// (1-zz0)^{-2 deg a} a, which is checked as a second identity
void suiteConjE(const SuiteParams& P, SuiteReport& rep) {
  bool vir = P.carrier == "virasoro";
  long long da = vir ? 2 : 1;
  int orders = P.bound;
  auto c = std::shared_ptr<Carrier>(
      buildCarrier(P, P.maxDegree + static_cast<int>(da) + orders));
  TruncOrders t;
  t.zMax = orders;
  t.z0Max = orders;
  t.z0Min = -static_cast<int>(P.maxDegree + da) - 1;
  EngineSeries S(P.p, 2 * orders + 2);

  std::vector<Check> checks;
  for (int g = 0; g < c->numGens(); ++g)
    checks.push_back([=]() {
      CheckOutcome o;
      GradedVector a = c->genState(g);
      std::vector<OpFactor> lhs = {OpFactor::exp(HFam::Raise, S.z),
                                   OpFactor::vertex(a),
                                   OpFactor::exp(HFam::Raise, S.z.scaled(-1))};
      std::vector<OpFactor> rhs = {OpFactor::vertex(
          a, {OpFactor::exp(HFam::Raise, S.z * S.omz), OpFactor::degSeries()}, true)};
      // closed form: the insert is L1-free, so only the scalar series remains
      std::vector<OpFactor> closed = {OpFactor::scalar(S.omz.pow(-2 * da)),
                                      OpFactor::vertex(a, {}, true)};
      auto w1 = verifyTruncatedIdentity(*c, lhs, rhs, t, P.maxDegree, da, &o.attempted);
      if (w1) {
        w1->inputs = "conjugation law, generator " + std::to_string(g) + ", " + w1->inputs;
        o.failures.push_back(*w1);
      }
      auto w2 = verifyTruncatedIdentity(*c, rhs, closed, t, P.maxDegree, da, &o.attempted);
      if (w2) {
        w2->inputs = "closed form, generator " + std::to_string(g) + ", " + w2->inputs;
        o.failures.push_back(*w2);
      }
      return o;
    });
  executeChecks(checks, P.workers, rep);
}

// ed-deg: the two factorizations of e^{zL1} e^{z0 L-1} and the four-factor
// form of the degree series
void suiteEdDeg(const SuiteParams& P, SuiteReport& rep) {
  int orders = P.bound;
  auto c = std::shared_ptr<Carrier>(buildCarrier(P, P.maxDegree + orders));
  TruncOrders t;
  t.zMax = orders;
  t.z0Max = orders;
  t.z0Min = 0;
  EngineSeries S(P.p, 2 * orders + 2);
  TruncSeries inv = S.omz.pow(-1);

  std::vector<OpFactor> lhs2 = {OpFactor::exp(HFam::Raise, S.z),
                                OpFactor::exp(HFam::Lower, S.z0)};
  std::vector<OpFactor> rhs2a = {OpFactor::exp(HFam::Lower, inv * S.z0),
                                 OpFactor::degSeries(),
                                 OpFactor::exp(HFam::Raise, inv * S.z)};
  std::vector<OpFactor> rhs2b = {OpFactor::exp(HFam::Lower, inv * S.z0),
                                 OpFactor::exp(HFam::Raise, S.z * S.omz),
                                 OpFactor::degSeries()};
  std::vector<OpFactor> lhs3 = {OpFactor::degSeries()};
  std::vector<OpFactor> rhs3 = {OpFactor::exp(HFam::Raise, (S.z * S.omz).scaled(-1)),
                                OpFactor::exp(HFam::Lower, (inv * S.z0).scaled(-1)),
                                OpFactor::exp(HFam::Raise, S.z),
                                OpFactor::exp(HFam::Lower, S.z0)};

  struct Item {
    const char* name;
    std::vector<OpFactor> l, r;
  };
  auto items = std::make_shared<std::vector<Item>>();
  items->push_back({"two-factor split", lhs2, rhs2a});
  items->push_back({"split, exponent pulled through the degree series", rhs2a, rhs2b});
  items->push_back({"four-factor degree series", lhs3, rhs3});

  std::vector<Check> checks;
  for (size_t i = 0; i < items->size(); ++i)
    checks.push_back([=]() {
      CheckOutcome o;
      auto& it = (*items)[i];
      auto w = verifyTruncatedIdentity(*c, it.l, it.r, t, P.maxDegree, 0, &o.attempted);
      if (w) {
        w->inputs = std::string(it.name) + ", " + w->inputs;
        o.failures.push_back(*w);
      }
      return o;
    });
  executeChecks(checks, P.workers, rep);
}

// skew-symmetry: u_m v = sum_i (-1)^{m+1+i} D^(i) (v_{m+i} u)
void suiteSkewSymmetry(const SuiteParams& P, SuiteReport& rep) {
  auto c = std::shared_ptr<Carrier>(buildCarrier(P, P.maxDegree));
  long long N = c->truncation();
  uint32_t p = P.p;
  long long dcap = std::min<long long>(2, N);
  std::vector<Check> checks;
  for (long long du = 1; du <= dcap; ++du)
    for (long long dv = 1; dv <= dcap; ++dv)
      checks.push_back([=]() {
        CheckOutcome o;
        for (auto& uw : c->basis(du))
          for (auto& vw : c->basis(dv)) {
            GradedVector u = wordState(*c, uw), v = wordState(*c, vw);
            for (long long m = -P.bound; m <= P.bound; ++m) {
              long long target = du + dv - m - 1;
              if (target < 0 || target > N) continue;
              ++o.attempted;
              GradedVector lhs = c->compositeMode(u, m, v);
              GradedVector rhs = c->zero();
              for (long long i = 0; i <= du + dv - 1 - m; ++i) {
                GradedVector inner = c->compositeMode(v, m + i, u);
                if (inner.isZero()) continue;
                rhs = rhs +
                      c->hAction(HFam::Lower, i, inner).scaled(signPow(m + 1 + i, p));
              }
              if (!(lhs == rhs)) {
                std::ostringstream in;
                in << "u=" << c->wordStr(uw) << " v=" << c->wordStr(vw) << " m=" << m;
                o.failures.push_back({in.str(), c->str(lhs), c->str(rhs)});
              }
            }
          }
        return o;
      });
  executeChecks(checks, P.workers, rep);
}

// commutators: [u_m, v_n] w = sum_i binom(m, i) (u_i v)_{m+n-i} w
void suiteCommutators(const SuiteParams& P, SuiteReport& rep) {
  auto c = std::shared_ptr<Carrier>(buildCarrier(P, P.maxDegree));
  long long N = c->truncation();
  uint32_t p = P.p;
  long long dcap = std::min<long long>(2, N);
  long long wcap = std::min<long long>(P.bound, N);
  std::vector<Check> checks;
  for (long long du = 1; du <= dcap; ++du)
    for (long long dv = 1; dv <= dcap; ++dv) {
      // the i = 0 term of the right-hand sum lives in degree du + dv - 1;
      // past the truncation the instance cannot be evaluated faithfully
      if (du + dv - 1 > N) continue;
      for (long long dw = 0; dw <= wcap; ++dw)
        checks.push_back([=]() {
          CheckOutcome o;
          for (auto& uw : c->basis(du))
            for (auto& vw : c->basis(dv))
              for (auto& ww : c->basis(dw)) {
                GradedVector u = wordState(*c, uw), v = wordState(*c, vw),
                             w = wordState(*c, ww);
                for (long long m = -2; m <= 2; ++m)
                  for (long long n = -2; n <= 2; ++n) {
                    long long t1 = dv + dw - n - 1, t1p = du + dw - m - 1;
                    long long fin = du + dv + dw - m - n - 2;
                    if (t1 < 0 || t1 > N || t1p < 0 || t1p > N || fin < 0 || fin > N) continue;
                    ++o.attempted;
                    GradedVector lhs = c->compositeMode(u, m, c->compositeMode(v, n, w)) -
                                       c->compositeMode(v, n, c->compositeMode(u, m, w));
                    GradedVector rhs = c->zero();
                    for (long long i = 0; i <= du + dv - 1; ++i) {
                      uint32_t bc = binomMod(m, i, p);
                      if (bc == 0) continue;
                      GradedVector uv = c->compositeMode(u, i, v);
                      if (uv.isZero()) continue;
                      rhs = rhs + c->compositeMode(uv, m + n - i, w).scaled(bc);
                    }
                    if (!(lhs == rhs)) {
                      std::ostringstream in;
                      in << "u=" << c->wordStr(uw) << " v=" << c->wordStr(vw)
                         << " w=" << c->wordStr(ww) << " m=" << m << " n=" << n;
                      o.failures.push_back({in.str(), c->str(lhs), c->str(rhs)});
                    }
                  }
              }
          return o;
        });
    }
  executeChecks(checks, P.workers, rep);
}

// invariance: generator adjoints across the form, plus the theta-transpose of
// the divided-power families order by order
void suiteInvariance(const SuiteParams& P, SuiteReport& rep) {
  auto c = std::shared_ptr<Carrier>(buildCarrier(P, P.maxDegree));
  auto form = std::make_shared<BilinearForm>(*c);
  bool vir = c->kind() == CarrierKind::Virasoro;
  long long N = c->truncation();
  uint32_t p = P.p;
  std::vector<Check> checks;
  for (int g = 0; g < c->numGens(); ++g)
    for (long long m = -P.bound; m <= P.bound; ++m)
      checks.push_back([=]() {
        CheckOutcome o;
        for (long long d1 = 0; d1 <= N; ++d1) {
          long long d2 = d1 - m;
          if (d2 < 0 || d2 > N || d1 - m > N || d2 + m > N) continue;
          for (auto& uw : c->basis(d1))
            for (auto& vw : c->basis(d2)) {
              GradedVector u = wordState(*c, uw), v = wordState(*c, vw);
              ++o.attempted;
              uint32_t lhs = form->pair(c->applyMode(g, m, u), v);
              uint32_t rhs = form->pair(u, c->applyMode(g, -m, v));
              if (!vir) rhs = negMod(rhs, p);
              if (lhs != rhs) {
                std::ostringstream in;
                in << "(x" << g << "(" << m << ")u, v) u=" << c->wordStr(uw)
                   << " v=" << c->wordStr(vw);
                o.failures.push_back({in.str(), std::to_string(lhs), std::to_string(rhs)});
              }
            }
        }
        return o;
      });
  // coefficients of the series invariance: theta swaps D and E, fixes H
  for (long long n = 0; n <= P.bound; ++n)
    checks.push_back([=]() {
      CheckOutcome o;
      struct Pair {
        HFam left, right;
        long long shift;
      };
      for (auto [fl, fr, shift] : {Pair{HFam::Raise, HFam::Lower, -n},
                                   Pair{HFam::Lower, HFam::Raise, n},
                                   Pair{HFam::Diag, HFam::Diag, 0}}) {
        for (long long d1 = 0; d1 <= N; ++d1) {
          long long d2 = d1 + shift;
          if (d2 < 0 || d2 > N || d1 + (fl == HFam::Lower ? n : 0) > N ||
              d2 + (fr == HFam::Lower ? n : 0) > N)
            continue;
          for (auto& uw : c->basis(d1))
            for (auto& vw : c->basis(d2)) {
              GradedVector u = wordState(*c, uw), v = wordState(*c, vw);
              ++o.attempted;
              uint32_t lhs = form->pair(c->hAction(fl, n, u), v);
              uint32_t rhs = form->pair(u, c->hAction(fr, n, v));
              if (lhs != rhs) {
                std::ostringstream in;
                in << famName(fl) << "^(" << n << ") transpose, u=" << c->wordStr(uw)
                   << " v=" << c->wordStr(vw);
                o.failures.push_back({in.str(), std::to_string(lhs), std::to_string(rhs)});
              }
            }
        }
      }
      return o;
    });
  executeChecks(checks, P.workers, rep);
}

// symmetry: every Gram block is symmetric and distinct degrees pair to zero
void suiteSymmetry(const SuiteParams& P, SuiteReport& rep) {
  auto c = std::shared_ptr<Carrier>(buildCarrier(P, P.maxDegree));
  auto form = std::make_shared<BilinearForm>(*c);
  long long N = c->truncation();
  std::vector<Check> checks;
  for (long long d = 0; d <= N; ++d)
    checks.push_back([=]() {
      CheckOutcome o;
      GramRow row = form->gramRow(d);
      for (size_t i = 0; i < row.matrix.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
          ++o.attempted;
          if (row.matrix[i][j] != row.matrix[j][i]) {
            std::ostringstream in;
            in << "degree " << d << " entries (" << i << "," << j << ")";
            o.failures.push_back({in.str(), std::to_string(row.matrix[i][j]),
                                  std::to_string(row.matrix[j][i])});
          }
        }
      return o;
    });
  for (long long d1 = 0; d1 <= N; ++d1)
    for (long long d2 = d1 + 1; d2 <= N; ++d2)
      checks.push_back([=]() {
        CheckOutcome o;
        for (auto& uw : c->basis(d1))
          for (auto& vw : c->basis(d2)) {
            ++o.attempted;
            uint32_t a = form->pairWords(uw, vw), b = form->pairWords(vw, uw);
            if (a != 0 || b != 0) {
              std::ostringstream in;
              in << "cross degrees " << d1 << " x " << d2 << " u=" << c->wordStr(uw)
                 << " v=" << c->wordStr(vw);
              o.failures.push_back({in.str(), std::to_string(a), std::to_string(b)});
            }
          }
        return o;
      });
  executeChecks(checks, P.workers, rep);
}

// l1-vanishing: the degree-n raising power kills the whole degree-n slice
void suiteL1Vanishing(const SuiteParams& P, SuiteReport& rep) {
  auto c = std::shared_ptr<Carrier>(buildCarrier(P, P.maxDegree));
  long long N = c->truncation();
  std::vector<Check> checks;
  for (long long n = 1; n <= N; ++n)
    checks.push_back([=]() {
      CheckOutcome o;
      for (auto& w : c->basis(n)) {
        ++o.attempted;
        GradedVector img = c->hAction(HFam::Raise, n, wordState(*c, w));
        if (!img.isZero()) {
          std::ostringstream in;
          in << "E^(" << n << ") on " << c->wordStr(w);
          o.failures.push_back({in.str(), c->str(img), "0"});
        }
      }
      return o;
    });
  executeChecks(checks, P.workers, rep);
}

// radical-ideal: Gram kernel per degree equals the annihilation submodule and
// is closed under generator modes inside the window
void suiteRadicalIdeal(const SuiteParams& P, SuiteReport& rep) {
  auto c = std::shared_ptr<Carrier>(buildCarrier(P, P.maxDegree));
  auto form = std::make_shared<BilinearForm>(*c);
  long long N = c->truncation();
  uint32_t p = P.p;
  std::vector<Check> checks;
  for (long long d = 0; d <= N; ++d)
    checks.push_back([=]() {
      CheckOutcome o;
      GramRow row = form->gramRow(d);
      auto oracle = annihilationRadical(*c, d);
      size_t dim = c->basis(d).size();
      ++o.attempted;
      bool same = row.radical.size() == oracle.size();
      if (same && !row.radical.empty())
        same = sameRowSpan(FpMatrix::fromRows(row.radical, dim, p),
                           FpMatrix::fromRows(oracle, dim, p));
      if (!same) {
        std::ostringstream in;
        in << "radical at degree " << d;
        o.failures.push_back({in.str(), std::to_string(row.radical.size()) + " Gram vectors",
                              std::to_string(oracle.size()) + " annihilation vectors"});
      }
      // closure under generator modes
      for (auto& rad : row.radical) {
        GradedVector v = c->zero();
        for (size_t i = 0; i < rad.size(); ++i)
          if (rad[i]) v.add(c->basis(d)[i], rad[i]);
        for (int g = 0; g < c->numGens(); ++g) {
          for (long long m = -(N - d); m <= d; ++m) {
            long long target = d - m;
            if (target < 0 || target > N) continue;
            ++o.attempted;
            GradedVector img = c->applyMode(g, m, v);
            bool ortho = true;
            for (auto& ww : c->basis(target))
              if (form->pair(img, wordState(*c, ww)) != 0) {
                ortho = false;
                break;
              }
            if (!ortho) {
              std::ostringstream in;
              in << "mode x" << g << "(" << m << ") image of degree-" << d << " radical vector";
              o.failures.push_back({in.str(), "pairs nonzero", "0"});
            }
          }
        }
      }
      return o;
    });
  executeChecks(checks, P.workers, rep);
}

// dual-module: the contragredient action is the theta-transpose of the primal
// one, generator prime modes close the same brackets, and the window slice of
// the double dual reproduces the module (the untruncated statement is
// stronger; only the window is checked here)
void suiteDualModule(const SuiteParams& P, SuiteReport& rep) {
  auto c = std::shared_ptr<Carrier>(buildCarrier(P, P.maxDegree));
  bool vir = c->kind() == CarrierKind::Virasoro;
  long long N = c->truncation();
  uint32_t p = P.p;
  auto dual = std::make_shared<DualCarrier>(*c, N);
  auto hopf = std::make_shared<Hopf>(p);

  std::vector<Check> checks;
  // theta-transpose identity for small monomials
  auto monos = std::make_shared<std::vector<HMono>>(std::vector<HMono>{
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {0, 1, 1},
      {1, 0, 1}});
  for (size_t mi = 0; mi < monos->size(); ++mi)
    checks.push_back([=]() {
      CheckOutcome o;
      HMono mb = (*monos)[mi];
      HElement b = hopf->mono(mb.i, mb.j, mb.k);
      HElement tb = hopf->theta(b);
      long long shift = static_cast<long long>(mb.i) - static_cast<long long>(mb.k);
      for (long long d = 0; d <= N; ++d) {
        long long dw = d + shift;
        // the raising step acts first on the dual side, so the functional
        // degree must cover it before the lowering step brings it back up
        if (dw < 0 || dw > N || d < static_cast<long long>(mb.k)) continue;
        for (size_t idx = 0; idx < c->basis(d).size(); ++idx) {
          DualVector f = dual->dualBasisVector(d, idx);
          DualVector bf = dual->hActionElement(b, f);
          for (auto& ww : c->basis(dw)) {
            GradedVector w = wordState(*c, ww);
            ++o.attempted;
            uint32_t lhs = dual->pairing(bf, w);
            uint32_t rhs = dual->pairing(f, c->hActionVector(tb, w));
            if (lhs != rhs) {
              std::ostringstream in;
              in << fmtMono(mb) << " transpose at degree " << d << " functional " << idx
                 << " against " << c->wordStr(ww);
              o.failures.push_back({in.str(), std::to_string(lhs), std::to_string(rhs)});
            }
          }
        }
      }
      return o;
    });
  // prime modes realize the same bracket relations
  checks.push_back([=]() {
    CheckOutcome o;
    int ng = c->numGens();
    for (int ga = 0; ga < ng; ++ga)
      for (int gb = 0; gb < ng; ++gb)
        for (long long m = -2; m <= 2; ++m)
          for (long long n = -2; n <= 2; ++n)
            for (long long d = 0; d <= std::min<long long>(N, 3); ++d) {
              long long m1 = d - n, m2 = d - m, fin = d - m - n;
              if (m1 < 0 || m1 > N || m2 < 0 || m2 > N || fin < 0 || fin > N) continue;
              ModeElement br = vir ? virasoroBracket(p, m, n)
                                   : affineBracket(c->lie(), ga, m, gb, n);
              for (size_t idx = 0; idx < c->basis(d).size(); ++idx) {
                DualVector f = dual->dualBasisVector(d, idx);
                DualVector ab = dual->generatorPrimeMode(ga, m, dual->generatorPrimeMode(gb, n, f));
                DualVector ba = dual->generatorPrimeMode(gb, n, dual->generatorPrimeMode(ga, m, f));
                DualVector lhs = dual->zero(fin);
                for (size_t i = 0; i < lhs.coords.size(); ++i)
                  lhs.coords[i] = subMod(ab.coords[i], ba.coords[i], p);
                DualVector rhs = dual->zero(fin);
                for (auto& [key, bc] : br.terms()) {
                  DualVector term = dual->generatorPrimeMode(key.first, key.second, f);
                  for (size_t i = 0; i < rhs.coords.size(); ++i)
                    rhs.coords[i] = addMod(rhs.coords[i], mulMod(bc, term.coords[i], p), p);
                }
                uint32_t cterm = mulMod(br.central(), c->centralValue(), p);
                if (cterm)
                  for (size_t i = 0; i < rhs.coords.size(); ++i)
                    rhs.coords[i] = addMod(rhs.coords[i], mulMod(cterm, f.coords[i], p), p);
                ++o.attempted;
                if (!dual->equal(lhs, rhs)) {
                  std::ostringstream in;
                  in << "prime-mode bracket [x" << ga << "'(" << m << "), x" << gb << "'(" << n
                     << ")] on degree-" << d << " functional " << idx;
                  o.failures.push_back({in.str(), "commutator of prime modes",
                                        "prime mode of bracket"});
                }
              }
            }
    return o;
  });
  // window slice of the double dual: evaluation functionals form a module map
  checks.push_back([=]() {
    CheckOutcome o;
    for (int g = 0; g < c->numGens(); ++g)
      for (long long m = -2; m <= 2; ++m)
        for (long long d = 0; d <= N; ++d) {
          long long dt = d - m;
          if (dt < 0 || dt > N) continue;
          for (auto& ww : c->basis(d)) {
            GradedVector w = wordState(*c, ww);
            GradedVector xw = c->applyMode(g, m, w);
            for (size_t idx = 0; idx < c->basis(dt).size(); ++idx) {
              DualVector f = dual->dualBasisVector(dt, idx);
              ++o.attempted;
              uint32_t lhs = dual->pairing(f, xw);
              uint32_t rhs = dual->pairing(dual->generatorPrimeMode(g, -m, f), w);
              if (!vir) rhs = negMod(rhs, p);
              if (lhs != rhs) {
                std::ostringstream in;
                in << "double-dual window: x" << g << "(" << m << ") on " << c->wordStr(ww)
                   << " vs functional " << idx;
                o.failures.push_back({in.str(), std::to_string(lhs), std::to_string(rhs)});
              }
            }
          }
        }
    return o;
  });
  executeChecks(checks, P.workers, rep);
}

// lminus-subset: the negative-degree image is zero, hence trivially contained,
// and the form-space dimension computed from the complementary span is one
void suiteLminusSubset(const SuiteParams& P, SuiteReport& rep) {
  auto c = std::shared_ptr<Carrier>(buildCarrier(P, P.maxDegree));
  std::vector<Check> checks;
  checks.push_back([=]() {
    CheckOutcome o;
    SubsetCheckResult r = lminusSubsetCheck(*c);
    ++o.attempted;
    if (!r.holds || r.lhsDim != 0)
      o.failures.push_back({"containment of the lowered subspace",
                            std::to_string(r.lhsDim) + " dims on the left",
                            "0 (must vanish by grading)"});
    ++o.attempted;
    FormSpaceResult fr = formSpaceDim(*c);
    long long dim0 = static_cast<long long>(c->basis(0).size());
    if (fr.dim != dim0 - r.rhsDim)
      o.failures.push_back({"form-space dimension against the raised span",
                            std::to_string(fr.dim),
                            std::to_string(dim0 - r.rhsDim)});
    return o;
  });
  executeChecks(checks, P.workers, rep);
}

}  // namespace

// ---- catalog and dispatch --------------------------------------------------

std::unique_ptr<Carrier> makeCarrier(const std::string& carrier, uint32_t p, long long central,
                                     long long truncation) {
  if (carrier == "virasoro") return std::make_unique<Carrier>(p, central, truncation);
  if (carrier.rfind("affine:", 0) == 0) {
    LieSpec spec = resolveLieSpec(carrier.substr(7), p);
    return std::make_unique<Carrier>(spec, central, truncation);
  }
  throw std::invalid_argument("unknown carrier kind: " + carrier);
}

const std::vector<std::string>& suiteCatalog() {
  static const std::vector<std::string> names = {
      "hopf-axioms",   "module-lie",  "laurent-example", "weight-law",   "conj-E",
      "ed-deg",        "skew-symmetry", "commutators",   "invariance",   "symmetry",
      "l1-vanishing",  "radical-ideal", "dual-module",   "lminus-subset"};
  return names;
}

SuiteReport runSuite(const std::string& name, const SuiteParams& params) {
  validateParams(params);
  SuiteReport rep;
  rep.suite = name;
  rep.params = params;
  if (name == "hopf-axioms") suiteHopfAxioms(params, rep);
  else if (name == "module-lie") suiteModuleLie(params, rep);
  else if (name == "laurent-example") suiteLaurentExample(params, rep);
  else if (name == "weight-law") suiteWeightLaw(params, rep);
  else if (name == "conj-E") suiteConjE(params, rep);
  else if (name == "ed-deg") suiteEdDeg(params, rep);
  else if (name == "skew-symmetry") suiteSkewSymmetry(params, rep);
  else if (name == "commutators") suiteCommutators(params, rep);
  else if (name == "invariance") suiteInvariance(params, rep);
  else if (name == "symmetry") suiteSymmetry(params, rep);
  else if (name == "l1-vanishing") suiteL1Vanishing(params, rep);
  else if (name == "radical-ideal") suiteRadicalIdeal(params, rep);
  else if (name == "dual-module") suiteDualModule(params, rep);
  else if (name == "lminus-subset") suiteLminusSubset(params, rep);
  else throw std::invalid_argument("unknown suite: " + name);
  return rep;
}

std::vector<SuiteReport> runAllSuites(const SuiteParams& params) {
  std::vector<SuiteReport> out;
  for (auto& name : suiteCatalog()) out.push_back(runSuite(name, params));
  return out;
}

nlohmann::json suiteReportToJson(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["params"] = {{"carrier", r.params.carrier}, {"p", r.params.p},
                 {"central", r.params.central}, {"maxDegree", r.params.maxDegree},
                 {"bound", r.params.bound},     {"seed", r.params.seed},
                 {"workers", r.params.workers}};
  j["attempted"] = r.attempted;
  j["passed"] = r.passed;
  j["failures"] = nlohmann::ordered_json::array();
  for (auto& f : r.failures)
    j["failures"].push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  return j;
}

}  // namespace modva
