#include "modva/carrier.hpp"

#include <numeric>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

using namespace modva;

namespace {

// index shorthands for sl2Spec's basis [e, h, f]
constexpr int E = 0, H = 1, F = 2;

GradedVector wordVec(const Carrier& c, std::vector<PbwMode> ms, long long coeff = 1) {
  GradedVector v = c.zero();
  v.add(PbwWord{std::move(ms)}, normMod(coeff, c.p()));
  return v;
}

// all basis vectors of degree <= dmax as singleton vectors
std::vector<GradedVector> basisVectors(const Carrier& c, long long dmax) {
  std::vector<GradedVector> out;
  for (long long d = 0; d <= dmax; ++d)
    for (auto& w : c.basis(d)) {
      GradedVector v = c.zero();
      v.add(w, 1);
      out.push_back(v);
    }
  return out;
}

}  // namespace

TEST_CASE("carrier basis dimensions match the graded counting oracle") {
  SUBCASE("affine sl2") {
    Carrier c(sl2Spec(7), 1, 6);
    std::vector<int> parts(6);
    std::iota(parts.begin(), parts.end(), 1);
    auto dims = oracle::gradedDims(parts, 3, 6);
    for (long long d = 0; d <= 6; ++d) CHECK(c.dim(d) == dims[static_cast<size_t>(d)]);
    // first few values pinned independently of the oracle
    CHECK(c.dim(0) == 1);
    CHECK(c.dim(1) == 3);
    CHECK(c.dim(2) == 9);
    CHECK(c.dim(3) == 22);
  }
  SUBCASE("affine rank-1 abelian") {
    Carrier c(abelian1Spec(5), 1, 8);
    std::vector<int> parts(8);
    std::iota(parts.begin(), parts.end(), 1);
    auto dims = oracle::gradedDims(parts, 1, 8);
    for (long long d = 0; d <= 8; ++d) CHECK(c.dim(d) == dims[static_cast<size_t>(d)]);
    CHECK(c.dim(5) == 7);  // partitions of 5
  }
  SUBCASE("virasoro") {
    Carrier c(7, 0, 9);
    std::vector<int> parts(8);
    std::iota(parts.begin(), parts.end(), 2);  // parts 2..9
    auto dims = oracle::gradedDims(parts, 1, 9);
    for (long long d = 0; d <= 9; ++d) CHECK(c.dim(d) == dims[static_cast<size_t>(d)]);
    // partitions with parts >= 2
    CHECK(c.dim(0) == 1);
    CHECK(c.dim(1) == 0);
    CHECK(c.dim(2) == 1);
    CHECK(c.dim(3) == 1);
    CHECK(c.dim(4) == 2);
    CHECK(c.dim(6) == 4);
    CHECK(c.dim(9) == 8);
  }
}

TEST_CASE("carrier basis words are canonical, sorted and distinct") {
  Carrier c(sl2Spec(5), 1, 5);
  for (long long d = 0; d <= 5; ++d) {
    auto& ws = c.basis(d);
    std::set<PbwWord> seen;
    for (size_t i = 0; i < ws.size(); ++i) {
      CHECK(ws[i].degree() == d);
      for (auto& m : ws[i].modes) CHECK(m.n < 0);
      for (size_t t = 0; t + 1 < ws[i].modes.size(); ++t) {
        auto &x = ws[i].modes[t], &y = ws[i].modes[t + 1];
        // degrees non-increasing, generator ascending on ties
        CHECK(-x.n >= -y.n);
        if (x.n == y.n) CHECK(x.gen <= y.gen);
      }
      if (i + 1 < ws.size()) CHECK(ws[i] < ws[i + 1]);
      seen.insert(ws[i]);
    }
    CHECK(seen.size() == ws.size());
    // repeated call hits the cache and agrees
    CHECK(c.basis(d) == ws);
  }
}

TEST_CASE("normal ordering straightens a crossed pair with its bracket") {
  Carrier c(sl2Spec(7), 1, 3);
  // e(-1) f(-2) |0> = f(-2) e(-1) |0> + h(-3) |0>
  GradedVector got = c.normalOrderWord({{-1, E}, {-2, F}});
  GradedVector want = wordVec(c, {{-2, F}, {-1, E}}) + wordVec(c, {{-3, H}});
  CHECK(got == want);
  CHECK(c.str(got) == "h(-3) 1 + f(-2) e(-1) 1");

  // already-canonical input is returned as-is
  GradedVector canon = c.normalOrderWord({{-2, F}, {-1, E}});
  CHECK(canon == wordVec(c, {{-2, F}, {-1, E}}));

  // equal-degree generator swap: h(-1) e(-1) |0> = e(-1) h(-1) |0> + [h,e](-2) |0>
  GradedVector g2 = c.normalOrderWord({{-1, H}, {-1, E}});
  GradedVector w2 = wordVec(c, {{-1, E}, {-1, H}}) + wordVec(c, {{-2, E}}, 2);
  CHECK(g2 == w2);
}

TEST_CASE("annihilators kill the vacuum and route through brackets") {
  Carrier c(sl2Spec(7), 2, 3);  // level 2
  GradedVector vac = c.vacuum();

  CHECK(c.applyMode(E, 0, vac).isZero());
  CHECK(c.applyMode(H, 5, vac).isZero());

  // e(0) f(-1) |0> = h(-1) |0>
  GradedVector v1 = c.applyMode(E, 0, c.applyMode(F, -1, vac));
  CHECK(v1 == wordVec(c, {{-1, H}}));

  // e(1) f(-1) |0> = (h(0) + <e,f> k) |0> = level |0>
  GradedVector v2 = c.applyMode(E, 1, c.applyMode(F, -1, vac));
  CHECK(v2 == vac.scaled(2));

  // h(1) h(-1) |0> = 1 * <h,h> k |0> = 2 * level |0>
  GradedVector v3 = c.applyMode(H, 1, c.applyMode(H, -1, vac));
  CHECK(v3 == vac.scaled(4));

  // negative-total-degree words vanish outright
  CHECK(c.normalOrderWord({{3, E}, {-1, F}}).isZero());
}

TEST_CASE("virasoro central terms carry the charge") {
  Carrier c(7, 3, 4);  // charge 3
  GradedVector vac = c.vacuum();

  CHECK(c.applyMode(0, -1, vac).isZero());  // L_{-1} |0> = 0
  CHECK(c.applyMode(0, 0, vac).isZero());

  // L_2 L_{-2} |0> = (4 L_0 + c/2) |0> = (3/2) |0> = 5 |0> mod 7
  GradedVector v = c.applyMode(0, 2, c.applyMode(0, -2, vac));
  CHECK(v == vac.scaled(mulMod(3, invMod(2, 7), 7)));

  // L_1 L_{-2} |0> = 3 L_{-1} |0> = 0
  CHECK(c.applyMode(0, 1, c.applyMode(0, -2, vac)).isZero());

  // L_3 L_{-3} |0> = (6 L_0 + binom(4,3)/2 c) |0> = 2c |0> = 6 |0>
  GradedVector v3 = c.applyMode(0, 3, c.applyMode(0, -3, vac));
  CHECK(v3 == vac.scaled(6));

  // zero charge kills all pure central contributions
  Carrier c0(7, 0, 4);
  CHECK(c0.applyMode(0, 2, c0.applyMode(0, -2, c0.vacuum())).isZero());
}

TEST_CASE("mode operators realize the bracket on the carrier") {
  // [x(m), y(n)] as operators == the bracket mode element, with the central
  // acting as the level
  SUBCASE("affine sl2") {
    LieSpec spec = sl2Spec(5);
    Carrier c(spec, 2, 6);
    auto vecs = basisVectors(c, 2);
    for (int ga = 0; ga < 3; ++ga)
      for (int gb = 0; gb < 3; ++gb)
        for (long long m = -2; m <= 2; ++m)
          for (long long n = -2; n <= 2; ++n)
            for (auto& v : vecs) {
              GradedVector lhs = c.applyMode(ga, m, c.applyMode(gb, n, v)) -
                                 c.applyMode(gb, n, c.applyMode(ga, m, v));
              ModeElement br = affineBracket(spec, ga, m, gb, n);
              GradedVector rhs = v.scaled(mulMod(br.central(), c.centralValue(), 5));
              for (auto& [k, bc] : br.terms())
                rhs = rhs + c.applyMode(k.first, k.second, v).scaled(bc);
              CHECK(lhs == rhs);
            }
  }
  SUBCASE("virasoro") {
    Carrier c(7, 4, 9);
    auto vecs = basisVectors(c, 3);
    for (long long m = -3; m <= 3; ++m)
      for (long long n = -3; n <= 3; ++n)
        for (auto& v : vecs) {
          GradedVector lhs = c.applyMode(0, m, c.applyMode(0, n, v)) -
                             c.applyMode(0, n, c.applyMode(0, m, v));
          ModeElement br = virasoroBracket(7, m, n);
          GradedVector rhs = v.scaled(mulMod(br.central(), c.centralValue(), 7));
          for (auto& [k, bc] : br.terms()) rhs = rhs + c.applyMode(0, k.second, v).scaled(bc);
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("truncation overflows are loud") {
  Carrier c(sl2Spec(5), 1, 3);
  CHECK_THROWS_AS((void)c.basis(4), CarrierOverflow);
  CHECK_THROWS_AS((void)c.basis(-1), CarrierOverflow);
  CHECK_THROWS_AS((void)c.normalOrderWord({{-2, E}, {-2, F}}), CarrierOverflow);
  GradedVector top = wordVec(c, {{-3, E}});
  CHECK_THROWS_AS((void)c.applyMode(F, -1, top), CarrierOverflow);
  CHECK_THROWS_AS((void)c.hAction(HFam::Lower, 1, top), CarrierOverflow);
  CHECK_THROWS_AS((void)c.compositeMode(top, -1, wordVec(c, {{-1, H}})), CarrierOverflow);
  // annihilating / lowering operations at the top edge stay legal
  CHECK_NOTHROW((void)c.applyMode(E, 2, top));
  CHECK_NOTHROW((void)c.hAction(HFam::Raise, 2, top));
  CHECK_NOTHROW((void)c.hAction(HFam::Diag, 2, top));
  CHECK_THROWS_AS((void)c.applyMode(-1, 0, c.vacuum()), std::out_of_range);
  CHECK_THROWS_AS(Carrier(sl2Spec(5), 1, -1), std::invalid_argument);

  Carrier cv(5, 1, 1);
  CHECK_THROWS_AS((void)cv.genState(0), CarrierOverflow);  // L(-2)|0> needs N >= 2
}

TEST_CASE("generator vertex modes follow the weight convention") {
  SUBCASE("affine: a_m = a(m)") {
    Carrier c(sl2Spec(7), 1, 3);
    GradedVector v = wordVec(c, {{-2, F}});
    for (long long m = -1; m <= 2; ++m)
      CHECK(c.generatorMode(E, m, v) == c.applyMode(E, m, v));
    CHECK(c.generatorMode(H, -1, c.vacuum()) == c.genState(H));
  }
  SUBCASE("virasoro: omega_m = L_{m-1}") {
    Carrier c(7, 2, 6);
    GradedVector v = wordVec(c, {{-2, 0}});
    for (long long m = -2; m <= 3; ++m)
      CHECK(c.generatorMode(0, m, v) == c.applyMode(0, m - 1, v));
    CHECK(c.generatorMode(0, -1, c.vacuum()) == c.genState(0));
    // omega_1 omega = L_0 L(-2)|0> = 2 L(-2)|0>
    CHECK(c.generatorMode(0, 1, c.genState(0)) == c.genState(0).scaled(2));
  }
}

TEST_CASE("composite modes: vacuum and creation axioms") {
  SUBCASE("affine") {
    Carrier c(sl2Spec(5), 2, 4);
    GradedVector vac = c.vacuum();
    auto vecs = basisVectors(c, 3);
    for (auto& v : vecs) {
      // |0>_m = delta_{m,-1} id
      CHECK(c.compositeMode(vac, -1, v) == v);
      CHECK(c.compositeMode(vac, 0, v).isZero());
      CHECK(c.compositeMode(vac, -2, v).isZero());
      // v_{-1} |0> = v
      CHECK(c.compositeMode(v, -1, vac) == v);
    }
  }
  SUBCASE("virasoro") {
    Carrier c(7, 3, 6);
    GradedVector vac = c.vacuum();
    auto vecs = basisVectors(c, 5);
    for (auto& v : vecs) {
      CHECK(c.compositeMode(vac, -1, v) == v);
      CHECK(c.compositeMode(v, -1, vac) == v);
      if (v.maxDegree() + 2 <= 6)
        CHECK(c.compositeMode(v, -3, vac.scaled(2)) == c.hAction(HFam::Lower, 2, v).scaled(2));
    }
  }
}

TEST_CASE("composite modes of generator states reduce to generator modes") {
  SUBCASE("affine") {
    Carrier c(sl2Spec(5), 1, 4);
    auto vecs = basisVectors(c, 3);
    for (int g = 0; g < 3; ++g) {
      GradedVector gs = c.genState(g);
      for (auto& v : vecs)
        for (long long m = -1; m <= 4; ++m) {
          long long target = 1 + v.maxDegree() - m - 1;
          if (target > 4) continue;
          CHECK(c.compositeMode(gs, m, v) == c.generatorMode(g, m, v));
        }
    }
  }
  SUBCASE("virasoro") {
    Carrier c(7, 5, 6);
    GradedVector gs = c.genState(0);
    auto vecs = basisVectors(c, 4);
    for (auto& v : vecs)
      for (long long m = -2; m <= 5; ++m) {
        long long target = 2 + v.maxDegree() - m - 1;
        if (target > 6) continue;
        CHECK(c.compositeMode(gs, m, v) == c.generatorMode(0, m, v));
      }
  }
}

TEST_CASE("composite creation reproduces divided lowering") {
  // v_{-1-n} |0> = D^(n) v
  Carrier c(sl2Spec(5), 2, 5);
  GradedVector vac = c.vacuum();
  auto vecs = basisVectors(c, 2);
  for (auto& v : vecs)
    for (long long n = 0; n <= 3; ++n) {
      if (v.maxDegree() + n > 5) continue;
      CHECK(c.compositeMode(v, -1 - n, vac) == c.hAction(HFam::Lower, n, v));
    }
}

TEST_CASE("composite modes satisfy the mode commutator expansion") {
  // [u_m, v_n] w = sum_i binom(m, i) (u_i v)_{m+n-i} w
  Carrier c(sl2Spec(5), 1, 5);
  GradedVector u = c.genState(E), v = c.genState(F);
  auto ws = basisVectors(c, 2);
  for (long long m = -2; m <= 2; ++m)
    for (long long n = -2; n <= 2; ++n)
      for (auto& w : ws) {
        long long dw = w.maxDegree();
        if (1 + (1 + dw - n - 1) - m - 1 > 5 || 1 + dw - n - 1 < 0) continue;
        if (1 + (1 + dw - m - 1) - n - 1 > 5 || 1 + dw - m - 1 < 0) continue;
        GradedVector lhs =
            c.compositeMode(u, m, c.compositeMode(v, n, w)) -
            c.compositeMode(v, n, c.compositeMode(u, m, w));
        GradedVector rhs = c.zero();
        for (long long i = 0; i <= 1; ++i) {  // u_i v vanishes beyond degree reasons for i > 1
          GradedVector uv = c.compositeMode(u, i, v);
          if (uv.isZero()) continue;
          rhs = rhs + c.compositeMode(uv, m + n - i, w).scaled(binomMod(m, i, 5));
        }
        CHECK(lhs == rhs);
      }
}

TEST_CASE("composite modes satisfy skew-symmetry") {
  // u_m v = sum_i (-1)^{m+1+i} D^(i) (v_{m+i} u)
  SUBCASE("affine") {
    Carrier c(sl2Spec(7), 2, 4);
    auto vecs = basisVectors(c, 2);
    for (auto& u : vecs)
      for (auto& v : vecs)
        for (long long m = -2; m <= 3; ++m) {
          long long du = u.maxDegree(), dv = v.maxDegree();
          long long target = du + dv - m - 1;
          if (target > 4 || target < 0) continue;
          GradedVector lhs = c.compositeMode(u, m, v);
          GradedVector rhs = c.zero();
          for (long long i = 0; du + dv - m - i - 1 >= 0; ++i) {
            GradedVector inner = c.compositeMode(v, m + i, u);
            if (inner.isZero()) continue;
            rhs = rhs + c.hAction(HFam::Lower, i, inner).scaled(signPow(m + 1 + i, 7));
          }
          CHECK(lhs == rhs);
        }
  }
  SUBCASE("virasoro omega with itself") {
    Carrier c(7, 3, 6);
    GradedVector u = c.genState(0);
    for (long long m = -3; m <= 3; ++m) {
      long long target = 4 - m - 1;
      if (target > 6 || target < 0) continue;
      GradedVector lhs = c.compositeMode(u, m, u);
      GradedVector rhs = c.zero();
      for (long long i = 0; 4 - m - i - 1 >= 0; ++i) {
        GradedVector inner = c.compositeMode(u, m + i, u);
        if (inner.isZero()) continue;
        rhs = rhs + c.hAction(HFam::Lower, i, inner).scaled(signPow(m + 1 + i, 7));
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("divided diagonal action scales by the degree binomial") {
  // H^(r) w = binom(-2 deg w, r) w on canonical words, by Vandermonde
  SUBCASE("affine") {
    Carrier c(sl2Spec(7), 1, 4);
    for (long long d = 0; d <= 4; ++d)
      for (auto& w : c.basis(d)) {
        GradedVector v = c.zero();
        v.add(w, 1);
        for (long long r = 0; r <= 5; ++r)
          CHECK(c.hAction(HFam::Diag, r, v) == v.scaled(binomMod(-2 * d, r, 7)));
      }
  }
  SUBCASE("virasoro") {
    Carrier c(5, 2, 6);
    for (long long d = 0; d <= 6; ++d)
      for (auto& w : c.basis(d)) {
        GradedVector v = c.zero();
        v.add(w, 1);
        for (long long r = 0; r <= 4; ++r)
          CHECK(c.hAction(HFam::Diag, r, v) == v.scaled(binomMod(-2 * d, r, 5)));
      }
  }
}

TEST_CASE("divided action on the vacuum is the counit pattern") {
  Carrier c(sl2Spec(5), 1, 3);
  GradedVector vac = c.vacuum();
  for (HFam f : {HFam::Lower, HFam::Diag, HFam::Raise}) {
    CHECK(c.hAction(f, 0, vac) == vac);
    for (long long r = 1; r <= 3; ++r) CHECK(c.hAction(f, r, vac).isZero());
  }
}

TEST_CASE("divided action interacts with modes by the coproduct rule") {
  // b^(r) (x(n) v) = sum_{r1+r2=r} (b^(r1) x(n)) (b^(r2) v)
  SUBCASE("affine") {
    LieSpec spec = sl2Spec(5);
    Carrier c(spec, 2, 5);
    auto vecs = basisVectors(c, 2);
    for (HFam f : {HFam::Lower, HFam::Diag, HFam::Raise})
      for (long long r = 0; r <= 3; ++r)
        for (int g = 0; g < 3; ++g)
          for (long long n = -3; n <= 1; ++n)
            for (auto& v : vecs) {
              long long shift = f == HFam::Lower ? r : f == HFam::Raise ? -r : 0;
              if (v.maxDegree() - n > 5 || v.maxDegree() - n + shift > 5 ||
                  v.maxDegree() + shift > 5)
                continue;
              GradedVector lhs = c.hAction(f, r, c.applyMode(g, n, v));
              GradedVector rhs = c.zero();
              for (long long r1 = 0; r1 <= r; ++r1) {
                ModeElement mx = hActionAffineMode(5, f, r1, g, n);
                GradedVector hv = c.hAction(f, r - r1, v);
                for (auto& [k, mc] : mx.terms())
                  rhs = rhs + c.applyMode(k.first, k.second, hv).scaled(mc);
              }
              CHECK(lhs == rhs);
            }
  }
  SUBCASE("virasoro") {
    Carrier c(7, 4, 6);
    auto vecs = basisVectors(c, 3);
    for (HFam f : {HFam::Lower, HFam::Diag, HFam::Raise})
      for (long long r = 0; r <= 3; ++r)
        for (long long n = -4; n <= 1; ++n)
          for (auto& v : vecs) {
            long long shift = f == HFam::Lower ? r : f == HFam::Raise ? -r : 0;
            // the intermediate mode application must fit the window too
            if (v.maxDegree() - n > 6 || v.maxDegree() - n + shift > 6 ||
                v.maxDegree() + shift > 6)
              continue;
            GradedVector lhs = c.hAction(f, r, c.applyMode(0, n, v));
            GradedVector rhs = c.zero();
            for (long long r1 = 0; r1 <= r; ++r1) {
              ModeElement mx = hActionVirMode(7, f, r1, n);
              GradedVector hv = c.hAction(f, r - r1, v);
              for (auto& [k, mc] : mx.terms())
                rhs = rhs + c.applyMode(0, k.second, hv).scaled(mc);
            }
            CHECK(lhs == rhs);
          }
  }
}

TEST_CASE("composite mode of a weight vector acts by its zero mode") {
  // h-state at mode 0 on e-state: h(0) e(-1)|0> = 2 e(-1)|0>
  Carrier c(sl2Spec(7), 1, 3);
  GradedVector hs = c.genState(H), es = c.genState(E);
  CHECK(c.compositeMode(hs, 0, es) == es.scaled(2));
  CHECK(c.compositeMode(hs, 0, c.genState(F)) == c.genState(F).scaled(7 - 2));
  // h_1 e-state = <h,e> level |0> = 0; e_1 f-state = level |0>
  CHECK(c.compositeMode(hs, 1, es).isZero());
  CHECK(c.compositeMode(es, 1, c.genState(F)) == c.vacuum());
}

TEST_CASE("full Hopf elements act through their PBW monomials") {
  Carrier c(sl2Spec(5), 2, 4);
  Hopf hopf(5);
  GradedVector v = wordVec(c, {{-1, E}});

  // D^(1) on a(-1)|0> is a(-2)|0>: coefficient (-1) binom(-1,1) = 1
  CHECK(c.hActionVector(hopf.mono(1, 0, 0), v) == wordVec(c, {{-2, E}}));
  // H^(r) on degree n scales by binom(-2n, r)
  for (uint32_t r = 0; r <= 3; ++r)
    CHECK(c.hActionVector(hopf.mono(0, r, 0), v) == v.scaled(binomMod(-2, r, 5)));
  // identity monomial
  CHECK(c.hActionVector(hopf.one(), v) == v);
  CHECK(c.hActionVector(hopf.zero(), v).isZero());

  // raising a degree-n vector n times lands in the vacuum line; n+1 times kills it
  GradedVector u = c.normalOrderWord({{-1, E}, {-1, F}});
  CHECK(c.hActionVector(hopf.mono(0, 0, 3), u).isZero());
}

TEST_CASE("Hopf products act as composed actions") {
  // the straightening relations hold in the representation:
  // (a b) . w == a . (b . w)
  SUBCASE("affine") {
    Carrier c(sl2Spec(5), 1, 6);
    Hopf hopf(5);
    auto vecs = basisVectors(c, 2);
    for (uint32_t i1 = 0; i1 <= 1; ++i1)
      for (uint32_t j1 = 0; j1 <= 1; ++j1)
        for (uint32_t k1 = 0; k1 <= 1; ++k1)
          for (uint32_t i2 = 0; i2 <= 1; ++i2)
            for (uint32_t j2 = 0; j2 <= 1; ++j2)
              for (uint32_t k2 = 0; k2 <= 1; ++k2) {
                HElement a = hopf.mono(i1, j1, k1), b = hopf.mono(i2, j2, k2);
                HElement ab = hopf.product(a, b);
                for (auto& v : vecs)
                  CHECK(c.hActionVector(ab, v) ==
                        c.hActionVector(a, c.hActionVector(b, v)));
              }
  }
  SUBCASE("virasoro") {
    Carrier c(7, 2, 8);
    Hopf hopf(7);
    auto vecs = basisVectors(c, 4);
    std::vector<HMono> monos = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0},
                                {0, 0, 2}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    for (auto& ma : monos)
      for (auto& mb : monos) {
        HElement a = hopf.mono(ma.i, ma.j, ma.k), b = hopf.mono(mb.i, mb.j, mb.k);
        HElement ab = hopf.product(a, b);
        for (auto& v : vecs)
          CHECK(c.hActionVector(ab, v) == c.hActionVector(a, c.hActionVector(b, v)));
      }
  }
}

TEST_CASE("divided raising annihilates its own degree") {
  // E^(n) V_n = 0 on both carriers (small n; the full sweep lives in the
  // verification suites)
  Carrier ca(sl2Spec(5), 2, 4);
  for (long long n = 1; n <= 4; ++n)
    for (auto& w : ca.basis(n)) {
      GradedVector v = ca.zero();
      v.add(w, 1);
      CHECK(ca.hAction(HFam::Raise, n, v).isZero());
    }
  Carrier cv(7, 1, 6);
  for (long long n = 2; n <= 6; ++n)
    for (auto& w : cv.basis(n)) {
      GradedVector v = cv.zero();
      v.add(w, 1);
      CHECK(cv.hAction(HFam::Raise, n, v).isZero());
    }
}

TEST_CASE("carrier printing is stable") {
  Carrier c(sl2Spec(7), 1, 3);
  CHECK(c.wordStr(PbwWord{}) == "1");
  CHECK(c.wordStr(PbwWord{{PbwMode{-2, F}, PbwMode{-1, E}}}) == "f(-2) e(-1) 1");
  CHECK(c.str(c.zero()) == "0");
  GradedVector v = wordVec(c, {{-1, E}}, 6) + wordVec(c, {{-1, H}});
  CHECK(c.str(v) == "-e(-1) 1 + h(-1) 1");        // symmetric residues
  CHECK(c.str(v, false) == "6 e(-1) 1 + h(-1) 1");  // canonical residues

  Carrier cv(5, 1, 4);
  CHECK(cv.wordStr(PbwWord{{PbwMode{-2, 0}, PbwMode{-2, 0}}}) == "L(-2) L(-2) 1");
}
