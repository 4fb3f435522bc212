#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modva/carrier.hpp"
#include "modva/series.hpp"

#include "json.hpp"

namespace modva {

// Parameters shared by all verification suites.  `carrier` names the module
// to build ("affine:<builtin-or-path>" or "virasoro"); `central` is the level
// of an affine carrier or the central charge of a Virasoro one.  `maxDegree`
// is the degree window the checks sweep; `bound` caps divided-power orders,
// mode indices and monomial exponents; carrier-free suites ignore the carrier
// fields.  Everything is echoed into the report so runs are reproducible.
struct SuiteParams {
  std::string carrier = "affine:sl2";
  uint32_t p = 5;
  long long central = 1;
  int maxDegree = 4;
  int bound = 3;
  uint64_t seed = 1;
  int workers = 1;
};

struct FailureWitness {
  std::string inputs;  // which check, at which arguments
  std::string lhs;
  std::string rhs;
};

struct SuiteReport {
  std::string suite;
  SuiteParams params;
  long long attempted = 0;
  long long passed = 0;
  std::vector<FailureWitness> failures;

  // a suite that attempted nothing proves nothing, so it does not count as ok
  bool ok() const { return attempted > 0 && failures.empty(); }
};

// Build a module from its textual description: "virasoro", or
// "affine:<name-or-path>" resolved through the Lie spec loader.  `central`
// is the level or central charge.  Shared by the suites and the front end.
std::unique_ptr<Carrier> makeCarrier(const std::string& carrier, uint32_t p, long long central,
                                     long long truncation);

// names accepted by runSuite, in the order runAllSuites executes them
const std::vector<std::string>& suiteCatalog();

// throws std::invalid_argument on an unknown name or out-of-range parameters
// (std::domain_error if the modulus itself is bad, as everywhere else)
SuiteReport runSuite(const std::string& name, const SuiteParams& params);
std::vector<SuiteReport> runAllSuites(const SuiteParams& params);

nlohmann::json suiteReportToJson(const SuiteReport& r);

// ---- truncated operator-series identities ----------------------------------
//
// Identities of the shape  F_1 F_2 ... = G_1 G_2 ...  where each factor is
// one of
//   - exp(S * X)   for a primitive family X and a scalar series S(z, z0),
//   - the degree series (1 - z z0)^{-2 deg},
//   - a vertex-operator insertion Y(v, u) with u = z0 or u = z0/(1 - z z0),
//   - a plain scalar series,
// are verified by applying both sides to basis vectors and comparing the
// (z^a z0^t)-coefficients inside a truncation window.  z carries only the
// raising direction, so exponents of z never decrease through a factor; z0
// exponents decrease only inside a vertex insertion.  Terms whose degree
// leaves the carrier window are dropped: by the degree bookkeeping they can
// only feed coefficients outside the comparable range.

struct TruncOrders {
  int zMax = 3;
  int z0Min = -12;  // vertex factors reach down to z0^{-deg-...}
  int z0Max = 3;
};

struct OpFactor {
  enum class Kind { Exp, DegSeries, Vertex, Scalar };

  Kind kind;
  HFam fam = HFam::Raise;            // Exp: family in the exponent
  std::optional<TruncSeries> coeff;  // Exp / Scalar: scalar series in (z, z0)
  std::optional<GradedVector> insert;  // Vertex: the inserted state
  std::vector<OpFactor> insertOps;   // Vertex: factors conjugating the insert
  bool moebius = false;              // Vertex: substitute z0/(1 - z z0)

  static OpFactor exp(HFam f, TruncSeries s) {
    OpFactor o{Kind::Exp};
    o.fam = f;
    o.coeff = std::move(s);
    return o;
  }
  static OpFactor degSeries() { return OpFactor{Kind::DegSeries}; }
  static OpFactor vertex(GradedVector v, std::vector<OpFactor> ops = {}, bool moeb = false) {
    OpFactor o{Kind::Vertex};
    o.insert = std::move(v);
    o.insertOps = std::move(ops);
    o.moebius = moeb;
    return o;
  }
  static OpFactor scalar(TruncSeries s) {
    OpFactor o{Kind::Scalar};
    o.coeff = std::move(s);
    return o;
  }

 private:
  explicit OpFactor(Kind k) : kind(k) {}
};

// coefficient table of an operator series applied to one vector
using OpSeries = std::map<std::pair<int, int>, GradedVector>;

// factors are listed left to right as written; the rightmost acts first
OpSeries evalOpSeries(const Carrier& c, const std::vector<OpFactor>& ops, const GradedVector& w,
                      const TruncOrders& t);

// Compares lhs and rhs on every basis vector of degree <= degreeMax,
// coefficient by coefficient over the comparable window (z0 exponent at most
// truncation - degree - insertDegree, where insertDegree is the largest
// degree inserted into a vertex factor; 0 without vertex factors).  Counts
// each compared coefficient into *attempted and returns the first mismatch,
// enumerating degrees, basis words and exponents smallest first so the
// witness is minimal.
std::optional<FailureWitness> verifyTruncatedIdentity(const Carrier& c,
                                                      const std::vector<OpFactor>& lhs,
                                                      const std::vector<OpFactor>& rhs,
                                                      const TruncOrders& t, long long degreeMax,
                                                      long long insertDegree,
                                                      long long* attempted);

}  // namespace modva
