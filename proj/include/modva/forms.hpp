#pragma once

#include <mutex>
#include <utility>
#include <vector>

#include "modva/carrier.hpp"
#include "modva/linalg.hpp"

#include "json.hpp"

namespace modva {

// One term of an adjoint-mode expansion: coeff * (vec)_mode as an operator.
struct AdjointTerm {
  uint32_t coeff;
  GradedVector vec;
  long long mode;
};
using AdjointExpansion = std::vector<AdjointTerm>;

// Adjoint of the mode v_m with respect to the invariant pairing:
//   v'_m = (-1)^{deg v} sum_i (L1^(i) v)_{2 deg v - m - 2 - i}
// Finite because raising by more than deg v kills v.  v must be homogeneous.
AdjointExpansion adjointModes(const Carrier& c, const GradedVector& v, long long m);

// Evaluate an expansion against a vector (sum of composite modes).
GradedVector applyAdjoint(const Carrier& c, const AdjointExpansion& e, const GradedVector& w);

struct GramRow {
  long long degree = 0;
  std::vector<PbwWord> basis;
  std::vector<std::vector<uint32_t>> matrix;
  long long rank = 0;
  std::vector<std::vector<uint32_t>> radical;  // kernel basis in canonical coordinates
};

// The invariant bilinear form normalized by (1, 1) = 1, computed by peeling
// the leading creation mode of the left argument through its adjoint:
//   affine   (a(-s) u', v) = -(u', a(s) v)
//   Virasoro (L_{-s} u', v) = (u', L_s v)
// The same identity applied on the right handles a vacuum left argument, so
// no symmetry assumption enters the computation; symmetry is a checked
// property, not an input.
class BilinearForm {
 public:
  explicit BilinearForm(const Carrier& c) : c_(c) {}

  const Carrier& carrier() const { return c_; }

  uint32_t pairWords(const PbwWord& u, const PbwWord& v) const;
  uint32_t pair(const GradedVector& u, const GradedVector& v) const;

  GramRow gramRow(long long degree) const;

 private:
  const Carrier& c_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<PbwWord, PbwWord>, uint32_t> memo_;
};

// exact rank and kernel basis of a square matrix mod p
std::pair<long long, std::vector<std::vector<uint32_t>>> rankRadical(
    const std::vector<std::vector<uint32_t>>& matrix, uint32_t p);

nlohmann::json gramRowToJson(const Carrier& c, const GramRow& row);
// one line per matrix entry: degree,row,col,value
std::string gramRowToCsv(const GramRow& row);

struct FormSpaceResult {
  long long dim = 0;
  bool stabilized = false;  // false means the answer is truncation-limited
};

// dim V_0 minus the dimension of span sum_{n=1..N} (E^(n) V_n)_0
FormSpaceResult formSpaceDim(const Carrier& c);

struct SubsetCheckResult {
  bool holds = false;
  long long lhsDim = 0;  // dim (D^+ V)_0
  long long rhsDim = 0;  // dim (E^+ V)_0
};

// containment (D^+ V)_0 subset of (E^+ V)_0; the left side draws on negative
// degrees, which vanish for both builtin carrier families
SubsetCheckResult lminusSubsetCheck(const Carrier& c);

// Basis (rows, in c.basis(degree) coordinates) of the degree slice of the
// maximal graded submodule: vectors whose orbit under modes of nonnegative
// index never reaches degree zero.  Independent of the bilinear form; used
// as the oracle for Gram radicals.
std::vector<std::vector<uint32_t>> annihilationRadical(const Carrier& c, long long degree);

// graded dimensions of the quotient by the form radical: (degree, rank) pairs
std::vector<std::pair<long long, long long>> simpleQuotientDims(const BilinearForm& form);

// ---- contragredient dual ---------------------------------------------------

// Functional on the degree slice it is graded by, in coordinates dual to
// the canonical basis of that slice.
struct DualVector {
  long long degree = 0;
  std::vector<uint32_t> coords;
};

// Graded dual of a carrier window with the transposed structure: the Hopf
// algebra acts through theta, and the dual vertex modes come from
// adjointModes.  All operators are realized as explicit transposes against
// the canonical bases, so every identity can be checked coordinatewise.
class DualCarrier {
 public:
  DualCarrier(const Carrier& c, long long window);

  const Carrier& carrier() const { return c_; }
  long long window() const { return window_; }
  uint32_t p() const { return c_.p(); }

  DualVector zero(long long degree) const;
  DualVector dualBasisVector(long long degree, size_t idx) const;
  // <f, w>; only the degree-matching component of w contributes
  uint32_t pairing(const DualVector& f, const GradedVector& w) const;

  // <b^(r) f, w> = <f, theta(b^(r)) w>  (theta swaps the lowering and
  // raising families and fixes the diagonal one)
  DualVector hAction(HFam fam, long long r, const DualVector& f) const;
  DualVector hActionElement(const HElement& a, const DualVector& f) const;

  // dual vertex mode: <v'_m f, w> = <f, (sum of adjoint terms) w>
  DualVector primeMode(const GradedVector& v, long long m, const DualVector& f) const;
  // affine: a'(m) = transpose of -a(-m); Virasoro: L'(m) = transpose of L(-m)
  DualVector generatorPrimeMode(int gen, long long m, const DualVector& f) const;

  bool equal(const DualVector& a, const DualVector& b) const;

 private:
  size_t wordIndex(long long degree, const PbwWord& w) const;

  const Carrier& c_;
  long long window_;
};

}  // namespace modva
