#include "modva/forms.hpp"

#include <algorithm>
#include <sstream>

namespace modva {

AdjointExpansion adjointModes(const Carrier& c, const GradedVector& v, long long m) {
  long long d = 0;
  if (!v.homogeneous(&d)) throw std::invalid_argument("adjointModes needs a homogeneous vector");
  uint32_t sign = signPow(d, c.p());
  AdjointExpansion out;
  for (long long i = 0; i <= d; ++i) {
    GradedVector raised = c.hAction(HFam::Raise, i, v);
    if (raised.isZero()) continue;
    out.push_back(AdjointTerm{sign, std::move(raised), 2 * d - m - 2 - i});
  }
  return out;
}

GradedVector applyAdjoint(const Carrier& c, const AdjointExpansion& e, const GradedVector& w) {
  GradedVector out = c.zero();
  for (auto& t : e) out = out + c.compositeMode(t.vec, t.mode, w).scaled(t.coeff);
  return out;
}

uint32_t BilinearForm::pairWords(const PbwWord& u, const PbwWord& v) const {
  uint32_t p = c_.p();
  if (u.modes.empty() && v.modes.empty()) return 1 % p;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find({u, v});
    if (it != memo_.end()) return it->second;
  }

  bool affine = c_.kind() == CarrierKind::Affine;
  uint64_t acc = 0;
  if (!u.modes.empty()) {
    // (x(-s) u', v) = sign (u', x(s) v)
    PbwMode x = u.modes.front();
    PbwWord up{std::vector<PbwMode>(u.modes.begin() + 1, u.modes.end())};
    GradedVector xv = c_.zero();
    xv.add(v, 1);
    xv = c_.applyMode(x.gen, -x.n, xv);
    for (auto& [w2, c2] : xv.terms())
      acc += static_cast<uint64_t>(c2) * pairWords(up, w2) % p;
  } else {
    // (1, y(-s) v') = sign (y(s) 1, v') = 0; same peel on the right slot
    PbwMode y = v.modes.front();
    PbwWord vp{std::vector<PbwMode>(v.modes.begin() + 1, v.modes.end())};
    GradedVector yu = c_.zero();
    yu.add(u, 1);
    yu = c_.applyMode(y.gen, -y.n, yu);
    for (auto& [w2, c2] : yu.terms())
      acc += static_cast<uint64_t>(c2) * pairWords(w2, vp) % p;
  }
  uint32_t r = static_cast<uint32_t>(acc % p);
  if (affine) r = negMod(r, p);

  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(std::make_pair(u, v), r);
  return r;
}

uint32_t BilinearForm::pair(const GradedVector& u, const GradedVector& v) const {
  uint32_t p = c_.p();
  uint64_t acc = 0;
  for (auto& [wu, cu] : u.terms())
    for (auto& [wv, cv] : v.terms())
      acc += static_cast<uint64_t>(mulMod(cu, cv, p)) * pairWords(wu, wv) % p;
  return static_cast<uint32_t>(acc % p);
}

GramRow BilinearForm::gramRow(long long degree) const {
  GramRow row;
  row.degree = degree;
  row.basis = c_.basis(degree);
  size_t n = row.basis.size();
  row.matrix.assign(n, std::vector<uint32_t>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) row.matrix[i][j] = pairWords(row.basis[i], row.basis[j]);
  auto [rank, radical] = rankRadical(row.matrix, c_.p());
  row.rank = rank;
  row.radical = std::move(radical);
  return row;
}

std::pair<long long, std::vector<std::vector<uint32_t>>> rankRadical(
    const std::vector<std::vector<uint32_t>>& matrix, uint32_t p) {
  size_t n = matrix.size();
  FpMatrix m = FpMatrix::fromRows(matrix, n, p);
  return {static_cast<long long>(m.rank()), m.kernelBasis()};
}

nlohmann::json gramRowToJson(const Carrier& c, const GramRow& row) {
  nlohmann::ordered_json j;
  j["degree"] = row.degree;
  std::vector<std::string> names;
  names.reserve(row.basis.size());
  for (auto& w : row.basis) names.push_back(c.wordStr(w));
  j["basis"] = names;
  j["matrix"] = row.matrix;
  j["rank"] = row.rank;
  j["radical"] = row.radical;
  return j;
}

std::string gramRowToCsv(const GramRow& row) {
  std::ostringstream os;
  for (size_t i = 0; i < row.matrix.size(); ++i)
    for (size_t j = 0; j < row.matrix[i].size(); ++j)
      os << row.degree << "," << i << "," << j << "," << row.matrix[i][j] << "\n";
  return os.str();
}

FormSpaceResult formSpaceDim(const Carrier& c) {
  size_t dim0 = c.basis(0).size();
  uint32_t p = c.p();
  std::vector<std::vector<uint32_t>> rows;
  auto& b0 = c.basis(0);
  auto coordsOf = [&](const GradedVector& v) {
    std::vector<uint32_t> r(dim0, 0);
    for (auto& [w, coeff] : v.terms()) {
      auto it = std::lower_bound(b0.begin(), b0.end(), w);
      r[static_cast<size_t>(it - b0.begin())] = coeff;
    }
    return r;
  };
  size_t lastRank = 0;
  bool grewAtTop = false;
  for (long long n = 1; n <= c.truncation(); ++n) {
    for (auto& w : c.basis(n)) {
      GradedVector v = c.zero();
      v.add(w, 1);
      GradedVector img = c.hAction(HFam::Raise, n, v);
      if (!img.isZero()) rows.push_back(coordsOf(img));
    }
    size_t r = rows.empty() ? 0 : FpMatrix::fromRows(rows, dim0, p).rank();
    if (n == c.truncation() && r > lastRank) grewAtTop = true;
    lastRank = r;
  }
  FormSpaceResult res;
  res.dim = static_cast<long long>(dim0 - lastRank);
  res.stabilized = !grewAtTop;
  return res;
}

SubsetCheckResult lminusSubsetCheck(const Carrier& c) {
  SubsetCheckResult res;
  // (D^+ V)_0 draws on V_{-n} for n >= 1, which is zero by the carrier's
  // grading invariant, so the left side is always the zero space here.
  res.lhsDim = 0;
  size_t dim0 = c.basis(0).size();
  std::vector<std::vector<uint32_t>> rows;
  auto& b0 = c.basis(0);
  for (long long n = 1; n <= c.truncation(); ++n)
    for (auto& w : c.basis(n)) {
      GradedVector v = c.zero();
      v.add(w, 1);
      GradedVector img = c.hAction(HFam::Raise, n, v);
      std::vector<uint32_t> r(dim0, 0);
      bool nonzero = false;
      for (auto& [ww, coeff] : img.terms()) {
        auto it = std::lower_bound(b0.begin(), b0.end(), ww);
        r[static_cast<size_t>(it - b0.begin())] = coeff;
        nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(r));
    }
  res.rhsDim = rows.empty() ? 0 : static_cast<long long>(FpMatrix::fromRows(rows, dim0, c.p()).rank());
  res.holds = true;  // 0 is contained in everything
  return res;
}

namespace {

// matrix of x_gen(m): V_d -> V_{d-m}, columns over basis(d)
FpMatrix modeMatrix(const Carrier& c, int gen, long long m, long long d) {
  auto& src = c.basis(d);
  auto& dst = c.basis(d - m);
  FpMatrix out(dst.size(), src.size(), c.p());
  for (size_t j = 0; j < src.size(); ++j) {
    GradedVector v = c.zero();
    v.add(src[j], 1);
    GradedVector img = c.applyMode(gen, m, v);
    for (auto& [w, coeff] : img.terms()) {
      auto it = std::lower_bound(dst.begin(), dst.end(), w);
      out.at(static_cast<size_t>(it - dst.begin()), j) = coeff;
    }
  }
  return out;
}

// rows of (ann * M) — constraints "M v lies in the subspace annihilated by ann"
void appendConstraints(std::vector<std::vector<uint32_t>>& rows, const FpMatrix& ann,
                       const FpMatrix& m) {
  uint32_t p = m.p();
  for (size_t i = 0; i < ann.rows(); ++i) {
    std::vector<uint32_t> row(m.cols(), 0);
    bool nonzero = false;
    for (size_t j = 0; j < m.cols(); ++j) {
      uint64_t acc = 0;
      for (size_t k = 0; k < m.rows(); ++k)
        acc += static_cast<uint64_t>(ann.at(i, k)) * m.at(k, j) % p;
      row[j] = static_cast<uint32_t>(acc % p);
      nonzero |= row[j] != 0;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
}

}  // namespace

std::vector<std::vector<uint32_t>> annihilationRadical(const Carrier& c, long long degree) {
  uint32_t p = c.p();
  int gens = c.numGens();
  // S_d = largest family with S_0 = 0 and x(m) S_d inside S_{d-m} for all
  // generators and 0 <= m <= d; ann_d spans the functionals vanishing on S_d
  std::vector<FpMatrix> ann;  // per degree
  std::vector<std::vector<std::vector<uint32_t>>> bases;
  for (long long d = 0; d <= degree; ++d) {
    size_t dim = c.basis(d).size();
    if (d == 0) {
      // S_0 = 0: annihilator is everything
      FpMatrix a(dim, dim, p);
      for (size_t i = 0; i < dim; ++i) a.at(i, i) = 1;
      ann.push_back(std::move(a));
      bases.emplace_back();
      continue;
    }
    // strict lowering constraints first
    std::vector<std::vector<uint32_t>> rows;
    for (long long m = 1; m <= d; ++m)
      for (int g = 0; g < gens; ++g)
        appendConstraints(rows, ann[static_cast<size_t>(d - m)], modeMatrix(c, g, m, d));
    std::vector<std::vector<uint32_t>> cur =
        rows.empty() ? FpMatrix(0, dim, p).kernelBasis()
                     : FpMatrix::fromRows(rows, dim, p).kernelBasis();
    // then shrink under the degree-preserving modes to the greatest fixed
    // point of  T = cur  intersect  {v : x(0) v in span(T)}
    std::vector<FpMatrix> zeroModes;
    for (int g = 0; g < gens; ++g) zeroModes.push_back(modeMatrix(c, g, 0, d));
    while (!cur.empty()) {
      std::vector<std::vector<uint32_t>> annCur = FpMatrix::fromRows(cur, dim, p).kernelBasis();
      FpMatrix annMat =
          annCur.empty() ? FpMatrix(0, dim, p) : FpMatrix::fromRows(annCur, dim, p);
      std::vector<std::vector<uint32_t>> constraints = annCur;  // membership in span(cur)
      for (auto& m0 : zeroModes) appendConstraints(constraints, annMat, m0);
      std::vector<std::vector<uint32_t>> next =
          constraints.empty() ? FpMatrix(0, dim, p).kernelBasis()
                              : FpMatrix::fromRows(constraints, dim, p).kernelBasis();
      bool stable = next.size() == cur.size();
      cur = std::move(next);
      if (stable) break;
    }
    // annihilator functionals of the computed slice
    if (cur.empty()) {
      FpMatrix full(dim, dim, p);
      for (size_t i = 0; i < dim; ++i) full.at(i, i) = 1;
      ann.push_back(std::move(full));
    } else {
      std::vector<std::vector<uint32_t>> af = FpMatrix::fromRows(cur, dim, p).kernelBasis();
      ann.push_back(af.empty() ? FpMatrix(0, dim, p) : FpMatrix::fromRows(af, dim, p));
    }
    bases.push_back(cur);
  }
  return bases[static_cast<size_t>(degree)];
}

std::vector<std::pair<long long, long long>> simpleQuotientDims(const BilinearForm& form) {
  std::vector<std::pair<long long, long long>> out;
  for (long long d = 0; d <= form.carrier().truncation(); ++d)
    out.emplace_back(d, form.gramRow(d).rank);
  return out;
}

// ---- contragredient dual ---------------------------------------------------

DualCarrier::DualCarrier(const Carrier& c, long long window) : c_(c), window_(window) {
  if (window < 0 || window > c.truncation())
    throw CarrierOverflow("dual window outside the carrier truncation");
}

size_t DualCarrier::wordIndex(long long degree, const PbwWord& w) const {
  auto& b = c_.basis(degree);
  auto it = std::lower_bound(b.begin(), b.end(), w);
  return static_cast<size_t>(it - b.begin());
}

DualVector DualCarrier::zero(long long degree) const {
  if (degree < 0 || degree > window_) throw CarrierOverflow("dual degree outside window");
  return DualVector{degree, std::vector<uint32_t>(c_.basis(degree).size(), 0)};
}

DualVector DualCarrier::dualBasisVector(long long degree, size_t idx) const {
  DualVector f = zero(degree);
  if (idx >= f.coords.size()) throw std::out_of_range("dual basis index");
  f.coords[idx] = 1;
  return f;
}

uint32_t DualCarrier::pairing(const DualVector& f, const GradedVector& w) const {
  uint32_t p = c_.p();
  uint64_t acc = 0;
  for (auto& [ww, cw] : w.terms()) {
    if (ww.degree() != f.degree) continue;
    acc += static_cast<uint64_t>(f.coords[wordIndex(f.degree, ww)]) * cw % p;
  }
  return static_cast<uint32_t>(acc % p);
}

DualVector DualCarrier::hAction(HFam fam, long long r, const DualVector& f) const {
  // theta swaps Lower and Raise
  HFam tw = fam == HFam::Lower ? HFam::Raise : fam == HFam::Raise ? HFam::Lower : HFam::Diag;
  long long shift = fam == HFam::Lower ? r : fam == HFam::Raise ? -r : 0;
  DualVector out = zero(f.degree + shift);
  auto& b = c_.basis(out.degree);
  for (size_t j = 0; j < b.size(); ++j) {
    GradedVector v = c_.zero();
    v.add(b[j], 1);
    out.coords[j] = pairing(f, c_.hAction(tw, r, v));
  }
  return out;
}

DualVector DualCarrier::hActionElement(const HElement& a, const DualVector& f) const {
  if (a.p() != c_.p()) throw std::invalid_argument("modulus mismatch with dual carrier");
  // sum over PBW monomials, rightmost family first
  std::map<long long, DualVector> acc;  // by degree
  for (auto& [m, coeff] : a.terms()) {
    DualVector g = hAction(HFam::Raise, m.k, f);
    g = hAction(HFam::Diag, m.j, g);
    g = hAction(HFam::Lower, m.i, g);
    for (auto& x : g.coords) x = mulMod(x, coeff, c_.p());
    auto [it, fresh] = acc.emplace(g.degree, g);
    if (!fresh)
      for (size_t i = 0; i < g.coords.size(); ++i)
        it->second.coords[i] = addMod(it->second.coords[i], g.coords[i], c_.p());
  }
  if (acc.empty()) return zero(f.degree);
  if (acc.size() != 1)
    throw std::invalid_argument("dual action of an element mixing grades is not supported");
  return acc.begin()->second;
}

DualVector DualCarrier::primeMode(const GradedVector& v, long long m, const DualVector& f) const {
  long long d = 0;
  if (!v.homogeneous(&d)) throw std::invalid_argument("primeMode needs a homogeneous vector");
  AdjointExpansion e = adjointModes(c_, v, m);
  DualVector out = zero(f.degree + d - m - 1);
  auto& b = c_.basis(out.degree);
  for (size_t j = 0; j < b.size(); ++j) {
    GradedVector w = c_.zero();
    w.add(b[j], 1);
    out.coords[j] = pairing(f, applyAdjoint(c_, e, w));
  }
  return out;
}

DualVector DualCarrier::generatorPrimeMode(int gen, long long m, const DualVector& f) const {
  bool affine = c_.kind() == CarrierKind::Affine;
  DualVector out = zero(f.degree - m);
  auto& b = c_.basis(out.degree);
  for (size_t j = 0; j < b.size(); ++j) {
    GradedVector w = c_.zero();
    w.add(b[j], 1);
    uint32_t val = pairing(f, c_.applyMode(gen, -m, w));
    out.coords[j] = affine ? negMod(val, c_.p()) : val;
  }
  return out;
}

bool DualCarrier::equal(const DualVector& a, const DualVector& b) const {
  return a.degree == b.degree && a.coords == b.coords;
}

}  // namespace modva
