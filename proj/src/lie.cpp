#include "modva/lie.hpp"

#include <fstream>
#include <set>

namespace modva {

namespace {

std::vector<std::vector<std::vector<uint32_t>>> emptyBracket(size_t dim) {
  return std::vector<std::vector<std::vector<uint32_t>>>(
      dim, std::vector<std::vector<uint32_t>>(dim, std::vector<uint32_t>(dim, 0)));
}

// install [x_a, x_b] += c x_d together with its antisymmetric mirror
void addBracket(LieSpec& spec, size_t a, size_t b, size_t d, long long c) {
  uint32_t cc = normMod(c, spec.p);
  spec.bracket[a][b][d] = addMod(spec.bracket[a][b][d], cc, spec.p);
  spec.bracket[b][a][d] = subMod(spec.bracket[b][a][d], cc, spec.p);
}

}  // namespace

void validateLieSpec(const LieSpec& spec) {
  checkModulus(spec.p);
  const size_t dim = spec.dim();
  if (dim == 0) throw LieValidationError("shape", {-1, -1, -1}, "empty basis");
  {
    std::set<std::string> seen;
    for (auto& name : spec.basis) {
      if (name.empty()) throw LieValidationError("shape", {-1, -1, -1}, "empty basis name");
      if (!seen.insert(name).second)
        throw LieValidationError("shape", {-1, -1, -1}, "duplicate basis name " + name);
    }
  }
  if (spec.bracket.size() != dim || spec.form.size() != dim)
    throw LieValidationError("shape", {-1, -1, -1}, "structure tables do not match basis size");
  for (size_t a = 0; a < dim; ++a) {
    if (spec.bracket[a].size() != dim || spec.form[a].size() != dim)
      throw LieValidationError("shape", {static_cast<int>(a), -1, -1}, "ragged table row");
    for (size_t b = 0; b < dim; ++b)
      if (spec.bracket[a][b].size() != dim)
        throw LieValidationError("shape", {static_cast<int>(a), static_cast<int>(b), -1}, "ragged bracket entry");
  }

  const uint32_t p = spec.p;
  for (size_t a = 0; a < dim; ++a)
    for (size_t b = 0; b < dim; ++b) {
      if (spec.form[a][b] >= p || spec.form[a][b] != spec.form[b][a])
        throw LieValidationError("symmetry", {static_cast<int>(a), static_cast<int>(b), -1},
                                 "<" + spec.basis[a] + "," + spec.basis[b] + "> != <" + spec.basis[b] +
                                     "," + spec.basis[a] + ">");
      for (size_t d = 0; d < dim; ++d) {
        if (spec.bracket[a][b][d] >= p)
          throw LieValidationError("shape", {static_cast<int>(a), static_cast<int>(b), static_cast<int>(d)},
                                   "structure constant out of range");
        if (spec.bracket[a][b][d] != negMod(spec.bracket[b][a][d], p))
          throw LieValidationError("antisymmetry", {static_cast<int>(a), static_cast<int>(b), -1},
                                   "[" + spec.basis[a] + "," + spec.basis[b] + "] != -[" + spec.basis[b] +
                                       "," + spec.basis[a] + "]");
      }
    }

  // Jacobi: [[a,b],c] + [[b,c],a] + [[c,a],b] = 0, checked per output coord
  for (size_t a = 0; a < dim; ++a)
    for (size_t b = 0; b < dim; ++b)
      for (size_t c = 0; c < dim; ++c)
        for (size_t e = 0; e < dim; ++e) {
          uint32_t s = 0;
          for (size_t d = 0; d < dim; ++d) {
            s = addMod(s, mulMod(spec.bracket[a][b][d], spec.bracket[d][c][e], p), p);
            s = addMod(s, mulMod(spec.bracket[b][c][d], spec.bracket[d][a][e], p), p);
            s = addMod(s, mulMod(spec.bracket[c][a][d], spec.bracket[d][b][e], p), p);
          }
          if (s != 0)
            throw LieValidationError(
                "jacobi", {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)},
                "[[" + spec.basis[a] + "," + spec.basis[b] + "]," + spec.basis[c] + "] + cyclic != 0");
        }

  // invariance: <[a,b],c> = <a,[b,c]>
  for (size_t a = 0; a < dim; ++a)
    for (size_t b = 0; b < dim; ++b)
      for (size_t c = 0; c < dim; ++c) {
        uint32_t lhs = 0, rhs = 0;
        for (size_t d = 0; d < dim; ++d) {
          lhs = addMod(lhs, mulMod(spec.bracket[a][b][d], spec.form[d][c], p), p);
          rhs = addMod(rhs, mulMod(spec.bracket[b][c][d], spec.form[a][d], p), p);
        }
        if (lhs != rhs)
          throw LieValidationError(
              "invariance", {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)},
              "<[" + spec.basis[a] + "," + spec.basis[b] + "]," + spec.basis[c] + "> != <" + spec.basis[a] +
                  ",[" + spec.basis[b] + "," + spec.basis[c] + "]>");
      }
}

LieSpec sl2Spec(uint32_t p) {
  LieSpec s;
  s.p = p;
  s.basis = {"e", "h", "f"};
  s.bracket = emptyBracket(3);
  s.form.assign(3, std::vector<uint32_t>(3, 0));
  addBracket(s, 0, 2, 1, 1);   // [e,f] = h
  addBracket(s, 1, 0, 0, 2);   // [h,e] = 2e
  addBracket(s, 1, 2, 2, -2);  // [h,f] = -2f
  s.form[0][2] = s.form[2][0] = 1 % p;  // <e,f> = 1
  s.form[1][1] = normMod(2, p);         // <h,h> = 2
  validateLieSpec(s);
  return s;
}

LieSpec abelian1Spec(uint32_t p) {
  LieSpec s;
  s.p = p;
  s.basis = {"a"};
  s.bracket = emptyBracket(1);
  s.form = {{1 % p}};
  validateLieSpec(s);
  return s;
}

LieSpec lieSpecFromJson(const nlohmann::json& j, std::optional<uint32_t> overrideP) {
  if (!j.is_object()) throw LieValidationError("shape", {-1, -1, -1}, "spec is not a JSON object");
  LieSpec s;
  if (j.contains("p")) {
    long long p = j.at("p").get<long long>();
    checkModulus(p);
    s.p = static_cast<uint32_t>(p);
    if (overrideP && *overrideP != s.p)
      throw LieValidationError("shape", {-1, -1, -1},
                               "spec modulus " + std::to_string(s.p) + " conflicts with requested " +
                                   std::to_string(*overrideP));
  } else if (overrideP) {
    s.p = *overrideP;
    checkModulus(s.p);
  } else {
    throw LieValidationError("shape", {-1, -1, -1}, "no modulus: spec lacks \"p\" and none was given");
  }

  s.basis = j.at("basis").get<std::vector<std::string>>();
  const size_t dim = s.basis.size();
  s.bracket = emptyBracket(dim);
  if (j.contains("brackets"))
    for (auto& entry : j.at("brackets")) {
      if (!entry.is_array() || entry.size() != 4)
        throw LieValidationError("shape", {-1, -1, -1}, "brackets entries must be [a, b, d, coeff]");
      long long a = entry[0].get<long long>(), b = entry[1].get<long long>(),
                d = entry[2].get<long long>(), c = entry[3].get<long long>();
      if (a < 0 || b < 0 || d < 0 || a >= static_cast<long long>(dim) ||
          b >= static_cast<long long>(dim) || d >= static_cast<long long>(dim))
        throw LieValidationError("shape", {static_cast<int>(a), static_cast<int>(b), static_cast<int>(d)},
                                 "bracket index out of range");
      if (a == b)
        throw LieValidationError("antisymmetry", {static_cast<int>(a), static_cast<int>(b), -1},
                                 "bracket entry with repeated basis vector");
      addBracket(s, static_cast<size_t>(a), static_cast<size_t>(b), static_cast<size_t>(d), c);
    }

  auto rows = j.at("form").get<std::vector<std::vector<long long>>>();
  if (rows.size() != dim) throw LieValidationError("shape", {-1, -1, -1}, "form must be dim x dim");
  s.form.assign(dim, std::vector<uint32_t>(dim, 0));
  for (size_t a = 0; a < dim; ++a) {
    if (rows[a].size() != dim) throw LieValidationError("shape", {static_cast<int>(a), -1, -1}, "ragged form row");
    for (size_t b = 0; b < dim; ++b) s.form[a][b] = normMod(rows[a][b], s.p);
  }

  validateLieSpec(s);
  return s;
}

nlohmann::json lieSpecToJson(const LieSpec& spec) {
  nlohmann::ordered_json j;
  j["p"] = spec.p;
  j["basis"] = spec.basis;
  nlohmann::ordered_json brackets = nlohmann::json::array();
  for (size_t a = 0; a < spec.dim(); ++a)
    for (size_t b = a + 1; b < spec.dim(); ++b)
      for (size_t d = 0; d < spec.dim(); ++d)
        if (spec.bracket[a][b][d] != 0) brackets.push_back({a, b, d, spec.bracket[a][b][d]});
  j["brackets"] = brackets;
  nlohmann::ordered_json form = nlohmann::json::array();
  for (auto& row : spec.form) form.push_back(row);
  j["form"] = form;
  return j;
}

LieSpec resolveLieSpec(const std::string& nameOrPath, std::optional<uint32_t> overrideP) {
  if (nameOrPath == "sl2") {
    if (!overrideP) throw std::invalid_argument("builtin lie spec needs a modulus");
    return sl2Spec(*overrideP);
  }
  if (nameOrPath == "abelian1") {
    if (!overrideP) throw std::invalid_argument("builtin lie spec needs a modulus");
    return abelian1Spec(*overrideP);
  }
  std::ifstream in(nameOrPath);
  if (!in) throw std::invalid_argument("cannot open lie spec file: " + nameOrPath);
  nlohmann::json j;
  in >> j;
  return lieSpecFromJson(j, overrideP);
}

ModeElement affineBracket(const LieSpec& spec, int ga, long long m, int gb, long long n) {
  ModeElement r(spec.p);
  const size_t a = static_cast<size_t>(ga), b = static_cast<size_t>(gb);
  for (size_t d = 0; d < spec.dim(); ++d) r.add(static_cast<int>(d), m + n, spec.bracket[a][b][d]);
  if (m + n == 0) r.addCentral(mulMod(normMod(m, spec.p), spec.form[a][b], spec.p));
  return r;
}

ModeElement virasoroBracket(uint32_t p, long long m, long long n) {
  ModeElement r(p);
  r.add(0, m + n, normMod(m - n, p));
  if (m + n == 0) {
    uint32_t half = invMod(2 % p, p);
    r.addCentral(mulMod(binomMod(m + 1, 3, p), half, p));
  }
  return r;
}

namespace {

// shared shape of the three families: coefficient binom(arg, r) and an index
// shift; weight w is 1 for affine generator modes and 2 for Virasoro ones
std::pair<uint32_t, long long> familyCoeff(uint32_t p, HFam f, long long r, long long n, long long w) {
  switch (f) {
    case HFam::Lower:
      return {mulMod(signPow(r, p), binomMod(n + w - 1, r, p), p), n - r};
    case HFam::Diag:
      return {binomMod(2 * n, r, p), n};
    case HFam::Raise:
      return {binomMod(-n + w - 1, r, p), n + r};
  }
  return {0, n};
}

}  // namespace

ModeElement hActionAffineMode(uint32_t p, HFam f, long long r, int gen, long long n) {
  ModeElement out(p);
  auto [c, idx] = familyCoeff(p, f, r, n, 1);
  out.add(gen, idx, c);
  return out;
}

ModeElement hActionVirMode(uint32_t p, HFam f, long long r, long long n) {
  ModeElement out(p);
  auto [c, idx] = familyCoeff(p, f, r, n, 2);
  out.add(0, idx, c);
  return out;
}

ModeElement hActionAffine(const LieSpec& spec, HFam f, long long r, const ModeElement& x) {
  ModeElement out(spec.p);
  for (auto& [key, c] : x.terms()) {
    ModeElement part = hActionAffineMode(spec.p, f, r, key.first, key.second).scaled(c);
    out = out + part;
  }
  if (r == 0) out.addCentral(x.central());
  return out;
}

ModeElement hActionVir(uint32_t p, HFam f, long long r, const ModeElement& x) {
  ModeElement out(p);
  for (auto& [key, c] : x.terms()) out = out + hActionVirMode(p, f, r, key.second).scaled(c);
  if (r == 0) out.addCentral(x.central());
  return out;
}

}  // namespace modva
