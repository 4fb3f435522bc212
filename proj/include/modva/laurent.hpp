#pragma once

#include <map>
#include <sstream>
#include <string>

#include "modva/binom.hpp"
#include "modva/fp.hpp"

namespace modva {

// Laurent polynomial over F_p: finitely many terms c_m x^m, m any integer.
// The map keeps exponents sorted and never stores zero coefficients.
class LaurentPoly {
 public:
  explicit LaurentPoly(uint32_t p) : p_(p) {}

  static LaurentPoly monomial(uint32_t p, long long m, long long c = 1) {
    LaurentPoly f(p);
    f.add(m, normMod(c, p));
    return f;
  }

  uint32_t p() const { return p_; }
  const std::map<long long, uint32_t>& coeffs() const { return c_; }
  bool isZero() const { return c_.empty(); }

  uint32_t coeff(long long m) const {
    auto it = c_.find(m);
    return it == c_.end() ? 0u : it->second;
  }

  void add(long long m, uint32_t c) {
    if (c == 0) return;
    auto [it, fresh] = c_.emplace(m, c);
    if (!fresh) {
      it->second = addMod(it->second, c, p_);
      if (it->second == 0) c_.erase(it);
    }
  }

  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [m, c] : o.c_) r.add(m, c);
    return r;
  }

  LaurentPoly operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [m, c] : o.c_) r.add(m, negMod(c, p_));
    return r;
  }

  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r(p_);
    for (auto& [m, c] : c_)
      for (auto& [n, d] : o.c_) r.add(m + n, mulMod(c, d, p_));
    return r;
  }

  LaurentPoly scaled(long long s) const {
    LaurentPoly r(p_);
    uint32_t sc = normMod(s, p_);
    for (auto& [m, c] : c_) r.add(m, mulMod(c, sc, p_));
    return r;
  }

  bool operator==(const LaurentPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : c_) {
      long long s = symMod(c, p_);
      if (!first) os << (s < 0 ? " - " : " + ");
      else if (s < 0) os << "-";
      first = false;
      long long a = s < 0 ? -s : s;
      if (a != 1 || m == 0) os << a;
      if (m != 0) {
        if (a != 1) os << "*";
        os << "x";
        if (m != 1) os << "^" << m;
      }
    }
    return os.str();
  }

 private:
  uint32_t p_;
  std::map<long long, uint32_t> c_;
};

// n-th Hasse derivative: x^m |-> binomial(m, n) x^(m-n).  Divided-power
// analogue of d^n/dx^n / n!, well defined in characteristic p.
inline LaurentPoly hasseDeriv(long long n, const LaurentPoly& f) {
  LaurentPoly r(f.p());
  for (auto& [m, c] : f.coeffs()) r.add(m - n, mulMod(binomMod(m, n, f.p()), c, f.p()));
  return r;
}

// Divided-power sl2 action on Laurent polynomials, with x^m sitting in
// degree -m.  The three generator families act by
//   lowering: x^m |-> (-1)^r binomial(m, r) x^(m-r)
//   diagonal: x^m |-> binomial(2m, r) x^m
//   raising:  x^m |-> binomial(-m, r) x^(m+r)
inline LaurentPoly actLower(long long r, const LaurentPoly& f) {
  LaurentPoly out(f.p());
  for (auto& [m, c] : f.coeffs())
    out.add(m - r, mulMod(mulMod(signPow(r, f.p()), binomMod(m, r, f.p()), f.p()), c, f.p()));
  return out;
}

inline LaurentPoly actDiagonal(long long r, const LaurentPoly& f) {
  LaurentPoly out(f.p());
  for (auto& [m, c] : f.coeffs()) out.add(m, mulMod(binomMod(2 * m, r, f.p()), c, f.p()));
  return out;
}

inline LaurentPoly actRaise(long long r, const LaurentPoly& f) {
  LaurentPoly out(f.p());
  for (auto& [m, c] : f.coeffs()) out.add(m + r, mulMod(binomMod(-m, r, f.p()), c, f.p()));
  return out;
}

}  // namespace modva
