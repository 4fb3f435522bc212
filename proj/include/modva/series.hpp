#pragma once

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "modva/binom.hpp"
#include "modva/fp.hpp"

namespace modva {

// Multivariate power series over F_p truncated at total degree K: exponents
// are nonnegative and any product term beyond total degree K is dropped.
// Terms are kept in a map ordered lexicographically by exponent vector, so
// iteration (and printing) is deterministic.
class TruncSeries {
 public:
  TruncSeries(uint32_t p, int nvars, int K) : p_(p), nvars_(nvars), K_(K) {
    if (K < 0 || nvars < 0) throw std::invalid_argument("TruncSeries: bad shape");
  }

  static TruncSeries constant(uint32_t p, int nvars, int K, long long c) {
    TruncSeries s(p, nvars, K);
    s.add(std::vector<int>(static_cast<size_t>(nvars), 0), normMod(c, p));
    return s;
  }

  static TruncSeries one(uint32_t p, int nvars, int K) { return constant(p, nvars, K, 1); }

  // the monomial  x_i^e
  static TruncSeries var(uint32_t p, int nvars, int K, int i, int e = 1) {
    TruncSeries s(p, nvars, K);
    if (i < 0 || i >= nvars || e < 0) throw std::invalid_argument("TruncSeries::var");
    std::vector<int> ex(static_cast<size_t>(nvars), 0);
    ex[static_cast<size_t>(i)] = e;
    s.add(ex, 1 % p);
    return s;
  }

  uint32_t p() const { return p_; }
  int nvars() const { return nvars_; }
  int cutoff() const { return K_; }
  const std::map<std::vector<int>, uint32_t>& terms() const { return t_; }
  bool isZero() const { return t_.empty(); }

  uint32_t coeff(const std::vector<int>& ex) const {
    auto it = t_.find(ex);
    return it == t_.end() ? 0u : it->second;
  }

  void add(const std::vector<int>& ex, uint32_t c) {
    if (c == 0) return;
    if (static_cast<int>(ex.size()) != nvars_) throw std::invalid_argument("exponent arity");
    int total = 0;
    for (int e : ex) {
      if (e < 0) throw std::invalid_argument("negative exponent in TruncSeries");
      total += e;
    }
    if (total > K_) return;
    auto [it, fresh] = t_.emplace(ex, c);
    if (!fresh) {
      it->second = addMod(it->second, c, p_);
      if (it->second == 0) t_.erase(it);
    }
  }

  TruncSeries operator+(const TruncSeries& o) const {
    checkShape(o);
    TruncSeries r = *this;
    for (auto& [ex, c] : o.t_) r.add(ex, c);
    return r;
  }

  TruncSeries operator-(const TruncSeries& o) const {
    checkShape(o);
    TruncSeries r = *this;
    for (auto& [ex, c] : o.t_) r.add(ex, negMod(c, p_));
    return r;
  }

  TruncSeries operator*(const TruncSeries& o) const {
    checkShape(o);
    TruncSeries r(p_, nvars_, K_);
    std::vector<int> ex(static_cast<size_t>(nvars_));
    for (auto& [ea, ca] : t_)
      for (auto& [eb, cb] : o.t_) {
        for (int i = 0; i < nvars_; ++i) ex[static_cast<size_t>(i)] = ea[static_cast<size_t>(i)] + eb[static_cast<size_t>(i)];
        r.add(ex, mulMod(ca, cb, p_));
      }
    return r;
  }

  TruncSeries scaled(long long s) const {
    TruncSeries r(p_, nvars_, K_);
    uint32_t sc = normMod(s, p_);
    for (auto& [ex, c] : t_) r.add(ex, mulMod(c, sc, p_));
    return r;
  }

  uint32_t constantTerm() const { return coeff(std::vector<int>(static_cast<size_t>(nvars_), 0)); }

  // f^e for any integer e.  Negative powers need an invertible constant term
  // c: write f = c (1 + u) with u of positive total degree, then
  // f^e = c^e sum_i binomial(e, i) u^i, the sum being finite at truncation K.
  TruncSeries pow(long long e) const {
    if (e >= 0) {
      TruncSeries r = one(p_, nvars_, K_), b = *this;
      long long n = e;
      while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
      }
      return r;
    }
    uint32_t c0 = constantTerm();
    if (c0 == 0) throw std::domain_error("TruncSeries::pow: negative power of non-unit");
    TruncSeries u = scaled(invMod(c0, p_));
    u.add(std::vector<int>(static_cast<size_t>(nvars_), 0), p_ - 1);  // u = f/c - 1
    TruncSeries r(p_, nvars_, K_);
    TruncSeries upow = one(p_, nvars_, K_);
    for (int i = 0; i <= K_; ++i) {
      r = r + upow.scaled(binomMod(e, i, p_));
      upow = upow * u;
      if (upow.isZero()) break;
    }
    uint32_t ce = powMod(invMod(c0, p_), static_cast<uint64_t>(-e), p_);
    return r.scaled(ce);
  }

  // substitute g (zero constant term) for variable i
  TruncSeries subst(int i, const TruncSeries& g) const {
    checkShape(g);
    if (i < 0 || i >= nvars_) throw std::invalid_argument("TruncSeries::subst index");
    if (g.constantTerm() != 0)
      throw std::domain_error("TruncSeries::subst: substituted series must have zero constant term");
    // powers of g, computed once
    std::vector<TruncSeries> gp{one(p_, nvars_, K_)};
    TruncSeries r(p_, nvars_, K_);
    for (auto& [ex, c] : t_) {
      int e = ex[static_cast<size_t>(i)];
      while (static_cast<int>(gp.size()) <= e) gp.push_back(gp.back() * g);
      std::vector<int> rest = ex;
      rest[static_cast<size_t>(i)] = 0;
      TruncSeries term(p_, nvars_, K_);
      term.add(rest, c);
      r = r + term * gp[static_cast<size_t>(e)];
    }
    return r;
  }

  bool operator==(const TruncSeries& o) const {
    return p_ == o.p_ && nvars_ == o.nvars_ && K_ == o.K_ && t_ == o.t_;
  }
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }

  std::string str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [ex, c] : t_) {
      long long s = symMod(c, p_);
      if (!first) os << (s < 0 ? " - " : " + ");
      else if (s < 0) os << "-";
      first = false;
      long long a = s < 0 ? -s : s;
      bool wrote = false;
      int total = std::accumulate(ex.begin(), ex.end(), 0);
      if (a != 1 || total == 0) { os << a; wrote = true; }
      for (int i = 0; i < nvars_; ++i) {
        int e = ex[static_cast<size_t>(i)];
        if (e == 0) continue;
        if (wrote) os << "*";
        os << names[static_cast<size_t>(i)];
        if (e != 1) os << "^" << e;
        wrote = true;
      }
    }
    return os.str();
  }

 private:
  void checkShape(const TruncSeries& o) const {
    if (p_ != o.p_ || nvars_ != o.nvars_ || K_ != o.K_)
      throw std::invalid_argument("TruncSeries shape mismatch");
  }

  uint32_t p_;
  int nvars_;
  int K_;
  std::map<std::vector<int>, uint32_t> t_;
};

}  // namespace modva
