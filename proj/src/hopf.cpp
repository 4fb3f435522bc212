#include "modva/hopf.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace modva {

bool HElement::homogeneous(long long* deg) const {
  if (t_.empty()) {
    if (deg) *deg = 0;
    return true;
  }
  long long d = hGrade(t_.begin()->first);
  for (auto& [m, c] : t_)
    if (hGrade(m) != d) return false;
  if (deg) *deg = d;
  return true;
}

Hopf::Hopf(uint32_t p) : p_(p), binom_(p) { checkModulus(p); }

HElement Hopf::mono(uint32_t i, uint32_t j, uint32_t k, long long c) const {
  HElement e(p_);
  e.add(HMono{i, j, k}, normMod(c, p_));
  return e;
}

namespace {

// monomial pair -> 60-bit key (10 bits per exponent); ~0 means "don't memoize"
uint64_t packPair(HMono a, HMono b) {
  if ((a.i | a.j | a.k | b.i | b.j | b.k) > 1023u) return UINT64_MAX;
  uint64_t key = 0;
  for (uint32_t v : {a.i, a.j, a.k, b.i, b.j, b.k}) key = (key << 10) | v;
  return key;
}

}  // namespace

// Straightening: rewrite the leftmost adjacent block pair that is out of PBW
// order (D < H < E, one block of each).  The five rewriting rules are the
// divided-power relations of the algebra; each pushes words that are closer
// to normal form, and the process terminates because every rule either lowers
// the total E/D divided-power weight or resolves an inversion without
// creating new ones to its left.
void Hopf::normalizeInto(Word w0, uint32_t c0, HElement& out) const {
  struct Item {
    Word w;
    uint32_t c;
  };
  std::vector<Item> stack;
  stack.push_back({std::move(w0), c0});

  // append a block, dropping X^(0) = 1
  auto put = [](Word& w, uint8_t type, long long n) {
    if (n > 0) w.push_back({type, static_cast<uint32_t>(n)});
  };

  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    if (it.c == 0) continue;
    Word& w = it.w;

    size_t pos = w.size();  // leftmost reducible pair
    for (size_t t = 0; t + 1 < w.size(); ++t)
      if (w[t].type >= w[t + 1].type) {
        pos = t;
        break;
      }

    if (pos == w.size()) {
      // strictly increasing types: canonical monomial
      HMono m;
      for (auto& b : w) (b.type == 0 ? m.i : b.type == 1 ? m.j : m.k) = b.n;
      out.add(m, it.c);
      continue;
    }

    const uint8_t ta = w[pos].type, tb = w[pos + 1].type;
    const long long m = w[pos].n, n = w[pos + 1].n;
    Word prefix(w.begin(), w.begin() + static_cast<long>(pos));
    Word suffix(w.begin() + static_cast<long>(pos) + 2, w.end());

    auto emit = [&](uint32_t coef, std::initializer_list<std::pair<uint8_t, long long>> blocks) {
      uint32_t c = mulMod(it.c, coef, p_);
      if (c == 0) return;
      Word nw = prefix;
      for (auto [type, exp] : blocks) put(nw, type, exp);
      nw.insert(nw.end(), suffix.begin(), suffix.end());
      stack.push_back({std::move(nw), c});
    };

    if (ta == tb && ta != 1) {
      // D^(m) D^(n) = binom(m+n, m) D^(m+n), same for E
      emit(binom_(m + n, m), {{ta, m + n}});
    } else if (ta == 1 && tb == 1) {
      // H^(m) H^(n) = sum_j binom(m, j) binom(n+j, m) H^(n+j)
      for (long long j = 0; j <= m; ++j)
        emit(mulMod(binom_(m, j), binom_(n + j, m), p_), {{uint8_t{1}, n + j}});
    } else if (ta == 1 && tb == 0) {
      // H^(m) D^(n) = sum_i binom(-2n, i) D^(n) H^(m-i)
      for (long long i = 0; i <= m; ++i)
        emit(binom_(-2 * n, i), {{uint8_t{0}, n}, {uint8_t{1}, m - i}});
    } else if (ta == 2 && tb == 1) {
      // E^(m) H^(n) = sum_i binom(-2m, i) H^(n-i) E^(m)
      for (long long i = 0; i <= n; ++i)
        emit(binom_(-2 * m, i), {{uint8_t{1}, n - i}, {uint8_t{2}, m}});
    } else {
      // E^(m) D^(n) = sum_{i<=min(m,n)} sum_{j<=i} (-1)^i binom(-m-n+2i, j)
      //               D^(n-i) H^(i-j) E^(m-i)
      for (long long i = 0; i <= std::min(m, n); ++i)
        for (long long j = 0; j <= i; ++j) {
          uint32_t coef = mulMod(signPow(i, p_), binom_(-m - n + 2 * i, j), p_);
          emit(coef, {{uint8_t{0}, n - i}, {uint8_t{1}, i - j}, {uint8_t{2}, m - i}});
        }
    }
  }
}

HElement Hopf::straightenPair(HMono a, HMono b) const {
  Word w;
  auto put = [&w](uint8_t type, uint32_t n) {
    if (n) w.push_back({type, n});
  };
  put(0, a.i); put(1, a.j); put(2, a.k);
  put(0, b.i); put(1, b.j); put(2, b.k);
  HElement r(p_);
  normalizeInto(std::move(w), 1 % p_, r);
  return r;
}

// The memo is append-only and node-based, so a reference handed out under the
// lock stays valid for the lifetime of the context even while other threads
// keep inserting.
const HElement& Hopf::memoProduct(HMono a, HMono b, uint64_t key) const {
  {
    std::lock_guard<std::mutex> lock(memoMu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  HElement r = straightenPair(a, b);
  std::lock_guard<std::mutex> lock(memoMu_);
  return memo_.emplace(key, std::move(r)).first->second;
}

HElement Hopf::monoProduct(HMono a, HMono b) const {
  uint64_t key = packPair(a, b);
  if (key != UINT64_MAX) return memoProduct(a, b, key);
  return straightenPair(a, b);
}

const HElement& Hopf::monoProductRef(HMono a, HMono b) const {
  uint64_t key = packPair(a, b);
  if (key == UINT64_MAX) throw std::invalid_argument("exponent too large for the product memo");
  return memoProduct(a, b, key);
}

HElement Hopf::product(const HElement& a, const HElement& b) const {
  HElement r(p_);
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) {
      uint32_t c = mulMod(ca, cb, p_);
      if (c == 0) continue;
      uint64_t key = packPair(ma, mb);
      if (key != UINT64_MAX) {
        for (auto& [m, cm] : memoProduct(ma, mb, key).terms()) r.add(m, mulMod(cm, c, p_));
      } else {
        HElement mp = straightenPair(ma, mb);
        for (auto& [m, cm] : mp.terms()) r.add(m, mulMod(cm, c, p_));
      }
    }
  return r;
}

HTensor Hopf::coproduct(const HElement& a) const {
  // Delta is an algebra map and each generator family is divided-power
  // primitive, so on a PBW monomial it splits every block binomially; the
  // split pieces stay in PBW order, so no straightening is needed.
  HTensor t(p_);
  for (auto& [m, c] : a.terms())
    for (uint32_t a1 = 0; a1 <= m.i; ++a1)
      for (uint32_t a2 = 0; a2 <= m.j; ++a2)
        for (uint32_t a3 = 0; a3 <= m.k; ++a3)
          t.add(HMono{a1, a2, a3}, HMono{m.i - a1, m.j - a2, m.k - a3}, c);
  return t;
}

Fp Hopf::counit(const HElement& a) const { return Fp::raw(a.coeff(HMono{0, 0, 0}), p_); }

HElement Hopf::theta(const HElement& a) const {
  // anti-automorphism: reverses products and swaps D <-> E, so the PBW
  // monomial D^(i) H^(j) E^(k) maps straight to D^(k) H^(j) E^(i)
  HElement r(p_);
  for (auto& [m, c] : a.terms()) r.add(HMono{m.k, m.j, m.i}, c);
  return r;
}

HElement Hopf::sigma(const HElement& a) const {
  HElement r(p_);
  for (auto& [m, c] : a.terms()) {
    // sigma(D^(i)) = E^(i), sigma(E^(k)) = D^(k),
    // sigma(H^(j)) = (-1)^j sum_t binom(j-1, t) H^(j-t); multiply in order
    HElement mid(p_);
    for (uint32_t t = 0; t <= m.j; ++t)
      mid.add(HMono{0, m.j - t, 0}, mulMod(signPow(m.j, p_), binom_(static_cast<long long>(m.j) - 1, t), p_));
    HElement term = product(mono(0, 0, m.i), product(mid, mono(m.k, 0, 0)));
    for (auto& [mm, cc] : term.terms()) r.add(mm, mulMod(cc, c, p_));
  }
  return r;
}

namespace {

// 30-bit packing of a monomial for the sorted fast path; fails above 1023
uint64_t packMono(HMono m) {
  if ((m.i | m.j | m.k) > 1023u) return UINT64_MAX;
  return (static_cast<uint64_t>(m.i) << 20) | (m.j << 10) | m.k;
}

HMono unpackMono(uint64_t v) {
  return HMono{static_cast<uint32_t>(v >> 20) & 1023u, static_cast<uint32_t>(v >> 10) & 1023u,
               static_cast<uint32_t>(v) & 1023u};
}

}  // namespace

HTensor Hopf::tensorProduct(const HTensor& a, const HTensor& b) const {
  // The tensor square collects a quadratic number of slotwise products, and
  // tree-map accumulation dominates for inputs of coproduct size.  Terms are
  // gathered unordered, sorted once by a packed key and folded; pairs whose
  // straightened slots carry exponents too large for the packing (never the
  // case for coproducts of desk-scale monomials) take the plain path.
  std::vector<std::pair<uint64_t, uint32_t>> flat;
  HTensor r(p_);
  for (auto& [ka, ca] : a.terms())
    for (auto& [kb, cb] : b.terms()) {
      uint32_t c = mulMod(ca, cb, p_);
      if (c == 0) continue;
      uint64_t kl = packPair(ka.first, kb.first), kr = packPair(ka.second, kb.second);
      if (kl != UINT64_MAX && kr != UINT64_MAX) {
        const HElement& left = memoProduct(ka.first, kb.first, kl);
        const HElement& right = memoProduct(ka.second, kb.second, kr);
        for (auto& [m1, c1] : left.terms()) {
          uint64_t p1 = packMono(m1);
          uint32_t cc1 = mulMod(c, c1, p_);
          for (auto& [m2, c2] : right.terms()) {
            uint64_t p2 = packMono(m2);
            if (p1 == UINT64_MAX || p2 == UINT64_MAX)
              r.add(m1, m2, mulMod(cc1, c2, p_));
            else
              flat.emplace_back((p1 << 30) | p2, mulMod(cc1, c2, p_));
          }
        }
      } else {
        HElement left = monoProduct(ka.first, kb.first);
        HElement right = monoProduct(ka.second, kb.second);
        for (auto& [m1, c1] : left.terms())
          for (auto& [m2, c2] : right.terms())
            r.add(m1, m2, mulMod(c, mulMod(c1, c2, p_), p_));
      }
    }
  std::sort(flat.begin(), flat.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (size_t i = 0; i < flat.size();) {
    uint64_t key = flat[i].first;
    uint64_t acc = 0;
    for (; i < flat.size() && flat[i].first == key; ++i) acc += flat[i].second;
    uint32_t c = static_cast<uint32_t>(acc % p_);
    if (c) r.add(unpackMono(key >> 30), unpackMono(key & ((1ull << 30) - 1)), c);
  }
  return r;
}

HTensor3 Hopf::coproductLeft(const HTensor& a) const {
  HTensor3 r(p_);
  for (auto& [k, c] : a.terms()) {
    HElement left(p_);
    left.add(k.first, 1 % p_);
    HTensor d = coproduct(left);
    for (auto& [pair, cc] : d.terms()) r.add(pair.first, pair.second, k.second, mulMod(c, cc, p_));
  }
  return r;
}

HTensor3 Hopf::coproductRight(const HTensor& a) const {
  HTensor3 r(p_);
  for (auto& [k, c] : a.terms()) {
    HElement right(p_);
    right.add(k.second, 1 % p_);
    HTensor d = coproduct(right);
    for (auto& [pair, cc] : d.terms()) r.add(k.first, pair.first, pair.second, mulMod(c, cc, p_));
  }
  return r;
}

HElement Hopf::collapseCounitLeft(const HTensor& a) const {
  HElement r(p_);
  for (auto& [k, c] : a.terms())
    if (k.first == HMono{0, 0, 0}) r.add(k.second, c);
  return r;
}

HElement Hopf::collapseCounitRight(const HTensor& a) const {
  HElement r(p_);
  for (auto& [k, c] : a.terms())
    if (k.second == HMono{0, 0, 0}) r.add(k.first, c);
  return r;
}

// ---- text syntax -----------------------------------------------------------

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  const Hopf& H;

  explicit Parser(const std::string& text, const Hopf& h) : s(text), H(h) {}

  void skipWs() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
  }

  long long integer() {
    skipWs();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) fail("expected integer");
    return std::stoll(s.substr(start, pos - start));
  }

  // factor := INT | [DHE] ('^' '(' INT ')')?
  bool factor(HElement& term) {
    skipWs();
    if (pos >= s.size()) return false;
    char c = s[pos];
    if (c == '+' || c == '-' || c == ')') return false;
    if (c == '*') { ++pos; return factor(term); }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      term = term.scaled(integer());
      return true;
    }
    if (c != 'D' && c != 'H' && c != 'E') fail(std::string("unexpected character '") + c + "'");
    ++pos;
    long long n = 1;
    skipWs();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      skipWs();
      if (pos >= s.size() || s[pos] != '(') fail("expected '(' after '^'");
      ++pos;
      n = integer();
      skipWs();
      if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
      ++pos;
      if (n < 0) fail("divided-power index must be nonnegative");
    }
    uint32_t i = c == 'D' ? static_cast<uint32_t>(n) : 0;
    uint32_t j = c == 'H' ? static_cast<uint32_t>(n) : 0;
    uint32_t k = c == 'E' ? static_cast<uint32_t>(n) : 0;
    term = H.product(term, H.mono(i, j, k));
    return true;
  }

  HElement expr() {
    HElement out = H.zero();
    bool first = true;
    while (true) {
      skipWs();
      if (pos >= s.size()) break;
      long long sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      HElement term = H.one();
      bool any = false;
      while (factor(term)) any = true;
      if (!any) fail("empty term");
      out = out + term.scaled(sign);
      first = false;
    }
    return out;
  }
};

}  // namespace

HElement Hopf::parse(const std::string& text) const {
  Parser parser(text, *this);
  return parser.expr();
}

std::string Hopf::print(const HElement& a, bool symmetric) {
  if (a.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  // basis order for output: lexicographically descending in (i, j, k)
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    auto& [m, c] = *it;
    long long shown = symmetric ? symMod(c, a.p()) : static_cast<long long>(c);
    long long mag = shown < 0 ? -shown : shown;
    if (first) {
      if (shown < 0) os << "-";
    } else {
      os << (shown < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = m == HMono{0, 0, 0};
    std::vector<std::string> pieces;
    if (mag != 1 || constant) pieces.push_back(std::to_string(mag));
    if (m.i) pieces.push_back("D^(" + std::to_string(m.i) + ")");
    if (m.j) pieces.push_back("H^(" + std::to_string(m.j) + ")");
    if (m.k) pieces.push_back("E^(" + std::to_string(m.k) + ")");
    for (size_t t = 0; t < pieces.size(); ++t) {
      if (t) os << " ";
      os << pieces[t];
    }
  }
  return os.str();
}

}  // namespace modva
