#pragma once
//
// Exact scalars and sparse multivariate polynomials.
//
// Rat      - arbitrary-precision rational (GMP), always canonical.
// FpScalar - element of Z/pZ for a word-sized prime p < 2^63.
// Poly<C>  - sparse polynomial with coefficients in C, terms kept in
//            descending graded-lex order with no stored zeros.
//

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace prelie {

// ---------------------------------------------------------------------------
// errors

struct ArityMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BadPrime : std::runtime_error {
  explicit BadPrime(std::uint64_t p)
      : std::runtime_error("prime " + std::to_string(p) +
                           " divides a coefficient denominator"),
        prime(p) {}
  std::uint64_t prime;
};

struct ExactDivisionFailure : std::logic_error {
  using std::logic_error::logic_error;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Rat

class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Rat(const mpz_class& n) : v_(n) {}
  Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  /// Accepts "a", "-a", "a/b" with optional surrounding spaces.
  static Rat parse(std::string_view s) {
    std::string t;
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw ParseError("empty rational");
    auto slash = t.find('/');
    try {
      if (slash == std::string::npos) return Rat(mpz_class(t, 10));
      return Rat(mpz_class(t.substr(0, slash), 10), mpz_class(t.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
      throw ParseError("bad rational '" + std::string(s) + "'");
    } catch (const std::domain_error&) {
      throw ParseError("zero denominator in '" + std::string(s) + "'");
    }
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool isZero() const { return sgn(v_) == 0; }
  bool isOne() const { return v_ == 1; }
  bool isInteger() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string str() const { return v_.get_str(10); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.isZero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class v_{0};
};

// ---------------------------------------------------------------------------
// prime fields

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool isPrime64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

/// Published certification primes, all >= 2^31. Index selection is seed-driven.
inline constexpr std::uint64_t kCertificationPrimes[] = {
    2305843009213693951ULL,  // 2^61 - 1
    4611686018427387847ULL,  // largest prime below 2^62
    4294967311ULL,           // smallest prime above 2^32
    2147483659ULL,           // smallest prime above 2^31
};

inline std::uint64_t primeForSeed(std::uint64_t seed) {
  constexpr auto n = std::size(kCertificationPrimes);
  return kCertificationPrimes[seed % n];
}

class FpScalar {
 public:
  FpScalar() = default;
  FpScalar(std::uint64_t value, std::uint64_t p) : v_(p ? value % p : 0), p_(p) {}

  static FpScalar fromInteger(const mpz_class& z, std::uint64_t p) {
    static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long required");
    return FpScalar(mpz_fdiv_ui(z.get_mpz_t(), p), p);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool isZero() const { return v_ == 0; }

  FpScalar inverse() const {
    if (v_ == 0) throw std::domain_error("FpScalar: inverse of zero");
    return {detail::powmod(v_, p_ - 2, p_), p_};
  }

  FpScalar operator-() const { return {v_ == 0 ? 0 : p_ - v_, p_}; }
  FpScalar& operator+=(const FpScalar& o) {
    adopt(o);
    std::uint64_t s = v_ + o.v_;
    if (s >= p_ || s < v_) s -= p_;
    v_ = s;
    return *this;
  }
  FpScalar& operator-=(const FpScalar& o) { return *this += -o; }
  FpScalar& operator*=(const FpScalar& o) {
    adopt(o);
    v_ = detail::mulmod(v_, o.v_, p_);
    return *this;
  }
  FpScalar& operator/=(const FpScalar& o) { return *this *= o.inverse(); }
  friend FpScalar operator+(FpScalar a, const FpScalar& b) { return a += b; }
  friend FpScalar operator-(FpScalar a, const FpScalar& b) { return a -= b; }
  friend FpScalar operator*(FpScalar a, const FpScalar& b) { return a *= b; }
  friend FpScalar operator/(FpScalar a, const FpScalar& b) { return a /= b; }
  friend bool operator==(const FpScalar& a, const FpScalar& b) { return a.v_ == b.v_; }

  std::string str() const { return std::to_string(v_); }

 private:
  // A default-constructed scalar is an unbound zero; it takes the modulus of
  // the first bound operand it meets.
  void adopt(const FpScalar& o) {
    if (p_ == 0) p_ = o.p_;
    if (o.p_ != 0 && o.p_ != p_) throw std::invalid_argument("FpScalar: modulus mismatch");
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

/// Reduces a rational modulo p; throws BadPrime when p divides the denominator.
inline FpScalar reduceRat(const Rat& r, std::uint64_t p) {
  FpScalar den = FpScalar::fromInteger(r.den(), p);
  if (den.isZero()) throw BadPrime(p);
  return FpScalar::fromInteger(r.num(), p) / den;
}

// ---------------------------------------------------------------------------
// polynomials

using Monomial = std::vector<std::uint32_t>;

inline std::uint32_t totalDegree(const Monomial& m) {
  std::uint32_t d = 0;
  for (auto e : m) d += e;
  return d;
}

/// Graded-lex: higher total degree first, then lexicographic with x1 > x2 > ...
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    auto da = totalDegree(a), db = totalDegree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

template <class C>
class Poly {
 public:
  struct Term {
    Monomial mono;
    C coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Poly() = default;
  explicit Poly(std::size_t arity) : arity_(arity) {}

  static Poly constant(std::size_t arity, const C& c) {
    Poly p(arity);
    if (!c.isZero()) p.terms_.push_back({Monomial(arity, 0), c});
    return p;
  }
  static Poly variable(std::size_t arity, std::size_t index, const C& one) {
    if (index >= arity) throw std::out_of_range("Poly::variable index");
    Poly p(arity);
    Monomial m(arity, 0);
    m[index] = 1;
    p.terms_.push_back({std::move(m), one});
    return p;
  }
  /// Builds from arbitrary (monomial, coeff) pairs; merges duplicates, drops zeros.
  static Poly fromTerms(std::size_t arity, std::vector<Term> terms) {
    std::map<Monomial, C, GrlexGreater> acc;
    for (auto& t : terms) {
      if (t.mono.size() != arity) throw ArityMismatch("monomial length differs from arity");
      auto [it, fresh] = acc.try_emplace(std::move(t.mono), t.coeff);
      if (!fresh) it->second += t.coeff;
    }
    return fromMap(arity, acc);
  }

  std::size_t arity() const { return arity_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(totalDegree(terms_.front().mono)); }
  bool isConstant() const { return degree() <= 0; }
  const Term& leading() const { return terms_.front(); }

  C constantTerm(const C& zero) const {
    if (!terms_.empty() && totalDegree(terms_.back().mono) == 0) return terms_.back().coeff;
    return zero;
  }

  /// Same polynomial viewed in a larger variable set (new variables appended).
  Poly withArity(std::size_t arity) const {
    if (arity < arity_) throw ArityMismatch("cannot shrink arity");
    Poly r(arity);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.mono.resize(arity, 0);
    return r;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    checkArity(a, b);
    Poly r(a.arity_);
    if (a.isZero() || b.isZero()) return r;
    std::map<Monomial, C, GrlexGreater> acc;
    Monomial m(a.arity_);
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ta.mono[i] + tb.mono[i];
        C c = ta.coeff * tb.coeff;
        auto [it, fresh] = acc.try_emplace(m, c);
        if (!fresh) it->second += c;
      }
    }
    return fromMap(a.arity_, acc);
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator*(const C& c, const Poly& p) {
    Poly r(p.arity_);
    if (c.isZero()) return r;
    r.terms_.reserve(p.terms_.size());
    for (const auto& t : p.terms_) {
      C v = c * t.coeff;
      if (!v.isZero()) r.terms_.push_back({t.mono, v});
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  C evaluate(std::span<const C> point, const C& zero) const {
    if (point.size() != arity_) throw ArityMismatch("evaluation point length differs from arity");
    C acc = zero;
    for (const auto& t : terms_) {
      C v = t.coeff;
      for (std::size_t i = 0; i < arity_; ++i)
        for (std::uint32_t e = 0; e < t.mono[i]; ++e) v *= point[i];
      acc += v;
    }
    return acc;
  }

  /// Exact quotient a / b; throws ExactDivisionFailure on a nonzero remainder.
  friend Poly divExact(const Poly& a, const Poly& b) {
    checkArity(a, b);
    if (b.isZero()) throw ExactDivisionFailure("division by the zero polynomial");
    Poly q(a.arity_);
    Poly r = a;
    const Term& lb = b.leading();
    std::vector<Term> qterms;
    while (!r.isZero()) {
      const Term& lr = r.leading();
      Term t{Monomial(a.arity_), lr.coeff / lb.coeff};
      for (std::size_t i = 0; i < a.arity_; ++i) {
        if (lr.mono[i] < lb.mono[i]) throw ExactDivisionFailure("inexact polynomial division");
        t.mono[i] = lr.mono[i] - lb.mono[i];
      }
      Poly tp(a.arity_);
      tp.terms_.push_back(t);
      r -= tp * b;
      qterms.push_back(std::move(t));
    }
    q.terms_ = std::move(qterms);  // produced in descending order already
    return q;
  }

 private:
  template <class Map>
  static Poly fromMap(std::size_t arity, Map& acc) {
    Poly r(arity);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.isZero()) r.terms_.push_back({m, c});
    return r;
  }

  static void checkArity(const Poly& a, const Poly& b) {
    if (a.arity_ != b.arity_) throw ArityMismatch("polynomial arity mismatch");
  }

  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    checkArity(a, b);
    Poly r(a.arity_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    GrlexGreater gt;
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && gt(a.terms_[i].mono, b.terms_[j].mono))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || gt(b.terms_[j].mono, a.terms_[i].mono)) {
        r.terms_.push_back({b.terms_[j].mono, subtract ? -b.terms_[j].coeff : b.terms_[j].coeff});
        ++j;
      } else {
        C c = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!c.isZero()) r.terms_.push_back({a.terms_[i].mono, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::size_t arity_ = 0;
  std::vector<Term> terms_;
};

using PolyQ = Poly<Rat>;
using PolyFp = Poly<FpScalar>;

// ---------------------------------------------------------------------------
// PolyQ conveniences

inline PolyQ constantQ(std::size_t arity, const Rat& c) { return PolyQ::constant(arity, c); }
inline PolyQ variableQ(std::size_t arity, std::size_t i) { return PolyQ::variable(arity, i, Rat(1)); }

inline PolyQ polyMul(const PolyQ& p, const PolyQ& q) { return p * q; }

inline Rat polyEval(const PolyQ& p, std::span<const Rat> point) { return p.evaluate(point, Rat(0)); }

inline PolyFp fpReduce(const PolyQ& p, std::uint64_t prime) {
  std::vector<PolyFp::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.mono, reduceRat(t.coeff, prime)});
  return PolyFp::fromTerms(p.arity(), std::move(terms));
}

inline FpScalar evaluateFp(const PolyFp& p, std::span<const FpScalar> point, std::uint64_t prime) {
  return p.evaluate(point, FpScalar(0, prime));
}

// ---------------------------------------------------------------------------
// text form:  3/2*x1^2*x3 - x2 + 5

inline std::string toString(const PolyQ& p) {
  if (p.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rat c = t.coeff;
    if (first) {
      if (c.sign() < 0) { os << "-"; c = -c; }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    first = false;
    bool constant = totalDegree(t.mono) == 0;
    bool needStar = false;
    if (constant || !c.isOne()) {
      os << c.str();
      needStar = true;
    }
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (needStar) os << "*";
      os << "x" << (i + 1);
      if (t.mono[i] > 1) os << "^" << t.mono[i];
      needStar = true;
    }
  }
  return os.str();
}

/// Largest variable index referenced in a text polynomial (1-based), 0 if none.
inline std::size_t maxVariableIndex(std::string_view s) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 'x') continue;
    std::size_t j = i + 1, v = 0;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) v = v * 10 + (s[j++] - '0');
    best = std::max(best, v);
  }
  return best;
}

inline PolyQ parsePolyQ(std::string_view text, std::size_t arity) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty polynomial");

  std::vector<PolyQ::Term> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string_view term(s.data() + pos, end - pos);
    if (term.empty()) throw ParseError("dangling sign in '" + std::string(text) + "'");

    Rat coeff(sign);
    Monomial mono(arity, 0);
    std::size_t f = 0;
    while (f <= term.size()) {
      std::size_t star = term.find('*', f);
      if (star == std::string_view::npos) star = term.size();
      std::string_view factor = term.substr(f, star - f);
      if (factor.empty()) throw ParseError("empty factor in '" + std::string(text) + "'");
      if (factor[0] == 'x') {
        auto caret = factor.find('^');
        std::string idx(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1));
        if (idx.empty() || !std::all_of(idx.begin(), idx.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          throw ParseError("bad variable '" + std::string(factor) + "'");
        std::size_t v = std::stoul(idx);
        if (v == 0 || v > arity) throw ParseError("variable x" + idx + " outside arity");
        std::uint32_t e = 1;
        if (caret != std::string_view::npos) {
          std::string es(factor.substr(caret + 1));
          if (es.empty() || !std::all_of(es.begin(), es.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("bad exponent in '" + std::string(factor) + "'");
          e = static_cast<std::uint32_t>(std::stoul(es));
        }
        mono[v - 1] += e;
      } else {
        coeff *= Rat::parse(factor);
      }
      f = star + 1;
    }
    terms.push_back({std::move(mono), coeff});
    pos = end;
  }
  return PolyQ::fromTerms(arity, std::move(terms));
}

}  // namespace prelie
