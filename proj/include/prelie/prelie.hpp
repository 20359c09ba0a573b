#pragma once
//
// Truncated enveloping algebras U(g) in a PBW basis, the symmetric algebra
// S(g) with its binomial coproduct, and the correspondence between prelie
// products on g and left ideals I of U(g) with U_+(g) = g (+) I.
//
// Monomials are plain x^a = x_1^{a_1} ... x_d^{a_d}, not divided powers; the
// coproduct then carries binomial coefficients.  Everything is truncated at a
// degree cap and exceeding the cap is an error, never a silent truncation.
//

#include "prelie/symlinalg.hpp"
#include "prelie/tables.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace prelie {

struct CapExceeded : std::runtime_error {
  CapExceeded(std::size_t need, std::size_t cap)
      : std::runtime_error("degree " + std::to_string(need) + " exceeds cap " + std::to_string(cap)) {}
};

struct PreconditionViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Exponent vector, one entry per basis element of g.
using PBWMono = std::vector<std::uint32_t>;

inline std::size_t length(const PBWMono& m) { return totalDegree(m); }

/// Finite linear combination of PBW monomials, all of length <= cap.
/// The same container serves U(g) (ueaMul) and S(g) (symMul).
class UEAElem {
 public:
  UEAElem() = default;
  UEAElem(std::size_t dim, std::size_t cap) : dim_(dim), cap_(cap) {}

  static UEAElem one(std::size_t dim, std::size_t cap) {
    UEAElem e(dim, cap);
    e.add(PBWMono(dim, 0), Rat(1));
    return e;
  }
  static UEAElem generator(std::size_t dim, std::size_t cap, std::size_t i) {
    PBWMono m(dim, 0);
    m.at(i) = 1;
    return monomial(cap, m);
  }
  static UEAElem monomial(std::size_t cap, const PBWMono& m, const Rat& c = Rat(1)) {
    UEAElem e(m.size(), cap);
    e.add(m, c);
    return e;
  }
  static UEAElem fromVector(std::size_t cap, const std::vector<Rat>& v) {
    UEAElem e(v.size(), cap);
    for (std::size_t i = 0; i < v.size(); ++i) e.add(unitMono(v.size(), i), v[i]);
    return e;
  }
  static PBWMono unitMono(std::size_t dim, std::size_t i) {
    PBWMono m(dim, 0);
    m[i] = 1;
    return m;
  }

  std::size_t dim() const { return dim_; }
  std::size_t cap() const { return cap_; }
  const std::map<PBWMono, Rat>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  Rat coeff(const PBWMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  /// Highest monomial length present; -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(length(m)));
    return d;
  }
  int lowDegree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
      if (d < 0 || static_cast<int>(length(m)) < d) d = static_cast<int>(length(m));
    return d;
  }

  /// Homogeneous component of length k.
  UEAElem component(std::size_t k) const {
    UEAElem e(dim_, cap_);
    for (const auto& [m, c] : terms_)
      if (length(m) == k) e.terms_.emplace(m, c);
    return e;
  }

  /// Coordinates on g (length-one component).
  std::vector<Rat> linearPart() const {
    std::vector<Rat> v(dim_);
    for (std::size_t i = 0; i < dim_; ++i) v[i] = coeff(unitMono(dim_, i));
    return v;
  }

  void add(const PBWMono& m, const Rat& c) {
    if (c.isZero()) return;
    if (m.size() != dim_) throw std::invalid_argument("UEAElem: monomial of wrong dimension");
    if (length(m) > cap_) throw CapExceeded(length(m), cap_);
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }
  void addScaled(const UEAElem& o, const Rat& s) {
    for (const auto& [m, c] : o.terms_) add(m, s * c);
  }

  UEAElem& operator+=(const UEAElem& o) { addScaled(o, Rat(1)); return *this; }
  UEAElem& operator-=(const UEAElem& o) { addScaled(o, Rat(-1)); return *this; }
  friend UEAElem operator+(UEAElem a, const UEAElem& b) { return a += b; }
  friend UEAElem operator-(UEAElem a, const UEAElem& b) { return a -= b; }
  friend UEAElem operator*(const Rat& s, const UEAElem& a) {
    UEAElem r(a.dim_, a.cap_);
    r.addScaled(a, s);
    return r;
  }
  friend bool operator==(const UEAElem& a, const UEAElem& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

  std::string str(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      std::string coef = c.str();
      if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
      else if (c.sign() < 0) out += "-";
      if (c.sign() < 0) coef = (-c).str();
      if (mono.empty()) out += coef;
      else out += (coef == "1" ? "" : coef + "*") + mono;
    }
    return out;
  }

 private:
  std::size_t dim_ = 0;
  std::size_t cap_ = 0;
  std::map<PBWMono, Rat> terms_;
};

// ---------------------------------------------------------------------------
// PBW straightening

enum class Rewrite { FirstDescent, LastDescent };

/// Straightens words in the basis letters into PBW order with
///     x_j x_i = x_i x_j + [x_j, x_i]   (i < j),
/// memoizing the normal form of every word it meets.
class Straightener {
 public:
  Straightener(const StructConsts& c, std::size_t cap, Rewrite strategy = Rewrite::FirstDescent)
      : c_(c), cap_(cap), strategy_(strategy) {}

  const UEAElem& normalForm(const std::vector<std::size_t>& word) {
    if (word.size() > cap_) throw CapExceeded(word.size(), cap_);
    if (auto it = memo_.find(word); it != memo_.end()) return it->second;

    std::size_t pos = word.size();
    for (std::size_t p = 0; p + 1 < word.size(); ++p)
      if (word[p] > word[p + 1]) {
        pos = p;
        if (strategy_ == Rewrite::FirstDescent) break;
      }

    UEAElem out(c_.dim(), cap_);
    if (pos == word.size()) {
      PBWMono m(c_.dim(), 0);
      for (auto i : word) ++m[i];
      out.add(m, Rat(1));
    } else {
      auto swapped = word;
      std::swap(swapped[pos], swapped[pos + 1]);
      out += normalForm(swapped);
      const std::size_t j = word[pos], i = word[pos + 1];
      for (std::size_t k = 0; k < c_.dim(); ++k) {
        const Rat& coef = c_(j, i, k);
        if (coef.isZero()) continue;
        std::vector<std::size_t> shorter(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(pos));
        shorter.push_back(k);
        shorter.insert(shorter.end(), word.begin() + static_cast<std::ptrdiff_t>(pos + 2), word.end());
        out.addScaled(normalForm(shorter), coef);
      }
    }
    return memo_.emplace(word, std::move(out)).first->second;
  }

 private:
  const StructConsts& c_;
  std::size_t cap_;
  Rewrite strategy_;
  std::map<std::vector<std::size_t>, UEAElem> memo_;
};

inline std::vector<std::size_t> pbwWord(const PBWMono& m) {
  std::vector<std::size_t> w;
  for (std::size_t i = 0; i < m.size(); ++i) w.insert(w.end(), m[i], i);
  return w;
}

inline UEAElem ueaMul(const UEAElem& a, const UEAElem& b, Straightener& s) {
  if (a.dim() != b.dim() || a.cap() != b.cap()) throw std::invalid_argument("ueaMul: mismatched operands");
  UEAElem out(a.dim(), a.cap());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      auto w = pbwWord(ma);
      const auto wb = pbwWord(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      out.addScaled(s.normalForm(w), ca * cb);
    }
  return out;
}

inline UEAElem ueaMul(const UEAElem& a, const UEAElem& b, const StructConsts& c,
                      Rewrite strategy = Rewrite::FirstDescent) {
  Straightener s(c, a.cap(), strategy);
  return ueaMul(a, b, s);
}

/// Commutative product of S(g).
inline UEAElem symMul(const UEAElem& a, const UEAElem& b) {
  if (a.dim() != b.dim() || a.cap() != b.cap()) throw std::invalid_argument("symMul: mismatched operands");
  UEAElem out(a.dim(), a.cap());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      PBWMono m(ma);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      out.add(m, ca * cb);
    }
  return out;
}

// ---------------------------------------------------------------------------
// coproduct

/// Element of A (x) A as a map (left, right) -> coefficient.
using Tensor2 = std::map<std::pair<PBWMono, PBWMono>, Rat>;

inline void addTo(Tensor2& t, const PBWMono& l, const PBWMono& r, const Rat& c) {
  if (c.isZero()) return;
  auto [it, fresh] = t.try_emplace({l, r}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.isZero()) t.erase(it);
  }
}

/// Delta(x^a) = sum_{b <= a} prod_i C(a_i, b_i) x^b (x) x^{a-b}, extended
/// linearly. With `reduced`, the terms with b = 0 or b = a are dropped.
inline Tensor2 ueaCoproduct(const UEAElem& a, bool reduced = false) {
  Tensor2 out;
  for (const auto& [m, c] : a.terms()) {
    PBWMono b(m.size(), 0);
    for (;;) {
      const bool trivial = length(b) == 0 || b == m;
      if (!(reduced && trivial)) {
        mpz_class coef = 1, bin;
        PBWMono rest(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
          mpz_bin_uiui(bin.get_mpz_t(), m[i], b[i]);
          coef *= bin;
          rest[i] = m[i] - b[i];
        }
        addTo(out, b, rest, c * Rat(coef));
      }
      std::size_t i = 0;
      while (i < m.size() && b[i] == m[i]) b[i++] = 0;
      if (i == m.size()) break;
      ++b[i];
    }
  }
  return out;
}

/// (a (x) b) . (c (x) d) = ac (x) bd with the given factor product.
inline Tensor2 tensorMul(const Tensor2& x, const Tensor2& y, std::size_t cap,
                         const std::function<UEAElem(const UEAElem&, const UEAElem&)>& mul) {
  Tensor2 out;
  for (const auto& [lr1, c1] : x)
    for (const auto& [lr2, c2] : y) {
      const auto left = mul(UEAElem::monomial(cap, lr1.first), UEAElem::monomial(cap, lr2.first));
      const auto right = mul(UEAElem::monomial(cap, lr1.second), UEAElem::monomial(cap, lr2.second));
      for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms()) addTo(out, ml, mr, c1 * c2 * cl * cr);
    }
  return out;
}

// ---------------------------------------------------------------------------
// prelie tables

struct DefectEntry {
  std::size_t i, j, k;
  std::vector<Rat> defect;
};

/// Basis triples where (x_i * x_j) * x_k - x_i * (x_j * x_k) is not symmetric in i, j.
inline std::vector<DefectEntry> preLieDefect(const PreLieTable& t) {
  const std::size_t d = t.dim();
  auto unit = [d](std::size_t i) {
    std::vector<Rat> v(d);
    v[i] = Rat(1);
    return v;
  };
  std::vector<DefectEntry> out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const auto a1 = t.product(t.product(i, j), unit(k));
        const auto a2 = t.product(unit(i), t.product(j, k));
        const auto b1 = t.product(t.product(j, i), unit(k));
        const auto b2 = t.product(unit(j), t.product(i, k));
        std::vector<Rat> v(d);
        bool zero = true;
        for (std::size_t m = 0; m < d; ++m) {
          v[m] = (a1[m] - a2[m]) - (b1[m] - b2[m]);
          zero = zero && v[m].isZero();
        }
        if (!zero) out.push_back({i, j, k, std::move(v)});
      }
  return out;
}

inline bool inducedBracketCheck(const PreLieTable& t, const StructConsts& c) {
  if (t.dim() != c.dim()) throw std::invalid_argument("inducedBracketCheck: dimension mismatch");
  return inducedBracket(t) == c;
}

inline bool isAssociative(const PreLieTable& t) {
  const std::size_t d = t.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        std::vector<Rat> ek(d), ei(d);
        ek[k] = Rat(1);
        ei[i] = Rat(1);
        if (t.product(t.product(i, j), ek) != t.product(ei, t.product(j, k))) return false;
      }
  return true;
}

/// aff(1) on the basis (x, y) with [x, y] = x: the only nonzero product is y * x = -x.
inline PreLieTable aff1Table() {
  PreLieTable t(2);
  t(1, 0, 0) = Rat(-1);
  return t;
}

inline StructConsts aff1Consts() {
  StructConsts c(2);
  c(0, 1, 0) = Rat(1);
  c(1, 0, 0) = Rat(-1);
  return c;
}

// ---------------------------------------------------------------------------
// prelie products from left ideals

struct IdealResult {
  bool consistent = false;
  PreLieTable recovered;
  /// dim(I intersected with U_{<=D}) for D = 2..cap.
  std::vector<std::size_t> idealDims;
};

namespace detail {

/// All PBW monomials of length lo..hi in `dim` letters, in a fixed order.
inline std::vector<PBWMono> monomialsUpTo(std::size_t dim, std::size_t lo, std::size_t hi) {
  std::vector<PBWMono> out;
  std::function<void(PBWMono&, std::size_t, std::size_t)> rec = [&](PBWMono& m, std::size_t i, std::size_t left) {
    if (i == dim) {
      if (length(m) >= lo) out.push_back(m);
      return;
    }
    for (std::size_t e = 0; e <= left; ++e) {
      m[i] = static_cast<std::uint32_t>(e);
      rec(m, i + 1, left - e);
    }
    m[i] = 0;
  };
  PBWMono m(dim, 0);
  rec(m, 0, hi);
  std::sort(out.begin(), out.end(), [](const PBWMono& a, const PBWMono& b) {
    return length(a) != length(b) ? length(a) < length(b) : a > b;
  });
  return out;
}

}  // namespace detail

/// Generates the left ideal U(g).{x_i x_j - lambda(x_i, x_j)} up to the cap
/// and checks U_+ = g (+) I at every truncation degree. The recovered table is
/// the g-component of x_i x_j along I.
inline IdealResult prelieFromIdeal(const PreLieTable& lambda, const StructConsts& c, std::size_t cap) {
  if (cap < 3) throw std::invalid_argument("prelieFromIdeal: cap must be >= 3");
  if (lambda.dim() != c.dim()) throw PreconditionViolation("prelieFromIdeal: dimension mismatch");
  if (!inducedBracketCheck(lambda, c))
    throw PreconditionViolation("prelieFromIdeal: lambda(x,y) - lambda(y,x) differs from [x,y]");

  const std::size_t d = c.dim();
  Straightener s(c, cap);
  const auto monos = detail::monomialsUpTo(d, 1, cap);
  std::map<PBWMono, std::size_t> index;
  for (std::size_t k = 0; k < monos.size(); ++k) index[monos[k]] = k;
  auto coords = [&](const UEAElem& e) {
    std::vector<Rat> v(monos.size());
    for (const auto& [m, co] : e.terms()) v.at(index.at(m)) = co;
    return v;
  };

  // generators x_i x_j - lambda(x_i, x_j)
  std::vector<UEAElem> gens;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      UEAElem g = ueaMul(UEAElem::generator(d, cap, i), UEAElem::generator(d, cap, j), s);
      g -= UEAElem::fromVector(cap, lambda.product(i, j));
      gens.push_back(std::move(g));
    }

  IdealResult res;
  res.consistent = true;
  std::vector<std::vector<Rat>> span;  // ideal spanning vectors, grown by degree
  for (std::size_t D = 2; D <= cap; ++D) {
    for (const auto& m : detail::monomialsUpTo(d, D - 2, D - 2))
      for (const auto& g : gens) span.push_back(coords(ueaMul(UEAElem::monomial(cap, m), g, s)));

    // U_+ truncated at D has one coordinate per monomial of length 1..D
    std::size_t total = 0;
    for (const auto& m : monos)
      if (length(m) <= D) ++total;

    MatQ stack(span.size(), monos.size(), Rat(0));
    for (std::size_t r = 0; r < span.size(); ++r)
      for (std::size_t k = 0; k < monos.size(); ++k) stack(r, k) = span[r][k];
    const std::size_t idim = bareissRank(stack).rank;
    res.idealDims.push_back(idim);

    MatQ withG(span.size() + d, monos.size(), Rat(0));
    for (std::size_t r = 0; r < span.size(); ++r)
      for (std::size_t k = 0; k < monos.size(); ++k) withG(r, k) = span[r][k];
    for (std::size_t i = 0; i < d; ++i) withG(span.size() + i, index.at(UEAElem::unitMono(d, i))) = Rat(1);
    const std::size_t joint = bareissRank(withG).rank;

    if (joint != idim + d || idim + d != total) res.consistent = false;
  }

  // projection of x_i x_j onto g along I: solve [g | I] coefficients
  const std::size_t n = monos.size();
  MatQ sys(n, d + span.size(), Rat(0));
  for (std::size_t i = 0; i < d; ++i) sys(index.at(UEAElem::unitMono(d, i)), i) = Rat(1);
  for (std::size_t r = 0; r < span.size(); ++r)
    for (std::size_t k = 0; k < n; ++k) sys(k, d + r) = span[r][k];
  res.recovered = PreLieTable(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto rhs = coords(ueaMul(UEAElem::generator(d, cap, i), UEAElem::generator(d, cap, j), s));
      const auto x = solve(sys, rhs);
      if (!x) {
        res.consistent = false;
        continue;
      }
      for (std::size_t k = 0; k < d; ++k) res.recovered(i, j, k) = (*x)[k];
    }
  if (res.consistent && !(res.recovered == lambda)) res.consistent = false;
  return res;
}

// ---------------------------------------------------------------------------
// Oudom-Guin extension of a prelie product to S(g)

enum class FactorChoice { First, Last };

/// Extends a prelie product to S(g) by
///     1 * P = P,  P * 1 = eps(P),
///     (xP) * y = x * (P * y) - (x * P) * y,
///     P * (QR) = sum (P' * Q)(P'' * R),
/// and defines P # Q = sum P' (P'' * Q).
class OudomGuin {
 public:
  OudomGuin(const PreLieTable& t, std::size_t cap, FactorChoice choice = FactorChoice::First)
      : t_(t), cap_(cap), choice_(choice) {}

  std::size_t dim() const { return t_.dim(); }
  std::size_t cap() const { return cap_; }

  UEAElem star(const UEAElem& p, const UEAElem& q) {
    UEAElem out(dim(), cap_);
    for (const auto& [mp, cp] : p.terms())
      for (const auto& [mq, cq] : q.terms()) out.addScaled(starMono(mp, mq), cp * cq);
    return out;
  }

  UEAElem product(const UEAElem& p, const UEAElem& q) {
    UEAElem out(dim(), cap_);
    for (const auto& [mq, cq] : q.terms())
      for (const auto& [mp, cp] : p.terms()) {
        if (length(mp) + length(mq) > cap_) throw CapExceeded(length(mp) + length(mq), cap_);
        for (const auto& [lr, c] : ueaCoproduct(UEAElem::monomial(cap_, mp))) {
          const auto right = starMono(lr.second, mq);
          out.addScaled(symMul(UEAElem::monomial(cap_, lr.first), right), c * cp * cq);
        }
      }
    return out;
  }

 private:
  UEAElem gen(std::size_t i) const { return UEAElem::generator(dim(), cap_, i); }

  const UEAElem& starMono(const PBWMono& p, const PBWMono& q) {
    if (length(p) > cap_) throw CapExceeded(length(p), cap_);
    if (length(q) > cap_) throw CapExceeded(length(q), cap_);
    auto key = std::make_pair(p, q);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    UEAElem out(dim(), cap_);
    const std::size_t lp = length(p), lq = length(q);
    if (lp == 0) {
      out.add(q, Rat(1));
    } else if (lq == 0) {
      // eps(P) = 0 for P of positive length
    } else if (lp == 1 && lq == 1) {
      const std::size_t x = pickFactor(p), y = pickFactor(q);
      out = UEAElem::fromVector(cap_, t_.product(x, y));
    } else if (lq == 1) {
      // (x P') * y = x * (P' * y) - (x * P') * y
      const std::size_t x = pickFactor(p);
      PBWMono rest = p;
      --rest[x];
      const UEAElem inner = starMono(rest, q);  // in g, or y itself when P' = 1
      out += star(gen(x), inner);
      const UEAElem xp = star(gen(x), UEAElem::monomial(cap_, rest));
      out -= star(xp, UEAElem::monomial(cap_, q));
    } else {
      // P * (y R) = sum (P' * y)(P'' * R)
      const std::size_t y = pickFactor(q);
      PBWMono r = q;
      --r[y];
      const PBWMono ym = UEAElem::unitMono(dim(), y);
      for (const auto& [lr, c] : ueaCoproduct(UEAElem::monomial(cap_, p)))
        out.addScaled(symMul(starMono(lr.first, ym), starMono(lr.second, r)), c);
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

  std::size_t pickFactor(const PBWMono& m) const {
    if (choice_ == FactorChoice::First) {
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) return i;
    } else {
      for (std::size_t i = m.size(); i-- > 0;)
        if (m[i]) return i;
    }
    throw std::logic_error("pickFactor on the empty monomial");
  }

  const PreLieTable& t_;
  std::size_t cap_;
  FactorChoice choice_;
  std::map<std::pair<PBWMono, PBWMono>, UEAElem> memo_;
};

inline UEAElem oudomGuinStar(const UEAElem& p, const UEAElem& q, const PreLieTable& t,
                             FactorChoice choice = FactorChoice::First) {
  OudomGuin og(t, p.cap(), choice);
  return og.star(p, q);
}

inline UEAElem oudomGuinProduct(const UEAElem& p, const UEAElem& q, const PreLieTable& t,
                                FactorChoice choice = FactorChoice::First) {
  OudomGuin og(t, p.cap(), choice);
  return og.product(p, q);
}

/// True when every monomial of `e` has length >= k.
inline bool inPositiveDegree(const UEAElem& e, std::size_t k) {
  for (const auto& [m, c] : e.terms())
    if (length(m) < k) return false;
  return true;
}

struct Prop6Report {
  bool leftIdeal = false;
  bool bilateral = false;
  bool associativeOnG = false;
  bool consistent() const { return bilateral == associativeOnG; }
};

/// S_{>=2}(g) is a left ideal for #; it is two-sided exactly when the prelie
/// product is associative on g.
inline Prop6Report prop6Checks(const PreLieTable& t, std::size_t cap) {
  if (cap < 3) throw std::invalid_argument("prop6Checks: cap must be >= 3");
  OudomGuin og(t, cap);
  const std::size_t d = t.dim();
  Prop6Report r;
  r.leftIdeal = r.bilateral = true;
  for (const auto& q : detail::monomialsUpTo(d, 2, cap - 1)) {
    const auto Q = UEAElem::monomial(cap, q);
    for (std::size_t x = 0; x < d; ++x) {
      const auto X = UEAElem::generator(d, cap, x);
      if (!inPositiveDegree(og.product(X, Q), 2)) r.leftIdeal = false;
      if (!inPositiveDegree(og.product(Q, X), 2)) r.bilateral = false;
    }
  }
  r.associativeOnG = isAssociative(t);
  return r;
}

/// x * S^n(g) is contained in S^n(g) for generators x and n <= cap - 1.
inline bool starPreservesDegree(const PreLieTable& t, std::size_t cap) {
  OudomGuin og(t, cap);
  const std::size_t d = t.dim();
  for (const auto& q : detail::monomialsUpTo(d, 1, cap - 1))
    for (std::size_t x = 0; x < d; ++x) {
      const auto r = og.star(UEAElem::generator(d, cap, x), UEAElem::monomial(cap, q));
      for (const auto& [m, c] : r.terms())
        if (length(m) != length(q)) return false;
    }
  return true;
}

}  // namespace prelie
