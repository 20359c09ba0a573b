#pragma once
//
// The tensor coalgebra T(V) with deconcatenation, the shuffle product, and
// dendriform half-products built from a Hopf product * for which T_{>=2}(V)
// is a left ideal:
//     v < w = w v,   (v_1 ... v_n) < w = ((v_1 ... v_{n-1}) * w) v_n,   > = * - <.
//

#include "prelie/symlinalg.hpp"

#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prelie {

using Word = std::vector<int>;

inline std::string wordString(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int c : w) s += c < 26 ? std::string(1, static_cast<char>('a' + c)) : "<" + std::to_string(c) + ">";
  return s;
}

/// Finite linear combination of words.
class TensorElem {
 public:
  TensorElem() = default;
  explicit TensorElem(const Word& w, const Rat& c = Rat(1)) { add(w, c); }

  const std::map<Word, Rat>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  Rat coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add(const Word& w, const Rat& c) {
    if (c.isZero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }
  void addScaled(const TensorElem& o, const Rat& s) {
    for (const auto& [w, c] : o.terms_) add(w, s * c);
  }

  /// Component of length k; k = 1 is the projection onto V.
  TensorElem component(std::size_t k) const {
    TensorElem e;
    for (const auto& [w, c] : terms_)
      if (w.size() == k) e.terms_.emplace(w, c);
    return e;
  }

  /// Appends a letter on the right of every word.
  TensorElem appended(int letter) const {
    TensorElem e;
    for (const auto& [w, c] : terms_) {
      Word x = w;
      x.push_back(letter);
      e.terms_.emplace(std::move(x), c);
    }
    return e;
  }

  TensorElem& operator+=(const TensorElem& o) { addScaled(o, Rat(1)); return *this; }
  TensorElem& operator-=(const TensorElem& o) { addScaled(o, Rat(-1)); return *this; }
  friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
  friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
  friend bool operator==(const TensorElem&, const TensorElem&) = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
      if (!s.empty()) s += c.sign() < 0 ? " - " : " + ";
      else if (c.sign() < 0) s += "-";
      const Rat a = c.sign() < 0 ? -c : c;
      s += (a.isOne() ? "" : a.str() + "*") + wordString(w);
    }
    return s;
  }

 private:
  std::map<Word, Rat> terms_;
};

// ---------------------------------------------------------------------------
// coalgebra

/// All l(w)+1 splittings w = w1 w2.
inline std::vector<std::pair<Word, Word>> deconcat(const Word& w) {
  std::vector<std::pair<Word, Word>> out;
  for (std::size_t k = 0; k <= w.size(); ++k)
    out.emplace_back(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)),
                     Word(w.begin() + static_cast<std::ptrdiff_t>(k), w.end()));
  return out;
}

/// Splittings with both sides nonempty.
inline std::vector<std::pair<Word, Word>> reducedDeconcat(const Word& w) {
  auto all = deconcat(w);
  if (all.size() <= 2) return {};
  return {all.begin() + 1, all.end() - 1};
}

/// Element of T(V) (x) T(V).
using Tensor2W = std::map<std::pair<Word, Word>, Rat>;

inline void addTo(Tensor2W& t, const Word& l, const Word& r, const Rat& c) {
  if (c.isZero()) return;
  auto [it, fresh] = t.try_emplace({l, r}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.isZero()) t.erase(it);
  }
}

/// a (x) b for tensor elements.
inline void addTensor(Tensor2W& t, const TensorElem& a, const TensorElem& b, const Rat& s = Rat(1)) {
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) addTo(t, wa, wb, s * ca * cb);
}

inline Tensor2W coproduct(const TensorElem& e, bool reduced) {
  Tensor2W out;
  for (const auto& [w, c] : e.terms())
    for (const auto& [l, r] : reduced ? reducedDeconcat(w) : deconcat(w)) addTo(out, l, r, c);
  return out;
}

// ---------------------------------------------------------------------------
// products

inline TensorElem shuffle(const Word& a, const Word& b) {
  if (a.empty()) return TensorElem(b);
  if (b.empty()) return TensorElem(a);
  TensorElem out;
  const Word ta(a.begin() + 1, a.end()), tb(b.begin() + 1, b.end());
  const TensorElem left = shuffle(ta, b), right = shuffle(a, tb);
  for (const auto& [w, c] : left.terms()) {
    Word x{a.front()};
    x.insert(x.end(), w.begin(), w.end());
    out.add(x, c);
  }
  for (const auto& [w, c] : right.terms()) {
    Word x{b.front()};
    x.insert(x.end(), w.begin(), w.end());
    out.add(x, c);
  }
  return out;
}

/// Product on basis words, extended bilinearly by `extend`.
using WordProduct = std::function<TensorElem(const Word&, const Word&)>;

inline TensorElem extend(const WordProduct& p, const TensorElem& a, const TensorElem& b) {
  TensorElem out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.addScaled(p(wa, wb), ca * cb);
  return out;
}

struct DendriformPair {
  WordProduct star;
  WordProduct prec;
  WordProduct succ;
};

/// (v_1 ... v_n) < w = ((v_1 ... v_{n-1}) * w) v_n, with the empty prefix acting as the unit.
inline TensorElem precFromStar(const WordProduct& star, const Word& a, const Word& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("half-products are defined on nonempty words");
  const Word prefix(a.begin(), a.end() - 1);
  const TensorElem head = prefix.empty() ? TensorElem(b) : star(prefix, b);
  return head.appended(a.back());
}

inline DendriformPair pairFromStar(WordProduct star) {
  DendriformPair p;
  p.star = star;
  p.prec = [star](const Word& a, const Word& b) { return precFromStar(star, a, b); };
  p.succ = [star](const Word& a, const Word& b) { return star(a, b) - precFromStar(star, a, b); };
  return p;
}

inline DendriformPair shufflePair() { return pairFromStar(shuffle); }

/// The same star with the two half-products exchanged; not dendriform.
inline DendriformPair swapped(const DendriformPair& p) { return {p.star, p.succ, p.prec}; }

// ---------------------------------------------------------------------------
// axioms

inline std::vector<Word> wordsUpTo(int alphabet, std::size_t minLen, std::size_t maxLen) {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 0; len <= maxLen; ++len) {
    if (len >= minLen)
      for (const auto& w : layer) out.push_back(w);
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int c = 0; c < alphabet; ++c) {
        Word x = w;
        x.push_back(c);
        next.push_back(std::move(x));
      }
    layer = std::move(next);
  }
  return out;
}

struct AxiomViolation {
  int equation;  // 1..5
  std::vector<Word> args;
  std::string lhs, rhs;
};

struct AxiomReport {
  std::array<std::size_t, 5> instances{};
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

namespace detail {

inline std::string str(const Tensor2W& t) {
  if (t.empty()) return "0";
  std::string s;
  for (const auto& [lr, c] : t) {
    if (!s.empty()) s += " + ";
    s += (c.isOne() ? "" : "(" + c.str() + ")*") + wordString(lr.first) + "(x)" + wordString(lr.second);
  }
  return s;
}

}  // namespace detail

/// Exhaustive check of
///   (1) (x<y)<z = x<(y*z)    (2) (x>y)<z = x>(y<z)    (3) (x*y)>z = x>(y>z)
///   (4), (5) the compatibilities of the reduced coproduct with < and >,
/// on nonempty words with total length <= maxLen.
inline AxiomReport dendriformAxiomCheck(const DendriformPair& p, int alphabet, std::size_t maxLen) {
  AxiomReport rep;
  const auto words = wordsUpTo(alphabet, 1, maxLen);
  auto E = [&](const WordProduct& f, const TensorElem& a, const TensorElem& b) { return extend(f, a, b); };

  for (const auto& x : words)
    for (const auto& y : words) {
      if (x.size() + y.size() > maxLen) continue;
      for (const auto& z : words) {
        if (x.size() + y.size() + z.size() > maxLen) continue;
        const TensorElem X(x), Y(y), Z(z);
        const TensorElem l1 = E(p.prec, p.prec(x, y), Z), r1 = E(p.prec, X, p.star(y, z));
        const TensorElem l2 = E(p.prec, p.succ(x, y), Z), r2 = E(p.succ, X, p.prec(y, z));
        const TensorElem l3 = E(p.succ, p.star(x, y), Z), r3 = E(p.succ, X, p.succ(y, z));
        const std::pair<TensorElem, TensorElem> eqs[] = {{l1, r1}, {l2, r2}, {l3, r3}};
        for (int e = 0; e < 3; ++e) {
          ++rep.instances[static_cast<std::size_t>(e)];
          if (!(eqs[e].first == eqs[e].second)) rep.violations.push_back({e + 1, {x, y, z}, eqs[e].first.str(), eqs[e].second.str()});
        }
      }
    }

  for (const auto& a : words)
    for (const auto& b : words) {
      if (a.size() + b.size() > maxLen) continue;
      const TensorElem A(a), B(b);
      const auto da = reducedDeconcat(a), db = reducedDeconcat(b);
      for (int which = 0; which < 2; ++which) {
        const WordProduct& half = which == 0 ? p.prec : p.succ;
        const Tensor2W lhs = coproduct(half(a, b), true);
        Tensor2W rhs;
        for (const auto& [a1, a2] : da)
          for (const auto& [b1, b2] : db) addTensor(rhs, p.star(a1, b1), half(a2, b2));
        if (which == 0) {
          for (const auto& [a1, a2] : da) addTensor(rhs, p.star(a1, b), TensorElem(a2));
          for (const auto& [b1, b2] : db) addTensor(rhs, TensorElem(b1), half(a, b2));
          for (const auto& [a1, a2] : da) addTensor(rhs, TensorElem(a1), half(a2, b));
          addTensor(rhs, B, A);
        } else {
          for (const auto& [b1, b2] : db) addTensor(rhs, p.star(a, b1), TensorElem(b2));
          for (const auto& [b1, b2] : db) addTensor(rhs, TensorElem(b1), half(a, b2));
          for (const auto& [a1, a2] : da) addTensor(rhs, TensorElem(a1), half(a2, b));
          addTensor(rhs, A, B);
        }
        ++rep.instances[static_cast<std::size_t>(3 + which)];
        if (lhs != rhs) rep.violations.push_back({4 + which, {a, b}, detail::str(lhs), detail::str(rhs)});
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Hopf-structure evidence for a candidate star

struct HopfReport {
  bool unital = true;
  bool associative = true;
  bool coproductMorphism = true;
  bool leftIdealGe2 = true;
  bool ok() const { return unital && associative && coproductMorphism && leftIdealGe2; }
};

inline HopfReport hopfCheck(const WordProduct& star, int alphabet, std::size_t maxLen) {
  HopfReport r;
  const auto words = wordsUpTo(alphabet, 0, maxLen);
  for (const auto& w : words)
    if (!(star(Word{}, w) == TensorElem(w)) || !(star(w, Word{}) == TensorElem(w))) r.unital = false;

  for (const auto& a : words)
    for (const auto& b : words) {
      if (a.size() + b.size() > maxLen) continue;
      for (const auto& c : words)
        if (a.size() + b.size() + c.size() <= maxLen &&
            !(extend(star, star(a, b), TensorElem(c)) == extend(star, TensorElem(a), star(b, c))))
          r.associative = false;

      // Delta(a * b) = Delta(a) * Delta(b)
      const Tensor2W lhs = coproduct(star(a, b), false);
      Tensor2W rhs;
      for (const auto& [a1, a2] : deconcat(a))
        for (const auto& [b1, b2] : deconcat(b)) addTensor(rhs, star(a1, b1), star(a2, b2));
      if (lhs != rhs) r.coproductMorphism = false;

      if (b.size() >= 2 && !a.empty() && !star(a, b).component(1).isZero()) r.leftIdealGe2 = false;
      if (b.size() >= 2 && !star(a, b).component(0).isZero()) r.leftIdealGe2 = false;
    }
  return r;
}

// ---------------------------------------------------------------------------
// omega, braces, and the structure of A^{<2}

/// omega(v_1, ..., v_n) = v_n < (v_{n-1} < ( ... < (v_2 < v_1)...)).
inline TensorElem omegaWord(const DendriformPair& p, const Word& letters) {
  if (letters.empty()) return TensorElem(Word{});
  TensorElem acc(Word{letters.front()});
  for (std::size_t i = 1; i < letters.size(); ++i) acc = extend(p.prec, TensorElem(Word{letters[i]}), acc);
  return acc;
}

/// <a_1, ..., a_n> = pi_V((a_1 ... a_{n-1}) * a_n).
inline TensorElem braceProduct(const WordProduct& star, const Word& letters) {
  if (letters.size() < 2) throw std::invalid_argument("braceProduct needs at least two arguments");
  const Word head(letters.begin(), letters.end() - 1);
  return star(head, Word{letters.back()}).component(1);
}

/// The same brace through the right half-product: pi_V((a_1 ... a_{n-1}) > a_n).
inline TensorElem braceProductSucc(const DendriformPair& p, const Word& letters) {
  if (letters.size() < 2) throw std::invalid_argument("braceProduct needs at least two arguments");
  const Word head(letters.begin(), letters.end() - 1);
  return p.succ(head, Word{letters.back()}).component(1);
}

struct Prop30Report {
  bool directSum = false;        // A_+ = Prim (+) A^{<2}
  bool primTimesEqualsAll = false;  // Prim < A_+ = A_+ < A_+
  bool leftIdeal = false;        // A_+ * A^{<2} inside A^{<2}
  bool ok() const { return directSum && primTimesEqualsAll && leftIdeal; }
};

/// Exact linear algebra over the span of words of length 1..maxLen.
inline Prop30Report prop30Checks(const DendriformPair& p, int alphabet, std::size_t maxLen) {
  const auto words = wordsUpTo(alphabet, 1, maxLen);
  std::map<Word, std::size_t> index;
  for (std::size_t k = 0; k < words.size(); ++k) index[words[k]] = k;
  auto coords = [&](const TensorElem& e) {
    std::vector<Rat> v(words.size());
    for (const auto& [w, c] : e.terms()) {
      auto it = index.find(w);
      if (it == index.end()) throw std::out_of_range("prop30Checks: product leaves the truncated span");
      v[it->second] = c;
    }
    return v;
  };
  auto rankOf = [&](const std::vector<std::vector<Rat>>& rows) -> std::size_t {
    if (rows.empty()) return 0;
    MatQ m(rows.size(), words.size(), Rat(0));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t k = 0; k < words.size(); ++k) m(r, k) = rows[r][k];
    return bareissRank(m).rank;
  };

  std::vector<std::vector<Rat>> primPrec, allPrec, prim;
  for (const auto& a : words)
    for (const auto& b : words) {
      if (a.size() + b.size() > maxLen) continue;
      auto v = coords(p.prec(a, b));
      if (a.size() == 1) primPrec.push_back(v);
      allPrec.push_back(std::move(v));
    }
  for (int c = 0; c < alphabet; ++c) prim.push_back(coords(TensorElem(Word{c})));

  Prop30Report r;
  const std::size_t rPrec = rankOf(primPrec), rAll = rankOf(allPrec);
  auto joint = primPrec;
  joint.insert(joint.end(), prim.begin(), prim.end());
  r.directSum = rankOf(joint) == rPrec + prim.size() && rPrec + prim.size() == words.size();
  auto both = primPrec;
  both.insert(both.end(), allPrec.begin(), allPrec.end());
  r.primTimesEqualsAll = rPrec == rAll && rankOf(both) == rPrec;

  r.leftIdeal = true;
  for (const auto& x : words)
    for (const auto& y : words)
      for (const auto& z : words) {
        if (x.size() + y.size() + z.size() > maxLen) continue;
        auto ext = primPrec;
        ext.push_back(coords(extend(p.star, TensorElem(x), p.prec(y, z))));
        if (rankOf(ext) != rPrec) r.leftIdeal = false;
      }
  return r;
}

/// Round trip on the stock instance: (<, >) -> (* = < + >, A^{<2}) -> <'.
/// Returns true when <' agrees with < on all word pairs of total length <= maxLen.
inline bool roundTrip(const DendriformPair& p, int alphabet, std::size_t maxLen) {
  const WordProduct star = [p](const Word& a, const Word& b) {
    if (a.empty()) return TensorElem(b);
    if (b.empty()) return TensorElem(a);
    return p.prec(a, b) + p.succ(a, b);
  };
  const DendriformPair again = pairFromStar(star);
  for (const auto& a : wordsUpTo(alphabet, 1, maxLen))
    for (const auto& b : wordsUpTo(alphabet, 1, maxLen))
      if (a.size() + b.size() <= maxLen && !(again.prec(a, b) == p.prec(a, b))) return false;
  return prop30Checks(p, alphabet, maxLen).ok();
}

}  // namespace prelie
