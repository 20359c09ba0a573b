#pragma once
//
// Dimensions of simple modules of the simple complex Lie algebras, the
// small modules (simple, nontrivial, non-adjoint, of dimension below dim g)
// and the integer feasibility question of writing dim g as a sum of
// small-module dimensions.
//

#include "prelie/exactmath.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace prelie {

enum class FamilyTag { SL, SP, SOEven, SOOdd, G2, F4, E6, E7, E8 };

/// A simple Lie algebra. `n` is the matrix size for SL (sl_n), and the rank
/// for SP (sp_2n), SOEven (so_2n) and SOOdd (so_2n+1); unused otherwise.
struct LieFamily {
  FamilyTag tag = FamilyTag::SL;
  int n = 0;

  static LieFamily sl(int n) { return make(FamilyTag::SL, n); }
  static LieFamily sp(int n) { return make(FamilyTag::SP, n); }
  static LieFamily soEven(int n) { return make(FamilyTag::SOEven, n); }
  static LieFamily soOdd(int n) { return make(FamilyTag::SOOdd, n); }
  static LieFamily g2() { return {FamilyTag::G2, 0}; }
  static LieFamily f4() { return {FamilyTag::F4, 0}; }
  static LieFamily e6() { return {FamilyTag::E6, 0}; }
  static LieFamily e7() { return {FamilyTag::E7, 0}; }
  static LieFamily e8() { return {FamilyTag::E8, 0}; }

  static LieFamily make(FamilyTag tag, int n) {
    LieFamily f{tag, n};
    switch (tag) {
      case FamilyTag::SL:
        if (n < 2) throw std::invalid_argument("sl_n needs n >= 2");
        break;
      case FamilyTag::SP:
      case FamilyTag::SOOdd:
        if (n < 2) throw std::invalid_argument(f.name() + ": rank must be >= 2");
        break;
      case FamilyTag::SOEven:
        if (n < 3) throw std::invalid_argument(f.name() + ": rank must be >= 3");
        break;
      default:
        f.n = 0;
    }
    return f;
  }

  /// "sl", "sp", "so-even", "so-odd", "g2", "f4", "e6", "e7", "e8".
  static LieFamily parse(const std::string& family, int n) {
    static const std::map<std::string, FamilyTag> tags = {
        {"sl", FamilyTag::SL},        {"sp", FamilyTag::SP}, {"so-even", FamilyTag::SOEven},
        {"so-odd", FamilyTag::SOOdd}, {"g2", FamilyTag::G2}, {"f4", FamilyTag::F4},
        {"e6", FamilyTag::E6},        {"e7", FamilyTag::E7}, {"e8", FamilyTag::E8}};
    auto it = tags.find(family);
    if (it == tags.end()) throw std::invalid_argument("unknown family '" + family + "'");
    return make(it->second, n);
  }

  bool isClassical() const { return tag == FamilyTag::SL || tag == FamilyTag::SP || tag == FamilyTag::SOEven || tag == FamilyTag::SOOdd; }

  int rank() const {
    switch (tag) {
      case FamilyTag::SL: return n - 1;
      case FamilyTag::SP:
      case FamilyTag::SOEven:
      case FamilyTag::SOOdd: return n;
      case FamilyTag::G2: return 2;
      case FamilyTag::F4: return 4;
      case FamilyTag::E6: return 6;
      case FamilyTag::E7: return 7;
      case FamilyTag::E8: return 8;
    }
    return 0;
  }

  std::uint64_t dimension() const {
    const std::uint64_t m = static_cast<std::uint64_t>(n);
    switch (tag) {
      case FamilyTag::SL: return m * m - 1;
      case FamilyTag::SP: return m * (2 * m + 1);
      case FamilyTag::SOEven: return m * (2 * m - 1);
      case FamilyTag::SOOdd: return m * (2 * m + 1);
      case FamilyTag::G2: return 14;
      case FamilyTag::F4: return 52;
      case FamilyTag::E6: return 78;
      case FamilyTag::E7: return 133;
      // The small-module table prints 78 here; 248 is the dimension of e8.
      case FamilyTag::E8: return 248;
    }
    return 0;
  }

  std::string name() const {
    switch (tag) {
      case FamilyTag::SL: return "sl_" + std::to_string(n);
      case FamilyTag::SP: return "sp_" + std::to_string(2 * n);
      case FamilyTag::SOEven: return "so_" + std::to_string(2 * n);
      case FamilyTag::SOOdd: return "so_" + std::to_string(2 * n + 1);
      case FamilyTag::G2: return "g2";
      case FamilyTag::F4: return "f4";
      case FamilyTag::E6: return "e6";
      case FamilyTag::E7: return "e7";
      case FamilyTag::E8: return "e8";
    }
    return "?";
  }

  friend bool operator==(const LieFamily&, const LieFamily&) = default;
};

using Weight = std::vector<int>;

struct SmallModule {
  Weight weight;
  std::uint64_t dim = 0;
  friend bool operator==(const SmallModule&, const SmallModule&) = default;
  friend auto operator<=>(const SmallModule&, const SmallModule&) = default;
};

namespace detail {

inline Rat factorial(int k) {
  mpz_class f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return Rat(f);
}

inline Rat suffixSum(const Weight& a, int from, int to) {  // 1-based inclusive
  Rat s;
  for (int x = from; x <= to; ++x) s += Rat(a[x - 1]);
  return s;
}

inline std::uint64_t asDimension(const Rat& r, const char* formula) {
  if (!r.isInteger() || r.sign() <= 0)
    throw std::logic_error(std::string(formula) + " produced a non-positive or non-integral value " + r.str());
  if (!r.num().fits_ulong_p()) throw std::overflow_error("dimension exceeds 64 bits");
  return r.num().get_ui();
}

// The four classical dimension formulas, in the l-vector form.

inline Rat dimSL(const Weight& a) {
  const int n = static_cast<int>(a.size()) + 1;
  Rat res(1);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n; ++j) res *= (suffixSum(a, i, j - 1) + Rat(j - i)) / Rat(j - i);
  return res;
}

inline Rat dimSP(const Weight& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rat> l;
  for (int k = 1; k <= n; ++k) l.push_back(suffixSum(a, k, n) + Rat(n - k));
  Rat res(1);
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 1; j < n; ++j) res *= (l[i] - l[j]) * (l[i] + l[j] + Rat(2));
  for (int j = 0; j < n; ++j) res *= l[j] + Rat(1);
  for (int j = 0; j <= n - 1; ++j) res /= factorial(2 * n - 2 * j - 1);
  return res;
}

inline Rat dimSOOdd(const Weight& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rat> l;
  for (int k = 1; k <= n; ++k) l.push_back(suffixSum(a, k, n) - Rat(a[n - 1]) / Rat(2) + Rat(n - k));
  Rat res(1);
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 1; j < n; ++j) res *= (l[i] - l[j]) * (l[i] + l[j] + Rat(1));
  for (int j = 0; j < n; ++j) res *= Rat(2) * l[j] + Rat(1);
  for (int j = 0; j <= n - 1; ++j) res /= factorial(2 * n - 2 * j - 1);
  return res;
}

inline Rat dimSOEven(const Weight& a) {
  const int n = static_cast<int>(a.size());
  const Rat half(1, 2);
  std::vector<Rat> l;
  for (int k = 1; k <= n - 2; ++k)
    l.push_back(suffixSum(a, k, n - 2) + Rat(a[n - 2]) * half + Rat(a[n - 1]) * half + Rat(n - k));
  l.push_back(Rat(a[n - 2]) * half + Rat(a[n - 1]) * half + Rat(1));
  l.push_back(-Rat(a[n - 2]) * half + Rat(a[n - 1]) * half);
  Rat res(1);
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 1; j < n; ++j) res *= (l[i] - l[j]) * (l[i] + l[j]);
  for (int j = 1; j <= n - 1; ++j) res /= factorial(2 * n - 2 * j);
  mpz_class two;
  mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
  return res * Rat(two);
}

}  // namespace detail

namespace detail {

/// The Weyl dimension as an exact rational, before any size check.
inline Rat weylDimension(const LieFamily& family, const Weight& w) {
  if (!family.isClassical()) throw std::invalid_argument("dimIrrep: no formula for exceptional " + family.name());
  if (static_cast<int>(w.size()) != family.rank())
    throw std::invalid_argument("dimIrrep: weight length " + std::to_string(w.size()) + " but rank " +
                                std::to_string(family.rank()));
  for (int c : w)
    if (c < 0) throw std::invalid_argument("dimIrrep: negative weight coordinate");
  switch (family.tag) {
    case FamilyTag::SL: return dimSL(w);
    case FamilyTag::SP: return dimSP(w);
    case FamilyTag::SOOdd: return dimSOOdd(w);
    case FamilyTag::SOEven: return dimSOEven(w);
    default: break;
  }
  throw std::logic_error("unreachable");
}

}  // namespace detail

/// Dimension of the simple module with highest weight `w` (classical families).
/// Throws std::overflow_error when the dimension does not fit in 64 bits.
inline std::uint64_t dimIrrep(const LieFamily& family, const Weight& w) {
  static constexpr const char* names[] = {"dimsl", "dimsp", "dimsoeven", "dimsoodd"};
  const Rat d = detail::weylDimension(family, w);
  const auto tag = static_cast<std::size_t>(family.tag);
  return detail::asDimension(d, tag < 4 ? names[tag] : "dim");
}

/// Highest weight of the adjoint module. For the exceptional algebras the
/// labelling puts the standard module at (1,0,...,0), as in the small-module table.
inline Weight adjointWeight(const LieFamily& f) {
  const int r = f.rank();
  Weight w(static_cast<std::size_t>(r), 0);
  switch (f.tag) {
    case FamilyTag::SL:
      if (r == 1) {
        w[0] = 2;
      } else {
        w.front() = 1;
        w.back() = 1;
      }
      break;
    case FamilyTag::SP: w[0] = 2; break;
    case FamilyTag::SOOdd:
      if (r == 2) w[1] = 2; else w[1] = 1;
      break;
    case FamilyTag::SOEven:
      if (r == 3) { w[1] = 1; w[2] = 1; } else w[1] = 1;
      break;
    case FamilyTag::G2: w[1] = 1; break;
    case FamilyTag::F4: w[3] = 1; break;
    case FamilyTag::E6: w[1] = 1; break;
    case FamilyTag::E7: w[6] = 1; break;
    case FamilyTag::E8: w[7] = 1; break;
  }
  return w;
}

/// Small modules: every weight with all coordinates <= 2, dimension below
/// dim g, other than the trivial and adjoint weights. Exceptional algebras
/// return fixed data.
inline std::vector<SmallModule> smallModules(const LieFamily& f) {
  switch (f.tag) {
    case FamilyTag::G2: return {{{1, 0}, 7}};
    case FamilyTag::F4: return {{{1, 0, 0, 0}, 26}};
    case FamilyTag::E6: return {{{1, 0, 0, 0, 0, 0}, 27}};
    case FamilyTag::E7: return {{{1, 0, 0, 0, 0, 0, 0}, 56}};
    case FamilyTag::E8: return {};
    default: break;
  }
  const int r = f.rank();
  const Rat dg(static_cast<long>(f.dimension()));
  const Weight adj = adjointWeight(f);
  std::vector<SmallModule> out;
  Weight w(static_cast<std::size_t>(r), 0);
  // Depth-first over {0,1,2}^r in lexicographic order (last coordinate
  // fastest). The Weyl dimension is increasing in every coordinate, so once a
  // prefix (padded with zeros) reaches dim g, no completion of it is small.
  // Comparing exact rationals also sidesteps dimensions beyond 64 bits.
  std::function<void(int)> visit = [&](int pos) {
    if (pos == r) {
      const bool trivial = std::all_of(w.begin(), w.end(), [](int c) { return c == 0; });
      if (!trivial && w != adj && detail::weylDimension(f, w) < dg) out.push_back({w, dimIrrep(f, w)});
      return;
    }
    for (int v = 0; v <= 2; ++v) {
      w[static_cast<std::size_t>(pos)] = v;
      if (v > 0 && !(detail::weylDimension(f, w) < dg)) break;
      visit(pos + 1);
    }
    w[static_cast<std::size_t>(pos)] = 0;
  };
  visit(0);
  return out;
}

/// Distinct small-module dimensions, ascending.
inline std::vector<std::uint64_t> smallDimensions(const LieFamily& f) {
  std::set<std::uint64_t> s;
  for (const auto& m : smallModules(f)) s.insert(m.dim);
  return {s.begin(), s.end()};
}

/// Every multiset of entries of `dims` summing to `target`, each multiset
/// sorted ascending, listed in lexicographic order. Empty result means
/// infeasible.
inline std::vector<std::vector<std::uint64_t>> feasibleDecomps(std::uint64_t target, std::vector<std::uint64_t> dims) {
  for (auto d : dims)
    if (d == 0) throw std::invalid_argument("feasibleDecomps: dimensions must be positive");
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());

  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> current;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t from, std::uint64_t remaining) {
    if (remaining == 0) {
      out.push_back(current);  // target 0 yields the single empty multiset
      return;
    }
    for (std::size_t i = from; i < dims.size() && dims[i] <= remaining; ++i) {
      current.push_back(dims[i]);
      rec(i, remaining - dims[i]);
      current.pop_back();
    }
  };
  rec(0, target);
  return out;
}

}  // namespace prelie
