#ifndef SEMIPART_HAMEL_HPP
#define SEMIPART_HAMEL_HPP

// Symbolic reals over a Hamel basis that is split into Cantor pieces.
//
// A basis element is a pair (piece index, Cantor point). Cantor points are
// eventually-zero binary sequences, stored as the canonical finite prefix
// (empty, or ending in '1'). A real is a finite rational combination of
// basis elements, stored with no zero coefficients so that equality of
// representations is equality of reals.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semipart/rational.hpp"

namespace semipart {

using PieceIndex = std::uint32_t;
using CylinderIndex = std::uint64_t;

/// Longest accepted point string. Keeps every cylinder index used by the
/// classifier (including its scan bound) inside 64 bits.
inline constexpr std::size_t kMaxPointLength = 31;

inline bool is_canonical_point(std::string_view point) {
  if (point.size() > kMaxPointLength) return false;
  if (point.find_first_not_of("01") != std::string_view::npos) return false;
  return point.empty() || point.back() == '1';
}

struct BasisElement {
  PieceIndex piece = 0;
  std::string point;

  auto operator<=>(const BasisElement&) const = default;
  bool operator==(const BasisElement&) const = default;
};

/// Checked constructor for a basis element.
inline BasisElement basis(PieceIndex piece, std::string point) {
  if (!is_canonical_point(point))
    throw DomainError("non-canonical point string \"" + point + "\"");
  return BasisElement{piece, std::move(point)};
}

class HamelReal {
 public:
  using Terms = std::map<BasisElement, Rational>;

  HamelReal() = default;

  /// Sums repeated elements and drops zero sums; rejects non-canonical points.
  static HamelReal make(const std::vector<std::pair<BasisElement, Rational>>& pairs) {
    HamelReal x;
    for (const auto& [b, q] : pairs) {
      if (!is_canonical_point(b.point))
        throw DomainError("non-canonical point string \"" + b.point + "\"");
      x.accumulate(b, q);
    }
    return x;
  }

  /// The single-term real q*b.
  static HamelReal term(const BasisElement& b, const Rational& q) { return make({{b, q}}); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coeff(const BasisElement& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  HamelReal& operator+=(const HamelReal& other) {
    for (const auto& [b, q] : other.terms_) accumulate(b, q);
    return *this;
  }

  HamelReal& operator*=(const Rational& q) {
    if (q == 0) {
      terms_.clear();
    } else {
      for (auto& entry : terms_) entry.second *= q;
    }
    return *this;
  }

  friend HamelReal operator+(HamelReal x, const HamelReal& y) { return x += y; }
  friend HamelReal operator*(const Rational& q, HamelReal x) { return x *= q; }
  friend HamelReal operator-(HamelReal x) { return x *= Rational(-1); }
  friend HamelReal operator-(HamelReal x, const HamelReal& y) { return x += -y; }

  friend bool operator==(const HamelReal& x, const HamelReal& y) { return x.terms_ == y.terms_; }

  /// Restriction to the basis elements accepted by `keep`.
  template <std::predicate<const BasisElement&> Pred>
  HamelReal restrict_to(Pred keep) const {
    HamelReal out;
    for (const auto& [b, q] : terms_)
      if (keep(b)) out.terms_.emplace_hint(out.terms_.end(), b, q);
    return out;
  }

  /// True when no stored coefficient is zero.
  bool is_canonical() const {
    return std::ranges::all_of(terms_, [](const auto& e) {
      return e.second != 0 && is_canonical_point(e.first.point);
    });
  }

 private:
  void accumulate(const BasisElement& b, const Rational& q) {
    if (q == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, q);
    if (!inserted) {
      it->second += q;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

inline HamelReal make_real(const std::vector<std::pair<BasisElement, Rational>>& pairs) {
  return HamelReal::make(pairs);
}

inline HamelReal add(const HamelReal& x, const HamelReal& y) { return x + y; }
inline HamelReal scale(const Rational& q, const HamelReal& x) { return q * x; }

/// B(x): the basis elements with nonzero coefficient.
inline std::set<BasisElement> support(const HamelReal& x) {
  std::set<BasisElement> out;
  for (const auto& entry : x.terms()) out.insert(out.end(), entry.first);
  return out;
}

/// Largest piece index carrying a coefficient of x.
inline PieceIndex max_index(const HamelReal& x) {
  if (x.is_zero()) throw DomainError("max_index of 0 is undefined");
  PieceIndex best = 0;
  for (const auto& entry : x.terms()) best = std::max(best, entry.first.piece);
  return best;
}

/// S(x, J): the sum of the coefficients of x on basis elements in J.
template <std::predicate<const BasisElement&> Pred>
Rational coeff_sum(const HamelReal& x, Pred in_set) {
  Rational total = 0;
  for (const auto& [b, q] : x.terms())
    if (in_set(b)) total += q;
  return total;
}

/// Canonical text: terms by ascending (piece, point), coefficients in lowest
/// terms, e.g. "2*b(0,) - 1/3*b(2,01)". The zero real prints as "0".
inline std::string to_string(const HamelReal& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, q] : x.terms()) {
    if (first) {
      if (q < 0) out += '-';
    } else {
      out += q < 0 ? " - " : " + ";
    }
    first = false;
    out += to_string(Rational(abs(q)));
    out += "*b(" + std::to_string(b.piece) + "," + b.point + ")";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cylinders. The k-th cylinder of a piece is the set of points extending the
// k-th binary string in length-lex order: 1 -> "", 2 -> "0", 3 -> "1", 4 -> "00".
// Equivalently, the string is the binary expansion of k without its leading 1.

inline std::string cylinder_string(CylinderIndex k) {
  if (k == 0) throw DomainError("cylinder index must be >= 1");
  int top = 63;
  while (((k >> top) & 1U) == 0) --top;
  std::string out;
  out.reserve(static_cast<std::size_t>(top));
  for (int bit = top - 1; bit >= 0; --bit) out.push_back(((k >> bit) & 1U) ? '1' : '0');
  return out;
}

/// Inverse of cylinder_string.
inline CylinderIndex lex_index(std::string_view s) {
  if (s.size() > 63) throw DomainError("binary string too long for a cylinder index");
  CylinderIndex k = 1;
  for (char c : s) k = (k << 1) | (c == '1' ? 1U : 0U);
  return k;
}

/// Whether the point p*0^w lies in the cylinder of string t.
inline bool extends(std::string_view point, std::string_view t) {
  if (t.size() <= point.size()) return point.substr(0, t.size()) == t;
  return t.substr(0, point.size()) == point &&
         t.find('1', point.size()) == std::string_view::npos;
}

inline bool cylinder_contains(std::string_view point, CylinderIndex k) {
  return extends(point, cylinder_string(k));
}

/// The k-th cylinder of one piece, as a predicate on basis elements.
struct Cylinder {
  PieceIndex piece;
  CylinderIndex k;

  bool operator()(const BasisElement& b) const {
    return b.piece == piece && cylinder_contains(b.point, k);
  }
};

/// A cylinder index by which some cylinder isolates exactly one of `points`:
/// the length-lex index of p*0^M, M = 1 + (longest point), minimised over p.
inline CylinderIndex lex_index_bound(const std::vector<std::string>& points) {
  if (points.empty()) throw DomainError("lex_index_bound of an empty point set");
  std::size_t longest = 0;
  for (const auto& p : points) longest = std::max(longest, p.size());
  CylinderIndex best = ~CylinderIndex{0};
  for (const auto& p : points)
    best = std::min(best, lex_index(p + std::string(longest + 1, '0')));
  return best;
}

/// Point strings of the piece-`alpha` part of x, in ascending order.
inline std::vector<std::string> piece_points(const HamelReal& x, PieceIndex alpha) {
  std::vector<std::string> out;
  for (const auto& entry : x.terms())
    if (entry.first.piece == alpha) out.push_back(entry.first.point);
  return out;
}

}  // namespace semipart

#endif
