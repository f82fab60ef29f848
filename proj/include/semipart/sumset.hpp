#ifndef SEMIPART_SUMSET_HPP
#define SEMIPART_SUMSET_HPP

// Exact finite unions of intervals with rational (or infinite) endpoints, and
// the additive operations on them: Minkowski sums, n-fold sums (n)A,
// closure tests, and the halfline threshold of the even sums of a set.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semipart/rational.hpp"

namespace semipart {

/// A point of the extended line: -inf, a rational, or +inf.
class Extended {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  Extended() = default;
  Extended(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT(implicit)
  Extended(long v) : Extended(Rational(v)) {}                         // NOLINT(implicit)

  static Extended neg_inf() { return Extended(Kind::NegInf); }
  static Extended pos_inf() { return Extended(Kind::PosInf); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  const Rational& value() const { return value_; }

  friend int compare(const Extended& a, const Extended& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_ ? -1 : 1;
    if (!a.is_finite()) return 0;
    return cmp(a.value_, b.value_);
  }
  friend bool operator==(const Extended& a, const Extended& b) { return compare(a, b) == 0; }
  friend bool operator<(const Extended& a, const Extended& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Extended& a, const Extended& b) { return compare(a, b) <= 0; }

  /// Sum of two lower endpoints (an infinity absorbs). -inf + +inf never
  /// arises from valid intervals.
  friend Extended operator+(const Extended& a, const Extended& b) {
    if (!a.is_finite()) return a;
    if (!b.is_finite()) return b;
    return Extended(Rational(a.value_ + b.value_));
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::NegInf: return "-inf";
      case Kind::PosInf: return "inf";
      case Kind::Finite: break;
    }
    return value_.get_str();
  }

 private:
  explicit Extended(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  Rational value_ = 0;
};

struct Interval {
  Extended lo;
  Extended hi;
  bool lo_closed = false;
  bool hi_closed = false;

  /// Checked constructor: lo < hi, or lo = hi with both ends closed; an
  /// infinite end must be open.
  static Interval make(Extended lo, Extended hi, bool lo_closed, bool hi_closed) {
    if ((!lo.is_finite() && lo_closed) || (!hi.is_finite() && hi_closed))
      throw DomainError("infinite interval endpoints must be open");
    if (lo.kind() == Extended::Kind::PosInf || hi.kind() == Extended::Kind::NegInf)
      throw DomainError("interval endpoints out of order");
    const int c = compare(lo, hi);
    if (c > 0 || (c == 0 && !(lo_closed && hi_closed)))
      throw DomainError("empty interval");
    return Interval{std::move(lo), std::move(hi), lo_closed, hi_closed};
  }

  static Interval open(Extended lo, Extended hi) { return make(std::move(lo), std::move(hi), false, false); }
  static Interval closed(Rational lo, Rational hi) { return make(std::move(lo), std::move(hi), true, true); }
  static Interval point(const Rational& v) { return closed(v, v); }

  bool is_singleton() const { return lo == hi; }

  bool contains(const Rational& v) const {
    const int l = compare(lo, Extended(v));
    const int h = compare(Extended(v), hi);
    return (l < 0 || (l == 0 && lo_closed)) && (h < 0 || (h == 0 && hi_closed));
  }

  /// Whether `inner` is a subset of this interval.
  bool contains(const Interval& inner) const {
    const int l = compare(lo, inner.lo);
    const int h = compare(inner.hi, hi);
    return (l < 0 || (l == 0 && (lo_closed || !inner.lo_closed))) &&
           (h < 0 || (h == 0 && (hi_closed || !inner.hi_closed)));
  }

  bool operator==(const Interval&) const = default;

  std::string to_string() const {
    return std::string(lo_closed ? "[" : "(") + lo.to_string() + "," + hi.to_string() +
           (hi_closed ? "]" : ")");
  }
};

/// {a + b : a in x, b in y}. A sum endpoint is closed iff both summands are.
inline Interval operator+(const Interval& x, const Interval& y) {
  Interval out{x.lo + y.lo, x.hi + y.hi, x.lo_closed && y.lo_closed, x.hi_closed && y.hi_closed};
  if (!out.lo.is_finite()) out.lo_closed = false;
  if (!out.hi.is_finite()) out.hi_closed = false;
  return out;
}

namespace detail {

/// Sort key for lower ends: smaller value first, closed before open.
inline bool lower_before(const Interval& a, const Interval& b) {
  const int c = compare(a.lo, b.lo);
  return c < 0 || (c == 0 && a.lo_closed && !b.lo_closed);
}

/// Whether `next` (which starts no earlier) overlaps or abuts `cur` with no gap.
inline bool joins(const Interval& cur, const Interval& next) {
  const int c = compare(next.lo, cur.hi);
  return c < 0 || (c == 0 && (cur.hi_closed || next.lo_closed));
}

inline void extend_upper(Interval& cur, const Interval& next) {
  const int c = compare(next.hi, cur.hi);
  if (c > 0) {
    cur.hi = next.hi;
    cur.hi_closed = next.hi_closed;
  } else if (c == 0) {
    cur.hi_closed = cur.hi_closed || next.hi_closed;
  }
}

/// Merges a list already sorted by lower_before into normal form.
inline std::vector<Interval> sweep(std::vector<Interval> sorted) {
  std::vector<Interval> out;
  for (auto& part : sorted) {
    if (!out.empty() && joins(out.back(), part))
      extend_upper(out.back(), part);
    else
      out.push_back(std::move(part));
  }
  return out;
}

}  // namespace detail

/// Sorted, pairwise disjoint, non-abutting intervals. The normal form is unique,
/// so two unions denote the same set exactly when they compare equal.
class IntervalUnion {
 public:
  IntervalUnion() = default;

  static IntervalUnion normalize(std::vector<Interval> parts) {
    std::stable_sort(parts.begin(), parts.end(), detail::lower_before);
    IntervalUnion u;
    u.parts_ = detail::sweep(std::move(parts));
    return u;
  }

  static IntervalUnion of(Interval part) { return normalize({std::move(part)}); }

  const std::vector<Interval>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  std::size_t size() const noexcept { return parts_.size(); }

  bool is_bounded() const {
    return empty() || (parts_.front().lo.is_finite() && parts_.back().hi.is_finite());
  }

  bool contains(const Rational& v) const {
    return std::ranges::any_of(parts_, [&v](const Interval& p) { return p.contains(v); });
  }

  /// Intersection with the halfline of points <= `cut` (or < `cut`).
  IntervalUnion clip_above(const Rational& cut, bool keep_cut = true) const {
    IntervalUnion out;
    const Extended c(cut);
    for (const auto& p : parts_) {
      const int lo_cmp = compare(p.lo, c);
      if (lo_cmp > 0 || (lo_cmp == 0 && !(p.lo_closed && keep_cut))) break;
      Interval q = p;
      const int hi_cmp = compare(q.hi, c);
      if (hi_cmp > 0 || (hi_cmp == 0 && !keep_cut)) {
        q.hi = c;
        q.hi_closed = keep_cut;
      }
      out.parts_.push_back(std::move(q));
    }
    return out;
  }

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

  std::string to_string() const {
    if (parts_.empty()) return "empty";
    std::string out;
    for (const auto& p : parts_) {
      if (!out.empty()) out += " u ";
      out += p.to_string();
    }
    return out;
  }

 private:
  std::vector<Interval> parts_;
};

/// Set union of two normal forms.
inline IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<Interval> merged;
  merged.reserve(a.size() + b.size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(merged), detail::lower_before);
  return IntervalUnion::normalize(std::move(merged));
}

/// Minkowski sum A + B.
inline IntervalUnion minkowski_sum(const IntervalUnion& a, const IntervalUnion& b) {
  IntervalUnion acc;
  if (a.empty() || b.empty()) return acc;
  // a-part + (sorted B) stays sorted, so each row merges in linear time.
  const auto& outer = a.size() <= b.size() ? a : b;
  const auto& inner = a.size() <= b.size() ? b : a;
  for (const auto& x : outer.parts()) {
    std::vector<Interval> row;
    row.reserve(inner.size());
    for (const auto& y : inner.parts()) row.push_back(x + y);
    acc = unite(acc, IntervalUnion::normalize(std::move(row)));
  }
  return acc;
}

/// (n)A = {a_1 + ... + a_n : a_i in A}.
inline IntervalUnion n_fold(const IntervalUnion& a, std::uint64_t n) {
  if (n == 0) throw DomainError("n_fold requires n >= 1");
  IntervalUnion acc = a;
  for (std::uint64_t i = 1; i < n; ++i) acc = minkowski_sum(acc, a);
  return acc;
}

/// A subset of B. Each part of A is connected, so it must sit inside a single part of B.
inline bool is_subset(const IntervalUnion& a, const IntervalUnion& b) {
  auto it = b.parts().begin();
  for (const auto& part : a.parts()) {
    // Skip parts of B ending before `part` starts, including ones that stop
    // exactly at its lower end without sharing that point.
    while (it != b.parts().end()) {
      const int c = compare(it->hi, part.lo);
      if (c > 0 || (c == 0 && it->hi_closed && part.lo_closed)) break;
      ++it;
    }
    if (it == b.parts().end() || !it->contains(part)) return false;
  }
  return true;
}

inline bool is_additively_closed(const IntervalUnion& a) { return is_subset(n_fold(a, 2), a); }
inline bool is_triple_closed(const IntervalUnion& a) { return is_subset(n_fold(a, 3), a); }

/// A + A has no interval of positive length.
class NoIntervalError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The set is outside what the halfline computation handles.
class UnsupportedInputError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct HalflineResult {
  /// Least t with (t, inf) inside the union of (2k)A over k >= 1.
  Rational t;
  /// True when the union was computed far enough for t to be exact.
  bool certified = false;
  /// Interval (a, b) inside A + A with a >= 0 used for the tail; b may be +inf.
  Extended a;
  Extended b;
  /// From k = tail_from on, the intervals (ka, kb) overlap: (tail_from * a, inf) is covered.
  std::uint64_t tail_from = 0;
  /// Number of even sums (2k)A computed explicitly.
  std::uint64_t terms = 0;
};

inline Rational ceil_rational(const Rational& q) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(out);
}

/// Threshold of the halfline contained in the union of the even sums of A.
///
/// Requires A nonempty with A subset of [0, inf), and A + A containing an
/// interval (a, b) with 0 <= a < b. The intervals (ka, kb) lie in (2k)A and
/// overlap for k > a/(b-a), which covers (T0, inf) with T0 = K*a. Below T0,
/// any sum of nonzero elements uses at most T0 / m of them (m = inf of the
/// positive part of A), so finitely many (2k)A settle the union exactly.
inline HalflineResult even_sum_halfline(const IntervalUnion& set,
                                        std::uint64_t max_terms = 100000) {
  if (set.empty()) throw DomainError("even_sum_halfline of the empty set");
  const IntervalUnion doubled = minkowski_sum(set, set);

  std::optional<Interval> widest;
  bool any_interior = false;
  for (const auto& p : doubled.parts()) {
    if (p.is_singleton()) continue;
    any_interior = true;
    Extended lo = p.lo.is_finite() && p.lo.value() >= 0 ? p.lo : Extended(0L);
    if (!(lo < p.hi)) continue;
    Interval cand = Interval::open(lo, p.hi);
    auto width_greater = [](const Interval& x, const Interval& y) {
      if (!y.hi.is_finite()) return false;
      if (!x.hi.is_finite()) return true;
      return (x.hi.value() - x.lo.value()) > (y.hi.value() - y.lo.value());
    };
    if (!widest || width_greater(cand, *widest)) widest = cand;
  }
  if (!any_interior) throw NoIntervalError("A + A contains no interval");
  if (!widest) throw UnsupportedInputError("A + A contains no positive interval");
  const Interval& front = set.parts().front();
  if (!front.lo.is_finite() || front.lo.value() < 0)
    throw UnsupportedInputError("A has negative elements");

  HalflineResult r;
  r.a = widest->lo;
  r.b = widest->hi;
  const Rational a = widest->lo.value();

  // Infimum of the positive part of A.
  Rational m_pos = front.lo.value();
  if (front.is_singleton() && m_pos == 0) m_pos = set.parts()[1].lo.value();
  if (m_pos == 0) {
    // A contains some (0, c): the even sums cover (0, inf) and nothing below 0.
    r.t = 0;
    r.certified = true;
    r.tail_from = 1;
    r.terms = 1;
    return r;
  }

  Rational tail_from = 1;
  if (r.b.is_finite()) tail_from = ceil_rational(Rational(a / (r.b.value() - a))) + 1;
  const Rational t0 = tail_from * a;
  r.tail_from = tail_from.get_num().get_ui();
  const Rational needed_rat = std::max(tail_from, Rational(ceil_rational(Rational(t0 / (2 * m_pos))) + 1));
  const bool too_many = needed_rat > Rational(static_cast<unsigned long>(max_terms));
  const std::uint64_t needed = too_many ? max_terms : needed_rat.get_num().get_ui();

  // Every element is >= 0, so parts of (2k)A above T0 never produce sums
  // below T0; clipping keeps the iteration small.
  const IntervalUnion tail = IntervalUnion::of(Interval::open(t0, Extended::pos_inf()));
  IntervalUnion layer = doubled.clip_above(t0);
  IntervalUnion covered = unite(layer, tail);
  std::uint64_t k = 1;
  for (; k < needed && !layer.empty(); ++k) {
    layer = minkowski_sum(layer, doubled).clip_above(t0);
    covered = unite(covered, layer);
  }
  r.terms = k;
  r.t = covered.parts().back().lo.is_finite() ? covered.parts().back().lo.value() : Rational(0);
  r.certified = !too_many || layer.empty();
  return r;
}

/// Whether (2k+1)A is inside A for k = 1..kmax. Requires A + A + A inside A,
/// in which case the answer is always true.
inline bool odd_sums_contained(const IntervalUnion& set, std::uint64_t kmax) {
  if (!is_triple_closed(set)) throw DomainError("odd_sums_contained requires A + A + A inside A");
  const IntervalUnion doubled = minkowski_sum(set, set);
  IntervalUnion odd = set;
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    odd = minkowski_sum(odd, doubled);
    if (!is_subset(odd, set)) return false;
  }
  return true;
}

/// Stage-n middle-thirds approximant: 2^n closed intervals of length 3^-n.
inline IntervalUnion cantor_stage(unsigned n) {
  std::vector<Interval> parts{Interval::closed(0, 1)};
  for (unsigned step = 0; step < n; ++step) {
    std::vector<Interval> next;
    next.reserve(parts.size() * 2);
    for (const auto& p : parts) {
      const Rational lo = p.lo.value();
      const Rational hi = p.hi.value();
      const Rational third = (hi - lo) / 3;
      next.push_back(Interval::closed(lo, Rational(lo + third)));
      next.push_back(Interval::closed(Rational(hi - third), hi));
    }
    parts = std::move(next);
  }
  return IntervalUnion::normalize(std::move(parts));
}

}  // namespace semipart

#endif
