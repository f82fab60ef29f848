#ifndef SEMIPART_SEMIGROUP_PARTITION_HPP
#define SEMIPART_SEMIGROUP_PARTITION_HPP

// Partition of the symbolic reals into additive semigroups indexed by
// (top piece, first cylinder with nonzero coefficient sum, sign of that sum),
// plus the singleton {0}.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "semipart/hamel.hpp"
#include "semipart/report.hpp"
#include "semipart/sampling.hpp"

namespace semipart {

struct Label {
  enum class Tag : std::uint8_t { Zero, Pos, Neg };

  Tag tag = Tag::Zero;
  PieceIndex alpha = 0;
  CylinderIndex k = 0;

  static Label zero() { return {}; }
  static Label pos(PieceIndex alpha, CylinderIndex k) { return {Tag::Pos, alpha, k}; }
  static Label neg(PieceIndex alpha, CylinderIndex k) { return {Tag::Neg, alpha, k}; }

  /// Pos(a,k) <-> Neg(a,k); Zero is fixed.
  Label dual() const {
    switch (tag) {
      case Tag::Pos: return neg(alpha, k);
      case Tag::Neg: return pos(alpha, k);
      case Tag::Zero: break;
    }
    return zero();
  }

  auto operator<=>(const Label&) const = default;
  bool operator==(const Label&) const = default;
};

inline const char* tag_name(Label::Tag t) {
  switch (t) {
    case Label::Tag::Pos: return "Pos";
    case Label::Tag::Neg: return "Neg";
    case Label::Tag::Zero: break;
  }
  return "Zero";
}

/// Compact form: "Zero", "Pos(2,1)".
inline std::string to_string(const Label& l) {
  if (l.tag == Label::Tag::Zero) return "Zero";
  return std::string(tag_name(l.tag)) + "(" + std::to_string(l.alpha) + "," + std::to_string(l.k) + ")";
}

/// Human form: "Zero", "Pos alpha=2 k=1".
inline std::string describe(const Label& l) {
  if (l.tag == Label::Tag::Zero) return "Zero";
  return std::string(tag_name(l.tag)) + " alpha=" + std::to_string(l.alpha) + " k=" + std::to_string(l.k);
}

inline std::ostream& operator<<(std::ostream& os, const Label& l) { return os << to_string(l); }

/// Signals a classifier that failed to find a separating cylinder in range.
class InternalDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline Label signed_label(const Rational& sum, PieceIndex alpha, CylinderIndex k) {
  return sum > 0 ? Label::pos(alpha, k) : Label::neg(alpha, k);
}

inline std::string padded_prefix(const std::string& point, std::size_t len) {
  if (point.size() >= len) return point.substr(0, len);
  return point + std::string(len - point.size(), '0');
}

}  // namespace detail

/// Label of x. For x != 0: alpha is the top piece of x, and k is the least
/// cylinder index of that piece on which the coefficient sum of x is nonzero.
///
/// Cylinders are visited in length-lex order one length at a time. A cylinder
/// of length L has a nonzero sum only if it is the length-L prefix of some
/// support point, so each length costs one grouping pass over the support.
inline Label classify(const HamelReal& x) {
  if (x.is_zero()) return Label::zero();
  const PieceIndex alpha = max_index(x);

  std::vector<std::pair<const std::string*, const Rational*>> top;
  std::size_t longest = 0;
  for (const auto& [b, q] : x.terms()) {
    if (b.piece != alpha) continue;
    top.emplace_back(&b.point, &q);
    longest = std::max(longest, b.point.size());
  }

  for (std::size_t len = 0; len <= longest; ++len) {
    std::map<std::string, Rational> sums;
    for (const auto& [point, q] : top) sums[detail::padded_prefix(*point, len)] += *q;
    for (const auto& [prefix, sum] : sums)
      if (sum != 0) return detail::signed_label(sum, alpha, lex_index(prefix));
  }
  // Distinct canonical points have distinct padded prefixes at the longest
  // length, so some cylinder isolates a single nonzero coefficient.
  throw InternalDefect("classify: no separating cylinder for " + to_string(x));
}

/// Literal form of the classifier: scan k = 1, 2, ... up to lex_index_bound
/// and evaluate the coefficient sum on each cylinder.
inline Label classify_by_scan(const HamelReal& x) {
  if (x.is_zero()) return Label::zero();
  const PieceIndex alpha = max_index(x);
  const CylinderIndex bound = lex_index_bound(piece_points(x, alpha));
  for (CylinderIndex k = 1; k <= bound; ++k) {
    Rational sum = coeff_sum(x, Cylinder{alpha, k});
    if (sum != 0) return detail::signed_label(sum, alpha, k);
  }
  throw InternalDefect("classify_by_scan: bound exhausted for " + to_string(x));
}

struct Split {
  HamelReal lower;  ///< part on pieces below the top piece
  HamelReal top;    ///< part on the top piece
};

/// Decomposes x into its restriction below the top piece and on the top piece.
inline Split split_below_top(const HamelReal& x) {
  if (x.is_zero()) throw DomainError("split_below_top of 0 is undefined");
  const PieceIndex alpha = max_index(x);
  return {x.restrict_to([alpha](const BasisElement& b) { return b.piece < alpha; }),
          x.restrict_to([alpha](const BasisElement& b) { return b.piece == alpha; })};
}

/// Whether x and y lie on the same open ray from 0 through Q+ multiples.
inline bool same_ray(const HamelReal& x, const HamelReal& y) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  if (x.size() != y.size()) return false;
  const Rational ratio = y.terms().begin()->second / x.terms().begin()->second;
  if (ratio <= 0) return false;
  return std::ranges::equal(x.terms(), y.terms(), [&ratio](const auto& a, const auto& b) {
    return a.first == b.first && b.second == ratio * a.second;
  });
}

// ---------------------------------------------------------------------------
// Sampled verification.

struct PartitionReport {
  std::uint64_t samples = 0;
  std::map<Label, std::uint64_t> label_counts;
  std::map<std::string, std::uint64_t> checks;
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

inline void write_records(std::ostream& os, const PartitionReport& r) {
  for (const auto& [label, n] : r.label_counts) {
    os << "label-count " << tag_name(label.tag) << ' ';
    if (label.tag == Label::Tag::Zero)
      os << "- -";
    else
      os << label.alpha << ' ' << label.k;
    os << ' ' << n << '\n';
  }
  for (const auto& [name, n] : r.checks) os << "check " << name << ' ' << n << '\n';
  for (const auto& v : r.violations) write_record(os, v);
}

namespace detail {

struct SampleOutcome {
  Label label;
  std::vector<std::string> checks;
  std::vector<Violation> violations;
};

inline SampleOutcome check_one_sample(const SampleConfig& cfg, std::uint64_t index) {
  Rng rng = Rng::for_sample(cfg.seed, index);
  SampleOutcome out;
  const HamelReal x = random_real(rng, cfg);
  auto expect = [&out](bool holds, const char* kind, const HamelReal& a, const HamelReal& b,
                       const Label& expected, const Label& got) {
    out.checks.emplace_back(kind);
    if (!holds) out.violations.push_back({kind, to_string(a), to_string(b), to_string(expected), to_string(got)});
  };

  Label label;
  try {
    label = classify(x);
  } catch (const InternalDefect& e) {
    out.checks.emplace_back("totality");
    out.violations.push_back({"totality", to_string(x), "0", "label", e.what()});
    return out;
  }
  out.label = label;
  const bool labelled = x.is_zero() == (label.tag == Label::Tag::Zero);
  expect(labelled, "totality", x, HamelReal{}, x.is_zero() ? Label::zero() : label, label);

  // Rebuild x from split, reordered coefficients and classify again.
  std::vector<std::pair<BasisElement, Rational>> pieces;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const Rational r = random_rational(rng, cfg.coeff_bound);
    pieces.emplace_back(it->first, it->second - r);
    pieces.emplace_back(it->first, r);
  }
  const HamelReal recanon = HamelReal::make(pieces);
  expect(classify(recanon) == label, "stability", x, recanon, label, classify(recanon));

  const Label neg = classify(-x);
  expect(neg == label.dual(), "duality", x, -x, label.dual(), neg);
  if (x.is_zero()) return out;

  const Rational q = random_positive_rational(rng, cfg.coeff_bound);
  const HamelReal qx = q * x;
  const Label scaled = classify(qx);
  expect(scaled == label, "homogeneity", x, qx, label, scaled);

  // Same-label partner: positive multiple plus noise strictly below the top piece.
  const HamelReal y = random_positive_rational(rng, cfg.coeff_bound) * x +
                      random_lower_noise(rng, cfg, label.alpha);
  const Label partner = classify(y);
  expect(partner == label, "pair-label", x, y, label, partner);
  if (partner == label) {
    const Label sum = classify(x + y);
    expect(sum == label, "closure", x, y, label, sum);
  }

  const Split parts = split_below_top(x);
  bool split_ok = parts.lower + parts.top == x;
  for (const auto& entry : parts.lower.terms()) split_ok = split_ok && entry.first.piece < label.alpha;
  for (const auto& entry : parts.top.terms()) split_ok = split_ok && entry.first.piece == label.alpha;
  const Rational at_k = coeff_sum(parts.top, Cylinder{label.alpha, label.k});
  split_ok = split_ok && (label.tag == Label::Tag::Pos ? at_k > 0 : at_k < 0);
  for (CylinderIndex i = 1; split_ok && i < label.k; ++i)
    split_ok = coeff_sum(parts.top, Cylinder{label.alpha, i}) == 0;
  expect(split_ok, "split", x, parts.top, label, split_ok ? label : Label::zero());
  return out;
}

}  // namespace detail

/// Samples cfg.count reals and checks totality, stability, duality,
/// homogeneity, closure on constructed same-label pairs, and the
/// lower/top split. Work is spread over `threads` workers; every sample draws
/// from its own seeded stream and results are merged in sample order, so the
/// report does not depend on scheduling.
inline PartitionReport verify_partition_sample(const SampleConfig& cfg, unsigned threads = 0) {
  cfg.validate();
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(cfg.count, 1)));

  std::vector<detail::SampleOutcome> outcomes(cfg.count);
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) outcomes[i] = detail::check_one_sample(cfg, i);
  };
  if (threads <= 1) {
    work(0, cfg.count);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (cfg.count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = std::min(cfg.count, t * chunk);
      pool.emplace_back(work, begin, std::min(cfg.count, begin + chunk));
    }
  }

  PartitionReport report;
  report.samples = cfg.count;
  for (auto& o : outcomes) {
    ++report.label_counts[o.label];
    for (const auto& c : o.checks) ++report.checks[c];
    for (auto& v : o.violations) report.violations.push_back(std::move(v));
  }
  return report;
}

}  // namespace semipart

#endif
