#ifndef SEMIPART_SAMPLING_HPP
#define SEMIPART_SAMPLING_HPP

// Seeded generators for property runs. std::mt19937_64 has a fully specified
// output sequence; the bounded draws below are written out by hand because the
// standard distributions are implementation-defined, and reports must be
// byte-identical for a given seed on every toolchain.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "semipart/hamel.hpp"
#include "semipart/sumset.hpp"

namespace semipart {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for sample `index` of a run seeded with `seed`.
  static Rng for_sample(std::uint64_t seed, std::uint64_t index) {
    return Rng(mix(mix(seed) ^ (index + 0x632be59bd9b4e019ULL)));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n). Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool chance(std::uint64_t numerator, std::uint64_t denominator) {
    return below(denominator) < numerator;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

/// Bounds for random symbolic reals.
struct SampleConfig {
  std::uint64_t seed = 1;
  std::uint64_t count = 1000;
  std::uint32_t max_terms = 8;
  std::uint32_t max_index = 20;
  std::uint32_t max_point_len = 8;
  std::uint32_t coeff_bound = 100;

  void validate() const {
    if (max_terms < 1 || max_index < 1 || max_point_len < 1 || coeff_bound < 1)
      throw std::invalid_argument("sample bounds must be >= 1");
    if (max_point_len > kMaxPointLength)
      throw std::invalid_argument("max_point_len exceeds " + std::to_string(kMaxPointLength));
  }

  bool operator==(const SampleConfig&) const = default;
};

/// Canonical point of length at most `max_len`.
inline std::string random_point(Rng& rng, std::uint32_t max_len) {
  auto len = static_cast<std::size_t>(rng.below(max_len + 1ULL));
  std::string s(len, '0');
  for (std::size_t i = 0; i + 1 < len; ++i) s[i] = rng.chance(1, 2) ? '1' : '0';
  if (len > 0) s.back() = '1';
  return s;
}

/// Nonzero rational with |numerator| and denominator in [1, bound].
inline Rational random_rational(Rng& rng, std::uint32_t bound) {
  std::int64_t num = rng.between(1, bound);
  if (rng.chance(1, 2)) num = -num;
  Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(rng.between(1, bound))));
  q.canonicalize();
  return q;
}

inline Rational random_positive_rational(Rng& rng, std::uint32_t bound) {
  return abs(random_rational(rng, bound));
}

/// Real with 1..max_terms terms on pieces [lo_piece, hi_piece].
inline HamelReal random_real_on(Rng& rng, const SampleConfig& cfg, PieceIndex lo_piece,
                                PieceIndex hi_piece) {
  const auto n = 1 + rng.below(cfg.max_terms);
  std::vector<std::pair<BasisElement, Rational>> pairs;
  pairs.reserve(n + 1);
  for (std::uint64_t i = 0; i < n; ++i) {
    auto piece = static_cast<PieceIndex>(lo_piece + rng.below(hi_piece - lo_piece + 1ULL));
    pairs.emplace_back(BasisElement{piece, random_point(rng, cfg.max_point_len)},
                       random_rational(rng, cfg.coeff_bound));
  }
  return HamelReal::make(pairs);
}

/// Random real for classifier runs. A third of the draws get a balancing term
/// that zeroes the top piece's total, which pushes the classifier past the
/// first cylinder.
inline HamelReal random_real(Rng& rng, const SampleConfig& cfg) {
  HamelReal x = random_real_on(rng, cfg, 0, cfg.max_index);
  if (!x.is_zero() && rng.chance(1, 3)) {
    const PieceIndex top = max_index(x);
    Rational total = coeff_sum(x, [top](const BasisElement& b) { return b.piece == top; });
    if (total != 0)
      x += HamelReal::term(BasisElement{top, random_point(rng, cfg.max_point_len)}, -total);
  }
  return x;
}

/// Random real supported strictly below piece `alpha` (zero when alpha = 0).
inline HamelReal random_lower_noise(Rng& rng, const SampleConfig& cfg, PieceIndex alpha) {
  if (alpha == 0 || rng.chance(1, 8)) return HamelReal{};
  return random_real_on(rng, cfg, 0, alpha - 1);
}

/// Rational p/q with q in {1,2,3,4,6,8} and lo <= p/q <= hi.
inline Rational random_grid_rational(Rng& rng, std::int64_t lo, std::int64_t hi) {
  static constexpr std::int64_t dens[] = {1, 2, 3, 4, 6, 8};
  const std::int64_t den = dens[rng.below(std::size(dens))];
  Rational q(mpz_class(static_cast<long>(rng.between(lo * den, hi * den))), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

/// Interval with endpoints in [lo, hi]; occasionally a singleton.
inline Interval random_interval(Rng& rng, std::int64_t lo, std::int64_t hi) {
  Rational a = random_grid_rational(rng, lo, hi);
  if (rng.chance(1, 8)) return Interval::point(a);
  Rational b = random_grid_rational(rng, lo, hi);
  while (b == a) b = random_grid_rational(rng, lo, hi);
  if (b < a) std::swap(a, b);
  return Interval::make(a, b, rng.chance(1, 2), rng.chance(1, 2));
}

/// Union of 1..max_parts random intervals in [lo, hi], with an occasional
/// unbounded end when `allow_infinite`.
inline IntervalUnion random_union(Rng& rng, std::uint32_t max_parts, std::int64_t lo, std::int64_t hi,
                                  bool allow_infinite = true) {
  std::vector<Interval> parts;
  const auto n = 1 + rng.below(max_parts);
  for (std::uint64_t i = 0; i < n; ++i) {
    Interval p = random_interval(rng, lo, hi);
    if (allow_infinite && rng.chance(1, 10)) {
      p = Interval::open(Extended::neg_inf(), p.hi);
      p.hi_closed = p.hi_closed || rng.chance(1, 2);
    } else if (allow_infinite && rng.chance(1, 10)) {
      p = Interval::open(p.lo, Extended::pos_inf());
      p.lo_closed = p.lo_closed || rng.chance(1, 2);
    }
    parts.push_back(std::move(p));
  }
  return IntervalUnion::normalize(std::move(parts));
}

}  // namespace semipart

#endif
