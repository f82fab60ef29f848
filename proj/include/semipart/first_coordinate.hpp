#ifndef SEMIPART_FIRST_COORDINATE_HPP
#define SEMIPART_FIRST_COORDINATE_HPP

// Decomposition of the symbolic reals into kappa additive semigroups by the
// leading Hamel coordinate. With basis elements ordered by (piece, point),
// f(x) is the piece of the least basis element in the support of x and g(x)
// its coefficient. The pieces are
//   Piece(a)  = { x : f(x) = a, g(x) > 0 }     for a < kappa'
//   Remainder = { x : f(x) >= kappa' or g(x) < 0 or x = 0 }
// where kappa' = kappa - 1 for finite kappa; for the unbounded token All the
// Remainder keeps only g(x) < 0 and x = 0.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "semipart/hamel.hpp"

namespace semipart {

/// Number of pieces: a finite count >= 1, or All (no finite cutoff).
class Kappa {
 public:
  static Kappa finite(std::uint32_t value) {
    if (value < 1) throw DomainError("kappa must be >= 1");
    return Kappa(value);
  }
  static Kappa all() { return Kappa(std::nullopt); }

  bool is_finite() const noexcept { return value_.has_value(); }
  std::uint32_t value() const { return value_.value(); }

  /// Whether Piece(alpha) is one of the pieces.
  bool admits_piece(PieceIndex alpha) const { return !value_ || alpha < *value_ - 1; }

  std::string to_string() const { return value_ ? std::to_string(*value_) : "all"; }

  bool operator==(const Kappa&) const = default;

 private:
  explicit Kappa(std::optional<std::uint32_t> v) : value_(v) {}
  std::optional<std::uint32_t> value_;
};

struct PropLabel {
  enum class Tag : std::uint8_t { Piece, Remainder };

  Tag tag = Tag::Remainder;
  PieceIndex alpha = 0;

  static PropLabel piece(PieceIndex alpha) { return {Tag::Piece, alpha}; }
  static PropLabel remainder() { return {}; }

  auto operator<=>(const PropLabel&) const = default;
  bool operator==(const PropLabel&) const = default;
};

inline std::string to_string(const PropLabel& l) {
  return l.tag == PropLabel::Tag::Piece ? "Piece(" + std::to_string(l.alpha) + ")" : "Remainder";
}

/// (f(x), g(x)): piece and coefficient of the least basis element of x.
inline std::pair<PieceIndex, Rational> first_index_and_coeff(const HamelReal& x) {
  if (x.is_zero()) throw DomainError("first_index_and_coeff of 0 is undefined");
  const auto& [b, q] = *x.terms().begin();
  return {b.piece, q};
}

inline PropLabel classify_prop11(const HamelReal& x, const Kappa& kappa) {
  if (x.is_zero()) return PropLabel::remainder();
  auto [f, g] = first_index_and_coeff(x);
  if (g > 0 && kappa.admits_piece(f)) return PropLabel::piece(f);
  return PropLabel::remainder();
}

/// A member of the given piece: b(alpha, "") for Piece(alpha), 0 for Remainder.
inline HamelReal witness_prop11(const PropLabel& label, const Kappa& kappa) {
  if (label.tag == PropLabel::Tag::Remainder) return HamelReal{};
  if (!kappa.admits_piece(label.alpha))
    throw DomainError(to_string(label) + " is not a piece for kappa=" + kappa.to_string());
  return HamelReal::term(BasisElement{label.alpha, ""}, Rational(1));
}

}  // namespace semipart

#endif
