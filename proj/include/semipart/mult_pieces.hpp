#ifndef SEMIPART_MULT_PIECES_HPP
#define SEMIPART_MULT_PIECES_HPP

// Multiplicative structure of the real line at the level of seven atoms
//   (-inf,-1), {-1}, (-1,0), {0}, (0,1), {1}, (1,inf)
// and the four generator sets built from them:
//   I1 = (-1,0) u (0,1), I2 = (-inf,-1) u (1,inf), P = {-1,1}, Z = {0}.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semipart/hamel.hpp"
#include "semipart/semigroup_partition.hpp"
#include "semipart/sumset.hpp"

namespace semipart {

enum class Atom : std::uint8_t { NegBig, NegOne, NegSmall, Zero, PosSmall, PosOne, PosBig };

inline constexpr std::array<Atom, 7> kAtoms{Atom::NegBig,   Atom::NegOne, Atom::NegSmall, Atom::Zero,
                                            Atom::PosSmall, Atom::PosOne, Atom::PosBig};

inline constexpr std::string_view atom_name(Atom a) {
  constexpr std::array<std::string_view, 7> names{"nbig", "none", "nsmall", "zero", "psmall", "pone", "pbig"};
  return names[static_cast<std::size_t>(a)];
}

inline std::optional<Atom> atom_from_name(std::string_view name) {
  for (Atom a : kAtoms)
    if (atom_name(a) == name) return a;
  return std::nullopt;
}

/// The atom as an interval of the line.
inline Interval atom_interval(Atom a) {
  switch (a) {
    case Atom::NegBig: return Interval::open(Extended::neg_inf(), -1L);
    case Atom::NegOne: return Interval::point(-1);
    case Atom::NegSmall: return Interval::open(-1L, 0L);
    case Atom::Zero: return Interval::point(0);
    case Atom::PosSmall: return Interval::open(0L, 1L);
    case Atom::PosOne: return Interval::point(1);
    case Atom::PosBig: break;
  }
  return Interval::open(1L, Extended::pos_inf());
}

/// A set of atoms, stored as a 7-bit mask.
class PieceSet {
 public:
  constexpr PieceSet() = default;
  constexpr PieceSet(std::initializer_list<Atom> atoms) {
    for (Atom a : atoms) bits_ |= bit(a);
  }

  static constexpr PieceSet from_bits(std::uint8_t bits) {
    PieceSet s;
    s.bits_ = bits & 0x7F;
    return s;
  }
  static constexpr PieceSet everything() { return from_bits(0x7F); }

  constexpr std::uint8_t bits() const noexcept { return bits_; }
  constexpr bool contains(Atom a) const noexcept { return (bits_ & bit(a)) != 0; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool subset_of(PieceSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(PieceSet o) const noexcept { return (bits_ & o.bits_) != 0; }

  constexpr PieceSet operator|(PieceSet o) const noexcept { return from_bits(bits_ | o.bits_); }
  constexpr PieceSet& operator|=(PieceSet o) noexcept { bits_ |= o.bits_; return *this; }

  std::vector<Atom> atoms() const {
    std::vector<Atom> out;
    for (Atom a : kAtoms)
      if (contains(a)) out.push_back(a);
    return out;
  }

  constexpr bool operator==(const PieceSet&) const = default;

 private:
  static constexpr std::uint8_t bit(Atom a) { return static_cast<std::uint8_t>(1U << static_cast<unsigned>(a)); }
  std::uint8_t bits_ = 0;
};

inline constexpr PieceSet kSmall{Atom::NegSmall, Atom::PosSmall};  // I1
inline constexpr PieceSet kBig{Atom::NegBig, Atom::PosBig};        // I2
inline constexpr PieceSet kUnits{Atom::NegOne, Atom::PosOne};      // P
inline constexpr PieceSet kZero{Atom::Zero};                       // Z

/// Comma list of atom names, "" for the empty set.
inline std::string to_string(PieceSet s) {
  std::string out;
  for (Atom a : s.atoms()) {
    if (!out.empty()) out += ',';
    out += atom_name(a);
  }
  return out;
}

/// The piece set as a subset of the line.
inline IntervalUnion as_interval_union(PieceSet s) {
  std::vector<Interval> parts;
  for (Atom a : s.atoms()) parts.push_back(atom_interval(a));
  return IntervalUnion::normalize(std::move(parts));
}

namespace detail {

enum class Sign : std::int8_t { Neg = -1, Zero = 0, Pos = 1 };
enum class Size : std::uint8_t { Small, One, Big };

inline Sign sign_of(Atom a) {
  if (a == Atom::Zero) return Sign::Zero;
  return static_cast<int>(a) < static_cast<int>(Atom::Zero) ? Sign::Neg : Sign::Pos;
}

inline Size size_of(Atom a) {
  switch (a) {
    case Atom::NegBig:
    case Atom::PosBig: return Size::Big;
    case Atom::NegOne:
    case Atom::PosOne: return Size::One;
    default: return Size::Small;
  }
}

inline Atom atom_of(Sign s, Size m) {
  if (s == Sign::Neg) return m == Size::Big ? Atom::NegBig : m == Size::One ? Atom::NegOne : Atom::NegSmall;
  return m == Size::Big ? Atom::PosBig : m == Size::One ? Atom::PosOne : Atom::PosSmall;
}

}  // namespace detail

/// {xy : x in a, y in b} as a union of atoms. Signs multiply; on absolute
/// values 1 is neutral, small*small is small, big*big is big, and
/// small*big sweeps all of (0, inf).
inline PieceSet atom_product(Atom a, Atom b) {
  using detail::Size;
  const auto sa = detail::sign_of(a);
  const auto sb = detail::sign_of(b);
  if (sa == detail::Sign::Zero || sb == detail::Sign::Zero) return kZero;
  const auto sign = static_cast<int>(sa) * static_cast<int>(sb) < 0 ? detail::Sign::Neg : detail::Sign::Pos;

  const Size ma = detail::size_of(a);
  const Size mb = detail::size_of(b);
  std::vector<Size> sizes;
  if (ma == Size::One)
    sizes = {mb};
  else if (mb == Size::One || ma == mb)
    sizes = {ma};
  else
    sizes = {Size::Small, Size::One, Size::Big};

  PieceSet out;
  for (Size m : sizes) out |= PieceSet{detail::atom_of(sign, m)};
  return out;
}

inline PieceSet product_set(PieceSet s, PieceSet t) {
  PieceSet out;
  for (Atom a : s.atoms())
    for (Atom b : t.atoms()) out |= atom_product(a, b);
  return out;
}

inline bool is_mult_closed(PieceSet s) { return product_set(s, s).subset_of(s); }
inline bool is_triple_mult_closed(PieceSet s) { return product_set(product_set(s, s), s).subset_of(s); }

/// Union of the generators selected by `mask` (P=1, Z=2, I1=4, I2=8).
inline PieceSet generator_union(unsigned mask) {
  PieceSet s;
  if (mask & 1U) s |= kUnits;
  if (mask & 2U) s |= kZero;
  if (mask & 4U) s |= kSmall;
  if (mask & 8U) s |= kBig;
  return s;
}

/// Name like "I1 u P u Z"; "empty" for mask 0.
inline std::string generator_union_name(unsigned mask) {
  std::string out;
  auto add = [&out](const char* name) {
    if (!out.empty()) out += " u ";
    out += name;
  };
  if (mask & 4U) add("I1");
  if (mask & 8U) add("I2");
  if (mask & 1U) add("P");
  if (mask & 2U) add("Z");
  return out.empty() ? "empty" : out;
}

/// Unions of generators that are closed under multiplication and contain I1
/// or I2 (the ones that are not null and meager), by ascending mask.
inline std::vector<unsigned> closed_generator_masks() {
  std::vector<unsigned> out;
  for (unsigned mask = 0; mask < 16; ++mask) {
    const PieceSet s = generator_union(mask);
    if ((s.intersects(kSmall) || s.intersects(kBig)) && is_mult_closed(s)) out.push_back(mask);
  }
  return out;
}

inline std::vector<PieceSet> enumerate_closed_generator_unions() {
  std::vector<PieceSet> out;
  for (unsigned mask : closed_generator_masks()) out.push_back(generator_union(mask));
  return out;
}

/// Image of a set of negative reals under x -> log(-x), recorded together
/// with the closure order that carries over: B*B*B inside B for
/// B inside (-inf,-1) becomes C+C+C inside C for C = log(-B).
struct LogImage {
  IntervalUnion image;
  unsigned closure_order = 3;
};

inline LogImage neg_log_atom(Atom a) {
  if (a != Atom::NegBig) throw DomainError(std::string("neg_log_atom is defined on nbig only, got ") + std::string(atom_name(a)));
  return {IntervalUnion::of(Interval::open(0L, Extended::pos_inf())), 3};
}

/// A positive real e^x, carried by its exponent.
struct PosRealExp {
  HamelReal exponent;

  friend PosRealExp operator*(const PosRealExp& u, const PosRealExp& v) { return {u.exponent + v.exponent}; }
  PosRealExp inverse() const { return {-exponent}; }
  bool operator==(const PosRealExp&) const = default;
};

/// Multiplicative piece of u: the additive label of its exponent.
inline Label mult_classify(const PosRealExp& u) { return classify(u.exponent); }

}  // namespace semipart

#endif
