#ifndef SEMIPART_EXPR_HPP
#define SEMIPART_EXPR_HPP

// Text syntax for the command line.
//
//   real     := term (('+'|'-') term)* | '0'
//   term     := rational '*' 'b(' nat ',' bits ')'
//   rational := int ('/' posint)?
//
//   union    := 'empty' | interval ('u' interval)*
//   interval := ('('|'[') bound ',' bound (')'|']')      bound := rational | 'inf' | '-inf'
//
//   group    := 'Z' m ('x' 'Z' m)*
//   pieces   := name (',' name)*     name := atom name | I1 | I2 | P | Z | all

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "semipart/first_coordinate.hpp"
#include "semipart/group_cover.hpp"
#include "semipart/hamel.hpp"
#include "semipart/mult_pieces.hpp"
#include "semipart/rational.hpp"
#include "semipart/sumset.hpp"

namespace semipart {

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip() { skip_spaces(s_, pos_); }
  bool done() {
    skip();
    return pos_ == s_.size();
  }
  std::size_t pos() const { return pos_; }
  std::size_t& pos_ref() { return pos_; }
  std::string_view text() const { return s_; }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(std::string_view token) {
    skip();
    if (s_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) throw ParseError("expected '" + std::string(token) + "'", pos_);
  }

  std::uint64_t natural(std::uint64_t max) {
    skip();
    const std::size_t start = pos_;
    const std::string digits = read_digits(s_, pos_);
    std::uint64_t v = 0;
    for (char c : digits) {
      const auto d = static_cast<std::uint64_t>(c - '0');
      if (v > (max - d) / 10) throw ParseError("number too large", start);
      v = v * 10 + d;
    }
    return v;
  }

  void finish() {
    if (!done()) throw ParseError("unexpected trailing input", pos_);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

inline BasisElement read_basis(Cursor& in) {
  in.expect("b(");
  const auto piece = static_cast<PieceIndex>(in.natural(std::numeric_limits<PieceIndex>::max()));
  in.expect(",");
  in.skip();
  const std::size_t start = in.pos();
  std::string bits;
  auto& pos = in.pos_ref();
  while (pos < in.text().size() && (in.text()[pos] == '0' || in.text()[pos] == '1')) bits.push_back(in.text()[pos++]);
  if (!is_canonical_point(bits)) {
    throw ParseError(bits.size() > kMaxPointLength
                         ? "point string longer than " + std::to_string(kMaxPointLength)
                         : "non-canonical point \"" + bits + "\" (must be empty or end in 1)",
                     start);
  }
  in.expect(")");
  return BasisElement{piece, std::move(bits)};
}

}  // namespace detail

/// Parses a symbolic real and canonicalizes it.
inline HamelReal parse_real(std::string_view src) {
  detail::Cursor in(src);
  {
    detail::Cursor probe(src);
    if (probe.accept("0") && probe.done()) return HamelReal{};
  }
  std::vector<std::pair<BasisElement, Rational>> pairs;
  bool negate = false;
  bool first = true;
  for (;;) {
    in.skip();
    Rational q = read_rational(src, in.pos_ref(), first);
    if (negate) q = -q;
    in.expect("*");
    pairs.emplace_back(detail::read_basis(in), std::move(q));
    first = false;
    if (in.accept("+"))
      negate = false;
    else if (in.accept("-"))
      negate = true;
    else
      break;
  }
  in.finish();
  return HamelReal::make(pairs);
}

namespace detail {

inline Extended read_bound(Cursor& in) {
  if (in.accept("-inf")) return Extended::neg_inf();
  if (in.accept("+inf") || in.accept("inf")) return Extended::pos_inf();
  in.skip();
  return Extended(read_rational(in.text(), in.pos_ref()));
}

inline Interval read_interval(Cursor& in) {
  const std::size_t start = (in.skip(), in.pos());
  bool lo_closed;
  if (in.accept("["))
    lo_closed = true;
  else if (in.accept("("))
    lo_closed = false;
  else
    throw ParseError("expected '(' or '['", in.pos());
  Extended lo = read_bound(in);
  in.expect(",");
  Extended hi = read_bound(in);
  bool hi_closed;
  if (in.accept("]"))
    hi_closed = true;
  else if (in.accept(")"))
    hi_closed = false;
  else
    throw ParseError("expected ')' or ']'", in.pos());
  try {
    return Interval::make(std::move(lo), std::move(hi), lo_closed, hi_closed);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), start);
  }
}

}  // namespace detail

/// Parses "[0,1/3] u [2/3,1]" (or "empty") into normal form.
inline IntervalUnion parse_interval_union(std::string_view src) {
  detail::Cursor in(src);
  if (in.accept("empty")) {
    in.finish();
    return {};
  }
  std::vector<Interval> parts{detail::read_interval(in)};
  while (in.accept("u")) parts.push_back(detail::read_interval(in));
  in.finish();
  return IntervalUnion::normalize(std::move(parts));
}

/// Parses "Z2xZ2" or "Z3 x Z3 x Z3".
inline FiniteGroup parse_group(std::string_view src, std::uint64_t bound = kDefaultGroupBound) {
  detail::Cursor in(src);
  std::vector<std::uint32_t> factors;
  do {
    in.expect("Z");
    const std::size_t at = in.pos();
    const auto m = static_cast<std::uint32_t>(in.natural(std::numeric_limits<std::uint32_t>::max()));
    if (m < 2) throw ParseError("cyclic factor must be >= 2", at);
    factors.push_back(m);
  } while (in.accept("x"));
  in.finish();
  return FiniteGroup::make(std::move(factors), bound);
}

/// Parses a comma list of atom names and generator names (I1, I2, P, Z),
/// or one of "all", "empty".
inline PieceSet parse_piece_set(std::string_view src) {
  detail::Cursor in(src);
  if (in.accept("empty")) {
    in.finish();
    return {};
  }
  PieceSet out;
  do {
    in.skip();
    const std::size_t start = in.pos();
    std::string name;
    auto& pos = in.pos_ref();
    while (pos < src.size() && std::isalnum(static_cast<unsigned char>(src[pos]))) name.push_back(src[pos++]);
    if (auto a = atom_from_name(name)) {
      out |= PieceSet{*a};
    } else if (name == "I1") {
      out |= kSmall;
    } else if (name == "I2") {
      out |= kBig;
    } else if (name == "P") {
      out |= kUnits;
    } else if (name == "Z") {
      out |= kZero;
    } else if (name == "all") {
      out |= PieceSet::everything();
    } else {
      throw ParseError("unknown atom \"" + name + "\"", start);
    }
  } while (in.accept(","));
  in.finish();
  return out;
}

/// "all" or a positive integer.
inline Kappa parse_kappa(std::string_view src) {
  detail::Cursor in(src);
  if (in.accept("all")) {
    in.finish();
    return Kappa::all();
  }
  const std::size_t at = (in.skip(), in.pos());
  const auto v = in.natural(std::numeric_limits<std::uint32_t>::max());
  in.finish();
  if (v < 1) throw ParseError("kappa must be >= 1", at);
  return Kappa::finite(static_cast<std::uint32_t>(v));
}

}  // namespace semipart

#endif
