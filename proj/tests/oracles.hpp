#ifndef SEMIPART_TESTS_ORACLES_HPP
#define SEMIPART_TESTS_ORACLES_HPP

// Slow, direct re-computations used to cross-check the library. None of these
// call the routine they check; they share only the value types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semipart/group_cover.hpp"
#include "semipart/hamel.hpp"
#include "semipart/mult_pieces.hpp"
#include "semipart/sumset.hpp"

namespace oracle {

using semipart::Rational;

/// An endpoint, possibly infinite. kind: -1 = -inf, 0 = finite, +1 = +inf.
struct End {
  int kind = 0;
  Rational v;
};

inline End fin(const Rational& q) { return {0, q}; }

inline End end_of(const semipart::Extended& e) {
  if (e.is_finite()) return fin(e.value());
  return {e == semipart::Extended::neg_inf() ? -1 : 1, 0};
}

inline int cmp(const End& a, const End& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (a.kind != 0) return 0;
  return a.v < b.v ? -1 : (b.v < a.v ? 1 : 0);
}

/// Interval with flags, no normalization.
struct Iv {
  End lo, hi;
  bool lo_closed = false, hi_closed = false;

  bool has(const Rational& q) const {
    const int l = cmp(lo, fin(q));
    const int h = cmp(fin(q), hi);
    return (l < 0 || (l == 0 && lo_closed)) && (h < 0 || (h == 0 && hi_closed));
  }
};

inline Iv iv_of(const semipart::Interval& i) { return {end_of(i.lo), end_of(i.hi), i.lo_closed, i.hi_closed}; }

inline std::vector<Iv> parts_of(const semipart::IntervalUnion& u) {
  std::vector<Iv> out;
  for (const auto& p : u.parts()) out.push_back(iv_of(p));
  return out;
}

inline End add_end(const End& a, const End& b) {
  if (a.kind != 0) return a;
  if (b.kind != 0) return b;
  return fin(a.v + b.v);
}

/// Raw pairwise sum list, never merged.
inline std::vector<Iv> raw_sum(const std::vector<Iv>& a, const std::vector<Iv>& b) {
  std::vector<Iv> out;
  for (const auto& x : a)
    for (const auto& y : b)
      out.push_back({add_end(x.lo, y.lo), add_end(x.hi, y.hi), x.lo_closed && y.lo_closed, x.hi_closed && y.hi_closed});
  return out;
}

inline bool any_has(const std::vector<Iv>& parts, const Rational& q) {
  return std::any_of(parts.begin(), parts.end(), [&](const Iv& p) { return p.has(q); });
}

/// Raw union of (2k)A for k = 1..kmax, each layer clipped to values <= cap to
/// keep the lists finite.
inline std::vector<Iv> even_sums_brute(const semipart::IntervalUnion& a, int kmax, const Rational& cap) {
  const std::vector<Iv> base = parts_of(a);
  const std::vector<Iv> two = raw_sum(base, base);
  std::vector<Iv> layer = two;
  std::vector<Iv> all;
  for (int k = 1; k <= kmax; ++k) {
    std::vector<Iv> kept;
    for (const auto& p : layer)
      if (cmp(p.lo, fin(cap)) <= 0) kept.push_back(p);
    // Deduplicate identical intervals so the lists stay small.
    std::vector<Iv> uniq;
    for (const auto& p : kept) {
      const bool seen = std::any_of(uniq.begin(), uniq.end(), [&](const Iv& u) {
        return cmp(u.lo, p.lo) == 0 && cmp(u.hi, p.hi) == 0 && u.lo_closed == p.lo_closed && u.hi_closed == p.hi_closed;
      });
      if (!seen) uniq.push_back(p);
    }
    all.insert(all.end(), uniq.begin(), uniq.end());
    if (k < kmax) layer = raw_sum(uniq, two);
  }
  return all;
}

/// Dyadic-and-thirds grid of rationals in [lo, hi] with step 1/(6*den).
inline std::vector<Rational> grid(const Rational& lo, const Rational& hi, int den = 4) {
  std::vector<Rational> out;
  const Rational step(1, 6 * den);
  for (Rational q = lo; q <= hi; q += step) out.push_back(q);
  return out;
}

/// Product of two intervals by endpoint products. An endpoint of the product
/// is closed when some pair of closed endpoints attains it. Works for the
/// atom intervals, where 0 * inf never arises from a closed endpoint.
inline Iv multiply(const Iv& x, const Iv& y) {
  struct Cand {
    End e;
    bool closed;
  };
  auto mul = [](const End& a, const End& b) -> End {
    if (a.kind == 0 && b.kind == 0) return fin(a.v * b.v);
    const int sa = a.kind != 0 ? a.kind : sgn(a.v);
    const int sb = b.kind != 0 ? b.kind : sgn(b.v);
    if (sa == 0 || sb == 0) return fin(0);
    return {sa * sb, 0};
  };
  std::vector<Cand> cands;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const End& a = i ? x.hi : x.lo;
      const End& b = j ? y.hi : y.lo;
      const bool ca = i ? x.hi_closed : x.lo_closed;
      const bool cb = j ? y.hi_closed : y.lo_closed;
      // A closed zero end gives an attained zero product whatever the other factor.
      const bool zero_hit = (ca && a.kind == 0 && sgn(a.v) == 0) || (cb && b.kind == 0 && sgn(b.v) == 0);
      cands.push_back({mul(a, b), (ca && cb) || zero_hit});
    }
  Iv out{cands[0].e, cands[0].e, false, false};
  for (const auto& c : cands) {
    if (cmp(c.e, out.lo) < 0) out.lo = c.e;
    if (cmp(c.e, out.hi) > 0) out.hi = c.e;
  }
  for (const auto& c : cands) {
    if (cmp(c.e, out.lo) == 0 && c.closed) out.lo_closed = true;
    if (cmp(c.e, out.hi) == 0 && c.closed) out.hi_closed = true;
  }
  return out;
}

/// Whether two intervals share a point.
inline bool meets(const Iv& a, const Iv& b) {
  auto below = [](const End& hi, bool hi_closed, const End& lo, bool lo_closed) {
    const int c = cmp(hi, lo);
    return c < 0 || (c == 0 && !(hi_closed && lo_closed));
  };
  return !below(a.hi, a.hi_closed, b.lo, b.lo_closed) && !below(b.hi, b.hi_closed, a.lo, a.lo_closed);
}

/// Atoms met by the interval product of two atoms.
inline semipart::PieceSet atom_product_by_intervals(semipart::Atom a, semipart::Atom b) {
  const Iv prod = multiply(iv_of(semipart::atom_interval(a)), iv_of(semipart::atom_interval(b)));
  semipart::PieceSet out;
  for (auto c : semipart::kAtoms)
    if (meets(prod, iv_of(semipart::atom_interval(c)))) out |= semipart::PieceSet{c};
  return out;
}

/// Every subset of G closed under addition and containing 0, by brute force
/// over all 2^|G| subsets. In a finite group that makes it a subgroup.
inline std::set<std::vector<semipart::Element>> all_subgroups(const semipart::FiniteGroup& g) {
  const std::uint32_t n = g.order();
  std::set<std::vector<semipart::Element>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {  // bit 0 = identity always set
    bool closed = true;
    for (std::uint32_t a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1U)) continue;
      for (std::uint32_t b = 0; b < n && closed; ++b)
        if ((mask >> b & 1U) && !(mask >> g.add(a, b) & 1U)) closed = false;
    }
    if (!closed) continue;
    std::vector<semipart::Element> elems;
    for (std::uint32_t e = 0; e < n; ++e)
      if (mask >> e & 1U) elems.push_back(e);
    out.insert(elems);
  }
  return out;
}

/// Every family of nontrivial proper subgroups that covers G with pairwise
/// intersections {0}, by trying all subfamilies.
inline std::set<std::set<std::vector<semipart::Element>>> all_covers(const semipart::FiniteGroup& g) {
  std::vector<std::vector<semipart::Element>> cands;
  for (const auto& h : all_subgroups(g))
    if (h.size() > 1 && h.size() < g.order()) cands.push_back(h);
  std::set<std::set<std::vector<semipart::Element>>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cands.size()); ++mask) {
    std::vector<int> count(g.order(), 0);
    for (std::size_t i = 0; i < cands.size(); ++i)
      if (mask >> i & 1U)
        for (auto e : cands[i]) ++count[e];
    bool ok = true;
    for (std::uint32_t e = 1; e < g.order(); ++e) ok = ok && count[e] == 1;
    if (!ok || std::popcount(mask) < 2) continue;
    std::set<std::vector<semipart::Element>> fam;
    for (std::size_t i = 0; i < cands.size(); ++i)
      if (mask >> i & 1U) fam.insert(cands[i]);
    out.insert(fam);
  }
  return out;
}

/// Classification by the defining scan, written directly from coefficient
/// sums over the length-lex cylinder strings, with its own cylinder code.
inline std::string nth_string(std::uint64_t k) {
  std::string s;
  while (k > 1) {
    s.insert(s.begin(), static_cast<char>('0' + (k & 1U)));
    k >>= 1;
  }
  return s;
}

inline bool point_in(const std::string& p, const std::string& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    const char c = i < p.size() ? p[i] : '0';
    if (c != t[i]) return false;
  }
  return true;
}

}  // namespace oracle

#endif
