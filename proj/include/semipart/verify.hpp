#ifndef SEMIPART_VERIFY_HPP
#define SEMIPART_VERIFY_HPP

// Seeded property suites, one per module. Each returns a CheckReport; a
// non-empty violation list means a law failed.

#include <cstdint>
#include <string>
#include <vector>

#include "semipart/expr.hpp"
#include "semipart/first_coordinate.hpp"
#include "semipart/group_cover.hpp"
#include "semipart/hamel.hpp"
#include "semipart/mult_pieces.hpp"
#include "semipart/report.hpp"
#include "semipart/sampling.hpp"
#include "semipart/semigroup_partition.hpp"
#include "semipart/sumset.hpp"

namespace semipart {

struct VerifyConfig {
  SampleConfig sample;
  std::uint64_t group_bound = kDefaultGroupBound;
  unsigned threads = 0;
};

inline const std::vector<std::string>& verify_modules() {
  static const std::vector<std::string> names{"hamel", "partition", "prop11", "sumset", "mult", "group", "expr"};
  return names;
}

namespace detail {

inline Violation real_violation(const HamelReal& x, const HamelReal& y, const std::string& expected,
                                const std::string& got) {
  return {"", to_string(x), to_string(y), expected, got};
}

/// Cylinder index <= lex_index_bound isolating exactly one of `points`, or 0.
inline CylinderIndex find_isolating_cylinder(const std::vector<std::string>& points) {
  const CylinderIndex bound = lex_index_bound(points);
  for (CylinderIndex k = 1; k <= bound; ++k) {
    const std::string t = cylinder_string(k);
    int hits = 0;
    for (const auto& p : points) hits += extends(p, t) ? 1 : 0;
    if (hits == 1) return k;
  }
  return 0;
}

}  // namespace detail

inline CheckReport verify_hamel(const VerifyConfig& cfg) {
  cfg.sample.validate();
  CheckReport r{"hamel", {}, {}};
  for (std::uint64_t i = 0; i < cfg.sample.count; ++i) {
    Rng rng = Rng::for_sample(cfg.sample.seed ^ 0x48414d454cULL, i);
    const HamelReal x = random_real(rng, cfg.sample);
    const HamelReal y = random_real(rng, cfg.sample);
    const HamelReal z = random_real(rng, cfg.sample);
    const Rational p = random_rational(rng, cfg.sample.coeff_bound);
    const Rational q = random_rational(rng, cfg.sample.coeff_bound);
    using detail::real_violation;

    r.expect((x + y).is_canonical() && (p * x).is_canonical() && (x - x).is_zero(), "canonical",
             real_violation(x, y, "no zero coefficients", to_string(x + y)));
    r.expect(HamelReal::make({x.terms().begin(), x.terms().end()}) == x, "make-idempotent",
             real_violation(x, x, to_string(x), "rebuilt differs"));
    r.expect((x + y) + z == x + (y + z), "associative", real_violation(x, y, to_string((x + y) + z), to_string(x + (y + z))));
    r.expect(x + y == y + x, "commutative", real_violation(x, y, to_string(x + y), to_string(y + x)));
    r.expect(p * (x + y) == p * x + p * y, "distributive-vector",
             real_violation(x, y, to_string(p * (x + y)), to_string(p * x + p * y)));
    r.expect(Rational(p + q) * x == p * x + q * x, "distributive-scalar",
             real_violation(x, x, to_string(Rational(p + q) * x), to_string(p * x + q * x)));
    r.expect(p * (q * x) == Rational(p * q) * x, "scalar-associative",
             real_violation(x, x, to_string(Rational(p * q) * x), to_string(p * (q * x))));
    r.expect(x + HamelReal{} == x && Rational(1) * x == x && (x + -x).is_zero() && (Rational(0) * x).is_zero(),
             "identities", real_violation(x, x, to_string(x), "identity law failed"));
    r.expect(support(p * x) == support(x), "support-scale", real_violation(x, p * x, "same support", "differs"));

    // S-additivity on every occurring piece and the first 32 cylinders.
    std::set<PieceIndex> pieces;
    for (const auto& e : x.terms()) pieces.insert(e.first.piece);
    for (const auto& e : y.terms()) pieces.insert(e.first.piece);
    bool additive = true;
    for (PieceIndex a : pieces)
      for (CylinderIndex k = 1; k <= 32; ++k)
        additive = additive && coeff_sum(x + y, Cylinder{a, k}) == coeff_sum(x, Cylinder{a, k}) + coeff_sum(y, Cylinder{a, k});
    r.expect(additive, "s-additivity", real_violation(x, y, "S(x+y)=S(x)+S(y)", "mismatch"));

    // Separation: some cylinder within the bound isolates one point.
    if (!x.is_zero()) {
      const auto points = piece_points(x, x.terms().begin()->first.piece);
      const CylinderIndex k = detail::find_isolating_cylinder(points);
      r.expect(k != 0, "separation", real_violation(x, x, "isolating cylinder", "none within bound"));
    }
  }
  return r;
}

inline CheckReport verify_partition(const VerifyConfig& cfg) {
  const PartitionReport pr = verify_partition_sample(cfg.sample, cfg.threads);
  CheckReport r{"partition", pr.checks, pr.violations};

  // Literal cylinder scan agrees with the grouped classifier.
  for (std::uint64_t i = 0; i < std::min<std::uint64_t>(cfg.sample.count, 2000); ++i) {
    Rng rng = Rng::for_sample(cfg.sample.seed ^ 0x5343414eULL, i);
    const HamelReal x = random_real(rng, cfg.sample);
    const Label fast = classify(x);
    const Label slow = classify_by_scan(x);
    r.expect(fast == slow, "scan-agrees", detail::real_violation(x, x, to_string(slow), to_string(fast)));
    if (!x.is_zero()) {
      const HamelReal y = random_positive_rational(rng, cfg.sample.coeff_bound) * x;
      r.expect(same_ray(x, y) && classify(y) == fast, "ray", detail::real_violation(x, y, to_string(fast), to_string(classify(y))));
    }
  }
  return r;
}

namespace detail {

/// Random member of a piece of the first-coordinate decomposition.
inline HamelReal random_prop11_member(Rng& rng, const SampleConfig& cfg, const PropLabel& label,
                                      const Kappa& kappa) {
  if (label.tag == PropLabel::Tag::Piece) {
    const BasisElement lead{label.alpha, random_point(rng, cfg.max_point_len)};
    std::vector<std::pair<BasisElement, Rational>> pairs{{lead, random_positive_rational(rng, cfg.coeff_bound)}};
    const HamelReal tail = random_real_on(rng, cfg, label.alpha, label.alpha + cfg.max_index);
    for (const auto& [b, q] : tail.terms())
      if (lead < b) pairs.emplace_back(b, q);
    return HamelReal::make(pairs);
  }
  switch (rng.below(3)) {
    case 0: return HamelReal{};
    case 1:
      if (kappa.is_finite()) {
        const PieceIndex from = kappa.value() - 1;
        return random_real_on(rng, cfg, from, from + cfg.max_index);
      }
      [[fallthrough]];
    default: {
      HamelReal x = random_real_on(rng, cfg, 0, cfg.max_index);
      if (x.is_zero()) return x;
      const auto& [b, g] = *x.terms().begin();
      if (g > 0) x += HamelReal::term(b, Rational(-2 * g));
      return x;
    }
  }
}

}  // namespace detail

inline CheckReport verify_prop11(const VerifyConfig& cfg) {
  CheckReport r{"prop11", {}, {}};
  std::vector<Kappa> kappas;
  for (std::uint32_t k = 1; k <= 8; ++k) kappas.push_back(Kappa::finite(k));
  kappas.push_back(Kappa::all());

  for (const Kappa& kappa : kappas) {
    const std::uint32_t pieces = kappa.is_finite() ? kappa.value() - 1 : cfg.sample.max_index + 1;
    for (PieceIndex a = 0; a < pieces; ++a) {
      const HamelReal w = witness_prop11(PropLabel::piece(a), kappa);
      r.expect(classify_prop11(w, kappa) == PropLabel::piece(a), "witness",
               {"", to_string(w), kappa.to_string(), to_string(PropLabel::piece(a)), to_string(classify_prop11(w, kappa))});
    }
    r.expect(classify_prop11(witness_prop11(PropLabel::remainder(), kappa), kappa) == PropLabel::remainder(),
             "witness", {"", "0", kappa.to_string(), "Remainder", "other"});

    for (std::uint64_t i = 0; i < cfg.sample.count; ++i) {
      Rng rng = Rng::for_sample(cfg.sample.seed ^ (0x50524f50ULL + kappa.to_string().size() * 977 +
                                                   (kappa.is_finite() ? kappa.value() : 0)), i);
      const std::uint64_t choice = rng.below(pieces + 1ULL);
      const PropLabel label = choice < pieces ? PropLabel::piece(static_cast<PieceIndex>(choice)) : PropLabel::remainder();
      const HamelReal x = detail::random_prop11_member(rng, cfg.sample, label, kappa);
      const HamelReal y = detail::random_prop11_member(rng, cfg.sample, label, kappa);
      const PropLabel lx = classify_prop11(x, kappa);
      const PropLabel ly = classify_prop11(y, kappa);
      r.expect(lx == label && ly == label, "sampler",
               {"", to_string(x), to_string(y), to_string(label), to_string(lx) + "/" + to_string(ly)});
      const PropLabel sum = classify_prop11(x + y, kappa);
      r.expect(sum == label, "closure", {"", to_string(x), to_string(y), to_string(label), to_string(sum)});
      if (kappa == Kappa::finite(1)) {
        const HamelReal any = random_real(rng, cfg.sample);
        r.expect(classify_prop11(any, kappa) == PropLabel::remainder(), "kappa1-remainder",
                 {"", to_string(any), "0", "Remainder", to_string(classify_prop11(any, kappa))});
      }
    }
  }
  return r;
}

inline CheckReport verify_sumset(const VerifyConfig& cfg) {
  CheckReport r{"sumset", {}, {}};
  const std::uint64_t n = std::min<std::uint64_t>(cfg.sample.count, 500);
  auto uv = [](const IntervalUnion& a, const IntervalUnion& b, const IntervalUnion& want, const IntervalUnion& got) {
    return Violation{"", a.to_string(), b.to_string(), want.to_string(), got.to_string()};
  };
  for (std::uint64_t i = 0; i < n; ++i) {
    Rng rng = Rng::for_sample(cfg.sample.seed ^ 0x53554d53ULL, i);
    const IntervalUnion a = random_union(rng, 4, -6, 6);
    const IntervalUnion b = random_union(rng, 3, -6, 6);
    const IntervalUnion c = random_union(rng, 2, -6, 6);

    std::vector<Interval> reversed(a.parts().rbegin(), a.parts().rend());
    r.expect(IntervalUnion::normalize(reversed) == a, "normal-form", uv(a, a, a, IntervalUnion::normalize(reversed)));
    r.expect(minkowski_sum(a, b) == minkowski_sum(b, a), "commutative",
             uv(a, b, minkowski_sum(a, b), minkowski_sum(b, a)));
    r.expect(minkowski_sum(minkowski_sum(a, b), c) == minkowski_sum(a, minkowski_sum(b, c)), "associative",
             uv(a, b, minkowski_sum(minkowski_sum(a, b), c), minkowski_sum(a, minkowski_sum(b, c))));
    const std::uint64_t m = 1 + rng.below(3);
    const std::uint64_t k = 1 + rng.below(3);
    r.expect(n_fold(a, m + k) == minkowski_sum(n_fold(a, m), n_fold(a, k)), "n-fold-split",
             uv(a, a, n_fold(a, m + k), minkowski_sum(n_fold(a, m), n_fold(a, k))));
    for (const auto& part : a.parts()) {
      Interval sum = part;
      for (std::uint64_t j = 1; j < m; ++j) sum = sum + part;
      r.expect(is_subset(IntervalUnion::of(sum), n_fold(a, m)), "n-fold-endpoints",
               uv(a, a, IntervalUnion::of(sum), n_fold(a, m)));
    }
    r.expect(is_subset(a, unite(a, b)) && is_subset(IntervalUnion{}, a), "subset", uv(a, b, a, unite(a, b)));

    // Bounded nonempty subsets of (0, inf) are never additively closed.
    const IntervalUnion bounded = random_union(rng, 3, 1, 12, false).clip_above(12);
    const IntervalUnion positive = IntervalUnion::normalize([&] {
      std::vector<Interval> ps;
      for (const auto& p : bounded.parts()) {
        Interval q = p;
        q.lo = Extended(Rational(q.lo.value() / 4));
        q.hi = Extended(Rational(q.hi.value() / 4));
        ps.push_back(q);
      }
      return ps;
    }());
    r.expect(!is_additively_closed(positive) && !is_triple_closed(positive), "bounded-not-closed",
             uv(positive, positive, IntervalUnion{}, positive));

    // Even sums of a set with interior in (0, inf) contain a certified halfline.
    std::vector<Interval> ps{Interval::make(random_grid_rational(rng, 1, 2), random_grid_rational(rng, 3, 4),
                                            rng.chance(1, 2), rng.chance(1, 2))};
    for (const auto& p : positive.parts()) ps.push_back(p);
    const IntervalUnion with_interior = IntervalUnion::normalize(ps);
    const HalflineResult h = even_sum_halfline(with_interior);
    IntervalUnion even;
    IntervalUnion layer = n_fold(with_interior, 2);
    const IntervalUnion doubled = layer;
    for (int j = 1; j <= 50; ++j) {
      even = unite(even, layer);
      layer = minkowski_sum(layer, doubled).clip_above(h.t + 200);
    }
    const IntervalUnion window = IntervalUnion::of(Interval::open(h.t, Rational(h.t + 100)));
    r.expect(h.certified && is_subset(window, even), "halfline",
             uv(with_interior, with_interior, window, even.clip_above(h.t + 100)));

    // Triple-closed inputs keep every odd sum.
    const IntervalUnion ray = IntervalUnion::of(
        Interval::make(random_grid_rational(rng, 0, 4), Extended::pos_inf(), rng.chance(1, 2), false));
    IntervalUnion tri = rng.chance(1, 2) ? unite(ray, IntervalUnion::of(Interval::point(0))) : ray;
    if (rng.chance(1, 3)) tri = IntervalUnion::normalize([&] {
      std::vector<Interval> neg;
      for (const auto& p : tri.parts()) {
        Interval q{Extended::neg_inf(), Extended(0L), false, false};
        if (p.hi.is_finite()) q.lo = Extended(Rational(-p.hi.value()));
        q.hi = p.lo.is_finite() ? Extended(Rational(-p.lo.value())) : Extended::pos_inf();
        q.lo_closed = p.hi_closed;
        q.hi_closed = p.lo_closed;
        neg.push_back(q);
      }
      return neg;
    }());
    r.expect(is_triple_closed(tri) && odd_sums_contained(tri, 8), "odd-sums", uv(tri, tri, tri, n_fold(tri, 3)));
  }

  const IntervalUnion two = IntervalUnion::of(Interval::closed(0, 2));
  for (unsigned stage = 0; stage <= 8; ++stage) {
    const IntervalUnion cs = cantor_stage(stage);
    r.expect(minkowski_sum(cs, cs) == two, "cantor-sum", uv(cs, cs, two, minkowski_sum(cs, cs)));
  }
  return r;
}

inline CheckReport verify_mult(const VerifyConfig& cfg) {
  CheckReport r{"mult", {}, {}};
  auto pv = [](PieceSet s, PieceSet t, PieceSet want, PieceSet got) {
    return Violation{"", to_string(s), to_string(t), to_string(want), to_string(got)};
  };
  for (Atom a : kAtoms) {
    r.expect(atom_product(Atom::PosOne, a) == PieceSet{a}, "identity", pv({Atom::PosOne}, {a}, {a}, atom_product(Atom::PosOne, a)));
    r.expect(atom_product(Atom::Zero, a) == kZero, "zero-absorbs", pv(kZero, {a}, kZero, atom_product(Atom::Zero, a)));
    for (Atom b : kAtoms) {
      const PieceSet ab = atom_product(a, b);
      r.expect(ab == atom_product(b, a), "commutative", pv({a}, {b}, ab, atom_product(b, a)));
      const PieceSet small_side = kSmall | kZero;
      if (PieceSet{a}.subset_of(kSmall) && PieceSet{b}.subset_of(kSmall))
        r.expect(ab.subset_of(small_side), "small-stays-small", pv({a}, {b}, small_side, ab));
      if (PieceSet{a}.subset_of(kBig) && PieceSet{b}.subset_of(kBig))
        r.expect(ab.subset_of(kBig), "big-stays-big", pv({a}, {b}, kBig, ab));
    }
  }

  // Point samples: every product of members lands in the predicted atoms.
  for (std::uint64_t i = 0; i < std::min<std::uint64_t>(cfg.sample.count, 2000); ++i) {
    Rng rng = Rng::for_sample(cfg.sample.seed ^ 0x4d554c54ULL, i);
    auto member = [&rng](Atom a) -> Rational {
      const Interval iv = atom_interval(a);
      if (iv.is_singleton()) return iv.lo.value();
      Rational v;
      do {
        v = random_grid_rational(rng, -20, 20);
      } while (!iv.contains(v));
      return v;
    };
    const Atom a = kAtoms[rng.below(7)];
    const Atom b = kAtoms[rng.below(7)];
    const Rational prod = member(a) * member(b);
    const PieceSet predicted = atom_product(a, b);
    bool lands = false;
    for (Atom c : predicted.atoms()) lands = lands || atom_interval(c).contains(prod);
    r.expect(lands, "point-products", {"", std::string(atom_name(a)), std::string(atom_name(b)), to_string(predicted), prod.get_str()});
  }

  const auto masks = closed_generator_masks();
  r.expect(masks.size() == 10, "enumeration-size", {"", "", "", "10", std::to_string(masks.size())});
  for (unsigned mask = 0; mask < 16; ++mask) {
    const PieceSet s = generator_union(mask);
    const bool listed = std::find(masks.begin(), masks.end(), mask) != masks.end();
    const bool large = s.intersects(kSmall) || s.intersects(kBig);
    r.expect(listed == (is_mult_closed(s) && large), "enumeration-sound",
             {"", generator_union_name(mask), "", listed ? "closed" : "excluded", to_string(product_set(s, s))});
  }

  const LogImage img = neg_log_atom(Atom::NegBig);
  r.expect(is_triple_mult_closed({Atom::NegBig}) && !is_mult_closed({Atom::NegBig}) && is_triple_closed(img.image),
           "log-bridge", {"", "nbig", "", "(0,inf) triple-closed", img.image.to_string()});

  for (std::uint64_t i = 0; i < cfg.sample.count; ++i) {
    Rng rng = Rng::for_sample(cfg.sample.seed ^ 0x4252444745ULL, i);
    const PosRealExp u{random_real(rng, cfg.sample)};
    const PosRealExp v{random_real(rng, cfg.sample)};
    r.expect(mult_classify(u * v) == classify(u.exponent + v.exponent), "bridge",
             detail::real_violation(u.exponent, v.exponent, to_string(classify(u.exponent + v.exponent)),
                                    to_string(mult_classify(u * v))));
    r.expect(mult_classify(u.inverse()) == mult_classify(u).dual(), "inverse",
             detail::real_violation(u.exponent, u.exponent, to_string(mult_classify(u).dual()),
                                    to_string(mult_classify(u.inverse()))));
    if (!u.exponent.is_zero()) {
      const Label l = mult_classify(u);
      const PosRealExp w{random_positive_rational(rng, cfg.sample.coeff_bound) * u.exponent +
                         random_lower_noise(rng, cfg.sample, l.alpha)};
      r.expect(mult_classify(w) != l || mult_classify(u * w) == l, "product-closure",
               detail::real_violation(u.exponent, w.exponent, to_string(l), to_string(mult_classify(u * w))));
    }
  }
  return r;
}

/// Groups whose covers are enumerated exhaustively by the group suite.
inline std::vector<std::vector<std::uint32_t>> cover_test_groups() {
  return {{2, 2}, {3, 3}, {5, 5}, {2, 2, 2}, {4}, {6}, {2}, {3}, {5}, {7}, {11}, {13},
          {8}, {9}, {2, 4}, {2, 6}, {3, 6}, {4, 4}, {2, 2, 2, 2}, {3, 3, 3}, {7, 7}, {2, 2, 4}};
}

inline CheckReport verify_group(const VerifyConfig& cfg) {
  CheckReport r{"group", {}, {}};
  for (const auto& factors : cover_test_groups()) {
    std::uint64_t order = 1;
    for (auto m : factors) order *= m;
    if (order > cfg.group_bound) continue;
    const FiniteGroup g = FiniteGroup::make(factors, cfg.group_bound);
    const auto subs = subgroups(g);
    for (const auto& h : subs) {
      bool valid = true;
      try {
        (void)Subgroup::from_elements(g, h.elements());
      } catch (const DomainError&) {
        valid = false;
      }
      r.expect(valid && g.order() % h.order() == 0, "subgroup-valid",
               {"", g.to_string(), h.to_string(), "subgroup with |H| dividing |G|", std::to_string(h.order())});
    }
    const auto covers = find_covers(g);
    std::size_t min_kappa = 0;
    for (const auto& c : covers) {
      const BoundReport br = verify_cover_bounds(g, c);
      r.expect(br.ok(), "cover-bounds", {"", g.to_string(), c.to_string(), "all inequalities", br.violations.empty() ? "" : br.violations.front()});
      r.expect(is_essentially_disjoint(c.members) && c.covers(g), "cover-valid", {"", g.to_string(), c.to_string(), "valid cover", "invalid"});
      min_kappa = min_kappa == 0 ? c.kappa() : std::min(min_kappa, c.kappa());
    }
    if (factors.size() == 1) {
      bool prime = factors[0] >= 2;
      for (std::uint32_t d = 2; d * d <= factors[0]; ++d) prime = prime && factors[0] % d != 0;
      if (prime)
        r.expect(covers.empty(), "prime-cyclic-no-cover", {"", g.to_string(), "", "0 covers", std::to_string(covers.size())});
    }
    if (factors.size() == 2 && factors[0] == factors[1]) {
      bool prime = true;
      for (std::uint32_t d = 2; d * d <= factors[0]; ++d) prime = prime && factors[0] % d != 0;
      if (prime)
        r.expect(min_kappa == factors[0] + 1, "plane-min-kappa",
                 {"", g.to_string(), "", std::to_string(factors[0] + 1), std::to_string(min_kappa)});
    }
  }
  return r;
}

inline CheckReport verify_expr(const VerifyConfig& cfg) {
  CheckReport r{"expr", {}, {}};
  for (std::uint64_t i = 0; i < cfg.sample.count; ++i) {
    Rng rng = Rng::for_sample(cfg.sample.seed ^ 0x45585052ULL, i);
    const HamelReal x = random_real(rng, cfg.sample);
    const std::string text = to_string(x);
    HamelReal back;
    try {
      back = parse_real(text);
    } catch (const ParseError& e) {
      r.expect(false, "real-round-trip", {"", text, "", text, e.what()});
      continue;
    }
    r.expect(back == x, "real-round-trip", {"", text, "", text, to_string(back)});

    const IntervalUnion u = random_union(rng, 4, -10, 10);
    const std::string utext = u.to_string();
    IntervalUnion uback;
    try {
      uback = parse_interval_union(utext);
    } catch (const ParseError& e) {
      r.expect(false, "union-round-trip", {"", utext, "", utext, e.what()});
      continue;
    }
    r.expect(uback == u, "union-round-trip", {"", utext, "", utext, uback.to_string()});
  }
  return r;
}

inline CheckReport verify_module(const std::string& name, const VerifyConfig& cfg) {
  if (name == "hamel") return verify_hamel(cfg);
  if (name == "partition") return verify_partition(cfg);
  if (name == "prop11") return verify_prop11(cfg);
  if (name == "sumset") return verify_sumset(cfg);
  if (name == "mult") return verify_mult(cfg);
  if (name == "group") return verify_group(cfg);
  if (name == "expr") return verify_expr(cfg);
  throw std::invalid_argument("unknown module \"" + name + "\"");
}

}  // namespace semipart

#endif
