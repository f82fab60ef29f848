#ifndef SEMIPART_GROUP_COVER_HPP
#define SEMIPART_GROUP_COVER_HPP

// Finite abelian groups Z_m1 x ... x Z_mr, their subgroups, and covers of the
// group by subgroups that pairwise meet only in the identity.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semipart/rational.hpp"

namespace semipart {

using Element = std::uint32_t;

inline constexpr std::uint64_t kDefaultGroupBound = 64;

/// Z_m1 x ... x Z_mr. Elements are encoded in mixed radix with the first
/// factor most significant, so element order is lexicographic tuple order.
class FiniteGroup {
 public:
  static FiniteGroup make(std::vector<std::uint32_t> factors, std::uint64_t bound = kDefaultGroupBound) {
    if (factors.empty()) throw DomainError("a group needs at least one cyclic factor");
    std::uint64_t order = 1;
    for (auto m : factors) {
      if (m < 2) throw DomainError("cyclic factors must be >= 2");
      order *= m;
      if (order > bound)
        throw DomainError("group order exceeds bound " + std::to_string(bound));
    }
    return FiniteGroup(std::move(factors), static_cast<Element>(order));
  }

  const std::vector<std::uint32_t>& factors() const noexcept { return factors_; }
  Element order() const noexcept { return order_; }
  static constexpr Element identity() noexcept { return 0; }

  std::vector<std::uint32_t> decode(Element e) const {
    std::vector<std::uint32_t> t(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
      t[i] = e % factors_[i];
      e /= factors_[i];
    }
    return t;
  }

  Element encode(const std::vector<std::uint32_t>& t) const {
    Element e = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) e = e * factors_[i] + t[i] % factors_[i];
    return e;
  }

  Element add(Element a, Element b) const {
    Element out = 0;
    Element place = 1;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      const auto m = factors_[i];
      out += ((a % m + b % m) % m) * place;
      a /= m;
      b /= m;
      place *= m;
    }
    return out;
  }

  Element negate(Element a) const {
    auto t = decode(a);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = (factors_[i] - t[i]) % factors_[i];
    return encode(t);
  }

  std::string element_string(Element e) const {
    std::string out = "(";
    const auto t = decode(e);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(t[i]);
    }
    return out + ")";
  }

  /// "Z2xZ2"
  std::string to_string() const {
    std::string out;
    for (auto m : factors_) {
      if (!out.empty()) out += 'x';
      out += "Z" + std::to_string(m);
    }
    return out;
  }

  bool operator==(const FiniteGroup&) const = default;

 private:
  FiniteGroup(std::vector<std::uint32_t> f, Element order) : factors_(std::move(f)), order_(order) {}

  std::vector<std::uint32_t> factors_;
  Element order_;
};

/// A subgroup, as the sorted list of its elements.
class Subgroup {
 public:
  /// Subgroup generated by `gens`.
  static Subgroup generated(const FiniteGroup& g, const std::vector<Element>& gens) {
    std::vector<char> member(g.order(), 0);
    std::vector<Element> elems{FiniteGroup::identity()};
    member[FiniteGroup::identity()] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (Element s : gens) {
        const Element e = g.add(elems[i], s);
        if (!member[e]) {
          member[e] = 1;
          elems.push_back(e);
        }
      }
    }
    std::sort(elems.begin(), elems.end());
    return Subgroup(g, std::move(elems));
  }

  /// Checks the subgroup axioms on an explicit element list.
  static Subgroup from_elements(const FiniteGroup& g, std::vector<Element> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::vector<char> member(g.order(), 0);
    for (Element e : elems) {
      if (e >= g.order()) throw DomainError("element outside the group");
      member[e] = 1;
    }
    if (elems.empty() || !member[FiniteGroup::identity()]) throw DomainError("subgroup must contain the identity");
    for (Element a : elems) {
      if (!member[g.negate(a)]) throw DomainError("subgroup not closed under negation");
      for (Element b : elems)
        if (!member[g.add(a, b)]) throw DomainError("subgroup not closed under addition");
    }
    return Subgroup(g, std::move(elems));
  }

  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return elements_.size() == group_.order(); }

  bool contains(Element e) const { return std::binary_search(elements_.begin(), elements_.end(), e); }

  /// Greedy generating set: ascending elements not already in the span so far.
  std::vector<Element> generators() const {
    std::vector<Element> gens;
    Subgroup span = generated(group_, {});
    for (Element e : elements_) {
      if (span.contains(e)) continue;
      gens.push_back(e);
      span = generated(group_, gens);
    }
    return gens;
  }

  /// "<(0,1)>", "<(1,0),(0,1)>"; the trivial subgroup is "<>".
  std::string to_string() const {
    std::string out = "<";
    bool first = true;
    for (Element e : generators()) {
      if (!first) out += ',';
      first = false;
      out += group_.element_string(e);
    }
    return out + ">";
  }

  /// Canonical order: by order, then by element list.
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements_ < b.elements_;
  }
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_ == b.group_ && a.elements_ == b.elements_;
  }

 private:
  Subgroup(const FiniteGroup& g, std::vector<Element> elems) : group_(g), elements_(std::move(elems)) {}

  FiniteGroup group_;
  std::vector<Element> elements_;
};

/// All subgroups in canonical order. Every subgroup of a finite abelian
/// group is a join of cyclic ones, so joins with cyclic subgroups suffice.
inline std::vector<Subgroup> subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> cyclic;
  std::set<std::vector<Element>> seen;
  for (Element e = 0; e < g.order(); ++e) {
    Subgroup c = Subgroup::generated(g, {e});
    if (seen.insert(c.elements()).second) cyclic.push_back(std::move(c));
  }
  std::vector<Subgroup> all = cyclic;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& c : cyclic) {
      if (std::includes(all[i].elements().begin(), all[i].elements().end(), c.elements().begin(),
                        c.elements().end()))
        continue;
      std::vector<Element> gens = all[i].generators();
      gens.push_back(c.generators().front());
      Subgroup joined = Subgroup::generated(g, gens);
      if (seen.insert(joined.elements()).second) all.push_back(std::move(joined));
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

/// Whether every pairwise intersection is the identity alone.
inline bool is_essentially_disjoint(const std::vector<Subgroup>& family) {
  for (std::size_t i = 1; i < family.size(); ++i)
    if (!(family[i].group() == family[0].group()))
      throw DomainError("subgroups of different groups");
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      std::vector<Element> common;
      std::set_intersection(family[i].elements().begin(), family[i].elements().end(),
                            family[j].elements().begin(), family[j].elements().end(),
                            std::back_inserter(common));
      if (common.size() != 1) return false;
    }
  }
  return true;
}

struct SubgroupCover {
  std::vector<Subgroup> members;

  std::size_t kappa() const noexcept { return members.size(); }

  /// lambda: the largest member order.
  std::size_t lambda() const {
    std::size_t best = 0;
    for (const auto& h : members) best = std::max(best, h.order());
    return best;
  }

  bool covers(const FiniteGroup& g) const {
    std::vector<char> hit(g.order(), 0);
    for (const auto& h : members)
      for (Element e : h.elements()) hit[e] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  }

  std::string to_string() const {
    std::string out;
    for (const auto& h : members) {
      if (!out.empty()) out += ' ';
      out += h.to_string();
    }
    return out;
  }
};

/// Calls visit(cover) for each essentially disjoint cover of G by proper
/// subgroups (kappa >= 2), in search order, until visit returns false.
/// Members of each cover are in canonical order. Returns the number visited.
///
/// Such a cover partitions G \ {e} into the sets H \ {e}, so it is an exact
/// cover problem, and every solution is inclusion-minimal (dropping a member
/// uncovers its non-identity elements). The search always branches on the
/// least uncovered element.
template <class Visit>
std::size_t for_each_cover(const FiniteGroup& g, Visit&& visit) {
  const std::vector<Subgroup> all = subgroups(g);
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (!all[i].is_trivial() && !all[i].is_whole()) candidates.push_back(i);

  std::vector<std::vector<std::size_t>> containing(g.order());
  for (std::size_t c : candidates)
    for (Element e : all[c].elements())
      if (e != FiniteGroup::identity()) containing[e].push_back(c);

  std::vector<std::size_t> chosen;
  std::vector<char> covered(g.order(), 0);
  covered[FiniteGroup::identity()] = 1;
  std::size_t visited = 0;
  bool stop = false;

  auto search = [&](auto&& self, Element from) -> void {
    Element u = from;
    while (u < g.order() && covered[u]) ++u;
    if (u == g.order()) {
      auto idx = chosen;
      std::sort(idx.begin(), idx.end());
      SubgroupCover cover;
      for (std::size_t i : idx) cover.members.push_back(all[i]);
      ++visited;
      stop = !visit(cover);
      return;
    }
    for (std::size_t c : containing[u]) {
      const auto& elems = all[c].elements();
      if (std::any_of(elems.begin() + 1, elems.end(), [&](Element e) { return covered[e] != 0; }))
        continue;
      for (auto it = elems.begin() + 1; it != elems.end(); ++it) covered[*it] = 1;
      chosen.push_back(c);
      self(self, u);
      chosen.pop_back();
      for (auto it = elems.begin() + 1; it != elems.end(); ++it) covered[*it] = 0;
      if (stop) return;
    }
  };
  if (g.order() > 1) search(search, 1);
  return visited;
}

/// All covers in canonical order (by member list); with allow_trivial the
/// cover {G} comes first. Throws if more than `limit` covers exist.
inline std::vector<SubgroupCover> find_covers(const FiniteGroup& g, bool allow_trivial = false,
                                              std::size_t limit = 1000000) {
  std::vector<SubgroupCover> found;
  for_each_cover(g, [&](const SubgroupCover& c) {
    if (found.size() >= limit) throw DomainError("more than " + std::to_string(limit) + " covers");
    found.push_back(c);
    return true;
  });
  std::sort(found.begin(), found.end(), [](const SubgroupCover& a, const SubgroupCover& b) {
    return std::lexicographical_compare(a.members.begin(), a.members.end(), b.members.begin(), b.members.end());
  });
  if (allow_trivial) found.insert(found.begin(), SubgroupCover{{subgroups(g).back()}});
  return found;
}

/// Outcome of checking the counting inequalities on one cover.
struct BoundReport {
  std::size_t order = 0;   ///< |G|
  std::size_t kappa = 0;   ///< number of members
  std::size_t lambda = 0;  ///< largest member order
  std::uint64_t coset_checks = 0;     ///< (alpha, g not in H_alpha, beta != alpha) triples examined
  std::size_t max_coset_meet = 0;     ///< largest |gH_alpha n H_beta| seen
  bool coset_meets_at_most_one = true;  ///< (a)
  bool kappa_at_least_member_order = true;  ///< (b) kappa >= |H_alpha| for all alpha
  bool kappa_lambda_at_least_order = true;  ///< (c) kappa * lambda >= |G|
  std::string coset_witness;           ///< one concrete coset intersection
  std::vector<std::string> violations;

  bool ok() const noexcept {
    return coset_meets_at_most_one && kappa_at_least_member_order && kappa_lambda_at_least_order;
  }
};

/// Checks, with witnesses: every coset g + H_alpha with g outside H_alpha meets
/// each other member in at most one element; kappa >= |H_alpha|; and
/// kappa * lambda >= |G|.
inline BoundReport verify_cover_bounds(const FiniteGroup& g, const SubgroupCover& cover) {
  if (cover.kappa() < 2) throw DomainError("verify_cover_bounds needs kappa >= 2");
  for (const auto& h : cover.members)
    if (!(h.group() == g)) throw DomainError("cover member from a different group");
  if (!cover.covers(g)) throw DomainError("family does not cover the group");
  if (!is_essentially_disjoint(cover.members)) throw DomainError("family is not essentially disjoint");

  BoundReport r;
  r.order = g.order();
  r.kappa = cover.kappa();
  r.lambda = cover.lambda();

  for (std::size_t alpha = 0; alpha < cover.kappa(); ++alpha) {
    const Subgroup& h = cover.members[alpha];
    for (Element x = 0; x < g.order(); ++x) {
      if (h.contains(x)) continue;
      std::vector<Element> coset;
      for (Element e : h.elements()) coset.push_back(g.add(x, e));
      std::sort(coset.begin(), coset.end());
      std::size_t total = 0;
      for (std::size_t beta = 0; beta < cover.kappa(); ++beta) {
        if (beta == alpha) continue;
        std::vector<Element> meet;
        std::set_intersection(coset.begin(), coset.end(), cover.members[beta].elements().begin(),
                              cover.members[beta].elements().end(), std::back_inserter(meet));
        ++r.coset_checks;
        total += meet.size();
        r.max_coset_meet = std::max(r.max_coset_meet, meet.size());
        if (r.coset_witness.empty() && meet.size() == 1) {
          r.coset_witness = "g=" + g.element_string(x) + " H=" + h.to_string() + " meets " +
                            cover.members[beta].to_string() + " in {" + g.element_string(meet[0]) + "}";
        }
        if (meet.size() > 1) {
          r.coset_meets_at_most_one = false;
          r.violations.push_back("coset g=" + g.element_string(x) + " + " + h.to_string() + " meets " +
                                 cover.members[beta].to_string() + " in " + std::to_string(meet.size()));
        }
      }
      if (total != coset.size()) {
        r.coset_meets_at_most_one = false;
        r.violations.push_back("coset g=" + g.element_string(x) + " + " + h.to_string() +
                               " is not covered by the other members");
      }
    }
    if (r.kappa < h.order()) {
      r.kappa_at_least_member_order = false;
      r.violations.push_back("kappa=" + std::to_string(r.kappa) + " < |" + h.to_string() +
                             "|=" + std::to_string(h.order()));
    }
  }
  if (r.kappa * r.lambda < r.order) {
    r.kappa_lambda_at_least_order = false;
    r.violations.push_back("kappa*lambda=" + std::to_string(r.kappa * r.lambda) + " < |G|=" +
                           std::to_string(r.order));
  }
  return r;
}

/// Every factor list (m1 <= m2 <= ...) with mi >= 2 and product <= bound.
/// Different lists can name isomorphic groups (Z6 and Z2xZ3).
inline std::vector<std::vector<std::uint32_t>> factor_lists_up_to(std::uint64_t bound) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto&& self, std::uint32_t min_factor, std::uint64_t product) -> void {
    for (std::uint32_t m = min_factor; product * m <= bound; ++m) {
      cur.push_back(m);
      out.push_back(cur);
      self(self, m, product * m);
      cur.pop_back();
    }
  };
  rec(rec, 2, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace semipart

#endif
