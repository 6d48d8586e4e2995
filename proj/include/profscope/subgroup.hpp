#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "profscope/group.hpp"

namespace profscope {

/// A subgroup of a FiniteGroup, stored as a membership bit vector.
class Subgroup {
 public:
  Subgroup() = default;

  /// Wraps a member set without checking closure; use closure() for untrusted input.
  Subgroup(FiniteGroup parent, ElementSet members)
      : parent_(std::move(parent)), members_(std::move(members)), order_(members_.count()) {}

  static Subgroup trivial(const FiniteGroup& g) {
    ElementSet s(g.order());
    s.set(0);
    return Subgroup(g, std::move(s));
  }

  static Subgroup whole(const FiniteGroup& g) { return Subgroup(g, ElementSet::full(g.order())); }

  const FiniteGroup& parent() const noexcept { return parent_; }
  const ElementSet& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t index() const noexcept { return parent_.order() / order_; }
  bool contains(Element x) const noexcept { return members_.test(x); }
  bool is_trivial() const noexcept { return order_ == 1; }
  bool is_whole() const noexcept { return order_ == parent_.order(); }
  bool subset_of(const Subgroup& o) const noexcept { return members_.subset_of(o.members_); }
  std::vector<Element> elements() const { return members_.members(); }

  /// Equality of member sets; both must live in the same group.
  bool operator==(const Subgroup& o) const noexcept { return members_ == o.members_; }

  /// Canonical order: by order, then lexicographically by sorted members.
  std::strong_ordering operator<=>(const Subgroup& o) const noexcept {
    if (auto c = order_ <=> o.order_; c != 0) return c;
    return members_.compare_members(o.members_);
  }

  /// Checks closure under the product and inverses, identity membership, and Lagrange.
  bool is_valid() const {
    if (!members_.test(0) || parent_.order() % order_ != 0) return false;
    bool ok = true;
    members_.for_each([&](Element a) {
      if (!ok) return;
      if (!members_.test(parent_.inv(a))) ok = false;
      members_.for_each([&](Element b) {
        if (ok && !members_.test(parent_.mul(a, b))) ok = false;
      });
    });
    return ok;
  }

 private:
  FiniteGroup parent_;
  ElementSet members_;
  std::size_t order_ = 1;
};

/// Smallest subgroup of g containing gens, by breadth-first saturation.
inline Subgroup closure(const FiniteGroup& g, std::span<const Element> gens) {
  ElementSet members(g.order());
  members.set(0);
  std::vector<Element> gen_list;
  for (Element x : gens) {
    if (x >= g.order()) throw InvalidArgument("generator index out of range");
    if (x != 0) gen_list.push_back(x);
  }
  std::vector<Element> frontier{0};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element a : frontier) {
      for (Element s : gen_list) {
        const Element b = g.mul(a, s);
        if (!members.test(b)) {
          members.set(b);
          next.push_back(b);
        }
      }
    }
    frontier = std::move(next);
  }
  return Subgroup(g, std::move(members));
}

inline Subgroup closure(const FiniteGroup& g, std::initializer_list<Element> gens) {
  return closure(g, std::span<const Element>(gens.begin(), gens.size()));
}

/// A generating set of h, picked greedily in element order.
inline std::vector<Element> generators(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  std::vector<Element> gens;
  ElementSet reached(g.order());
  reached.set(0);
  std::size_t reached_count = 1;
  h.members().for_each([&](Element x) {
    if (reached_count == h.order() || reached.test(x)) return;
    gens.push_back(x);
    Subgroup c = closure(g, gens);
    reached = c.members();
    reached_count = c.order();
  });
  return gens;
}

/// Closure of an existing subgroup together with extra generators.
inline Subgroup extend(const Subgroup& h, std::span<const Element> extra) {
  std::vector<Element> gens;
  for (Element x : extra)
    if (!h.contains(x)) gens.push_back(x);
  if (gens.empty()) return h;
  auto base = generators(h);
  gens.insert(gens.begin(), base.begin(), base.end());
  return closure(h.parent(), gens);
}

inline void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (!a.parent().same_as(b.parent())) throw GroupMismatch("subgroups belong to different groups");
}

inline Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  return Subgroup(a.parent(), a.members() & b.members());
}

/// The subgroup generated by a and b.
inline Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  if (b.subset_of(a)) return a;
  if (a.subset_of(b)) return b;
  return extend(a, generators(b));
}

/// Empty when h is normal; otherwise a pair (h-element x, group element g) with g⁻¹xg ∉ h.
inline std::optional<std::pair<Element, Element>> normality_witness(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  if (g.is_abelian()) return std::nullopt;
  const auto members = h.elements();
  for (Element t = 0; t < g.order(); ++t)
    for (Element x : members)
      if (!h.contains(g.conj(x, t))) return std::make_pair(x, t);
  return std::nullopt;
}

inline bool is_normal(const Subgroup& h) { return !normality_witness(h).has_value(); }

/// Normal closure of a set of elements.
inline Subgroup normal_closure(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<Element> conjugates;
  ElementSet seen(g.order());
  for (Element x : gens) {
    for (Element t = 0; t < g.order(); ++t) {
      const Element c = g.conj(x, t);
      if (!seen.test(c)) {
        seen.set(c);
        conjugates.push_back(c);
      }
    }
  }
  return closure(g, conjugates);
}

/// The cyclic subgroup ⟨x⟩.
inline Subgroup cyclic_subgroup(const FiniteGroup& g, Element x) {
  ElementSet s(g.order());
  Element y = 0;
  do {
    s.set(y);
    y = g.mul(y, x);
  } while (y != 0);
  return Subgroup(g, std::move(s));
}

}  // namespace profscope
