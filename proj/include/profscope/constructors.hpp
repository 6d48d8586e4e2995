#pragma once

// Group constructors. Indexing conventions (fixed so exports are reproducible):
//   make_cyclic(n):        element i is the residue i mod n.
//   direct_product(g, h):  (a, b) ↦ a·|h| + b.
//   semidirect(n, h, φ):   (x, y) ↦ x·|h| + y, with (x1,y1)(x2,y2) = (x1·φ(y1)(x2), y1y2).

#include <string>
#include <utility>
#include <vector>

#include "profscope/group.hpp"
#include "profscope/homomorphism.hpp"
#include "profscope/subgroup.hpp"

namespace profscope {

inline FiniteGroup make_cyclic(std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclic group order must be positive");
  if (n > kMaxGroupOrder) throw BudgetExceeded("cyclic group order", n, kMaxGroupOrder);
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  return FiniteGroup::trusted(std::move(t), "C" + std::to_string(n));
}

inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                                  std::size_t max_order = kMaxGroupOrder) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  if (n > max_order) throw BudgetExceeded("direct product order", n, max_order);
  std::vector<Element> t(n * n);
  for (std::size_t a1 = 0; a1 < ng; ++a1)
    for (std::size_t b1 = 0; b1 < nh; ++b1)
      for (std::size_t a2 = 0; a2 < ng; ++a2)
        for (std::size_t b2 = 0; b2 < nh; ++b2)
          t[(a1 * nh + b1) * n + a2 * nh + b2] = static_cast<Element>(
              g.mul(static_cast<Element>(a1), static_cast<Element>(a2)) * nh +
              h.mul(static_cast<Element>(b1), static_cast<Element>(b2)));
  return FiniteGroup::trusted(std::move(t), g.label() + "x" + h.label());
}

/// An action of h on n: action[y] is the image table of the automorphism attached to y.
using Action = std::vector<std::vector<Element>>;

inline Action trivial_action(const FiniteGroup& n, const FiniteGroup& h) {
  std::vector<Element> id(n.order());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<Element>(i);
  return Action(h.order(), id);
}

/// Empty when `action` is a homomorphism h → Aut(n), otherwise the first violation.
inline std::string action_error(const FiniteGroup& n, const FiniteGroup& h, const Action& action) {
  if (action.size() != h.order()) return "action must list one automorphism per element of h";
  for (std::size_t y = 0; y < action.size(); ++y) {
    const auto& phi = action[y];
    if (phi.size() != n.order()) return "automorphism " + std::to_string(y) + " has wrong length";
    ElementSet seen(n.order());
    for (Element v : phi) {
      if (v >= n.order() || seen.test(v)) return "automorphism " + std::to_string(y) + " is not bijective";
      seen.set(v);
    }
    for (Element a = 0; a < n.order(); ++a)
      for (Element b = 0; b < n.order(); ++b)
        if (phi[n.mul(a, b)] != n.mul(phi[a], phi[b]))
          return "automorphism " + std::to_string(y) + " is not an endomorphism";
  }
  for (Element y1 = 0; y1 < h.order(); ++y1)
    for (Element y2 = 0; y2 < h.order(); ++y2) {
      const auto& lhs = action[h.mul(y1, y2)];
      for (Element x = 0; x < n.order(); ++x)
        if (lhs[x] != action[y1][action[y2][x]])
          return "action is not a homomorphism at (" + std::to_string(y1) + "," + std::to_string(y2) + ")";
    }
  return {};
}

inline FiniteGroup semidirect(const FiniteGroup& n, const FiniteGroup& h, const Action& action,
                              std::size_t max_order = kMaxGroupOrder) {
  if (auto err = action_error(n, h, action); !err.empty()) throw InvalidArgument("semidirect: " + err);
  const std::size_t nn = n.order(), nh = h.order(), order = nn * nh;
  if (order > max_order) throw BudgetExceeded("semidirect product order", order, max_order);
  std::vector<Element> t(order * order);
  for (std::size_t x1 = 0; x1 < nn; ++x1)
    for (std::size_t y1 = 0; y1 < nh; ++y1)
      for (std::size_t x2 = 0; x2 < nn; ++x2)
        for (std::size_t y2 = 0; y2 < nh; ++y2) {
          const Element x = n.mul(static_cast<Element>(x1), action[y1][x2]);
          const Element y = h.mul(static_cast<Element>(y1), static_cast<Element>(y2));
          t[(x1 * nh + y1) * order + x2 * nh + y2] = static_cast<Element>(x * nh + y);
        }
  return FiniteGroup::trusted(std::move(t), n.label() + ":" + h.label());
}

/// The action of C2 on an abelian group by inversion.
inline Action inversion_action(const FiniteGroup& n) {
  if (!n.is_abelian()) throw InvalidArgument("inversion is an automorphism only for abelian groups");
  std::vector<Element> id(n.order()), inv(n.order());
  for (Element x = 0; x < n.order(); ++x) {
    id[x] = x;
    inv[x] = n.inv(x);
  }
  return Action{id, inv};
}

/// Dihedral group of order 2m as C_m ⋊ C2 (inversion).
inline FiniteGroup make_dihedral(std::size_t m) {
  const FiniteGroup cm = make_cyclic(m);
  return semidirect(cm, make_cyclic(2), inversion_action(cm)).relabeled("D" + std::to_string(2 * m));
}

/// Cyclic group of order m acted on by C_k through x ↦ x^r (requires r^k ≡ 1 mod m, gcd(r,m)=1).
inline FiniteGroup make_metacyclic(std::size_t m, std::size_t k, std::size_t r) {
  const FiniteGroup cm = make_cyclic(m);
  const FiniteGroup ck = make_cyclic(k);
  Action act(k, std::vector<Element>(m));
  for (std::size_t y = 0; y < k; ++y) {
    std::size_t ry = 1;
    for (std::size_t i = 0; i < y; ++i) ry = ry * r % m;
    for (std::size_t x = 0; x < m; ++x) act[y][x] = static_cast<Element>(x * ry % m);
  }
  return semidirect(cm, ck, act).relabeled("C" + std::to_string(m) + ":C" + std::to_string(k));
}

/// Elementary abelian or general n-fold power g^n (n = 0 gives the trivial group).
inline FiniteGroup direct_power(const FiniteGroup& g, std::size_t n, std::size_t max_order = kMaxGroupOrder) {
  FiniteGroup r;
  for (std::size_t i = 0; i < n; ++i) r = direct_product(r, g, max_order);
  if (n > 0) r = r.relabeled(g.label() + "^" + std::to_string(n));
  return r;
}

/// A subgroup as a group in its own right, members numbered in increasing order,
/// together with the inclusion map.
struct SubgroupAsGroup {
  FiniteGroup group;
  Homomorphism inclusion;
};

inline SubgroupAsGroup as_group(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  const auto members = h.elements();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<Element>(i);
  const std::size_t m = members.size();
  std::vector<Element> t(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t[a * m + b] = local[g.mul(members[a], members[b])];
  FiniteGroup sub = FiniteGroup::trusted(std::move(t), g.label() + "[" + std::to_string(m) + "]");
  return {sub, Homomorphism::trusted(sub, g, members)};
}

}  // namespace profscope
