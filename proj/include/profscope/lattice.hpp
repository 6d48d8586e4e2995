#pragma once

// Subgroup lattices of finite groups and the subgroups defined from them:
// maximal subgroups, the Frattini subgroup Φ, the intersection Ψ of maximal
// normal subgroups, center, derived subgroup, Hom-counting and complements.

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "profscope/constructors.hpp"
#include "profscope/group.hpp"
#include "profscope/homomorphism.hpp"
#include "profscope/subgroup.hpp"

namespace profscope {

/// Default bound on the order of a group whose full lattice may be enumerated.
inline constexpr std::size_t kLatticeBudget = 512;

/// Default bound for normal-subgroup-only enumeration.
inline constexpr std::size_t kNormalLatticeBudget = kMaxGroupOrder;

struct LatticeReport {
  FiniteGroup group;
  /// Canonically sorted: by order, then lexicographically by member list.
  std::vector<Subgroup> subgroups;
  /// Hasse diagram: (lower index, upper index) for each covering pair.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<bool> normal_mask;

  std::size_t size() const noexcept { return subgroups.size(); }

  /// Position of h in the canonical list; size() if absent.
  std::size_t index_of(const Subgroup& h) const {
    auto it = std::lower_bound(subgroups.begin(), subgroups.end(), h);
    if (it == subgroups.end() || !(*it == h)) return subgroups.size();
    return static_cast<std::size_t>(it - subgroups.begin());
  }

  std::vector<Subgroup> normal_subgroups() const {
    std::vector<Subgroup> out;
    for (std::size_t i = 0; i < subgroups.size(); ++i)
      if (normal_mask[i]) out.push_back(subgroups[i]);
    return out;
  }
};

namespace detail {

struct SubgroupWithGens {
  Subgroup subgroup;
  std::vector<Element> gens;
};

/// Covering relation of inclusion on a canonically sorted list.
inline std::vector<std::pair<std::size_t, std::size_t>> hasse_covers(const std::vector<Subgroup>& subs) {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    std::vector<std::size_t> mine;
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      if (subs[j].order() == subs[i].order() || subs[j].order() % subs[i].order() != 0) continue;
      if (!subs[i].subset_of(subs[j])) continue;
      bool minimal = true;
      for (std::size_t m : mine)
        if (subs[m].subset_of(subs[j])) {
          minimal = false;
          break;
        }
      if (minimal) mine.push_back(j);
    }
    for (std::size_t j : mine) covers.emplace_back(i, j);
  }
  return covers;
}

/// Joins seeds pairwise until closed; `seeds` must already be subgroups with generators.
inline std::vector<Subgroup> saturate_joins(const FiniteGroup& g, std::vector<SubgroupWithGens> seeds) {
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  std::vector<SubgroupWithGens> found;
  auto add = [&](SubgroupWithGens s) {
    if (seen.emplace(s.subgroup.members(), found.size()).second) found.push_back(std::move(s));
  };
  add({Subgroup::trivial(g), {}});
  for (auto& s : seeds) add(s);
  const std::size_t seed_count = found.size();
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t c = 1; c < seed_count; ++c) {
      const auto& seed = found[c];
      if (seed.subgroup.subset_of(found[i].subgroup)) continue;
      std::vector<Element> gens = found[i].gens;
      for (Element x : seed.gens)
        if (!found[i].subgroup.contains(x)) gens.push_back(x);
      Subgroup k = closure(g, gens);
      if (!seen.contains(k.members())) add({std::move(k), std::move(gens)});
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.subgroup));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t gcd_size(std::size_t a, std::size_t b) { return std::gcd(a, b); }

}  // namespace detail

/// Every subgroup of g: cyclic subgroups first, then closures of joins with cyclic seeds.
inline LatticeReport all_subgroups(const FiniteGroup& g, std::size_t budget = kLatticeBudget) {
  if (g.order() > budget) throw BudgetExceeded("subgroup lattice enumeration", g.order(), budget);
  std::vector<detail::SubgroupWithGens> seeds;
  ElementSet done(g.order());
  done.set(0);
  for (Element x = 1; x < g.order(); ++x) {
    if (done.test(x)) continue;
    Subgroup c = cyclic_subgroup(g, x);
    // Every generator of ⟨x⟩ yields the same cyclic subgroup.
    const std::size_t ord = c.order();
    Element y = x;
    for (std::size_t k = 1; k < ord; ++k, y = g.mul(y, x))
      if (detail::gcd_size(k, ord) == 1) done.set(y);
    seeds.push_back({std::move(c), {x}});
  }
  LatticeReport r;
  r.group = g;
  r.subgroups = detail::saturate_joins(g, std::move(seeds));
  r.covers = detail::hasse_covers(r.subgroups);
  r.normal_mask.reserve(r.subgroups.size());
  for (const auto& s : r.subgroups) r.normal_mask.push_back(is_normal(s));
  return r;
}

/// All normal subgroups, canonically sorted, via joins of normal closures of single elements.
inline std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, std::size_t budget = kNormalLatticeBudget) {
  if (g.order() > budget) throw BudgetExceeded("normal subgroup enumeration", g.order(), budget);
  std::vector<detail::SubgroupWithGens> seeds;
  std::unordered_map<ElementSet, bool, ElementSetHash> seen_seed;
  ElementSet done(g.order());
  done.set(0);
  for (Element x = 1; x < g.order(); ++x) {
    if (done.test(x)) continue;
    for (Element t = 0; t < g.order(); ++t) done.set(g.conj(x, t));
    const Element xs[] = {x};
    Subgroup n = normal_closure(g, xs);
    if (!seen_seed.emplace(n.members(), true).second) continue;
    seeds.push_back({n, generators(n)});
  }
  return detail::saturate_joins(g, std::move(seeds));
}

inline std::vector<Subgroup> maximal_subgroups(const LatticeReport& lat) {
  std::vector<Subgroup> out;
  if (lat.size() < 2) return out;
  const std::size_t top = lat.size() - 1;
  for (auto [lo, hi] : lat.covers)
    if (hi == top) out.push_back(lat.subgroups[lo]);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g, std::size_t budget = kLatticeBudget) {
  return maximal_subgroups(all_subgroups(g, budget));
}

/// Proper normal subgroups maximal among proper normal subgroups.
inline std::vector<Subgroup> maximal_normal_subgroups(const std::vector<Subgroup>& normals) {
  std::vector<Subgroup> out;
  for (const auto& n : normals) {
    if (n.is_whole()) continue;
    bool maximal = true;
    for (const auto& m : normals)
      if (!m.is_whole() && m.order() > n.order() && n.subset_of(m)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(n);
  }
  return out;
}

inline std::vector<Subgroup> maximal_normal_subgroups(const FiniteGroup& g,
                                                      std::size_t budget = kNormalLatticeBudget) {
  return maximal_normal_subgroups(normal_subgroups(g, budget));
}

inline Subgroup intersect_all(const FiniteGroup& g, const std::vector<Subgroup>& subs) {
  if (subs.empty()) return Subgroup::whole(g);
  ElementSet acc = subs.front().members();
  for (const auto& s : subs) acc = acc & s.members();
  return Subgroup(g, std::move(acc));
}

/// Φ(G): the intersection of the maximal subgroups.
inline Subgroup frattini(const LatticeReport& lat) {
  if (lat.group.is_trivial()) return Subgroup::trivial(lat.group);
  return intersect_all(lat.group, maximal_subgroups(lat));
}

inline Subgroup frattini(const FiniteGroup& g, std::size_t budget = kLatticeBudget) {
  if (g.is_trivial()) return Subgroup::trivial(g);
  return frattini(all_subgroups(g, budget));
}

/// Ψ(G): the intersection of the maximal normal subgroups.
inline Subgroup psi(const FiniteGroup& g, std::size_t budget = kNormalLatticeBudget) {
  if (g.is_trivial()) return Subgroup::trivial(g);
  return intersect_all(g, maximal_normal_subgroups(g, budget));
}

inline Subgroup center(const FiniteGroup& g) {
  if (g.is_abelian()) return Subgroup::whole(g);
  const auto gens = generators(Subgroup::whole(g));
  ElementSet z(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element s : gens)
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    if (central) z.set(x);
  }
  return Subgroup(g, std::move(z));
}

/// G′: normal closure of commutators of a generating set.
inline Subgroup derived_subgroup(const FiniteGroup& g) {
  if (g.is_abelian()) return Subgroup::trivial(g);
  const auto gens = generators(Subgroup::whole(g));
  std::vector<Element> comms;
  for (Element a : gens)
    for (Element b : gens) {
      const Element c = g.commutator(a, b);
      if (c != 0) comms.push_back(c);
    }
  return normal_closure(g, comms);
}

/// Decided structurally: every Sylow subgroup is normal, i.e. for each prime the
/// number of p-elements equals the p-part of the order.
inline bool is_nilpotent(const FiniteGroup& g) {
  if (g.is_abelian()) return true;
  for (auto [p, e] : factorize(g.order())) {
    std::size_t p_part = 1;
    for (unsigned i = 0; i < e; ++i) p_part *= p;
    std::size_t count = 0;
    for (Element x = 0; x < g.order(); ++x) {
      std::size_t o = g.element_order(x);
      while (o % p == 0) o /= p;
      if (o == 1) ++count;
    }
    if (count != p_part) return false;
  }
  return true;
}

/// Φ(G) for nilpotent G without the lattice: G′ together with x^p for every p-element x.
inline Subgroup frattini_nilpotent(const FiniteGroup& g) {
  if (!is_nilpotent(g)) throw InvalidArgument("frattini_nilpotent needs a nilpotent group");
  std::vector<Element> gens = derived_subgroup(g).elements();
  for (auto p : prime_divisors(g.order()))
    for (Element x = 0; x < g.order(); ++x) {
      std::size_t o = g.element_order(x);
      while (o % p == 0) o /= p;
      if (o == 1) gens.push_back(g.power(x, p));
    }
  return closure(g, gens);
}

/// Φ(G), avoiding the lattice when G is nilpotent.
inline Subgroup frattini_any(const FiniteGroup& g, std::size_t budget = kLatticeBudget) {
  return is_nilpotent(g) ? frattini_nilpotent(g) : frattini(g, budget);
}

/// Size of a smallest generating set (exhaustive for small groups, greedy bound above 64).
inline std::size_t min_generator_count(const FiniteGroup& g) {
  if (g.is_trivial()) return 0;
  const auto greedy = generators(Subgroup::whole(g));
  if (g.order() > 64) return greedy.size();
  const std::size_t n = g.order();
  for (std::size_t k = 1; k < greedy.size(); ++k) {
    std::vector<Element> pick(k);
    // Enumerate k-subsets of 1..n-1 in lexicographic order.
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Element>(idx[i]);
      if (closure(g, pick).is_whole()) return k;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - 1 - (k - i)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return greedy.size();
}

/// |Hom(h, a)| for abelian a, by brute force over images of generators of h/h′.
inline std::size_t hom_count(const FiniteGroup& h, const FiniteGroup& a,
                             std::size_t budget = kMaxGroupOrder * kMaxGroupOrder) {
  if (!a.is_abelian()) throw InvalidArgument("hom_count: target group must be abelian");
  if (h.order() * a.order() > budget) throw BudgetExceeded("hom_count", h.order() * a.order(), budget);
  const auto [ab, proj] = quotient(h, derived_subgroup(h));
  // Generators of the abelianization, largest order first.
  std::vector<Element> gens;
  {
    std::vector<Element> by_order(ab.order());
    std::iota(by_order.begin(), by_order.end(), Element{0});
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](Element x, Element y) { return ab.element_order(x) > ab.element_order(y); });
    Subgroup reached = Subgroup::trivial(ab);
    for (Element x : by_order) {
      if (reached.is_whole()) break;
      if (reached.contains(x)) continue;
      gens.push_back(x);
      reached = closure(ab, gens);
    }
  }
  const std::size_t r = gens.size();
  if (r == 0) return 1;
  // Candidate images: elements whose order divides the generator's order.
  std::vector<std::vector<Element>> candidates(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t o = ab.element_order(gens[i]);
    for (Element y = 0; y < a.order(); ++y)
      if (o % a.element_order(y) == 0) candidates[i].push_back(y);
  }
  constexpr Element kUnset = ~Element{0};
  std::vector<std::size_t> choice(r, 0);
  std::vector<Element> image(ab.order());
  std::size_t count = 0;
  while (true) {
    std::fill(image.begin(), image.end(), kUnset);
    image[0] = 0;
    std::vector<Element> frontier{0};
    bool ok = true;
    while (ok && !frontier.empty()) {
      std::vector<Element> next;
      for (Element x : frontier) {
        for (std::size_t i = 0; i < r && ok; ++i) {
          const Element y = ab.mul(x, gens[i]);
          const Element v = a.mul(image[x], candidates[i][choice[i]]);
          if (image[y] == kUnset) {
            image[y] = v;
            next.push_back(y);
          } else if (image[y] != v) {
            ok = false;
          }
        }
      }
      frontier = std::move(next);
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < r && ++choice[i] == candidates[i].size()) choice[i++] = 0;
    if (i == r) break;
  }
  return count;
}

/// Subgroups K with K·N = G and K ∩ N = 1, canonically sorted.
inline std::vector<Subgroup> complements(const LatticeReport& lat, const Subgroup& n) {
  if (auto w = normality_witness(n)) throw NotNormal(w->first, w->second);
  std::vector<Subgroup> out;
  const std::size_t want = lat.group.order() / n.order();
  for (const auto& k : lat.subgroups)
    if (k.order() == want && intersection(k, n).is_trivial()) out.push_back(k);
  return out;
}

inline std::vector<Subgroup> complements(const FiniteGroup& g, const Subgroup& n,
                                         std::size_t budget = kLatticeBudget) {
  if (!n.parent().same_as(g)) throw GroupMismatch("complements: subgroup not in the group");
  if (auto w = normality_witness(n)) throw NotNormal(w->first, w->second);
  return complements(all_subgroups(g, budget), n);
}

/// Hasse diagram in DOT; node i is the i-th subgroup in canonical order.
inline std::string to_dot(const LatticeReport& lat, const std::string& name = "lattice") {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lat.size(); ++i)
    os << "  n" << i << " [label=\"o=" << lat.subgroups[i].order() << (lat.normal_mask[i] ? "N" : "")
       << "\"];\n";
  for (auto [lo, hi] : lat.covers) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace profscope
