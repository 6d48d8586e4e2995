#pragma once

// Finite-group property checks shared by lattice_test and the acceptance suite.

#include <set>
#include <string>
#include <vector>

#include "profscope/lattice.hpp"

namespace checks {

using namespace profscope;

/// K ≤ Φ(G) ⇔ (H ≤ G and HK = G ⇒ H = G), for every normal K. Returns "" or a failure note.
inline std::string frattini_supplement_biconditional(const FiniteGroup& g) {
  const auto lat = all_subgroups(g);
  const auto phi = frattini(lat);
  for (std::size_t k = 0; k < lat.size(); ++k) {
    if (!lat.normal_mask[k]) continue;
    const auto& kk = lat.subgroups[k];
    bool only_whole_supplements = true;
    for (const auto& h : lat.subgroups) {
      if (h.is_whole()) continue;
      if (join(h, kk).is_whole()) {
        only_whole_supplements = false;
        break;
      }
    }
    if (kk.subset_of(phi) != only_whole_supplements)
      return g.label() + ": normal subgroup #" + std::to_string(k) + " breaks the biconditional";
  }
  return {};
}

inline std::set<std::uint64_t> primes_of(std::size_t n) {
  std::set<std::uint64_t> s;
  for (auto p : prime_divisors(n)) s.insert(p);
  return s;
}

struct ComplementInstance {
  FiniteGroup group;
  Subgroup central;
  std::size_t complement_count;
  std::size_t hom_count;
};

/// Every (G, N) with N a non-trivial proper central subgroup that has a complement.
inline std::vector<ComplementInstance> central_split_instances(const std::vector<FiniteGroup>& groups) {
  std::vector<ComplementInstance> out;
  for (const auto& g : groups) {
    if (g.order() > 64) continue;
    const auto lat = all_subgroups(g);
    const auto z = center(g);
    for (const auto& n : lat.subgroups) {
      if (n.is_trivial() || n.is_whole() || !n.subset_of(z)) continue;
      const auto comps = complements(lat, n);
      if (comps.empty()) continue;
      const auto k = as_group(comps.front()).group;
      const auto ngrp = as_group(n).group;
      out.push_back({g, n, comps.size(), hom_count(k, ngrp)});
    }
  }
  return out;
}

}  // namespace checks
