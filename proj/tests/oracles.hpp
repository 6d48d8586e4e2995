#pragma once

// Brute-force reference computations used only by the tests. They work on raw
// Cayley tables and deliberately avoid the library's enumeration code paths.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "profscope/group.hpp"

namespace oracle {

using profscope::Element;
using profscope::FiniteGroup;

/// Is the element subset encoded by `mask` (bit i = element i) closed under the product?
inline bool closed_subset(const FiniteGroup& g, std::uint64_t mask) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a) {
    if (!((mask >> a) & 1)) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (!((mask >> b) & 1)) continue;
      if (!((mask >> g.mul(static_cast<Element>(a), static_cast<Element>(b))) & 1)) return false;
    }
  }
  return true;
}

/// All subgroups via the powerset: every subset containing the identity that is
/// closed under the product (sufficient in a finite group). Orders up to 20.
inline std::vector<std::uint64_t> powerset_subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> out;
  const std::uint64_t rest = std::uint64_t{1} << (n - 1);
  for (std::uint64_t m = 0; m < rest; ++m) {
    const std::uint64_t mask = (m << 1) | 1;
    if (closed_subset(g, mask)) out.push_back(mask);
  }
  return out;
}

inline std::size_t powerset_subgroup_count(const FiniteGroup& g) { return powerset_subgroups(g).size(); }

inline bool conj_closed(const FiniteGroup& g, std::uint64_t mask) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (!((mask >> x) & 1)) continue;
    for (std::size_t t = 0; t < g.order(); ++t) {
      const Element c = g.mul(g.mul(g.inv(static_cast<Element>(t)), static_cast<Element>(x)),
                              static_cast<Element>(t));
      if (!((mask >> c) & 1)) return false;
    }
  }
  return true;
}

/// Number of elements of each order.
inline std::map<std::size_t, std::size_t> order_histogram(const FiniteGroup& g) {
  std::map<std::size_t, std::size_t> h;
  for (Element x = 0; x < g.order(); ++x) {
    std::size_t k = 1;
    Element y = x;
    while (y != 0) {
      y = g.mul(y, x);
      ++k;
    }
    ++h[k];
  }
  return h;
}

inline std::size_t center_size(const FiniteGroup& g) {
  std::size_t c = 0;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order(); ++y)
      if (g.mul(x, y) != g.mul(y, x)) central = false;
    c += central;
  }
  return c;
}

/// Set saturation: start with all commutators, multiply pairs until nothing new appears.
inline std::set<Element> derived_by_saturation(const FiniteGroup& g) {
  std::set<Element> s{0};
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) s.insert(g.commutator(a, b));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Element> cur(s.begin(), s.end());
    for (Element a : cur)
      for (Element b : cur)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return s;
}

/// Number of cosets of a subset (assumed a subgroup) by direct partition.
inline std::size_t coset_count(const FiniteGroup& g, const std::set<Element>& h) {
  std::vector<bool> seen(g.order());
  std::size_t c = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++c;
    for (Element m : h) seen[g.mul(x, m)] = true;
  }
  return c;
}

/// |Hom(h, a)| by enumerating every map h → a and checking the law.
inline std::size_t hom_count_exhaustive(const FiniteGroup& h, const FiniteGroup& a) {
  const std::size_t n = h.order(), m = a.order();
  std::vector<Element> f(n, 0);
  std::size_t count = 0;
  // f[0] = 0 is forced; enumerate the rest.
  while (true) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      for (Element y = 0; y < n && ok; ++y)
        if (f[h.mul(x, y)] != a.mul(f[x], f[y])) ok = false;
    count += ok;
    std::size_t i = 1;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i >= n) break;
  }
  return count;
}

/// Image of a subset under an element map, as a mask.
inline std::uint64_t image_mask(std::uint64_t mask, const std::vector<Element>& f) {
  std::uint64_t out = 0;
  for (std::size_t x = 0; x < f.size(); ++x)
    if ((mask >> x) & 1) out |= std::uint64_t{1} << f[x];
  return out;
}

/// For each subgroup of `lower` (as a mask), how many subgroups of `upper` map onto it.
inline std::map<std::uint64_t, std::size_t> fiber_sizes(const FiniteGroup& upper, const FiniteGroup& lower,
                                                        const std::vector<Element>& f) {
  std::map<std::uint64_t, std::size_t> out;
  for (auto m : powerset_subgroups(lower)) out[m] = 0;
  for (auto m : powerset_subgroups(upper)) ++out[image_mask(m, f)];
  return out;
}

}  // namespace oracle
