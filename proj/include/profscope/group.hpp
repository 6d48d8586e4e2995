#pragma once

// Finite groups stored as explicit Cayley tables.
//
// Elements are indices 0..order-1 and element 0 is always the identity.
// A FiniteGroup is an immutable value; copies share the table.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "profscope/error.hpp"

namespace profscope {

using Element = std::uint32_t;

/// Hard ceiling on group orders handled anywhere in the library.
inline constexpr std::size_t kMaxGroupOrder = 4096;

/// Orders up to this bound get an exhaustive associativity check.
inline constexpr std::size_t kExhaustiveAssociativityBound = 256;

/// Number of sampled triples for the associativity check above the bound.
inline constexpr std::size_t kAssociativitySamples = 100000;

/// Default seed for every sampled check.
inline constexpr std::uint64_t kDefaultSeed = 0x70726f66u;

/// Fixed-size set of element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.set(static_cast<Element>(i));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool test(Element x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void set(Element x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void reset(Element x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  ElementSet operator&(const ElementSet& o) const {
    ElementSet r(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }

  ElementSet operator|(const ElementSet& o) const {
    ElementSet r(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(static_cast<Element>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Element> members() const {
    std::vector<Element> out;
    out.reserve(count());
    for_each([&](Element x) { out.push_back(x); });
    return out;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

  bool operator==(const ElementSet&) const = default;

  /// Lexicographic order of the sorted member lists.
  std::strong_ordering compare_members(const ElementSet& o) const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      const std::uint64_t diff = words_[w] ^ o.words_[w];
      if (!diff) continue;
      const std::uint64_t low = diff & (~diff + 1);
      const bool mine = (words_[w] & low) != 0;
      // The side holding the smallest differing element is smaller, unless
      // the other side has nothing left at all (then it is a proper prefix).
      const std::uint64_t above = ~((low << 1) - 1);
      bool other_has_more = (mine ? o.words_[w] : words_[w]) & above;
      for (std::size_t v = w + 1; !other_has_more && v < words_.size(); ++v)
        other_has_more = (mine ? o.words_[v] : words_[v]) != 0;
      if (mine) return other_has_more ? std::strong_ordering::less : std::strong_ordering::greater;
      return other_has_more ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

/// Options for validating a user-supplied Cayley table.
struct ValidationOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = kAssociativitySamples;
};

/// A finite group given by its Cayley table (row-major, table[a*n+b] = a·b).
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup() : FiniteGroup(trusted({0}, "1")) {}

  /// Builds and fully validates a group from a row-major table.
  static FiniteGroup from_table(std::vector<Element> table, std::string label,
                                const ValidationOptions& opts = {}) {
    const std::size_t n = isqrt(table.size());
    if (n == 0 || n * n != table.size())
      throw InvalidArgument("Cayley table must be a non-empty square array");
    if (n > kMaxGroupOrder) throw BudgetExceeded("group order", n, kMaxGroupOrder);
    FiniteGroup g = trusted(std::move(table), std::move(label));
    if (auto err = g.validation_error(opts); !err.empty()) throw InvalidArgument(err);
    return g;
  }

  /// Builds a group from a table known to satisfy the axioms (constructors only).
  static FiniteGroup trusted(std::vector<Element> table, std::string label) {
    auto impl = std::make_shared<Impl>();
    impl->order = isqrt(table.size());
    impl->table = std::move(table);
    impl->label = std::move(label);
    const std::size_t n = impl->order;
    impl->inverse.assign(n, 0);
    bool abelian = true;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const Element ab = impl->table[a * n + b];
        if (ab == 0) impl->inverse[a] = static_cast<Element>(b);
        if (b > a && ab != impl->table[b * n + a]) abelian = false;
      }
    }
    impl->abelian = abelian;
    return FiniteGroup(std::shared_ptr<const Impl>(std::move(impl)));
  }

  std::size_t order() const noexcept { return impl_->order; }
  const std::string& label() const noexcept { return impl_->label; }
  bool is_abelian() const noexcept { return impl_->abelian; }
  bool is_trivial() const noexcept { return impl_->order == 1; }

  Element mul(Element a, Element b) const noexcept { return impl_->table[a * impl_->order + b]; }
  Element inv(Element a) const noexcept { return impl_->inverse[a]; }
  Element conj(Element x, Element g) const noexcept { return mul(mul(inv(g), x), g); }
  Element commutator(Element a, Element b) const noexcept {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  Element power(Element a, std::size_t k) const noexcept {
    Element r = 0;
    for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  std::span<const Element> table() const noexcept { return impl_->table; }
  std::span<const Element> row(Element a) const noexcept {
    return std::span<const Element>(impl_->table).subspan(a * impl_->order, impl_->order);
  }

  std::size_t element_order(Element a) const noexcept {
    std::size_t k = 1;
    for (Element x = a; x != 0; x = mul(x, a)) ++k;
    return k;
  }

  /// Same table (labels are ignored).
  bool same_as(const FiniteGroup& o) const noexcept {
    return impl_ == o.impl_ || impl_->table == o.impl_->table;
  }

  FiniteGroup relabeled(std::string label) const {
    auto impl = std::make_shared<Impl>(*impl_);
    impl->label = std::move(label);
    return FiniteGroup(std::shared_ptr<const Impl>(std::move(impl)));
  }

  /// Empty string when the table is a group with identity 0, otherwise the first violation.
  std::string validation_error(const ValidationOptions& opts = {}) const {
    const std::size_t n = order();
    for (Element x : impl_->table)
      if (x >= n) return "table entry out of range";
    for (std::size_t x = 0; x < n; ++x) {
      if (mul(0, static_cast<Element>(x)) != x || mul(static_cast<Element>(x), 0) != x)
        return "element 0 is not the identity (fails at " + std::to_string(x) + ")";
    }
    std::vector<char> seen(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t b = 0; b < n; ++b) {
        auto& s = seen[mul(static_cast<Element>(a), static_cast<Element>(b))];
        if (s) return "row " + std::to_string(a) + " is not a permutation";
        s = 1;
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t b = 0; b < n; ++b) {
        auto& s = seen[mul(static_cast<Element>(b), static_cast<Element>(a))];
        if (s) return "column " + std::to_string(a) + " is not a permutation";
        s = 1;
      }
    }
    auto check = [&](Element a, Element b, Element c) {
      return mul(mul(a, b), c) == mul(a, mul(b, c));
    };
    auto fail = [](Element a, Element b, Element c) {
      return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
             std::to_string(c) + ")";
    };
    if (n <= kExhaustiveAssociativityBound) {
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          for (Element c = 0; c < n; ++c)
            if (!check(a, b, c)) return fail(a, b, c);
    } else {
      std::mt19937_64 rng(opts.seed);
      std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
      for (std::size_t i = 0; i < opts.samples; ++i) {
        const Element a = pick(rng), b = pick(rng), c = pick(rng);
        if (!check(a, b, c)) return fail(a, b, c);
      }
    }
    return {};
  }

 private:
  struct Impl {
    std::size_t order = 1;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::string label;
    bool abelian = true;
  };

  explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  static std::size_t isqrt(std::size_t v) {
    std::size_t r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
  }

  std::shared_ptr<const Impl> impl_;
};

// ---- small arithmetic helpers shared by the rest of the library ----

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime factorization as ascending (prime, exponent) pairs.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

}  // namespace profscope
