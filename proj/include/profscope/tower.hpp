#pragma once

// Inverse sequences of finite groups with surjective bonding maps.
//
// Level 0 is always the trivial group; bonding(n) maps level n+1 onto level n.
// Levels are built on demand and memoized. Structural certificates are set by
// the built-in constructors only; custom towers carry none.

#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "profscope/constructors.hpp"
#include "profscope/group.hpp"
#include "profscope/homomorphism.hpp"
#include "profscope/lattice.hpp"

namespace profscope {

enum class Tri { Unknown, No, Yes };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "YES";
    case Tri::No: return "NO";
    default: return "UNKNOWN";
  }
}

inline Tri tri(bool b) { return b ? Tri::Yes : Tri::No; }

inline Tri tri_and(Tri a, Tri b) {
  if (a == Tri::No || b == Tri::No) return Tri::No;
  if (a == Tri::Yes && b == Tri::Yes) return Tri::Yes;
  return Tri::Unknown;
}

/// Formal product of prime powers; an absent exponent value means p^∞.
class SupernaturalOrder {
 public:
  using Exponent = std::optional<unsigned>;

  SupernaturalOrder() = default;

  static SupernaturalOrder of_finite(std::uint64_t n) {
    SupernaturalOrder s;
    for (auto [p, e] : factorize(n)) s.exponents_[p] = e;
    return s;
  }

  static SupernaturalOrder infinite_at(std::initializer_list<std::uint64_t> primes) {
    SupernaturalOrder s;
    for (auto p : primes) s.exponents_[p] = std::nullopt;
    return s;
  }

  void set(std::uint64_t p, Exponent e) { exponents_[p] = e; }

  const std::map<std::uint64_t, Exponent>& exponents() const noexcept { return exponents_; }

  /// Pointwise maximum, ∞ absorbing.
  SupernaturalOrder merged(const SupernaturalOrder& o) const {
    SupernaturalOrder r = *this;
    for (auto [p, e] : o.exponents_) {
      auto it = r.exponents_.find(p);
      if (it == r.exponents_.end()) {
        r.exponents_[p] = e;
      } else if (!it->second || !e) {
        it->second = std::nullopt;
      } else {
        it->second = std::max(*it->second, *e);
      }
    }
    return r;
  }

  std::vector<std::uint64_t> infinite_primes() const {
    std::vector<std::uint64_t> out;
    for (auto [p, e] : exponents_)
      if (!e) out.push_back(p);
    return out;
  }

  bool is_finite() const { return infinite_primes().empty(); }

  std::string to_string() const {
    if (exponents_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto [p, e] : exponents_) {
      if (!first) os << "*";
      first = false;
      os << p << "^";
      if (e) os << *e; else os << "inf";
    }
    return os.str();
  }

  bool operator==(const SupernaturalOrder&) const = default;

 private:
  std::map<std::uint64_t, Exponent> exponents_;
};

/// Declared structural facts about the limit group.
struct Certificates {
  Tri abelian = Tri::Unknown;
  Tri fiber_stable = Tri::Unknown;
  Tri finitely_generated = Tri::Unknown;
  Tri virtually_pronilpotent = Tri::Unknown;
  Tri pronilpotent = Tri::Unknown;
  /// ker(G → G_d) is central for all large d.
  Tri eventually_central_kernels = Tri::Unknown;
  std::optional<std::uint64_t> pro_p;
  std::optional<SupernaturalOrder> supernatural;
  /// Upper bound on the number of topological generators.
  std::optional<unsigned> generator_bound;
  /// Z_p-rank of an open central subgroup, per prime (empty map: finite group).
  std::optional<std::map<std::uint64_t, unsigned>> central_rank;

  bool all_unknown() const {
    return abelian == Tri::Unknown && fiber_stable == Tri::Unknown && finitely_generated == Tri::Unknown &&
           virtually_pronilpotent == Tri::Unknown && pronilpotent == Tri::Unknown &&
           eventually_central_kernels == Tri::Unknown && !pro_p && !supernatural && !generator_bound &&
           !central_rank;
  }
};

namespace detail {

inline std::size_t sat_mul(std::size_t a, std::size_t b) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

inline std::size_t sat_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

}  // namespace detail

class Tower {
 public:
  enum class Kind { Padic, Product, FiniteTimes, Torsion, Constant, Custom };

  Kind kind() const noexcept { return impl_->kind; }
  const Certificates& certificates() const noexcept { return impl_->certs; }
  const std::string& description() const noexcept { return impl_->description; }
  /// Deepest available level for finite-depth (custom) towers.
  std::optional<std::size_t> max_depth() const noexcept { return impl_->max_depth; }
  /// Direct factors for product towers, {} otherwise.
  const std::vector<Tower>& factors() const noexcept { return impl_->children; }
  /// The finite factor of a finite_times tower.
  const std::optional<FiniteGroup>& finite_factor() const noexcept { return impl_->finite; }

  /// Order of level n without building it (saturates on overflow).
  std::size_t level_order(std::size_t n) const {
    check_depth(n);
    return impl_->order_at(n);
  }

  FiniteGroup level(std::size_t n, std::size_t budget = kMaxGroupOrder) const {
    check_depth(n);
    const std::size_t ord = impl_->order_at(n);
    if (ord > budget) throw BudgetExceeded("tower level " + std::to_string(n) + " order", ord, budget);
    std::lock_guard lock(impl_->mutex);
    return impl_->level_locked(n);
  }

  /// The bonding map level(n+1) → level(n).
  Homomorphism bonding(std::size_t n, std::size_t budget = kMaxGroupOrder) const {
    level(n + 1, budget);
    std::lock_guard lock(impl_->mutex);
    return impl_->bonding_locked(n);
  }

  /// Composite of bondings level(from) → level(to), from ≥ to.
  Homomorphism projection(std::size_t from, std::size_t to, std::size_t budget = kMaxGroupOrder) const {
    if (to > from) throw InvalidArgument("projection must go down the tower");
    Homomorphism f = Homomorphism::identity(level(from, budget));
    for (std::size_t k = from; k > to; --k) f = hom_compose(bonding(k - 1, budget), f);
    return f;
  }

  // ---- constructors ----

  static Tower padic(std::uint64_t p) {
    if (!is_prime(p)) throw InvalidArgument("p must be prime (got " + std::to_string(p) + ")");
    auto impl = std::make_shared<Impl>(Kind::Padic, "padic(" + std::to_string(p) + ")");
    impl->order_at = [p](std::size_t n) { return detail::sat_pow(p, n); };
    impl->make_level = [p](const Impl&, std::size_t n) {
      return make_cyclic(detail::sat_pow(p, n)).relabeled("Z/" + std::to_string(p) + "^" + std::to_string(n));
    };
    impl->make_bonding = [](const FiniteGroup& upper, const FiniteGroup& lower, std::size_t) {
      std::vector<Element> m(upper.order());
      for (std::size_t x = 0; x < m.size(); ++x) m[x] = static_cast<Element>(x % lower.order());
      return m;
    };
    auto& c = impl->certs;
    c.abelian = c.fiber_stable = c.finitely_generated = Tri::Yes;
    c.virtually_pronilpotent = c.pronilpotent = c.eventually_central_kernels = Tri::Yes;
    c.pro_p = p;
    c.supernatural = SupernaturalOrder::infinite_at({p});
    c.generator_bound = 1;
    c.central_rank = std::map<std::uint64_t, unsigned>{{p, 1}};
    return Tower(std::move(impl));
  }

  static Tower product(const Tower& a, const Tower& b) {
    auto impl = std::make_shared<Impl>(Kind::Product, "product(" + a.description() + "," + b.description() + ")");
    impl->children = {a, b};
    impl->max_depth = min_depth(a.max_depth(), b.max_depth());
    impl->order_at = [a, b](std::size_t n) { return detail::sat_mul(a.impl_->order_at(n), b.impl_->order_at(n)); };
    impl->make_level = [a, b](const Impl&, std::size_t n) {
      return direct_product(a.level(n, std::numeric_limits<std::size_t>::max()),
                            b.level(n, std::numeric_limits<std::size_t>::max()));
    };
    impl->make_bonding = [a, b](const FiniteGroup&, const FiniteGroup&, std::size_t n) {
      const auto fa = a.bonding(n, std::numeric_limits<std::size_t>::max());
      const auto fb = b.bonding(n, std::numeric_limits<std::size_t>::max());
      const std::size_t nb_up = fb.source().order(), nb_low = fb.target().order();
      std::vector<Element> m(fa.source().order() * nb_up);
      for (std::size_t x = 0; x < fa.source().order(); ++x)
        for (std::size_t y = 0; y < nb_up; ++y)
          m[x * nb_up + y] = static_cast<Element>(fa(static_cast<Element>(x)) * nb_low + fb(static_cast<Element>(y)));
      return m;
    };
    const auto& ca = a.certificates();
    const auto& cb = b.certificates();
    auto& c = impl->certs;
    c.abelian = tri_and(ca.abelian, cb.abelian);
    c.fiber_stable = tri_and(ca.fiber_stable, cb.fiber_stable);
    c.finitely_generated = tri_and(ca.finitely_generated, cb.finitely_generated);
    c.virtually_pronilpotent = tri_and(ca.virtually_pronilpotent, cb.virtually_pronilpotent);
    c.pronilpotent = tri_and(ca.pronilpotent, cb.pronilpotent);
    c.eventually_central_kernels = tri_and(ca.eventually_central_kernels, cb.eventually_central_kernels);
    if (ca.pro_p && cb.pro_p && *ca.pro_p == *cb.pro_p) c.pro_p = ca.pro_p;
    if (ca.supernatural && cb.supernatural) c.supernatural = ca.supernatural->merged(*cb.supernatural);
    if (ca.generator_bound && cb.generator_bound) c.generator_bound = *ca.generator_bound + *cb.generator_bound;
    if (ca.central_rank && cb.central_rank) {
      auto r = *ca.central_rank;
      for (auto [p, k] : *cb.central_rank) r[p] += k;
      c.central_rank = r;
    }
    return Tower(std::move(impl));
  }

  static Tower finite_times(const FiniteGroup& f, const Tower& t) {
    auto impl = std::make_shared<Impl>(Kind::FiniteTimes, "finite_times(" + f.label() + "," + t.description() + ")");
    impl->children = {};
    impl->finite = f;
    impl->inner = std::make_shared<Tower>(t);
    impl->max_depth = t.max_depth();
    impl->order_at = [f, t](std::size_t n) { return detail::sat_mul(f.order(), t.impl_->order_at(n)); };
    impl->make_level = [f, t](const Impl&, std::size_t n) {
      return direct_product(f, t.level(n, std::numeric_limits<std::size_t>::max()));
    };
    impl->make_bonding = [f, t](const FiniteGroup&, const FiniteGroup&, std::size_t n) {
      const auto ft = t.bonding(n, std::numeric_limits<std::size_t>::max());
      const std::size_t up = ft.source().order(), low = ft.target().order();
      std::vector<Element> m(f.order() * up);
      for (std::size_t a = 0; a < f.order(); ++a)
        for (std::size_t y = 0; y < up; ++y)
          m[a * up + y] = static_cast<Element>(a * low + ft(static_cast<Element>(y)));
      return m;
    };
    const auto& ct = t.certificates();
    const bool f_nilpotent = is_nilpotent(f);
    auto& c = impl->certs;
    c.abelian = tri_and(tri(f.is_abelian()), ct.abelian);
    c.fiber_stable = ct.fiber_stable;
    c.finitely_generated = ct.finitely_generated;
    c.virtually_pronilpotent = ct.virtually_pronilpotent;
    c.pronilpotent = tri_and(tri(f_nilpotent), ct.pronilpotent);
    c.eventually_central_kernels = ct.eventually_central_kernels;
    if (ct.pro_p) {
      const auto primes = prime_divisors(f.order());
      if (primes.empty() || (primes.size() == 1 && primes.front() == *ct.pro_p)) c.pro_p = ct.pro_p;
    }
    if (ct.supernatural) c.supernatural = ct.supernatural->merged(SupernaturalOrder::of_finite(f.order()));
    if (ct.generator_bound)
      c.generator_bound = *ct.generator_bound + static_cast<unsigned>(min_generator_count(f));
    c.central_rank = ct.central_rank;
    return Tower(std::move(impl));
  }

  /// Level n is c^n; the bonding forgets the last coordinate.
  static Tower torsion(const FiniteGroup& c) {
    if (c.is_trivial()) throw InvalidArgument("torsion tower needs a non-trivial group");
    auto impl = std::make_shared<Impl>(Kind::Torsion, "torsion(" + c.label() + ")");
    impl->finite = c;
    impl->order_at = [c](std::size_t n) { return detail::sat_pow(c.order(), n); };
    impl->make_level = [c](const Impl& self, std::size_t n) {
      if (n == 0) return FiniteGroup();
      return direct_product(self.level_locked(n - 1), c, std::numeric_limits<std::size_t>::max())
          .relabeled(c.label() + "^" + std::to_string(n));
    };
    impl->make_bonding = [c](const FiniteGroup& upper, const FiniteGroup&, std::size_t) {
      std::vector<Element> m(upper.order());
      for (std::size_t x = 0; x < m.size(); ++x) m[x] = static_cast<Element>(x / c.order());
      return m;
    };
    const bool nil = is_nilpotent(c);
    auto& cert = impl->certs;
    cert.abelian = tri(c.is_abelian());
    cert.fiber_stable = Tri::No;
    cert.finitely_generated = Tri::No;
    cert.virtually_pronilpotent = tri(nil);
    cert.pronilpotent = tri(nil);
    cert.eventually_central_kernels = tri(c.is_abelian());
    const auto primes = prime_divisors(c.order());
    if (primes.size() == 1) cert.pro_p = primes.front();
    SupernaturalOrder s;
    for (auto p : primes) s.set(p, std::nullopt);
    cert.supernatural = s;
    return Tower(std::move(impl));
  }

  /// Level 0 trivial, every later level f with identity bondings (a finite group as a tower).
  static Tower constant(const FiniteGroup& f) {
    auto impl = std::make_shared<Impl>(Kind::Constant, "constant(" + f.label() + ")");
    impl->finite = f;
    impl->order_at = [f](std::size_t n) { return n == 0 ? std::size_t{1} : f.order(); };
    impl->make_level = [f](const Impl&, std::size_t n) { return n == 0 ? FiniteGroup() : f; };
    impl->make_bonding = [](const FiniteGroup& upper, const FiniteGroup& lower, std::size_t) {
      std::vector<Element> m(upper.order());
      for (std::size_t x = 0; x < m.size(); ++x) m[x] = lower.is_trivial() ? 0 : static_cast<Element>(x);
      return m;
    };
    const bool nil = is_nilpotent(f);
    auto& c = impl->certs;
    c.abelian = tri(f.is_abelian());
    c.fiber_stable = c.finitely_generated = c.virtually_pronilpotent = Tri::Yes;
    c.pronilpotent = tri(nil);
    c.eventually_central_kernels = Tri::Yes;
    const auto primes = prime_divisors(f.order());
    if (primes.size() == 1) c.pro_p = primes.front();
    c.supernatural = SupernaturalOrder::of_finite(f.order());
    c.generator_bound = static_cast<unsigned>(min_generator_count(f));
    c.central_rank = std::map<std::uint64_t, unsigned>{};
    return Tower(std::move(impl));
  }

  static Tower trivial() { return constant(FiniteGroup()); }

  /// A finite-depth tower from explicit levels; maps[i] must send levels[i+1] onto levels[i].
  /// A non-trivial first level gets the trivial group prepended as level 0.
  static Tower custom(std::vector<FiniteGroup> levels, std::vector<Homomorphism> maps) {
    if (levels.empty()) throw InvalidArgument("custom tower needs at least one level");
    if (maps.size() + 1 != levels.size())
      throw InvalidArgument("custom tower needs exactly one map per consecutive pair of levels");
    for (std::size_t i = 0; i < maps.size(); ++i) {
      const auto& f = maps[i];
      if (!f.source().same_as(levels[i + 1]) || !f.target().same_as(levels[i]))
        throw InvalidArgument("custom tower map " + std::to_string(i) + " does not connect levels " +
                              std::to_string(i + 1) + " -> " + std::to_string(i));
      if (auto err = f.validation_error(); !err.empty())
        throw InvalidArgument("custom tower map " + std::to_string(i) + ": " + err);
      if (!f.is_surjective())
        throw InvalidArgument("custom tower map " + std::to_string(i) + " is not surjective (image order " +
                              std::to_string(f.image_size()) + ")");
    }
    if (!levels.front().is_trivial()) {
      std::vector<Element> to_trivial(levels.front().order(), 0);
      maps.insert(maps.begin(), Homomorphism::trusted(levels.front(), FiniteGroup(), std::move(to_trivial)));
      levels.insert(levels.begin(), FiniteGroup());
    }
    auto impl = std::make_shared<Impl>(Kind::Custom, "custom(depth " + std::to_string(levels.size() - 1) + ")");
    impl->max_depth = levels.size() - 1;
    std::vector<std::size_t> orders;
    for (const auto& l : levels) orders.push_back(l.order());
    impl->order_at = [orders](std::size_t n) { return orders.at(n); };
    impl->make_level = [levels](const Impl&, std::size_t n) { return levels.at(n); };
    impl->make_bonding = [maps](const FiniteGroup&, const FiniteGroup&, std::size_t n) {
      auto m = maps.at(n).map();
      return std::vector<Element>(m.begin(), m.end());
    };
    return Tower(std::move(impl));
  }

  /// The tower inside a finite_times tower.
  const Tower* inner() const noexcept { return impl_->inner.get(); }

 private:
  struct Impl {
    Impl(Kind k, std::string d) : kind(k), description(std::move(d)) {}

    Kind kind;
    std::string description;
    Certificates certs;
    std::optional<std::size_t> max_depth;
    std::vector<Tower> children;
    std::optional<FiniteGroup> finite;
    std::shared_ptr<Tower> inner;
    std::function<std::size_t(std::size_t)> order_at;
    std::function<FiniteGroup(const Impl&, std::size_t)> make_level;
    std::function<std::vector<Element>(const FiniteGroup&, const FiniteGroup&, std::size_t)> make_bonding;

    mutable std::mutex mutex;
    mutable std::map<std::size_t, FiniteGroup> levels;
    mutable std::map<std::size_t, Homomorphism> bondings;

    const FiniteGroup& level_locked(std::size_t n) const {
      auto it = levels.find(n);
      if (it != levels.end()) return it->second;
      FiniteGroup g = make_level(*this, n);
      return levels.emplace(n, std::move(g)).first->second;
    }

    const Homomorphism& bonding_locked(std::size_t n) const {
      auto it = bondings.find(n);
      if (it != bondings.end()) return it->second;
      const FiniteGroup& upper = level_locked(n + 1);
      const FiniteGroup& lower = level_locked(n);
      auto f = Homomorphism::trusted(upper, lower, make_bonding(upper, lower, n));
      if (!f.is_surjective())
        throw Error(description + ": bonding " + std::to_string(n + 1) + "->" + std::to_string(n) +
                    " is not surjective");
      return bondings.emplace(n, std::move(f)).first->second;
    }
  };

  explicit Tower(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

  static std::optional<std::size_t> min_depth(std::optional<std::size_t> a, std::optional<std::size_t> b) {
    if (a && b) return std::min(*a, *b);
    return a ? a : b;
  }

  void check_depth(std::size_t n) const {
    if (impl_->max_depth && n > *impl_->max_depth)
      throw InvalidArgument(description() + " has no level " + std::to_string(n) + " (depth " +
                            std::to_string(*impl_->max_depth) + ")");
  }

  std::shared_ptr<Impl> impl_;
};

}  // namespace profscope
