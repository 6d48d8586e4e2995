#pragma once

// Verdicts for the subgroup space S and the normal subgroup space N of a tower:
// finite, countable with type w^k*n+1, Cantor set, or uncountable and not perfect.
//
// Certified verdicts use only certificates and exact finite computations; any
// step read off a finite window of levels clears the certified flag.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "profscope/ordinal.hpp"
#include "profscope/subspace.hpp"
#include "profscope/tower.hpp"

namespace profscope {

enum class SpaceKind { S, N };
enum class Verdict { Finite, Countable, Cantor, ContinuumMixed };

inline const char* to_string(SpaceKind s) { return s == SpaceKind::S ? "S" : "N"; }

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Finite: return "FINITE";
    case Verdict::Countable: return "COUNTABLE";
    case Verdict::Cantor: return "CANTOR";
    default: return "CONTINUUM_MIXED";
  }
}

struct Classification {
  SpaceKind space = SpaceKind::S;
  Verdict verdict = Verdict::ContinuumMixed;
  std::optional<unsigned> k;
  std::optional<std::uint64_t> n;
  std::optional<OrdinalSignature> signature;
  bool certified = false;
  std::vector<std::string> evidence;
};

struct Perfectness {
  Tri value = Tri::Unknown;
  bool certified = false;
  std::vector<std::string> evidence;
};

/// Levels d..d+w used for window reads; the top level is max(depth, 2), clipped to the tower.
struct WindowPlan {
  std::size_t d = 1;
  std::size_t w = 1;
  std::size_t top() const noexcept { return d + w; }
};

inline WindowPlan plan_window(const Tower& t, std::size_t depth, std::size_t window) {
  if (depth == 0) throw InvalidArgument("depth must be at least 1");
  if (window == 0) throw InvalidArgument("window must be at least 1");
  std::size_t top = std::max<std::size_t>(depth, 2);
  if (t.max_depth()) {
    top = std::min(top, *t.max_depth());
    if (top < 2) throw InvalidArgument(t.description() + " is too shallow to classify (needs depth 2)");
  }
  const std::size_t w = std::min(window, top - 1);
  return {top - w, w};
}

/// Reason the certificates cannot all hold, or "".
inline std::string certificate_conflict(const Certificates& c) {
  if (c.pro_p && c.supernatural)
    for (auto [p, e] : c.supernatural->exponents())
      if (p != *c.pro_p) return "pro-" + std::to_string(*c.pro_p) + " but " + std::to_string(p) + " divides the order";
  if (c.abelian == Tri::Yes && c.eventually_central_kernels == Tri::No) return "abelian but kernels not central";
  if (c.abelian == Tri::Yes && c.pronilpotent == Tri::No) return "abelian but not pronilpotent";
  if (c.pronilpotent == Tri::Yes && c.virtually_pronilpotent == Tri::No)
    return "pronilpotent but not virtually pronilpotent";
  if (c.generator_bound && c.finitely_generated == Tri::No) return "generator bound on a group declared not finitely generated";
  if (c.central_rank && c.supernatural) {
    std::set<std::uint64_t> ranked, infinite;
    for (auto [p, r] : *c.central_rank)
      if (r > 0) ranked.insert(p);
    for (auto p : c.supernatural->infinite_primes()) infinite.insert(p);
    if (ranked != infinite) return "central ranks do not match the primes with infinite exponent";
  }
  return {};
}

namespace detail {

inline std::string seq(const std::vector<std::size_t>& v) { return join_sizes(v); }

inline bool squarefree_above_one(std::size_t f) {
  if (f <= 1) return false;
  for (auto [p, e] : factorize(f))
    if (e > 1) return false;
  return true;
}

inline std::size_t count_pth_roots_of_unity(const FiniteGroup& g, const Subgroup& within, std::uint64_t p) {
  std::size_t n = 0;
  for (Element x : within.elements())
    if (g.power(x, p) == 0) ++n;
  return n;
}

inline Subgroup sylow(const FiniteGroup& g, std::uint64_t p) {
  std::vector<Element> pe;
  for (Element x = 0; x < g.order(); ++x) {
    std::size_t o = g.element_order(x);
    while (o % p == 0) o /= p;
    if (o == 1) pe.push_back(x);
  }
  return closure(g, pe);
}

inline FiniteGroup sylow_group(const FiniteGroup& g, std::uint64_t p) {
  return as_group(sylow(g, p)).group.relabeled(g.label() + "_" + std::to_string(p));
}

}  // namespace detail

/// Per-level invariants used to watch for a central open subgroup and a finite commutator subgroup.
struct TCountReport {
  std::size_t depth = 0;
  std::vector<std::size_t> level_order;
  std::vector<std::size_t> center_index;
  std::vector<std::size_t> center_order;
  std::vector<std::size_t> derived_order;
  std::vector<std::size_t> abelianization_order;
  std::vector<std::optional<std::size_t>> frattini_index;
  std::vector<std::optional<std::size_t>> psi_index;
  std::map<std::uint64_t, std::vector<std::size_t>> center_p_torsion;
  std::map<std::uint64_t, std::vector<std::size_t>> abelianization_p_torsion;
  WindowPlan window;
  /// Center of bounded index, bounded torsion and squarefree growth across the window.
  bool central_detector = false;
  /// Commutator subgroup of bounded order with bounded torsion and squarefree growth in the abelianization.
  bool derived_detector = false;
  std::map<std::string, std::string> summary;
};

namespace detail {

inline std::string trend(const std::vector<std::optional<std::size_t>>& v, const WindowPlan& w) {
  std::vector<std::size_t> tail;
  for (std::size_t k = w.d; k <= w.top() && k < v.size(); ++k) {
    if (!v[k]) return "unavailable";
    tail.push_back(*v[k]);
  }
  if (constant(tail)) return "stable";
  if (strictly_growing(tail)) return "growing";
  return "mixed";
}

inline std::vector<std::optional<std::size_t>> opt(const std::vector<std::size_t>& v) {
  return {v.begin(), v.end()};
}

inline bool window_detector(const std::vector<std::size_t>& bounded, const std::vector<std::size_t>& growing,
                            const std::map<std::uint64_t, std::vector<std::size_t>>& torsion, const WindowPlan& w) {
  for (std::size_t k = w.d; k < w.top(); ++k) {
    if (bounded[k + 1] != bounded[k]) return false;
    if (growing[k + 1] % growing[k] != 0 || !squarefree_above_one(growing[k + 1] / growing[k])) return false;
    for (const auto& [p, s] : torsion)
      if (s[k + 1] != s[k]) return false;
  }
  return true;
}

}  // namespace detail

inline TCountReport tcount_report(const Tower& t, std::size_t depth, std::size_t window = kDefaultWindow,
                                  std::size_t budget = kMaxGroupOrder) {
  TCountReport r;
  r.window = plan_window(t, depth, window);
  r.depth = r.window.top();
  const auto primes = prime_divisors(t.level_order(r.depth));
  for (std::size_t e = 0; e <= r.depth; ++e) {
    const FiniteGroup g = t.level(e, budget);
    const Subgroup z = center(g);
    const Subgroup dg = derived_subgroup(g);
    const FiniteGroup ab = quotient(g, dg).group;
    r.level_order.push_back(g.order());
    r.center_index.push_back(z.index());
    r.center_order.push_back(z.order());
    r.derived_order.push_back(dg.order());
    r.abelianization_order.push_back(ab.order());
    for (auto p : primes) {
      r.center_p_torsion[p].push_back(detail::count_pth_roots_of_unity(g, z, p));
      r.abelianization_p_torsion[p].push_back(detail::count_pth_roots_of_unity(ab, Subgroup::whole(ab), p));
    }
    const bool nil = is_nilpotent(g);
    if (nil || g.order() <= kLatticeBudget) {
      const auto phi = nil ? frattini_nilpotent(g) : frattini(g);
      r.frattini_index.push_back(phi.index());
      r.psi_index.push_back(nil ? phi.index() : psi(g).index());
    } else {
      r.frattini_index.push_back(std::nullopt);
      r.psi_index.push_back(std::nullopt);
    }
  }
  const auto& w = r.window;
  r.central_detector = detail::window_detector(r.center_index, r.center_order, r.center_p_torsion, w);
  r.derived_detector = detail::window_detector(r.derived_order, r.abelianization_order, r.abelianization_p_torsion, w);
  r.summary["center_index"] = detail::trend(detail::opt(r.center_index), w);
  r.summary["derived_order"] = detail::trend(detail::opt(r.derived_order), w);
  r.summary["frattini_index"] = detail::trend(r.frattini_index, w);
  r.summary["psi_index"] = detail::trend(r.psi_index, w);
  return r;
}

inline nlohmann::ordered_json tcount_to_json(const TCountReport& r) {
  const auto opt_arr = [](const std::vector<std::optional<std::size_t>>& v) {
    auto a = nlohmann::ordered_json::array();
    for (const auto& x : v) a.push_back(x ? nlohmann::ordered_json(*x) : nlohmann::ordered_json(nullptr));
    return a;
  };
  const auto torsion = [](const std::map<std::uint64_t, std::vector<std::size_t>>& m) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [p, s] : m) j[std::to_string(p)] = s;
    return j;
  };
  nlohmann::ordered_json j;
  j["depth"] = r.depth;
  j["window"] = {r.window.d, r.window.top()};
  j["level_order"] = r.level_order;
  j["center_index"] = r.center_index;
  j["center_order"] = r.center_order;
  j["derived_order"] = r.derived_order;
  j["abelianization_order"] = r.abelianization_order;
  j["frattini_index"] = opt_arr(r.frattini_index);
  j["psi_index"] = opt_arr(r.psi_index);
  j["center_p_torsion"] = torsion(r.center_p_torsion);
  j["abelianization_p_torsion"] = torsion(r.abelianization_p_torsion);
  j["central_detector"] = r.central_detector;
  j["derived_detector"] = r.derived_detector;
  nlohmann::ordered_json s = nlohmann::ordered_json::object();
  for (const auto& [key, v] : r.summary) s[key] = v;
  j["summary"] = s;
  return j;
}

namespace detail {

/// Index sequences of a subgroup-valued map over levels d..top, or nullopt past the budget.
template <class F>
std::optional<std::vector<std::size_t>> level_indices(const Tower& t, const WindowPlan& w, F&& sub) {
  std::vector<std::size_t> out;
  for (std::size_t e = w.d; e <= w.top(); ++e) {
    try {
      out.push_back(sub(t.level(e)).index());
    } catch (const BudgetExceeded&) {
      return std::nullopt;
    }
  }
  return out;
}

inline std::optional<std::vector<std::size_t>> frattini_indices(const Tower& t, const WindowPlan& w) {
  return level_indices(t, w, [](const FiniteGroup& g) { return frattini_any(g); });
}

inline std::optional<std::vector<std::size_t>> psi_indices(const Tower& t, const WindowPlan& w) {
  return level_indices(t, w, [](const FiniteGroup& g) { return is_nilpotent(g) ? frattini_nilpotent(g) : psi(g); });
}

}  // namespace detail

inline Perfectness s_perfectness(const Tower& t, std::size_t depth, std::size_t window = kDefaultWindow) {
  const auto& c = t.certificates();
  const auto w = plan_window(t, depth, window);
  Perfectness r;
  const auto phi = detail::frattini_indices(t, w);
  const std::string phi_text =
      phi ? "frattini index over levels " + std::to_string(w.d) + ".." + std::to_string(w.top()) + ": " + detail::seq(*phi)
          : "frattini index beyond budget";
  if (c.finitely_generated == Tri::Yes && c.virtually_pronilpotent == Tri::Yes && c.supernatural) {
    r.value = Tri::No;
    r.certified = true;
    r.evidence.push_back("finitely generated, virtually pronilpotent, finitely many primes (" +
                         c.supernatural->to_string() + "): some open subgroup is isolated");
  } else if (c.finitely_generated == Tri::No) {
    r.value = Tri::Yes;
    r.certified = true;
    r.evidence.push_back("not finitely generated: no isolated point");
  } else if (c.virtually_pronilpotent == Tri::No) {
    r.value = Tri::Yes;
    r.certified = true;
    r.evidence.push_back("not virtually pronilpotent: no isolated point");
  } else if (phi && detail::strictly_growing(*phi)) {
    r.value = c.fiber_stable == Tri::Yes ? Tri::Yes : Tri::Unknown;
    r.certified = c.fiber_stable == Tri::Yes;
    r.evidence.push_back(std::string("frattini index grows across the window") +
                         (r.certified ? " with fiber_stable certificate" : " without a growth certificate"));
  } else {
    r.evidence.push_back("no certificate decides perfectness");
  }
  r.evidence.push_back(phi_text);
  return r;
}

inline Perfectness n_perfectness(const Tower& t, std::size_t depth, std::size_t window = kDefaultWindow) {
  const auto s = s_perfectness(t, depth, window);
  const auto& c = t.certificates();
  Perfectness r;
  if (s.value == Tri::No) {
    r.value = Tri::No;
    r.certified = s.certified;
    r.evidence.push_back("S has an isolated point, so N is not perfect");
  } else if (c.pronilpotent == Tri::Yes) {
    r.value = s.value;
    r.certified = s.certified;
    r.evidence.push_back("pronilpotent: N is perfect exactly when S is");
  } else {
    const auto w = plan_window(t, depth, window);
    const auto ps = detail::psi_indices(t, w);
    if (ps && detail::constant(*ps)) {
      r.value = Tri::No;
      r.evidence.push_back("psi index stable across the window (heuristic)");
    } else {
      r.evidence.push_back("no certificate decides N-perfectness");
    }
    r.evidence.push_back(ps ? "psi index over levels " + std::to_string(w.d) + ".." + std::to_string(w.top()) + ": " +
                                  detail::seq(*ps)
                            : "psi index beyond budget");
  }
  return r;
}

inline Perfectness perfectness(const Tower& t, SpaceKind space, std::size_t depth,
                               std::size_t window = kDefaultWindow) {
  return space == SpaceKind::S ? s_perfectness(t, depth, window) : n_perfectness(t, depth, window);
}

/// Depth-d points whose balls branch at every window level and whose canonical
/// thread's index grows at every step by a factor divisible by each given prime.
inline std::size_t count_top_points(const LevelSpaces& s, const WindowPlan& w, const std::vector<std::uint64_t>& primes) {
  std::size_t count = 0;
  const auto& space = s.at(w.d);
  s.at(w.top());
  for (std::size_t i = 0; i < space.size(); ++i) {
    bool branching = true;
    for (std::size_t e = w.d + 1; e <= w.top() && branching; ++e) branching = s.ball_class(w.d, i, e).size() >= 2;
    if (!branching) continue;
    const auto thread = canonical_thread(s, w.d, i, w.w);
    bool grows = true;
    for (std::size_t k = 0; k + 1 < thread.size() && grows; ++k) {
      const std::size_t a = s.at(w.d + k).point(thread[k]).index();
      const std::size_t b = s.at(w.d + k + 1).point(thread[k + 1]).index();
      if (b <= a || b % a != 0) {
        grows = false;
        break;
      }
      for (auto p : primes)
        if ((b / a) % p != 0) grows = false;
    }
    if (grows) ++count;
  }
  return count;
}

/// Split a pronilpotent built-in tower into its Sylow towers, keyed by prime.
inline std::optional<std::map<std::uint64_t, Tower>> sylow_factors(const Tower& t) {
  using Kind = Tower::Kind;
  const auto& c = t.certificates();
  if (c.pronilpotent != Tri::Yes) return std::nullopt;
  switch (t.kind()) {
    case Kind::Padic: return std::map<std::uint64_t, Tower>{{*c.pro_p, t}};
    case Kind::Constant:
    case Kind::Torsion: {
      const FiniteGroup& f = *t.finite_factor();
      std::map<std::uint64_t, Tower> out;
      const auto primes = prime_divisors(f.order());
      if (primes.size() <= 1) {
        out.emplace(primes.empty() ? 1 : primes.front(), t);
        return out;
      }
      for (auto p : primes) {
        const auto fp = detail::sylow_group(f, p);
        out.emplace(p, t.kind() == Kind::Constant ? Tower::constant(fp) : Tower::torsion(fp));
      }
      return out;
    }
    case Kind::FiniteTimes: {
      auto inner = sylow_factors(*t.inner());
      if (!inner) return std::nullopt;
      const FiniteGroup& f = *t.finite_factor();
      std::map<std::uint64_t, Tower> out = *inner;
      for (auto p : prime_divisors(f.order())) {
        const auto fp = detail::sylow_group(f, p);
        auto it = out.find(p);
        if (it == out.end()) {
          out.emplace(p, Tower::constant(fp));
        } else {
          it->second = Tower::finite_times(fp, it->second);
        }
      }
      return out;
    }
    case Kind::Product: {
      auto a = sylow_factors(t.factors()[0]);
      auto b = sylow_factors(t.factors()[1]);
      if (!a || !b) return std::nullopt;
      std::map<std::uint64_t, Tower> out = *a;
      for (const auto& [p, tb] : *b) {
        auto it = out.find(p);
        if (it == out.end()) {
          out.emplace(p, tb);
        } else {
          it->second = Tower::product(it->second, tb);
        }
      }
      out.erase(1);
      if (out.empty()) out.emplace(1, t);
      return out;
    }
    default: return std::nullopt;
  }
}

namespace detail {

inline Classification finite_verdict(SpaceKind space, std::size_t count, bool certified, std::vector<std::string> ev) {
  Classification r;
  r.space = space;
  r.verdict = Verdict::Finite;
  r.k = 0;
  r.n = count;
  r.signature = OrdinalSignature(0, count);
  r.certified = certified;
  r.evidence = std::move(ev);
  return r;
}

inline Classification countable_verdict(SpaceKind space, unsigned k, std::uint64_t n, bool certified,
                                        std::vector<std::string> ev) {
  Classification r;
  r.space = space;
  r.verdict = Verdict::Countable;
  r.k = k;
  r.n = n;
  r.signature = OrdinalSignature(k, n);
  r.certified = certified;
  r.evidence = std::move(ev);
  return r;
}

/// Finite with identical levels and singleton fibers across the window.
inline bool looks_finite(const LevelSpaces& s, const WindowPlan& w) {
  for (std::size_t e = w.d; e < w.top(); ++e) {
    if (s.tower().level_order(e) != s.tower().level_order(e + 1)) return false;
    if (s.at(e).size() != s.at(e + 1).size()) return false;
    for (std::size_t i = 0; i < s.at(e).size(); ++i)
      if (s.fiber(e, i).size() != 1) return false;
  }
  return true;
}

}  // namespace detail

inline Classification classify_space(const Tower& t, SpaceKind space, std::size_t depth,
                                     std::size_t window = kDefaultWindow);

namespace detail {

/// Certified central-rank test: an open central subgroup of Z_p-rank at most one per prime.
inline bool countable_by_certificate(const Certificates& c) {
  if (c.eventually_central_kernels != Tri::Yes || !c.central_rank || !c.supernatural) return false;
  for (auto [p, r] : *c.central_rank)
    if (r > 1) return false;
  return true;
}

inline bool uncountable_by_certificate(const Certificates& c) {
  if (!c.central_rank || c.eventually_central_kernels != Tri::Yes) return false;
  for (auto [p, r] : *c.central_rank)
    if (r > 1) return true;
  return false;
}

inline Classification countable_branch(const Tower& t, SpaceKind space, std::size_t depth, std::size_t window,
                                       const WindowPlan& w) {
  const auto& c = t.certificates();
  const auto inf = c.supernatural->infinite_primes();
  const unsigned k = static_cast<unsigned>(inf.size());
  std::vector<std::string> ev{"open central subgroup with Z_p-rank <= 1 at each prime (certified)",
                              "k = " + std::to_string(k) + " primes with infinite exponent in " +
                                  c.supernatural->to_string()};
  if (auto factors = sylow_factors(t); factors && factors->size() > 1) {
    OrdinalSignature sig(0, 1);
    bool certified = true;
    for (const auto& [p, f] : *factors) {
      const auto part = classify_space(f, space, depth, window);
      if (part.verdict != Verdict::Finite && part.verdict != Verdict::Countable)
        throw Error("Sylow factor " + f.description() + " is not countable");
      sig = product(sig, *part.signature);
      certified = certified && part.certified;
      ev.push_back("factor " + f.description() + ": " + part.signature->to_string());
    }
    ev.push_back("pronilpotent: space is the product of its Sylow factor spaces");
    if (sig.h() != k) throw Error("factor heights do not add up to k");
    return countable_verdict(space, k, sig.n(), certified, std::move(ev));
  }
  LevelSpaces s(t, space == SpaceKind::N);
  const std::size_t n = count_top_points(s, w, inf);
  const bool pro_p = c.pro_p.has_value() && c.pronilpotent == Tri::Yes;
  const bool certified = pro_p && c.fiber_stable == Tri::Yes && (space == SpaceKind::S || c.abelian == Tri::Yes);
  ev.push_back("n = " + std::to_string(n) + " depth-" + std::to_string(w.d) +
               " points branching at every level to depth " + std::to_string(w.top()) +
               (certified ? " (fiber_stable pro-p count)" : " (window estimate)"));
  if (n == 0) throw Error(t.description() + ": no branching point found for a countable space");
  return countable_verdict(space, k, n, certified, std::move(ev));
}

}  // namespace detail

inline Classification classify_space(const Tower& t, SpaceKind space, std::size_t depth, std::size_t window) {
  const auto& c = t.certificates();
  if (auto conflict = certificate_conflict(c); !conflict.empty())
    throw InvalidArgument("contradictory certificates for " + t.description() + ": " + conflict);
  const auto w = plan_window(t, depth, window);
  const bool normal = space == SpaceKind::N;

  if (c.supernatural && c.supernatural->is_finite()) {
    LevelSpaces s(t, normal);
    const std::size_t count = s.at(w.top()).size();
    return detail::finite_verdict(space, count, true,
                                  {"supernatural order " + c.supernatural->to_string() + " is finite",
                                   std::to_string(count) + (normal ? " normal subgroups" : " subgroups")});
  }

  if (detail::countable_by_certificate(c)) return detail::countable_branch(t, space, depth, window, w);

  if (c.all_unknown()) {
    LevelSpaces s(t, normal);
    if (detail::looks_finite(s, w))
      return detail::finite_verdict(space, s.at(w.top()).size(), false,
                                    {"levels and lattices identical with singleton fibers across the window"});
    const auto tc = tcount_report(t, depth, window);
    if (tc.central_detector) {
      std::set<std::uint64_t> growth_primes;
      for (std::size_t e = w.d; e < w.top(); ++e)
        for (auto p : prime_divisors(tc.center_order[e + 1] / tc.center_order[e])) growth_primes.insert(p);
      const std::vector<std::uint64_t> primes(growth_primes.begin(), growth_primes.end());
      const std::size_t n = count_top_points(s, w, primes);
      if (n > 0)
        return detail::countable_verdict(
            space, static_cast<unsigned>(primes.size()), n, false,
            {"center of stable index with bounded torsion and squarefree growth across the window (heuristic)",
             "n = " + std::to_string(n) + " branching points (window estimate)"});
    }
  }

  const auto perf = perfectness(t, space, depth, window);
  if (perf.value == Tri::Yes) {
    Classification r;
    r.space = space;
    r.verdict = Verdict::Cantor;
    r.certified = perf.certified;
    r.evidence = perf.evidence;
    r.evidence.push_back("perfect, non-empty and countably based: homeomorphic to the Cantor set");
    return r;
  }

  Classification r;
  r.space = space;
  r.verdict = Verdict::ContinuumMixed;
  const bool uncountable = detail::uncountable_by_certificate(c);
  r.certified = uncountable && perf.value == Tri::No && perf.certified;
  r.evidence = perf.evidence;
  r.evidence.push_back(uncountable ? "an open central subgroup has Z_p-rank >= 2: not countable (certified)"
                                   : "countability not established");
  try {
    const auto g = LevelSpaces(t, normal).growth(w.top());
    r.evidence.push_back("growth " + detail::seq(g) + (detail::strictly_growing(g) ? " strictly increasing" : ""));
  } catch (const BudgetExceeded&) {
    r.evidence.push_back("growth beyond lattice budget");
  }
  r.evidence.push_back("a space of closed subgroups is countable or of size 2^w(G); this one is not shown countable "
                       "and has perfectness " + std::string(to_string(perf.value)));
  return r;
}

inline nlohmann::ordered_json classification_to_json(const Classification& c) {
  nlohmann::ordered_json j;
  j["space"] = to_string(c.space);
  j["verdict"] = to_string(c.verdict);
  j["k"] = c.k ? nlohmann::ordered_json(*c.k) : nlohmann::ordered_json(nullptr);
  j["n"] = c.n ? nlohmann::ordered_json(*c.n) : nlohmann::ordered_json(nullptr);
  j["signature"] = c.signature ? nlohmann::ordered_json(c.signature->to_string()) : nlohmann::ordered_json(nullptr);
  j["certified"] = c.certified;
  j["evidence"] = c.evidence;
  return j;
}

}  // namespace profscope
