#pragma once

// Finite-level subgroup spaces of a tower, the maps between them, ball classes
// and isolation verdicts.
//
// The ball class of a depth-d point at depth e is the set of depth-e points whose
// image at depth d is that point. A thread through a depth-d point is followed
// by always stepping to the first (smallest) member of the next fiber.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "profscope/constructors.hpp"
#include "profscope/lattice.hpp"
#include "profscope/tower.hpp"

namespace profscope {

inline constexpr std::size_t kDefaultWindow = 3;

struct LevelSpace {
  std::size_t depth = 0;
  bool normal_only = false;
  /// Lattice (or normal sublattice) of the level group; points are its subgroups.
  LatticeReport points;
  /// Point index at depth-1 of each point's image; empty at depth 0.
  std::vector<std::size_t> down_map;
  /// Inverse of the next level's down_map, filled once depth+1 is realized.
  std::vector<std::vector<std::size_t>> fibers;

  std::size_t size() const noexcept { return points.size(); }
  const FiniteGroup& group() const noexcept { return points.group; }
  const Subgroup& point(std::size_t i) const { return points.subgroups.at(i); }
};

/// Memoized level spaces of one tower.
class LevelSpaces {
 public:
  explicit LevelSpaces(Tower t, bool normal_only = false, std::size_t budget = 0)
      : tower_(std::move(t)),
        normal_only_(normal_only),
        budget_(budget ? budget : (normal_only ? kNormalLatticeBudget : kLatticeBudget)) {}

  const Tower& tower() const noexcept { return tower_; }
  bool normal_only() const noexcept { return normal_only_; }
  std::size_t budget() const noexcept { return budget_; }

  const LevelSpace& at(std::size_t d) const {
    std::lock_guard lock(mutex_);
    return at_locked(d);
  }

  /// Depth-(d+1) point indices mapping to point i at depth d.
  const std::vector<std::size_t>& fiber(std::size_t d, std::size_t i) const {
    std::lock_guard lock(mutex_);
    at_locked(d + 1);
    const auto& s = at_locked(d);
    if (i >= s.size()) throw InvalidArgument("no point " + std::to_string(i) + " at depth " + std::to_string(d));
    return s.fibers[i];
  }

  /// Position of h among the depth-d points; rejects subgroups of another group.
  std::size_t locate(std::size_t d, const Subgroup& h) const {
    const auto& s = at(d);
    if (!h.parent().same_as(s.group()))
      throw InvalidArgument("stale point: subgroup does not belong to level " + std::to_string(d));
    const auto i = s.points.index_of(h);
    if (i == s.size()) throw InvalidArgument("stale point: not a point of the level space at depth " + std::to_string(d));
    return i;
  }

  /// Depth-e point indices over point i at depth d, sorted.
  std::vector<std::size_t> ball_class(std::size_t d, std::size_t i, std::size_t e) const {
    if (e < d) throw InvalidArgument("ball_class needs e >= d");
    if (i >= at(d).size()) throw InvalidArgument("no point " + std::to_string(i) + " at depth " + std::to_string(d));
    std::vector<std::size_t> cur{i};
    for (std::size_t k = d; k < e; ++k) {
      std::vector<std::size_t> next;
      for (auto j : cur) {
        const auto& f = fiber(k, j);
        next.insert(next.end(), f.begin(), f.end());
      }
      std::sort(next.begin(), next.end());
      cur = std::move(next);
    }
    return cur;
  }

  /// Number of points at depths 0..dmax.
  std::vector<std::size_t> growth(std::size_t dmax) const {
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d <= dmax; ++d) out.push_back(at(d).size());
    return out;
  }

 private:
  const LevelSpace& at_locked(std::size_t d) const {
    if (auto it = spaces_.find(d); it != spaces_.end()) return it->second;
    LevelSpace s;
    s.depth = d;
    s.normal_only = normal_only_;
    const FiniteGroup g = tower_.level(d, budget_);
    if (normal_only_) {
      auto normals = normal_subgroups(g, budget_);
      s.points.group = g;
      s.points.covers = detail::hasse_covers(normals);
      s.points.normal_mask.assign(normals.size(), true);
      s.points.subgroups = std::move(normals);
    } else {
      s.points = all_subgroups(g, budget_);
    }
    s.fibers.resize(s.size());
    if (d > 0) {
      const LevelSpace& below = at_locked(d - 1);
      const Homomorphism f = tower_.bonding(d - 1);
      s.down_map.reserve(s.size());
      for (const auto& h : s.points.subgroups) {
        const auto j = below.points.index_of(hom_image(f, h));
        if (j == below.size()) throw Error(tower_.description() + ": image of a point left the space");
        s.down_map.push_back(j);
      }
      auto& fibers_below = spaces_.at(d - 1).fibers;
      for (std::size_t i = 0; i < s.size(); ++i) fibers_below[s.down_map[i]].push_back(i);
      for (std::size_t j = 0; j < fibers_below.size(); ++j)
        if (fibers_below[j].empty())
          throw Error(tower_.description() + ": down_map " + std::to_string(d) + " misses point " + std::to_string(j));
    }
    return spaces_.emplace(d, std::move(s)).first->second;
  }

  Tower tower_;
  bool normal_only_;
  std::size_t budget_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, LevelSpace> spaces_;
};

inline LevelSpace level_space(const Tower& t, std::size_t d, bool normal_only = false) {
  LevelSpaces s(t, normal_only);
  s.at(d);
  return s.at(d);
}

inline std::vector<Subgroup> fiber(const Tower& t, std::size_t d, const Subgroup& point) {
  LevelSpaces s(t);
  const auto i = s.locate(d, point);
  std::vector<Subgroup> out;
  for (auto j : s.fiber(d, i)) out.push_back(s.at(d + 1).point(j));
  return out;
}

inline std::vector<Subgroup> ball_class(const Tower& t, std::size_t d, const Subgroup& point, std::size_t e) {
  LevelSpaces s(t);
  const auto i = s.locate(d, point);
  std::vector<Subgroup> out;
  for (auto j : s.ball_class(d, i, e)) out.push_back(s.at(e).point(j));
  return out;
}

inline std::vector<std::size_t> growth_sequence(const Tower& t, std::size_t dmax, bool normal_only = false) {
  return LevelSpaces(t, normal_only).growth(dmax);
}

/// Canonical thread from point i at depth d down to depth d+window (indices per depth).
inline std::vector<std::size_t> canonical_thread(const LevelSpaces& s, std::size_t d, std::size_t i,
                                                 std::size_t window) {
  std::vector<std::size_t> thread{i};
  for (std::size_t k = d; k < d + window; ++k) thread.push_back(s.fiber(k, thread.back()).front());
  return thread;
}

struct ThreadVerdict {
  std::size_t point_index = 0;
  std::size_t order = 0;
  Tri open_thread = Tri::Unknown;
  Tri isolated = Tri::Unknown;
  std::vector<std::size_t> ball_sizes;
  std::vector<std::size_t> thread_index;
  std::vector<std::size_t> phi_index;
  std::string evidence;
};

namespace detail {

inline bool constant(const std::vector<std::size_t>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

inline bool strictly_growing(const std::vector<std::size_t>& v) {
  for (std::size_t k = 1; k < v.size(); ++k)
    if (v[k] <= v[k - 1]) return false;
  return v.size() >= 2;
}

inline std::string join_sizes(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << "]";
  return os.str();
}

/// [H : Φ(H)] for a point.
inline std::size_t frattini_index(const Subgroup& h) {
  const auto g = as_group(h).group;
  return g.order() / frattini_any(g).order();
}

}  // namespace detail

/// Verdicts for every depth-d point using depths d..d+window.
inline std::vector<ThreadVerdict> isolation_verdicts(const LevelSpaces& s, std::size_t d,
                                                     std::size_t window = kDefaultWindow) {
  if (window == 0) throw InvalidArgument("window must be positive");
  const bool stable = s.tower().certificates().fiber_stable == Tri::Yes;
  const auto& space = s.at(d);
  s.at(d + window);
  std::vector<ThreadVerdict> out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    ThreadVerdict v;
    v.point_index = i;
    v.order = space.point(i).order();
    for (std::size_t e = d + 1; e <= d + window; ++e) v.ball_sizes.push_back(s.ball_class(d, i, e).size());
    const auto thread = canonical_thread(s, d, i, window);
    for (std::size_t k = 0; k < thread.size(); ++k) {
      const auto& lvl = s.at(d + k);
      const auto& h = lvl.point(thread[k]);
      v.thread_index.push_back(h.index());
      v.phi_index.push_back(detail::frattini_index(h));
    }
    const bool singletons = std::all_of(v.ball_sizes.begin(), v.ball_sizes.end(), [](auto n) { return n == 1; });
    const bool branching = std::all_of(v.ball_sizes.begin(), v.ball_sizes.end(), [](auto n) { return n >= 2; });
    const bool phi_bounded = detail::constant(v.phi_index);
    const bool phi_growing = detail::strictly_growing(v.phi_index);

    if (singletons) {
      v.open_thread = Tri::Yes;
    } else if (stable && detail::strictly_growing(v.thread_index)) {
      v.open_thread = Tri::No;
    }
    if (singletons && (stable || phi_bounded)) {
      v.isolated = Tri::Yes;
    } else if (branching && (stable || phi_growing)) {
      v.isolated = Tri::No;
    }
    if (v.open_thread != Tri::Yes && v.isolated == Tri::Yes) v.isolated = Tri::Unknown;

    std::ostringstream ev;
    ev << "balls " << detail::join_sizes(v.ball_sizes) << "; thread index " << detail::join_sizes(v.thread_index)
       << "; frattini index " << detail::join_sizes(v.phi_index) << "; "
       << (stable ? "fiber_stable certificate" : "window heuristic");
    v.evidence = ev.str();
    out.push_back(std::move(v));
  }
  return out;
}

inline std::vector<ThreadVerdict> isolation_verdicts(const Tower& t, std::size_t d,
                                                     std::size_t window = kDefaultWindow) {
  return isolation_verdicts(LevelSpaces(t), d, window);
}

inline nlohmann::ordered_json verdicts_to_json(const std::vector<ThreadVerdict>& vs) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : vs) {
    nlohmann::ordered_json j;
    j["point_index"] = v.point_index;
    j["order"] = v.order;
    j["open_thread"] = to_string(v.open_thread);
    j["isolated"] = to_string(v.isolated);
    j["evidence"] = v.evidence;
    arr.push_back(std::move(j));
  }
  return arr;
}

/// Bipartite fiber map between depth d and depth d+1.
inline std::string fiber_map_dot(const LevelSpaces& s, std::size_t d, const std::string& name = "fibers") {
  const auto& lo = s.at(d);
  const auto& hi = s.at(d + 1);
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lo.size(); ++i)
    os << "  a" << i << " [label=\"d" << d << ":o=" << lo.point(i).order() << "\"];\n";
  for (std::size_t j = 0; j < hi.size(); ++j)
    os << "  b" << j << " [label=\"d" << d + 1 << ":o=" << hi.point(j).order() << "\"];\n";
  for (std::size_t j = 0; j < hi.size(); ++j) os << "  b" << j << " -> a" << hi.down_map[j] << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace profscope
