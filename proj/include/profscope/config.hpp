#pragma once

// Batch runs: strict JSON run configs, tower construction from config records,
// and deterministic reports. Exit codes: 0 ok, 1 internal error, 2 invalid
// config, 3 budget exceeded. See docs/config.md for the schema.

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "profscope/classify.hpp"
#include "profscope/json_io.hpp"
#include "profscope/subspace.hpp"
#include "profscope/tower.hpp"

namespace profscope {

inline constexpr const char* kToolVersion = "1.0.0";

class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

enum class Command { Info, Space, Isolated, Classify, Signature, Export };
enum class Format { Json, Dot };

inline const std::vector<std::pair<std::string, Command>>& command_names() {
  static const std::vector<std::pair<std::string, Command>> names = {
      {"info", Command::Info},         {"space", Command::Space},         {"isolated", Command::Isolated},
      {"classify", Command::Classify}, {"signature", Command::Signature}, {"export", Command::Export}};
  return names;
}

inline std::string to_string(Command c) {
  for (const auto& [name, cmd] : command_names())
    if (cmd == c) return name;
  return "?";
}

inline Command parse_command(const std::string& s) {
  for (const auto& [name, cmd] : command_names())
    if (name == s) return cmd;
  throw ConfigError("unknown command '" + s + "'");
}

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "dot") return Format::Dot;
  throw ConfigError("format must be 'json' or 'dot' (got '" + s + "')");
}

struct RunConfig {
  nlohmann::json tower;
  std::optional<Command> command;
  std::size_t depth = 6;
  std::size_t window = kDefaultWindow;
  bool normal_only = false;
  Format format = Format::Json;
  std::size_t budget = kMaxGroupOrder;
  std::uint64_t seed = kDefaultSeed;
};

namespace config_detail {

using Json = nlohmann::json;

inline void only_fields(const Json& j, const std::string& path, std::initializer_list<const char*> allowed,
                        std::initializer_list<const char*> required = {}) {
  if (!j.is_object()) throw ConfigError(path + ": expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw ConfigError(path + ": unknown field '" + it.key() + "'");
  }
  for (const char* r : required)
    if (!j.contains(r)) throw ConfigError(path + ": missing field '" + std::string(r) + "'");
}

inline std::uint64_t get_uint(const Json& j, const std::string& key, const std::string& path) {
  if (!j.at(key).is_number_unsigned()) throw ConfigError(path + "." + key + ": expected a non-negative integer");
  return j.at(key).get<std::uint64_t>();
}

inline std::string get_string(const Json& j, const std::string& key, const std::string& path) {
  if (!j.at(key).is_string()) throw ConfigError(path + "." + key + ": expected a string");
  return j.at(key).get<std::string>();
}

inline FiniteGroup build_group(const Json& j, const std::string& path, const ValidationOptions& opts) {
  if (!j.is_object() || !j.contains("kind")) throw ConfigError(path + ": group needs a 'kind'");
  const std::string kind = get_string(j, "kind", path);
  try {
    if (kind == "cyclic") {
      only_fields(j, path, {"kind", "n"}, {"n"});
      return make_cyclic(get_uint(j, "n", path));
    }
    if (kind == "dihedral") {
      only_fields(j, path, {"kind", "m"}, {"m"});
      return make_dihedral(get_uint(j, "m", path));
    }
    if (kind == "metacyclic") {
      only_fields(j, path, {"kind", "m", "k", "r"}, {"m", "k", "r"});
      return make_metacyclic(get_uint(j, "m", path), get_uint(j, "k", path), get_uint(j, "r", path));
    }
    if (kind == "product") {
      only_fields(j, path, {"kind", "factors"}, {"factors"});
      const auto& fs = j.at("factors");
      if (!fs.is_array() || fs.empty()) throw ConfigError(path + ".factors: expected a non-empty array");
      FiniteGroup g = build_group(fs[0], path + ".factors[0]", opts);
      for (std::size_t i = 1; i < fs.size(); ++i)
        g = direct_product(g, build_group(fs[i], path + ".factors[" + std::to_string(i) + "]", opts));
      return g;
    }
    if (kind == "table") {
      Json rest = j;
      rest.erase("kind");
      return group_from_json(rest, opts);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ConfigError(path + ": " + e.what());
  }
  throw ConfigError(path + ": unknown group kind '" + kind + "'");
}

inline Tower build_tower(const Json& j, const std::string& path, const ValidationOptions& opts) {
  if (!j.is_object() || !j.contains("kind")) throw ConfigError(path + ": tower needs a 'kind'");
  const std::string kind = get_string(j, "kind", path);
  try {
    if (kind == "padic") {
      only_fields(j, path, {"kind", "p"}, {"p"});
      const auto p = get_uint(j, "p", path);
      if (!is_prime(p)) throw ConfigError(path + ".p: p must be prime (got " + std::to_string(p) + ")");
      return Tower::padic(p);
    }
    if (kind == "product") {
      only_fields(j, path, {"kind", "factors"}, {"factors"});
      const auto& fs = j.at("factors");
      if (!fs.is_array() || fs.size() < 2) throw ConfigError(path + ".factors: expected at least two towers");
      Tower t = build_tower(fs[0], path + ".factors[0]", opts);
      for (std::size_t i = 1; i < fs.size(); ++i)
        t = Tower::product(t, build_tower(fs[i], path + ".factors[" + std::to_string(i) + "]", opts));
      return t;
    }
    if (kind == "finite_times") {
      only_fields(j, path, {"kind", "group", "tower"}, {"group", "tower"});
      return Tower::finite_times(build_group(j.at("group"), path + ".group", opts),
                                 build_tower(j.at("tower"), path + ".tower", opts));
    }
    if (kind == "torsion") {
      only_fields(j, path, {"kind", "group"}, {"group"});
      return Tower::torsion(build_group(j.at("group"), path + ".group", opts));
    }
    if (kind == "constant") {
      only_fields(j, path, {"kind", "group"}, {"group"});
      return Tower::constant(build_group(j.at("group"), path + ".group", opts));
    }
    if (kind == "custom") {
      only_fields(j, path, {"kind", "levels", "maps"}, {"levels", "maps"});
      const auto& ls = j.at("levels");
      const auto& ms = j.at("maps");
      if (!ls.is_array() || !ms.is_array()) throw ConfigError(path + ": 'levels' and 'maps' must be arrays");
      std::vector<FiniteGroup> levels;
      for (std::size_t i = 0; i < ls.size(); ++i)
        levels.push_back(build_group(ls[i], path + ".levels[" + std::to_string(i) + "]", opts));
      if (ms.size() + 1 != levels.size())
        throw ConfigError(path + ": need exactly one map per consecutive pair of levels");
      std::vector<Homomorphism> maps;
      for (std::size_t i = 0; i < ms.size(); ++i) {
        const std::string mp = path + ".maps[" + std::to_string(i) + "]";
        if (!ms[i].is_array()) throw ConfigError(mp + ": expected an array of images");
        std::vector<Element> images;
        for (const auto& v : ms[i]) {
          if (!v.is_number_unsigned()) throw ConfigError(mp + ": images must be element indices");
          images.push_back(v.get<Element>());
        }
        try {
          maps.push_back(Homomorphism::make(levels[i + 1], levels[i], images));
        } catch (const InvalidArgument& e) {
          throw ConfigError(mp + ": " + e.what());
        }
      }
      return Tower::custom(std::move(levels), std::move(maps));
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ConfigError(path + ": " + e.what());
  }
  throw ConfigError(path + ": unknown tower kind '" + kind + "'");
}

inline std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace config_detail

inline Tower build_tower(const nlohmann::json& j, std::uint64_t seed = kDefaultSeed) {
  ValidationOptions opts;
  opts.seed = seed;
  return config_detail::build_tower(j, "tower", opts);
}

inline void validate(const RunConfig& c) {
  if (c.depth < 1) throw ConfigError("depth must be at least 1");
  if (c.window < 1) throw ConfigError("window must be at least 1");
  if (c.budget < 1 || c.budget > kMaxGroupOrder)
    throw ConfigError("budget must be between 1 and " + std::to_string(kMaxGroupOrder));
}

/// Strict parse; unknown fields and bad values raise ConfigError naming the line or field.
inline RunConfig parse_config(const std::string& text) {
  using config_detail::get_string;
  using config_detail::get_uint;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config parse error at line " + std::to_string(config_detail::line_of(text, e.byte)) + ": " +
                      e.what());
  }
  config_detail::only_fields(j, "config", {"tower", "command", "depth", "window", "normal_only", "format", "budget",
                                           "seed"},
                             {"tower"});
  RunConfig c;
  c.tower = j.at("tower");
  if (j.contains("command")) c.command = parse_command(get_string(j, "command", "config"));
  if (j.contains("depth")) c.depth = get_uint(j, "depth", "config");
  if (j.contains("window")) c.window = get_uint(j, "window", "config");
  if (j.contains("normal_only")) {
    if (!j.at("normal_only").is_boolean()) throw ConfigError("config.normal_only: expected a boolean");
    c.normal_only = j.at("normal_only").get<bool>();
  }
  if (j.contains("format")) c.format = parse_format(get_string(j, "format", "config"));
  if (j.contains("budget")) c.budget = get_uint(j, "budget", "config");
  if (j.contains("seed")) c.seed = get_uint(j, "seed", "config");
  validate(c);
  build_tower(c.tower, c.seed);
  return c;
}

/// Canonical form of the effective config (keys sorted).
inline nlohmann::json canonical(const RunConfig& c) {
  nlohmann::json j;
  j["tower"] = c.tower;
  j["command"] = c.command ? to_string(*c.command) : "";
  j["depth"] = c.depth;
  j["window"] = c.window;
  j["normal_only"] = c.normal_only;
  j["format"] = c.format == Format::Dot ? "dot" : "json";
  j["budget"] = c.budget;
  j["seed"] = c.seed;
  return j;
}

inline std::string config_hash(const RunConfig& c) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : canonical(c).dump()) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace config_detail {

inline nlohmann::ordered_json certificates_json(const Certificates& c) {
  nlohmann::ordered_json j;
  j["abelian"] = to_string(c.abelian);
  j["pro_p"] = c.pro_p ? nlohmann::ordered_json(*c.pro_p) : nlohmann::ordered_json(nullptr);
  j["supernatural"] = c.supernatural ? nlohmann::ordered_json(c.supernatural->to_string()) : nlohmann::ordered_json(nullptr);
  j["fiber_stable"] = to_string(c.fiber_stable);
  j["finitely_generated"] = to_string(c.finitely_generated);
  j["generator_bound"] = c.generator_bound ? nlohmann::ordered_json(*c.generator_bound) : nlohmann::ordered_json(nullptr);
  j["virtually_pronilpotent"] = to_string(c.virtually_pronilpotent);
  j["pronilpotent"] = to_string(c.pronilpotent);
  j["eventually_central_kernels"] = to_string(c.eventually_central_kernels);
  if (c.central_rank) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (auto [p, k] : *c.central_rank) r[std::to_string(p)] = k;
    j["central_rank"] = r;
  } else {
    j["central_rank"] = nullptr;
  }
  return j;
}

inline nlohmann::ordered_json space_json(const LevelSpaces& s, std::size_t depth) {
  const auto& sp = s.at(depth);
  nlohmann::ordered_json j;
  j["depth"] = depth;
  j["normal_only"] = s.normal_only();
  j["growth"] = s.growth(depth);
  auto points = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < sp.size(); ++i) {
    nlohmann::ordered_json p;
    p["index"] = i;
    p["order"] = sp.point(i).order();
    p["normal"] = static_cast<bool>(sp.points.normal_mask[i]);
    p["down"] = depth > 0 ? nlohmann::ordered_json(sp.down_map[i]) : nlohmann::ordered_json(nullptr);
    points.push_back(std::move(p));
  }
  j["points"] = std::move(points);
  auto covers = nlohmann::ordered_json::array();
  for (auto [lo, hi] : sp.points.covers) covers.push_back({lo, hi});
  j["covers"] = std::move(covers);
  return j;
}

inline void require_level(const Tower& t, std::size_t n, std::size_t budget) {
  const auto ord = t.level_order(n);
  if (ord > budget) throw BudgetExceeded("level " + std::to_string(n) + " order", ord, budget);
}

inline void reject_dot(Command c) {
  throw ConfigError("format dot is not available for command " + to_string(c));
}

}  // namespace config_detail

/// Runs one command; output is produced only on success.
inline RunResult run(const RunConfig& cfg) {
  using namespace config_detail;
  RunResult res;
  try {
    validate(cfg);
    if (!cfg.command) throw ConfigError("no command given");
    const Command cmd = *cfg.command;
    const Tower t = build_tower(cfg.tower, cfg.seed);
    const SpaceKind space = cfg.normal_only ? SpaceKind::N : SpaceKind::S;
    const std::string hash = config_hash(cfg);
    const bool dot = cfg.format == Format::Dot;

    nlohmann::ordered_json result;
    std::string dot_text;
    switch (cmd) {
      case Command::Info: {
        if (dot) reject_dot(cmd);
        const auto w = plan_window(t, cfg.depth, cfg.window);
        require_level(t, w.top(), cfg.budget);
        result["certificates"] = certificates_json(t.certificates());
        std::vector<std::size_t> orders;
        for (std::size_t e = 0; e <= w.top(); ++e) orders.push_back(t.level_order(e));
        result["level_orders"] = orders;
        result["tcount"] = tcount_to_json(tcount_report(t, cfg.depth, cfg.window, cfg.budget));
        break;
      }
      case Command::Space:
      case Command::Export: {
        require_level(t, cfg.depth, cfg.budget);
        LevelSpaces s(t, cfg.normal_only, cfg.budget);
        if (dot) {
          dot_text = to_dot(s.at(cfg.depth).points, "level" + std::to_string(cfg.depth));
        } else {
          result = space_json(s, cfg.depth);
          if (cmd == Command::Export) result["group"] = group_to_json(t.level(cfg.depth, cfg.budget));
        }
        break;
      }
      case Command::Isolated: {
        std::size_t w = cfg.window;
        if (const auto md = t.max_depth()) {
          if (cfg.depth >= *md)
            throw ConfigError("isolation needs a level above depth " + std::to_string(cfg.depth) + "; " +
                              t.description() + " stops at " + std::to_string(*md));
          w = std::min(w, *md - cfg.depth);
        }
        require_level(t, cfg.depth + w, cfg.budget);
        LevelSpaces s(t, cfg.normal_only, cfg.budget);
        if (dot) {
          dot_text = fiber_map_dot(s, cfg.depth);
        } else {
          result["depth"] = cfg.depth;
          result["window"] = w;
          result["verdicts"] = verdicts_to_json(isolation_verdicts(s, cfg.depth, w));
        }
        break;
      }
      case Command::Classify:
      case Command::Signature: {
        if (dot) reject_dot(cmd);
        const auto w = plan_window(t, cfg.depth, cfg.window);
        require_level(t, w.top(), cfg.budget);
        const auto c = classify_space(t, space, cfg.depth, cfg.window);
        if (cmd == Command::Classify) {
          result = classification_to_json(c);
        } else {
          result["verdict"] = to_string(c.verdict);
          result["signature"] = c.signature ? nlohmann::ordered_json(c.signature->to_string()) : nlohmann::ordered_json(nullptr);
          result["certified"] = c.certified;
        }
        break;
      }
    }

    if (dot) {
      res.out = "// profscope " + std::string(kToolVersion) + " config " + hash + " tower " + t.description() + "\n" +
                dot_text;
    } else {
      nlohmann::ordered_json report;
      report["tool"] = "profscope";
      report["version"] = kToolVersion;
      report["config_hash"] = hash;
      report["command"] = to_string(cmd);
      report["tower"] = t.description();
      report["depth"] = cfg.depth;
      report["window"] = cfg.window;
      report["normal_only"] = cfg.normal_only;
      report["result"] = std::move(result);
      res.out = report.dump(2) + "\n";
    }
  } catch (const BudgetExceeded& e) {
    res = {3, "", std::string("budget exceeded: ") + e.what() + "\n"};
  } catch (const InvalidArgument& e) {
    res = {2, "", std::string("invalid config: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    res = {1, "", std::string("error: ") + e.what() + "\n"};
  }
  return res;
}

/// Parse then run; parse failures map to exit 2.
inline RunResult run_text(const std::string& text, std::optional<Command> command = std::nullopt) {
  RunConfig c;
  try {
    c = parse_config(text);
  } catch (const BudgetExceeded& e) {
    return {3, "", std::string("budget exceeded: ") + e.what() + "\n"};
  } catch (const InvalidArgument& e) {
    return {2, "", std::string("invalid config: ") + e.what() + "\n"};
  }
  if (command) c.command = command;
  return run(c);
}

}  // namespace profscope
