#include <gtest/gtest.h>

#include "profscope/config.hpp"

using namespace profscope;

namespace {

std::string padic_config(int p, int depth, const std::string& extra = "") {
  return R"({"tower": {"kind": "padic", "p": )" + std::to_string(p) + R"(}, "depth": )" + std::to_string(depth) +
         extra + "}";
}

const char* kTorsionC2 = R"({"tower": {"kind": "torsion", "group": {"kind": "cyclic", "n": 2}}, "depth": 4})";

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST(ParseConfig, Defaults) {
  const auto c = parse_config(R"({"tower": {"kind": "padic", "p": 3}})");
  EXPECT_FALSE(c.command.has_value());
  EXPECT_EQ(c.depth, 6u);
  EXPECT_EQ(c.window, kDefaultWindow);
  EXPECT_FALSE(c.normal_only);
  EXPECT_EQ(c.format, Format::Json);
  EXPECT_EQ(c.budget, kMaxGroupOrder);
  EXPECT_EQ(c.seed, kDefaultSeed);
}

TEST(ParseConfig, AllFields) {
  const auto c = parse_config(R"({"tower": {"kind": "padic", "p": 2}, "command": "space", "depth": 3,
    "window": 2, "normal_only": true, "format": "dot", "budget": 100, "seed": 9})");
  EXPECT_EQ(c.command, Command::Space);
  EXPECT_EQ(c.depth, 3u);
  EXPECT_EQ(c.window, 2u);
  EXPECT_TRUE(c.normal_only);
  EXPECT_EQ(c.format, Format::Dot);
  EXPECT_EQ(c.budget, 100u);
  EXPECT_EQ(c.seed, 9u);
}

TEST(ParseConfig, RejectsWithLocation) {
  try {
    parse_config("{\n  \"tower\": {\"kind\": \"padic\", \"p\": 2},\n  \"depth\": ,\n}");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_TRUE(contains(e.what(), "line 3")) << e.what();
  }
  try {
    parse_config(R"({"tower": {"kind": "padic", "p": 2, "q": 1}})");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_TRUE(contains(e.what(), "tower: unknown field 'q'")) << e.what();
  }
  try {
    parse_config(R"({"tower": {"kind": "finite_times", "group": {"kind": "cyclic", "n": 2, "x": 0},
      "tower": {"kind": "padic", "p": 2}}})");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_TRUE(contains(e.what(), "tower.group: unknown field 'x'")) << e.what();
  }
  try {
    parse_config(R"({"tower": {"kind": "padic", "p": 6}})");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_TRUE(contains(e.what(), "p must be prime (got 6)")) << e.what();
  }
}

TEST(ParseConfig, RejectsBadValues) {
  for (const char* bad : {
           R"({})",
           R"({"tower": {"kind": "padic", "p": 2}, "extra": 1})",
           R"({"tower": {"kind": "padic", "p": 2}, "depth": -1})",
           R"({"tower": {"kind": "padic", "p": 2}, "depth": 0})",
           R"({"tower": {"kind": "padic", "p": 2}, "window": 0})",
           R"({"tower": {"kind": "padic", "p": 2}, "budget": 0})",
           R"({"tower": {"kind": "padic", "p": 2}, "budget": 100000})",
           R"({"tower": {"kind": "padic", "p": 2}, "format": "xml"})",
           R"({"tower": {"kind": "padic", "p": 2}, "command": "draw"})",
           R"({"tower": {"kind": "padic", "p": 2}, "normal_only": 1})",
           R"({"tower": {"kind": "padic"}})",
           R"({"tower": {"kind": "adelic", "p": 2}})",
           R"({"tower": {"kind": "product", "factors": [{"kind": "padic", "p": 2}]}})",
           R"({"tower": {"kind": "torsion", "group": {"kind": "cyclic", "n": 1}}})",
           R"({"tower": {"kind": "torsion", "group": {"kind": "sporadic"}}})",
           R"({"tower": {"kind": "custom", "levels": [{"kind": "cyclic", "n": 2}, {"kind": "cyclic", "n": 4}],
               "maps": [[0, 0, 0, 0]]}})",
           R"({"tower": {"kind": "custom", "levels": [{"kind": "cyclic", "n": 2}], "maps": [[0]]}})",
           R"({"tower": {"kind": "constant", "group": {"kind": "table", "order": 2, "table": [[0, 1], [1, 1]]}}})",
       })
    EXPECT_THROW(parse_config(bad), ConfigError) << bad;
}

TEST(BuildTower, Kinds) {
  EXPECT_EQ(build_tower(nlohmann::json::parse(R"({"kind": "padic", "p": 5})")).level_order(2), 25u);
  const auto prod = build_tower(nlohmann::json::parse(
      R"({"kind": "product", "factors": [{"kind": "padic", "p": 2}, {"kind": "padic", "p": 3}, {"kind": "padic", "p": 5}]})"));
  EXPECT_EQ(prod.level_order(1), 30u);
  const auto ft = build_tower(nlohmann::json::parse(
      R"({"kind": "finite_times", "group": {"kind": "dihedral", "m": 3}, "tower": {"kind": "padic", "p": 2}})"));
  EXPECT_EQ(ft.level_order(3), 48u);
  const auto tor = build_tower(nlohmann::json::parse(
      R"({"kind": "torsion", "group": {"kind": "product", "factors": [{"kind": "cyclic", "n": 2}, {"kind": "cyclic", "n": 3}]}})"));
  EXPECT_EQ(tor.level_order(2), 36u);
  const auto cst = build_tower(nlohmann::json::parse(
      R"({"kind": "constant", "group": {"kind": "table", "order": 2, "table": [[0, 1], [1, 0]], "label": "Z2"}})"));
  EXPECT_EQ(cst.level_order(0), 1u);
  EXPECT_EQ(cst.level_order(5), 2u);
  const auto cus = build_tower(nlohmann::json::parse(
      R"({"kind": "custom", "levels": [{"kind": "cyclic", "n": 2}, {"kind": "cyclic", "n": 4}], "maps": [[0, 1, 0, 1]]})"));
  EXPECT_EQ(cus.max_depth(), 2u);
  EXPECT_EQ(cus.level_order(2), 4u);
}

TEST(ConfigHash, StableAndSensitive) {
  const auto a = parse_config(padic_config(2, 4));
  const auto b = parse_config(R"({"depth": 4, "tower": {"p": 2, "kind": "padic"}})");
  EXPECT_EQ(config_hash(a), config_hash(b));
  EXPECT_EQ(config_hash(a).size(), 16u);
  auto c = a;
  c.depth = 5;
  EXPECT_NE(config_hash(a), config_hash(c));
}

TEST(Run, PadicClassify) {
  const auto r = run_text(padic_config(2, 8), Command::Classify);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(r.err.empty());
  EXPECT_TRUE(contains(r.out, R"("verdict": "COUNTABLE")")) << r.out;
  EXPECT_TRUE(contains(r.out, R"("signature": "w^1*1+1")"));
  EXPECT_TRUE(contains(r.out, R"("certified": true)"));
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["tool"], "profscope");
  EXPECT_EQ(j["version"], kToolVersion);
  EXPECT_EQ(j["config_hash"].get<std::string>().size(), 16u);
}

TEST(Run, TorsionCantor) {
  const auto r = run_text(kTorsionC2, Command::Classify);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["result"]["verdict"], "CANTOR");
}

TEST(Run, TorsionTooDeepIsBudgetError) {
  const auto r = run_text(R"({"tower": {"kind": "torsion", "group": {"kind": "cyclic", "n": 2}}, "depth": 20})",
                          Command::Space);
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(contains(r.err, "budget")) << r.err;
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(run_text(padic_config(4, 3), Command::Classify).exit_code, 2);
  EXPECT_EQ(run_text("{ not json", Command::Classify).exit_code, 2);
  EXPECT_EQ(run_text(padic_config(2, 3)).exit_code, 2);
  EXPECT_EQ(run_text(padic_config(2, 3, R"(, "format": "dot")"), Command::Classify).exit_code, 2);
  EXPECT_EQ(run_text(padic_config(2, 12, R"(, "budget": 100)"), Command::Space).exit_code, 3);
  const auto fail = run_text(padic_config(2, 3, R"(, "bogus": true)"), Command::Info);
  EXPECT_EQ(fail.exit_code, 2);
  EXPECT_TRUE(fail.out.empty());
  EXPECT_TRUE(contains(fail.err, "bogus"));
}

TEST(Run, ExportDotChain) {
  const auto r = run_text(padic_config(2, 3, R"(, "format": "dot")"), Command::Export);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("// profscope ", 0), 0u);
  std::size_t nodes = 0, edges = 0;
  for (std::size_t pos = 0; (pos = r.out.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
  for (std::size_t pos = 0; (pos = r.out.find(" -> ", pos)) != std::string::npos; ++pos) ++edges;
  EXPECT_EQ(nodes, 4u);
  EXPECT_EQ(edges, 3u);
}

TEST(Run, EveryCommandProducesJson) {
  for (const auto& [name, cmd] : command_names()) {
    const auto r = run_text(padic_config(3, 3), cmd);
    ASSERT_EQ(r.exit_code, 0) << name << ": " << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["command"], name);
    EXPECT_TRUE(j.contains("result"));
  }
}

TEST(Run, IsolatedOnShortCustomTowerClipsWindow) {
  const auto r = run_text(R"({"tower": {"kind": "custom", "levels": [{"kind": "cyclic", "n": 2},
      {"kind": "cyclic", "n": 4}, {"kind": "cyclic", "n": 8}], "maps": [[0, 1, 0, 1], [0, 1, 2, 3, 0, 1, 2, 3]]},
      "depth": 2})",
                          Command::Isolated);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["result"]["window"], 1);
  EXPECT_EQ(run_text(R"({"tower": {"kind": "custom", "levels": [{"kind": "cyclic", "n": 2}], "maps": []},
      "depth": 1})",
                     Command::Isolated)
                .exit_code,
            2);
}

TEST(Run, Deterministic) {
  for (const auto& [name, cmd] : command_names()) {
    const auto a = run_text(padic_config(2, 4), cmd);
    const auto b = run_text(padic_config(2, 4), cmd);
    EXPECT_EQ(a.out, b.out) << name;
  }
}
