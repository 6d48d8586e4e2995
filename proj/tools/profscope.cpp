#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "profscope/config.hpp"

int main(int argc, char** argv) {
  using namespace profscope;
  CLI::App app{"profscope: subgroup spaces of profinite towers"};
  app.set_version_flag("--version", kToolVersion);

  std::string command, config_path, format;
  std::optional<std::size_t> depth, window, budget;
  std::optional<std::uint64_t> seed;
  bool normal = false;

  std::vector<std::string> names;
  for (const auto& [name, cmd] : command_names()) names.push_back(name);
  app.add_option("command", command, "info | space | isolated | classify | signature | export")
      ->required()
      ->check(CLI::IsMember(names));
  app.add_option("--config", config_path, "run config (JSON)")->required();
  app.add_option("--depth", depth, "tower depth");
  app.add_option("--window", window, "stabilization window");
  app.add_flag("--normal", normal, "use normal subgroups only");
  app.add_option("--format", format, "json | dot")->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--budget", budget, "largest level order to build");
  app.add_option("--seed", seed, "seed for randomized validation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "invalid config: cannot read " << config_path << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  RunConfig cfg;
  try {
    cfg = parse_config(buf.str());
    cfg.command = parse_command(command);
    if (depth) cfg.depth = *depth;
    if (window) cfg.window = *window;
    if (normal) cfg.normal_only = true;
    if (!format.empty()) cfg.format = parse_format(format);
    if (budget) cfg.budget = *budget;
    if (seed) cfg.seed = *seed;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return 2;
  }

  const auto res = run(cfg);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
