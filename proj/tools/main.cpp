#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "runner.hpp"

using namespace grpdlim;
using namespace grpdlim::cli;

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(ExitCode::Usage, {}, "cannot read '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

int fail(ExitCode code, const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return static_cast<int>(code);
}

std::string command_list() {
  std::string s = "commands:\n";
  for (const auto& c : commands()) {
    std::string args;
    for (const auto& a : c.arguments) args += " " + a;
    s += "  " + c.name + (c.name == "gen-corpus" ? "" : " FILE") + args + "\n      " + c.summary + "\n";
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homotopy limits of finite groupoids", "grpdlim"};
  app.footer(command_list());
  std::vector<std::string> positional;
  std::uint64_t budget = 0;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::size_t count = 6;
  app.add_option("args", positional, "COMMAND [FILE] [NAME...]")->required();
  auto* budget_opt = app.add_option("--budget", budget, "work limit per enumeration stage (default 10000000, or GRPDLIM_BUDGET)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--seed", seed, "seed for gen-corpus");
  app.add_option("--count", count, "number of diagrams for gen-corpus");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::Usage);
  }

  RunOptions options;
  options.seed = seed;
  if (budget_opt->count()) {
    options.budget.limit = budget;
  } else if (const char* env = std::getenv("GRPDLIM_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (!*env || *end) return fail(ExitCode::Usage, "GRPDLIM_BUDGET must be a number");
    options.budget.limit = v;
  }

  const std::string command = positional[0];
  try {
    if (command == "gen-corpus") {
      if (positional.size() != 1) return fail(ExitCode::Usage, "gen-corpus takes no positional arguments");
      std::cout << print(generate_corpus(seed, count));
      return 0;
    }
    if (!find_command(command)) return fail(ExitCode::Usage, "unknown command '" + command + "'\n" + command_list());
    if (positional.size() < 2) return fail(ExitCode::Usage, command + " needs an input FILE");
    const auto ws = parse(read_input(positional[1]));
    if (command == "print") {
      if (positional.size() != 2) return fail(ExitCode::Usage, "print takes only FILE");
      std::cout << print(ws);
      return 0;
    }
    const std::vector<std::string> names(positional.begin() + 2, positional.end());
    auto r = run(ws, command, names, options);
    if (format == "dot") {
      if (!r.groupoid) return fail(ExitCode::Usage, command + " has no groupoid to draw");
      std::cout << emit_dot(*r.groupoid, r.names ? &*r.names : nullptr);
    } else {
      std::cout << render_json(r.json);
    }
    return 0;
  } catch (const CliError& e) {
    return fail(e.code(), e.what());
  } catch (const BudgetExceeded& e) {
    return fail(ExitCode::Budget, e.what());
  } catch (const InvalidStructure& e) {
    return fail(ExitCode::Validation, e.what());
  } catch (const ShapeMismatch& e) {
    return fail(ExitCode::Validation, e.what());
  } catch (const std::exception& e) {
    return fail(ExitCode::Other, e.what());
  }
}
