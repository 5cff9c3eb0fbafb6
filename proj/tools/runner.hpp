#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "workspace.hpp"

namespace grpdlim::cli {

using Json = nlohmann::ordered_json;

struct RunOptions {
  Budget budget;
  std::uint64_t seed = 1;
};

/// A command's JSON document and, when it has one, the groupoid it
/// computed (what `--format dot` draws).
struct RunResult {
  Json json;
  std::optional<Groupoid> groupoid;
  std::optional<Names> names;
};

struct CommandInfo {
  std::string name;
  std::vector<std::string> arguments;  // what each NAME argument must be
  std::string summary;
};

const std::vector<CommandInfo>& commands();
const CommandInfo* find_command(const std::string& name);

/// Throws CliError on kind mismatches and unresolved names; library
/// exceptions (BudgetExceeded, InvalidStructure) propagate.
RunResult run(const Workspace& ws, const std::string& command,
              const std::vector<std::string>& args, const RunOptions& options = {});

/// Two-space indented, keys in insertion order, trailing newline.
std::string render_json(const Json& j);

/// Identities omitted; a morphism and its inverse drawn once with
/// dir=both. Node and edge labels come from `names` when given.
std::string emit_dot(const Groupoid& g, const Names* names = nullptr);

/// A workspace of random diagrams over the generator shapes.
Workspace generate_corpus(std::uint64_t seed, std::size_t count);

}  // namespace grpdlim::cli
