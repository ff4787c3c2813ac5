// goodsets: analysis of additive decomposability on finite product sets.
//
// Exit codes: 0 success, 1 invalid input, 2 infeasible or violated
// precondition, 3 cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "goodsets/errors.hpp"
#include "goodsets/generate.hpp"
#include "goodsets/io.hpp"
#include "goodsets/report.hpp"

namespace {

using namespace goodsets;

enum ExitCode { kOk = 0, kInvalidInput = 1, kInfeasible = 2, kCapExceeded = 3 };

struct CommonFlags {
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultLoopCap;
  std::size_t oracle_bound = kDefaultOracleBound;
  bool oracle = false;
  bool heuristic = false;
  bool heuristic_fallback = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool needs_input = true) {
  auto* input = cmd->add_option("--input,-i", flags.input, "Point set document (JSON)");
  if (needs_input) input->required();
  cmd->add_option("--output,-o", flags.output, "Write the result here instead of stdout");
  cmd->add_option("--seed", flags.seed, "Random seed");
  cmd->add_option("--cap", flags.cap, "Maximum number of loops to enumerate");
  cmd->add_option("--oracle-bound", flags.oracle_bound, "Largest set handled by the exhaustive component oracle");
  auto* oracle = cmd->add_flag("--oracle", flags.oracle, "Exhaustive component search (default)");
  cmd->add_flag("--heuristic", flags.heuristic, "Merge heuristic for components")->excludes(oracle);
  cmd->add_flag("--heuristic-fallback", flags.heuristic_fallback,
                "Degrade to heuristics instead of failing when a bound is exceeded");
}

ComponentOptions component_options(const CommonFlags& flags) {
  ComponentOptions options;
  options.method = flags.heuristic ? PartitionMethod::heuristic : PartitionMethod::oracle;
  options.oracle_bound = flags.oracle_bound;
  options.heuristic_fallback = flags.heuristic_fallback;
  return options;
}

void emit(const CommonFlags& flags, const Json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (flags.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(flags.output);
  if (!out) throw InputError("cannot write " + flags.output);
  out << text;
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
}

AnchorSet parse_anchors(const std::vector<std::string>& specs, const PointSet& points) {
  if (specs.empty()) return default_anchors(points);
  AnchorSet anchors;
  for (const auto& spec : specs) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw InputError("anchor must be AXIS:LABEL, got '" + spec + "'");
    try {
      anchors.push_back({std::stoul(spec.substr(0, colon)), spec.substr(colon + 1)});
    } catch (const std::logic_error&) {
      throw InputError("anchor axis must be a non-negative integer, got '" + spec + "'");
    }
  }
  return anchors;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Additive decomposability of finite subsets of product spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", GOODSETS_VERSION);

  CommonFlags flags;
  bool skip_extreme = false;
  bool timing = false;
  std::string function_path;
  std::string measure_path;
  std::vector<std::string> anchor_specs;
  std::string kind = "full";
  std::size_t dimension = 2;
  std::size_t size = 1;
  std::vector<std::size_t> budgets;

  auto* analyze = app.add_subcommand("analyze", "Full structural report");
  add_common(analyze, flags);
  analyze->add_flag("--skip-extreme", skip_extreme, "Do not enumerate extreme points");
  analyze->add_flag("--timing", timing, "Include wall-clock timing (breaks byte stability)");

  auto* solve = app.add_subcommand("solve", "Decompose f = u_1 + ... + u_n");
  add_common(solve, flags);
  solve->add_option("--function,-f", function_path, "Function document on the set")->required();
  solve->add_option("--anchor", anchor_specs, "AXIS:LABEL pinned to zero (0-based axes 0..n-2)");

  auto* extend = app.add_subcommand("extend", "Extend a function from a maximal good subset");
  add_common(extend, flags);
  extend->add_option("--function,-f", function_path, "Function document on a maximal good subset")->required();

  auto* decompose = app.add_subcommand("decompose", "Conformal loop decomposition of a weak loop");
  add_common(decompose, flags);
  decompose->add_option("--measure,-m", measure_path, "Measure document (omitted points carry 0)")->required();

  auto* loops = app.add_subcommand("loops", "Enumerate all loops");
  add_common(loops, flags);

  auto* components = app.add_subcommand("components", "Related and relatively full components");
  add_common(components, flags);

  auto* quotient_cmd = app.add_subcommand("quotient", "Quotient by related components");
  add_common(quotient_cmd, flags);

  auto* extreme = app.add_subcommand("extreme", "Extreme points of the marginal-free unit ball");
  add_common(extreme, flags);

  auto* generate_cmd = app.add_subcommand("generate", "Generate a point set");
  add_common(generate_cmd, flags, false);
  generate_cmd->add_option("--kind", kind, "full | good | random | loop | relatively_full");
  generate_cmd->add_option("--n", dimension, "Dimension")->check(CLI::PositiveNumber);
  generate_cmd->add_option("--size", size, "Number of points")->check(CLI::PositiveNumber);
  generate_cmd->add_option("--budget", budgets, "Label budget per axis (one value applies to all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    if (generate_cmd->parsed()) {
      GeneratorSpec spec;
      spec.kind = parse_generator_kind(kind);
      spec.dimension = dimension;
      spec.size = size;
      spec.budgets = budgets;
      spec.seed = flags.seed;
      emit(flags, to_json(generate(spec)));
      return kOk;
    }

    const PointSet points = point_set_from_json(read_json(flags.input));
    const ComponentOptions options = component_options(flags);

    if (analyze->parsed()) {
      ReportOptions report;
      report.components = options;
      report.loop_cap = flags.cap;
      report.skip_extreme = skip_extreme;
      report.timing = timing;
      emit(flags, analyze_document(points, report));
    } else if (solve->parsed()) {
      const PointFunction f = function_from_json(read_json(function_path), points);
      const SolveOutcome outcome = solve_document(points, f, parse_anchors(anchor_specs, points));
      emit(flags, outcome.document);
      return outcome.feasible ? kOk : kInfeasible;
    } else if (extend->parsed()) {
      const auto [m, g] = subset_function_from_json(read_json(function_path), points);
      emit(flags, extend_document(points, m, g));
    } else if (decompose->parsed()) {
      emit(flags, decompose_document(points, measure_from_json(read_json(measure_path), points)));
    } else if (loops->parsed()) {
      emit(flags, loops_document(points, flags.cap));
    } else if (components->parsed()) {
      emit(flags, components_document(points, options));
    } else if (quotient_cmd->parsed()) {
      emit(flags, quotient_document(points, options));
    } else if (extreme->parsed()) {
      emit(flags, extreme_document(points));
    }
    return kOk;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapExceeded;
  }
}
