#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "dsfuse/engine.hpp"
#include "dsfuse/numbers.hpp"
#include "dsfuse/rdf/parser.hpp"
#include "dsfuse/rdf/serializer.hpp"
#include "dsfuse/report.hpp"
#include "dsfuse/version.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDataFailure = 1;   // validation errors, failed fusion
constexpr int kUsageFailure = 2;  // bad invocation, unreadable/unparseable input

bool color_enabled() {
  return ::isatty(STDERR_FILENO) != 0 &&
         std::getenv("DSFUSE_NO_COLOR") == nullptr;
}

std::string paint(const std::string& text, const char* code) {
  if (!color_enabled()) return text;
  return std::string("\x1b[") + code + "m" + text + "\x1b[0m";
}

void print_diagnostics(const std::vector<dsfuse::rdf::Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) {
    const bool is_error = d.severity == dsfuse::rdf::Severity::kError;
    std::cerr << paint(std::string(to_string(d.severity)),
                       is_error ? "31" : "33")
              << ": " << d.message;
    if (!d.node.empty()) std::cerr << " [" << d.node << "]";
    std::cerr << '\n';
  }
}

struct InputArgs {
  std::string path;
  std::string format;  // empty = infer from extension
  std::string base;
};

void add_input_options(CLI::App& cmd, InputArgs& args) {
  cmd.add_option("--in", args.path, "input RDF file (.ttl or .nt)")
      ->required();
  cmd.add_option("--format", args.format,
                 "input format: turtle|ttl|ntriples|nt (default: by extension)")
      ->check(CLI::IsMember({"turtle", "ttl", "ntriples", "nt"}));
  cmd.add_option("--base", args.base, "base IRI for resolving relative IRIs");
}

std::optional<dsfuse::rdf::Format> pick_format(const InputArgs& args) {
  if (!args.format.empty()) return dsfuse::rdf::format_from_string(args.format);
  return dsfuse::rdf::format_from_path(args.path);
}

// Exits with kUsageFailure on IO or syntax problems.
dsfuse::rdf::Graph load_graph(const InputArgs& args) {
  const auto format = pick_format(args);
  if (!format) {
    std::cerr << paint("error", "31") << ": cannot infer the RDF format of '"
              << args.path << "'; pass --format\n";
    std::exit(kUsageFailure);
  }
  std::ifstream file(args.path, std::ios::binary);
  if (!file) {
    std::cerr << paint("error", "31") << ": cannot read '" << args.path
              << "'\n";
    std::exit(kUsageFailure);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  try {
    return dsfuse::rdf::parse(buffer.str(), *format, args.base);
  } catch (const dsfuse::rdf::ParseError& e) {
    std::cerr << paint("error", "31") << ": " << args.path << ": " << e.what()
              << '\n';
    std::exit(kUsageFailure);
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << content) || !file.flush()) {
    std::cerr << paint("error", "31") << ": cannot write '" << path << "'\n";
    std::exit(kUsageFailure);
  }
}

int count_errors(const std::vector<dsfuse::rdf::Diagnostic>& diagnostics) {
  int errors = 0;
  for (const auto& d : diagnostics)
    if (d.severity == dsfuse::rdf::Severity::kError) ++errors;
  return errors;
}

int cmd_validate(const InputArgs& input) {
  const auto graph = load_graph(input);
  const auto diagnostics = dsfuse::validate(graph);
  print_diagnostics(diagnostics);
  const int errors = count_errors(diagnostics);
  std::cerr << errors << " error(s), "
            << diagnostics.size() - static_cast<std::size_t>(errors)
            << " warning(s)\n";
  return errors > 0 ? kDataFailure : kOk;
}

struct FuseArgs {
  InputArgs input;
  std::string out_path;
  std::string report_path;
  std::string rule = "max-belief";
  std::string residual = "strict";
  double conflict_warn_threshold = 0.5;
  bool no_fail_on_conflict = false;
};

int cmd_fuse(const FuseArgs& args) {
  const auto graph = load_graph(args.input);

  dsfuse::FusionConfig config;
  config.decision_rule = *dsfuse::decision_rule_from_string(args.rule);
  config.residual_policy = *dsfuse::residual_policy_from_string(args.residual);
  config.conflict_warn_threshold = args.conflict_warn_threshold;
  config.fail_on_total_conflict = !args.no_fail_on_conflict;

  const auto out_format = dsfuse::rdf::format_from_path(args.out_path)
                              .value_or(dsfuse::rdf::Format::kTurtle);
  try {
    auto [annotated, report] = dsfuse::fuse_graph(graph, config);
    write_file(args.out_path, dsfuse::rdf::serialize(annotated, out_format));
    write_file(args.report_path, dsfuse::report_to_json(report));
    print_diagnostics(report.diagnostics);

    bool all_fused = true;
    for (const auto& entry : report.instances) {
      for (const auto& warning : entry.warnings)
        std::cerr << paint("warning", "33") << ": " << entry.instance << ": "
                  << warning << '\n';
      if (!entry.fused) {
        all_fused = false;
        std::cerr << paint("error", "31") << ": " << entry.instance
                  << " failed: " << entry.error << '\n';
      }
    }
    return all_fused ? kOk : kDataFailure;
  } catch (const dsfuse::TotalConflictError& e) {
    // Fail-fast run hit total conflict: no annotated graph is written, but
    // the report still records every instance so the failure is inspectable.
    std::cerr << paint("error", "31") << ": " << e.what() << '\n';
    dsfuse::FusionConfig relaxed = config;
    relaxed.fail_on_total_conflict = false;
    auto [ignored, report] = dsfuse::fuse_graph(graph, relaxed);
    report.config = config;  // report the configuration actually requested
    write_file(args.report_path, dsfuse::report_to_json(report));
    return kDataFailure;
  }
}

struct DecideArgs {
  InputArgs input;
  std::string instance;
  std::string rule = "max-belief";
};

int cmd_decide(const DecideArgs& args) {
  const auto graph = load_graph(args.input);
  const auto extraction = dsfuse::rdf::extract_observations(graph);
  const auto groups = dsfuse::group_by_instance(extraction.observations);

  const auto it = groups.find(args.instance);
  if (it == groups.end()) {
    std::cerr << paint("error", "31") << ": no observations for instance '"
              << args.instance << "'\n";
    return kUsageFailure;
  }

  try {
    const auto built = dsfuse::build_instance(args.instance, it->second,
                                              dsfuse::ResidualPolicy::kStrict);
    const auto result = dsfuse::fuse_instance(
        built, *dsfuse::decision_rule_from_string(args.rule));
    for (const auto& [element, score] : result.decision)
      std::cout << element << '\t' << dsfuse::format_fixed(score) << '\n';
    return kOk;
  } catch (const dsfuse::Error& e) {
    std::cerr << paint("error", "31") << ": " << e.what() << '\n';
    return kDataFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dempster-Shafer evidential fusion over RDF instance data"};
  app.set_version_flag(
      "--version", std::string("dsfuse ") + std::string(dsfuse::kVersion) +
                       " (vocabulary v" +
                       std::string(dsfuse::kVocabularyVersion) + ")");
  app.require_subcommand(1);

  InputArgs validate_args;
  CLI::App* validate_cmd = app.add_subcommand(
      "validate", "check evidence structure without fusing");
  add_input_options(*validate_cmd, validate_args);

  FuseArgs fuse_args;
  CLI::App* fuse_cmd =
      app.add_subcommand("fuse", "fuse all uncertain instances and annotate");
  add_input_options(*fuse_cmd, fuse_args.input);
  fuse_cmd->add_option("--out", fuse_args.out_path, "annotated RDF output path")
      ->required();
  fuse_cmd
      ->add_option("--report", fuse_args.report_path, "JSON report output path")
      ->required();
  fuse_cmd
      ->add_option("--rule", fuse_args.rule,
                   "decision rule: max-belief|max-plausibility|max-pignistic")
      ->check(CLI::IsMember(
          {"max-belief", "max-plausibility", "max-pignistic"}));
  fuse_cmd
      ->add_option("--residual", fuse_args.residual,
                   "mass residual policy: strict|residual-to-omega")
      ->check(CLI::IsMember({"strict", "residual-to-omega"}));
  fuse_cmd->add_option("--conflict-warn-threshold",
                       fuse_args.conflict_warn_threshold,
                       "warn when an instance's conflict K exceeds this")
      ->check(CLI::Range(0.0, 1.0));
  fuse_cmd->add_flag("--no-fail-on-conflict", fuse_args.no_fail_on_conflict,
                     "record totally conflicting instances instead of failing");

  DecideArgs decide_args;
  CLI::App* decide_cmd = app.add_subcommand(
      "decide", "rank one instance's candidates on stdout");
  add_input_options(*decide_cmd, decide_args.input);
  decide_cmd->add_option("--instance", decide_args.instance,
                         "IRI of the uncertain instance")
      ->required();
  decide_cmd
      ->add_option("--rule", decide_args.rule,
                   "decision rule: max-belief|max-plausibility|max-pignistic")
      ->check(CLI::IsMember(
          {"max-belief", "max-plausibility", "max-pignistic"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageFailure;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(validate_args);
    if (fuse_cmd->parsed()) return cmd_fuse(fuse_args);
    if (decide_cmd->parsed()) return cmd_decide(decide_args);
  } catch (const dsfuse::Error& e) {
    std::cerr << paint("error", "31") << ": " << e.what() << '\n';
    return kDataFailure;
  }
  return kUsageFailure;
}
