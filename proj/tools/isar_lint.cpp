// isar-lint: standalone linter for Isabelle/Isar theory files.
//
// Exit codes: 0 clean (below the fail level), 1 findings at or above the
// fail level, 2 usage, configuration or IO errors.

#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "isarlint/isarlint.hpp"

namespace {

struct CliOptions {
  isarlint::RunConfig run;
  std::string fail_level_name;
  std::string format_name = "text";
  std::string config_file;
  bool docs = false;
  bool list_lints = false;
};

int fail_usage(const std::string& message) {
  std::cerr << "isar-lint: " << message << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Standalone linter for Isabelle/Isar theory files"};
  CliOptions options;

  app.add_option("inputs", options.run.inputs,
                 "Theory files or directories (searched recursively for "
                 "*.thy)");
  app.add_option("--bundle", options.run.bundles,
                 "Lint bundle to activate (repeatable)")
      ->allow_extra_args(false);
  app.add_option("--enable", options.run.enable,
                 "Additional lint to enable (repeatable)")
      ->allow_extra_args(false);
  app.add_option("--disable", options.run.disable,
                 "Lint to disable (repeatable)")
      ->allow_extra_args(false);
  app.add_option("--format", options.format_name,
                 "Output format: text, json or xml")
      ->check(CLI::IsMember({"text", "json", "xml"}));
  auto* fail_option =
      app.add_option("--fail-level", options.fail_level_name,
                     "Severity that makes the run fail: info, warn, error "
                     "or none (default: error)")
          ->check(CLI::IsMember({"info", "warn", "error", "none"}));
  app.add_flag("--stats", options.run.stats,
               "Append corpus statistics to text output");
  app.add_flag("--docs", options.docs,
               "Print documentation for all lints and bundles and exit");
  app.add_flag("--list-lints", options.list_lints,
               "List registered lints and exit");
  app.add_option("--keywords", options.run.keywords_file,
                 "Keyword file extending the built-in command table");
  auto* config_option = app.add_option("--config", options.config_file,
                                       "Configuration file (key = value)");
  app.add_option("--threads", options.run.threads,
                 "Worker threads for linting files (0 = hardware)");
  app.add_flag("--keep-going", options.run.keep_going,
               "Continue after unreadable files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "isar-lint: " << e.what() << "\n";
    return 2;
  }

  // Configuration file first, command line wins.
  isarlint::ConfigValues config;
  if (config_option->count() > 0) {
    try {
      config = isarlint::load_config_file(options.config_file);
    } catch (const std::exception& e) {
      return fail_usage(e.what());
    }
  }
  if (options.run.bundles.empty() && config.bundles)
    options.run.bundles = *config.bundles;
  if (options.run.enable.empty() && config.enable)
    options.run.enable = *config.enable;
  if (options.run.disable.empty() && config.disable)
    options.run.disable = *config.disable;
  if (fail_option->count() == 0 && config.fail_level)
    options.fail_level_name = *config.fail_level;
  isarlint::apply_rule_set_overrides(options.run.rule_sets, config);

  if (!options.fail_level_name.empty()) {
    if (options.fail_level_name == "none") {
      options.run.fail_level.reset();
    } else if (auto severity = isarlint::parse_severity(
                   options.fail_level_name)) {
      options.run.fail_level = *severity;
    } else {
      return fail_usage("invalid fail level: " + options.fail_level_name);
    }
  }
  options.run.format = *isarlint::parse_format(options.format_name);
  if (options.run.threads == 0)
    options.run.threads = std::max(1u, std::thread::hardware_concurrency());

  isarlint::LintStore store =
      isarlint::builtin_store(options.run.rule_sets);

  if (options.docs) {
    std::cout << isarlint::generate_docs(store);
    return 0;
  }
  if (options.list_lints) {
    for (const std::string& name : store.lint_names()) {
      const auto& descriptor = store.find(name)->descriptor();
      std::cout << name << " (" << isarlint::to_string(descriptor.severity)
                << "): " << descriptor.short_description << "\n";
    }
    return 0;
  }

  if (options.run.inputs.empty())
    return fail_usage("no input paths (see --help)");

  isarlint::Selection selection;
  try {
    selection = isarlint::resolve_selection(store, options.run.bundles,
                                            options.run.enable,
                                            options.run.disable);
  } catch (const std::exception& e) {
    return fail_usage(e.what());
  }

  isarlint::KeywordTable keywords = isarlint::builtin_keyword_table();
  if (!options.run.keywords_file.empty()) {
    try {
      isarlint::load_keyword_file(keywords, options.run.keywords_file);
    } catch (const std::exception& e) {
      return fail_usage(e.what());
    }
  }

  std::vector<std::string> discovery_errors;
  const std::vector<std::string> files =
      isarlint::discover_theory_files(options.run.inputs, discovery_errors);
  for (const std::string& error : discovery_errors)
    std::cerr << "isar-lint: " << error << "\n";
  if (!discovery_errors.empty() && !options.run.keep_going) return 2;

  isarlint::RunOutcome outcome = isarlint::lint_files(
      files, keywords, selection, store, options.run.threads);
  for (const std::string& error : outcome.io_errors)
    std::cerr << "isar-lint: " << error << "\n";
  if (!outcome.io_errors.empty() && !options.run.keep_going) return 2;

  const auto& reports = outcome.reports;
  switch (options.run.format) {
    case isarlint::OutputFormat::Text: {
      for (const isarlint::Report& report : reports)
        std::cout << isarlint::text_diagnostics(report);
      const isarlint::CorpusStats stats = isarlint::aggregate_stats(
          {reports.data(), reports.size()});
      std::cout << isarlint::text_summary_line(stats);
      if (options.run.stats) std::cout << isarlint::text_stats(stats);
      break;
    }
    case isarlint::OutputFormat::Json:
      std::cout << isarlint::present_json({reports.data(), reports.size()});
      break;
    case isarlint::OutputFormat::Xml:
      std::cout << isarlint::present_xml({reports.data(), reports.size()});
      break;
  }

  return isarlint::exit_code_for({reports.data(), reports.size()},
                                 options.run.fail_level);
}
