#pragma once

// File discovery and the parallel linting run. Files are linted in
// parallel up to the configured thread count; reports come back in
// deterministic path order regardless.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "isarlint/config.hpp"
#include "isarlint/document.hpp"
#include "isarlint/store.hpp"

namespace isarlint {

// Recursively collects `.thy` files under each input path; a path that is
// itself a file is taken as-is. Missing paths land in `errors`.
inline std::vector<std::string> discover_theory_files(
    const std::vector<std::string>& inputs, std::vector<std::string>& errors) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const std::string& input : inputs) {
    std::error_code ec;
    const fs::path path(input);
    if (fs::is_regular_file(path, ec)) {
      files.push_back(path.string());
    } else if (fs::is_directory(path, ec)) {
      for (auto it = fs::recursive_directory_iterator(path, ec);
           !ec && it != fs::recursive_directory_iterator(); ++it)
        if (it->is_regular_file() && it->path().extension() == ".thy")
          files.push_back(it->path().string());
      if (ec) errors.push_back(input + ": " + ec.message());
    } else {
      errors.push_back(input + ": no such file or directory");
    }
  }
  std::sort(files.begin(), files.end());
  files.erase(std::unique(files.begin(), files.end()), files.end());
  return files;
}

struct RunOutcome {
  std::vector<Report> reports;  // in path order
  std::vector<std::string> io_errors;
};

inline std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline RunOutcome lint_files(const std::vector<std::string>& files,
                             const KeywordTable& keywords,
                             const Selection& selection, const LintStore& store,
                             std::size_t threads) {
  RunOutcome outcome;
  outcome.reports.resize(files.size());
  std::vector<char> failed(files.size(), 0);
  std::atomic<std::size_t> next{0};
  const std::size_t worker_count =
      std::max<std::size_t>(1, std::min(threads, files.size()));

  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= files.size()) return;
      auto text = read_file(files[i]);
      if (!text) {
        failed[i] = 1;
        continue;
      }
      TheoryDocument doc = analyze(files[i], std::move(*text), keywords);
      outcome.reports[i] = lint_document(doc, selection, store);
    }
  };

  if (worker_count <= 1) {
    work();
  } else {
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (std::size_t i = 0; i < worker_count; ++i) workers.emplace_back(work);
    for (std::thread& worker : workers) worker.join();
  }

  // Drop failed slots, keeping path order for the rest.
  std::vector<Report> kept;
  kept.reserve(files.size());
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (failed[i])
      outcome.io_errors.push_back(files[i] + ": cannot read file");
    else
      kept.push_back(std::move(outcome.reports[i]));
  }
  outcome.reports = std::move(kept);
  return outcome;
}

// Exit status from the results and the fail level: 0 when nothing reaches
// the level, 1 otherwise. Usage and IO problems are the caller's exit 2.
inline int exit_code_for(std::span<const Report> reports,
                         std::optional<Severity> fail_level) {
  if (!fail_level) return 0;
  for (const Report& report : reports)
    for (const LintResult& result : report.results)
      if (result.severity >= *fail_level) return 1;
  return 0;
}

}  // namespace isarlint
