#pragma once

// Corpus-level statistics: per-lint occurrence counts, per-severity counts
// and shares, and the lines-per-lint ratio.

#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "isarlint/lint.hpp"

namespace isarlint {

struct CorpusStats {
  std::map<std::string, std::size_t> per_lint;
  std::size_t info_count = 0;
  std::size_t warn_count = 0;
  std::size_t error_count = 0;
  std::size_t total = 0;
  std::size_t total_sloc = 0;

  std::size_t severity_count(Severity severity) const {
    switch (severity) {
      case Severity::Info: return info_count;
      case Severity::Warn: return warn_count;
      case Severity::Error: return error_count;
    }
    return 0;
  }

  // Percentage of all lints with the given severity; 0 when empty.
  double share(Severity severity) const {
    if (total == 0) return 0.0;
    return 100.0 * static_cast<double>(severity_count(severity)) /
           static_cast<double>(total);
  }

  // Undefined when nothing triggered.
  std::optional<double> lines_per_lint() const {
    if (total == 0) return std::nullopt;
    return static_cast<double>(total_sloc) / static_cast<double>(total);
  }

  void add(const Report& report) {
    total_sloc += report.sloc;
    for (const LintResult& result : report.results) {
      ++per_lint[result.lint_name];
      ++total;
      switch (result.severity) {
        case Severity::Info: ++info_count; break;
        case Severity::Warn: ++warn_count; break;
        case Severity::Error: ++error_count; break;
      }
    }
  }
};

inline CorpusStats aggregate_stats(std::span<const Report> reports) {
  CorpusStats stats;
  for (const Report& report : reports) stats.add(report);
  return stats;
}

// Stats compose over report concatenation.
inline CorpusStats merge(CorpusStats left, const CorpusStats& right) {
  for (const auto& [name, count] : right.per_lint) left.per_lint[name] += count;
  left.info_count += right.info_count;
  left.warn_count += right.warn_count;
  left.error_count += right.error_count;
  left.total += right.total;
  left.total_sloc += right.total_sloc;
  return left;
}

}  // namespace isarlint
