#pragma once

// Presenters: text, JSON and XML renderings of reports and corpus stats.
// The three formats carry the same (lint, position, severity) content; the
// JSON shape is pinned by schema/report.schema.json.

#include <cmath>
#include <cstdio>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "isarlint/lint.hpp"
#include "isarlint/stats.hpp"

namespace isarlint {

namespace presenter_detail {

inline std::string one_decimal(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.1f", value);
  return buffer;
}

inline double round_one_decimal(double value) {
  return std::round(value * 10.0) / 10.0;
}

inline std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace presenter_detail

// One line per result: `path:line:col: severity: message [lint_name]`.
inline std::string text_diagnostics(const Report& report) {
  std::string out;
  for (const LintResult& result : report.results) {
    out += report.path;
    out += ':';
    out += std::to_string(result.range.start_line);
    out += ':';
    out += std::to_string(result.range.start_col);
    out += ": ";
    out += to_string(result.severity);
    out += ": ";
    out += result.message;
    out += " [";
    out += result.lint_name;
    out += "]\n";
  }
  return out;
}

inline std::string text_summary_line(const CorpusStats& stats) {
  std::string out = "problems: " + std::to_string(stats.total);
  out += " (errors: " + std::to_string(stats.error_count);
  out += ", warnings: " + std::to_string(stats.warn_count);
  out += ", infos: " + std::to_string(stats.info_count) + ")\n";
  return out;
}

// Per-lint counts and severity shares, percentages at one decimal with the
// raw counts alongside.
inline std::string text_stats(const CorpusStats& stats) {
  using presenter_detail::one_decimal;
  std::string out = "lint counts:\n";
  for (const auto& [name, count] : stats.per_lint)
    out += "  " + name + ": " + std::to_string(count) + "\n";
  out += "severity shares: errors " + one_decimal(stats.share(Severity::Error)) +
         "% (" + std::to_string(stats.error_count) + "), warnings " +
         one_decimal(stats.share(Severity::Warn)) + "% (" +
         std::to_string(stats.warn_count) + "), infos " +
         one_decimal(stats.share(Severity::Info)) + "% (" +
         std::to_string(stats.info_count) + ")\n";
  out += "total lints: " + std::to_string(stats.total) + "\n";
  out += "total sloc: " + std::to_string(stats.total_sloc) + "\n";
  out += "lines per lint: ";
  if (auto ratio = stats.lines_per_lint())
    out += one_decimal(*ratio);
  else
    out += "\xe2\x80\x94";  // em dash: undefined
  out += "\n";
  return out;
}

inline std::string present_text(const Report& report) {
  CorpusStats stats = aggregate_stats({&report, 1});
  return text_diagnostics(report) + text_summary_line(stats);
}

namespace presenter_detail {

inline nlohmann::ordered_json json_of_result(const LintResult& result) {
  nlohmann::ordered_json lint;
  lint["name"] = result.lint_name;
  lint["severity"] = std::string(to_string(result.severity));
  lint["start_line"] = result.range.start_line;
  lint["start_col"] = result.range.start_col;
  lint["end_line"] = result.range.end_line;
  lint["end_col"] = result.range.end_col;
  lint["message"] = result.message;
  if (result.edit) {
    nlohmann::ordered_json edit;
    edit["start_line"] = result.edit->range.start_line;
    edit["start_col"] = result.edit->range.start_col;
    edit["end_line"] = result.edit->range.end_line;
    edit["end_col"] = result.edit->range.end_col;
    edit["replacement"] = result.edit->replacement;
    lint["edit"] = std::move(edit);
  } else {
    lint["edit"] = nullptr;
  }
  return lint;
}

inline nlohmann::ordered_json json_of_summary(const CorpusStats& stats) {
  nlohmann::ordered_json summary;
  summary["total"] = stats.total;
  nlohmann::ordered_json severities;
  for (Severity severity : {Severity::Info, Severity::Warn, Severity::Error}) {
    nlohmann::ordered_json entry;
    entry["count"] = stats.severity_count(severity);
    entry["share"] = round_one_decimal(stats.share(severity));
    severities[std::string(to_string(severity))] = std::move(entry);
  }
  summary["severities"] = std::move(severities);
  nlohmann::ordered_json counts(nlohmann::json::value_t::object);
  for (const auto& [name, count] : stats.per_lint) counts[name] = count;
  summary["lint_counts"] = std::move(counts);
  summary["total_sloc"] = stats.total_sloc;
  if (auto ratio = stats.lines_per_lint())
    summary["lines_per_lint"] = round_one_decimal(*ratio);
  else
    summary["lines_per_lint"] = nullptr;
  return summary;
}

}  // namespace presenter_detail

inline std::string present_json(std::span<const Report> reports) {
  nlohmann::ordered_json root;
  nlohmann::ordered_json files(nlohmann::json::value_t::array);
  for (const Report& report : reports) {
    nlohmann::ordered_json file;
    file["path"] = report.path;
    file["sloc"] = report.sloc;
    nlohmann::ordered_json lints(nlohmann::json::value_t::array);
    for (const LintResult& result : report.results)
      lints.push_back(presenter_detail::json_of_result(result));
    file["lints"] = std::move(lints);
    files.push_back(std::move(file));
  }
  root["files"] = std::move(files);
  root["summary"] = presenter_detail::json_of_summary(aggregate_stats(reports));
  return root.dump(2) + "\n";
}

inline std::string present_json(const Report& report) {
  return present_json(std::span<const Report>(&report, 1));
}

inline std::string present_xml(std::span<const Report> reports) {
  using presenter_detail::one_decimal;
  using presenter_detail::xml_escape;
  const CorpusStats stats = aggregate_stats(reports);
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<lint_report>\n  <files>\n";
  for (const Report& report : reports) {
    out += "    <file path=\"" + xml_escape(report.path) + "\" sloc=\"" +
           std::to_string(report.sloc) + "\">\n";
    for (const LintResult& result : report.results) {
      out += "      <lint name=\"" + xml_escape(result.lint_name) +
             "\" severity=\"" + std::string(to_string(result.severity)) +
             "\" start_line=\"" + std::to_string(result.range.start_line) +
             "\" start_col=\"" + std::to_string(result.range.start_col) +
             "\" end_line=\"" + std::to_string(result.range.end_line) +
             "\" end_col=\"" + std::to_string(result.range.end_col) + "\">\n";
      out += "        <message>" + xml_escape(result.message) + "</message>\n";
      if (result.edit) {
        out += "        <edit start_line=\"" +
               std::to_string(result.edit->range.start_line) +
               "\" start_col=\"" +
               std::to_string(result.edit->range.start_col) +
               "\" end_line=\"" + std::to_string(result.edit->range.end_line) +
               "\" end_col=\"" + std::to_string(result.edit->range.end_col) +
               "\"><replacement>" + xml_escape(result.edit->replacement) +
               "</replacement></edit>\n";
      }
      out += "      </lint>\n";
    }
    out += "    </file>\n";
  }
  out += "  </files>\n";
  out += "  <summary total=\"" + std::to_string(stats.total) + "\" info=\"" +
         std::to_string(stats.info_count) + "\" warn=\"" +
         std::to_string(stats.warn_count) + "\" error=\"" +
         std::to_string(stats.error_count) + "\" info_share=\"" +
         one_decimal(stats.share(Severity::Info)) + "\" warn_share=\"" +
         one_decimal(stats.share(Severity::Warn)) + "\" error_share=\"" +
         one_decimal(stats.share(Severity::Error)) + "\" total_sloc=\"" +
         std::to_string(stats.total_sloc) + "\"";
  if (auto ratio = stats.lines_per_lint())
    out += " lines_per_lint=\"" + one_decimal(*ratio) + "\"";
  out += ">\n";
  for (const auto& [name, count] : stats.per_lint)
    out += "    <lint_count name=\"" + xml_escape(name) + "\" count=\"" +
           std::to_string(count) + "\"/>\n";
  out += "  </summary>\n</lint_report>\n";
  return out;
}

inline std::string present_xml(const Report& report) {
  return present_xml(std::span<const Report>(&report, 1));
}

}  // namespace isarlint
