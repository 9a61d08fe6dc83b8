#pragma once

// The lint interface and its three abstractions. A lint is a name, a
// severity, and a check over the commands of a document that appends its
// results to a report. Concrete rules implement one of the adapters:
//
//   ParserLint          — one command at a time, raw tokens
//   AstLint             — method / statement-head hooks over the parsed AST
//   ProperCommandsLint  — the whole filtered command list (cross-command)

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isarlint/document.hpp"
#include "isarlint/token.hpp"

namespace isarlint {

enum class Severity { Info, Warn, Error };

inline std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::Info: return "info";
    case Severity::Warn: return "warn";
    case Severity::Error: return "error";
  }
  return "info";
}

inline std::optional<Severity> parse_severity(std::string_view name) {
  if (name == "info") return Severity::Info;
  if (name == "warn" || name == "warning") return Severity::Warn;
  if (name == "error") return Severity::Error;
  return std::nullopt;
}

enum class LintAbstraction { Parser, Ast, ProperCommands };

inline std::string_view to_string(LintAbstraction abstraction) {
  switch (abstraction) {
    case LintAbstraction::Parser: return "parser";
    case LintAbstraction::Ast: return "ast";
    case LintAbstraction::ProperCommands: return "proper_commands";
  }
  return "parser";
}

struct LintDescriptor {
  std::string name;  // unique snake_case identifier
  Severity severity = Severity::Info;
  std::string short_description;
  std::string long_description;
  LintAbstraction abstraction = LintAbstraction::Parser;
};

struct Edit {
  SourceRange range;
  std::string replacement;
};

struct LintResult {
  std::string lint_name;
  Severity severity = Severity::Info;
  std::string message;
  SourceRange range;
  std::size_t command_index = 0;
  std::optional<Edit> edit;
};

// Results of linting one file, ordered by (start position, lint name).
struct Report {
  std::string path;
  std::vector<LintResult> results;
  std::size_t sloc = 0;
};

inline bool result_order(const LintResult& a, const LintResult& b) {
  if (a.range.byte_offset_start != b.range.byte_offset_start)
    return a.range.byte_offset_start < b.range.byte_offset_start;
  if (a.lint_name != b.lint_name) return a.lint_name < b.lint_name;
  return a.range.byte_offset_end < b.range.byte_offset_end;
}

class Lint {
 public:
  explicit Lint(LintDescriptor descriptor)
      : descriptor_(std::move(descriptor)) {}
  virtual ~Lint() = default;

  const LintDescriptor& descriptor() const { return descriptor_; }

  virtual void check(const TheoryDocument& doc,
                     std::vector<LintResult>& out) const = 0;

 protected:
  LintResult make_result(const Command& command, SourceRange range,
                         std::string message) const {
    LintResult result;
    result.lint_name = descriptor_.name;
    result.severity = descriptor_.severity;
    result.message = std::move(message);
    result.range = range;
    result.command_index = command.index;
    return result;
  }

 private:
  LintDescriptor descriptor_;
};

// One proper command at a time; implementations parse the anti-pattern out
// of the command's raw tokens.
class ParserLint : public Lint {
 public:
  using Lint::Lint;
  void check(const TheoryDocument& doc,
             std::vector<LintResult>& out) const final {
    for (std::size_t index : doc.proper)
      lint_command(doc, doc.commands[index], out);
  }

 protected:
  virtual void lint_command(const TheoryDocument& doc, const Command& command,
                            std::vector<LintResult>& out) const = 0;
};

// Pattern matching over the partial AST; override only the hooks the rule
// is concerned with. Commands whose methods failed to parse are skipped.
class AstLint : public Lint {
 public:
  using Lint::Lint;
  void check(const TheoryDocument& doc,
             std::vector<LintResult>& out) const final {
    for (std::size_t index : doc.proper) {
      const Command& command = doc.commands[index];
      for (const Method& method : doc.methods[index].methods)
        lint_method(doc, command, method, out);
      if (doc.heads[index]) lint_statement(doc, command, *doc.heads[index], out);
    }
  }

 protected:
  virtual void lint_method(const TheoryDocument&, const Command&,
                           const Method&, std::vector<LintResult>&) const {}
  virtual void lint_statement(const TheoryDocument&, const Command&,
                              const StatementHead&,
                              std::vector<LintResult>&) const {}
};

// The filtered command list at once, for rules spanning several commands.
class ProperCommandsLint : public Lint {
 public:
  using Lint::Lint;
  void check(const TheoryDocument& doc,
             std::vector<LintResult>& out) const final {
    lint_commands(doc, doc.proper, out);
  }

 protected:
  virtual void lint_commands(const TheoryDocument& doc,
                             std::span<const std::size_t> proper,
                             std::vector<LintResult>& out) const = 0;
};

}  // namespace isarlint
