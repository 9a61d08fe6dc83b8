#pragma once

// Per-file analysis state: tokens, commands, parsed methods and statement
// heads, computed once so every lint reads the same snapshot.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isarlint/command.hpp"
#include "isarlint/keyword_table.hpp"
#include "isarlint/lexer.hpp"
#include "isarlint/method_parser.hpp"
#include "isarlint/statement.hpp"

namespace isarlint {

struct TheoryDocument {
  std::string path;
  std::string text;
  std::vector<Token> tokens;
  std::vector<Command> commands;
  std::vector<std::size_t> proper;  // indices of proper commands
  // Aligned with `commands`:
  std::vector<CommandMethods> methods;
  std::vector<std::optional<StatementHead>> heads;
  std::size_t sloc = 0;

  const Command& command(std::size_t index) const { return commands[index]; }

  std::string_view source_of(const SourceRange& range) const {
    return std::string_view(text).substr(
        range.byte_offset_start,
        range.byte_offset_end - range.byte_offset_start);
  }
};

inline TheoryDocument analyze(std::string path, std::string text,
                              const KeywordTable& keywords) {
  TheoryDocument doc;
  doc.path = std::move(path);
  doc.text = std::move(text);
  doc.tokens = tokenize(doc.text, keywords);
  doc.commands = split_commands(doc.tokens);
  doc.proper = proper_command_indices(doc.commands, doc.tokens);
  doc.sloc = source_lines_of_code(doc.tokens);
  doc.methods.reserve(doc.commands.size());
  doc.heads.reserve(doc.commands.size());
  for (const Command& command : doc.commands) {
    doc.methods.push_back(methods_of_command(doc.tokens, command));
    doc.heads.push_back(parse_statement_head(doc.tokens, command));
  }
  return doc;
}

}  // namespace isarlint
