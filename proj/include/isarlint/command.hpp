#pragma once

// Commands: maximal token spans starting at a command keyword. Commands
// partition the token stream of a document; trailing white space and
// comments belong to the preceding command.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "isarlint/token.hpp"

namespace isarlint {

struct Command {
  std::string keyword;  // empty for the synthetic preamble
  CommandCategory category = CommandCategory::Other;
  std::size_t first_token = 0;  // index into the document token stream
  std::size_t token_count = 0;
  std::size_t index = 0;  // position among the document's commands

  bool is_preamble() const { return keyword.empty(); }

  std::span<const Token> tokens(const std::vector<Token>& all) const {
    return {all.data() + first_token, token_count};
  }

  // Indices of this command's proper tokens.
  std::vector<std::size_t> proper_tokens(const std::vector<Token>& all) const {
    std::vector<std::size_t> out;
    for (std::size_t i = first_token; i < first_token + token_count; ++i)
      if (all[i].is_proper()) out.push_back(i);
    return out;
  }

  // Range from the first to the last proper token; the full span with its
  // trailing comments would produce noisy positions. Falls back to the raw
  // span when the command has no proper content.
  SourceRange proper_range(const std::vector<Token>& all) const {
    std::size_t first = first_token;
    std::size_t last = first_token + token_count;  // exclusive
    while (first < last && !all[first].is_proper()) ++first;
    while (last > first && !all[last - 1].is_proper()) --last;
    if (first == last) {
      first = first_token;
      last = first_token + token_count;
    }
    SourceRange range = all[first].range;
    range.end_line = all[last - 1].range.end_line;
    range.end_col = all[last - 1].range.end_col;
    range.byte_offset_end = all[last - 1].range.byte_offset_end;
    return range;
  }
};

// A new command starts at every Command-kind token. Anything before the
// first command (leading comments, stray tokens) becomes a synthetic
// preamble command with an empty keyword.
inline std::vector<Command> split_commands(const std::vector<Token>& tokens) {
  std::vector<Command> commands;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    if (end == start) return;
    Command cmd;
    if (tokens[start].kind == TokenKind::Command) {
      cmd.keyword = tokens[start].source;
      cmd.category = tokens[start].command_category;
    }
    cmd.first_token = start;
    cmd.token_count = end - start;
    cmd.index = commands.size();
    commands.push_back(std::move(cmd));
    start = end;
  };
  for (std::size_t i = 0; i < tokens.size(); ++i)
    if (tokens[i].kind == TokenKind::Command) flush(i);
  flush(tokens.size());
  return commands;
}

// Drops the preamble and any command without proper content.
inline std::vector<std::size_t> proper_command_indices(
    const std::vector<Command>& commands, const std::vector<Token>& tokens) {
  std::vector<std::size_t> out;
  for (const Command& cmd : commands) {
    if (cmd.is_preamble()) continue;
    bool has_proper = false;
    for (const Token& token : cmd.tokens(tokens))
      if (token.is_proper()) {
        has_proper = true;
        break;
      }
    if (has_proper) out.push_back(cmd.index);
  }
  return out;
}

inline std::vector<Command> proper_commands(
    const std::vector<Command>& commands, const std::vector<Token>& tokens) {
  std::vector<Command> out;
  for (std::size_t index : proper_command_indices(commands, tokens))
    out.push_back(commands[index]);
  return out;
}

}  // namespace isarlint
