#pragma once

// Heads of goal statements, `declare`, `lemmas` and `axiomatization`
// commands: optional name, attribute lists, and the `where` clause. Built
// on the token cursor; anything that does not parse leaves the command
// unlintable for head-based rules.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isarlint/command.hpp"
#include "isarlint/cursor.hpp"
#include "isarlint/token.hpp"

namespace isarlint {

struct Attribute {
  std::string name;
  std::vector<Token> args;

  bool has_arg(std::string_view word) const {
    for (const Token& t : args)
      if (t.source == word) return true;
    return false;
  }
};

struct StatementHead {
  std::string keyword;
  std::optional<std::string> name;
  std::vector<Attribute> attributes;
  bool has_where_clause = false;
};

namespace detail {

// Attribute list between `[` and `]`: name, raw argument tokens, commas.
// The cursor must sit on `[`; consumes through the matching `]`.
inline std::optional<std::vector<Attribute>> parse_attribute_list(
    TokenCursor& cursor) {
  const std::size_t mark = cursor.position();
  if (!cursor.expect_word("[")) return std::nullopt;
  std::vector<Attribute> attributes;
  if (cursor.expect_word("]")) return attributes;  // empty list
  while (true) {
    const Token* name = cursor.expect_name();
    if (!name) {
      cursor.rewind(mark);
      return std::nullopt;
    }
    Attribute attribute;
    attribute.name = name->source;
    long depth = 0;
    while (const Token* t = cursor.peek()) {
      if (depth == 0 && (t->source == "," || t->source == "]")) break;
      if (t->source == "[" || t->source == "(") ++depth;
      if (t->source == "]" || t->source == ")") --depth;
      attribute.args.push_back(*t);
      cursor.advance();
    }
    attributes.push_back(std::move(attribute));
    if (cursor.expect_word(",")) continue;
    if (cursor.expect_word("]")) return attributes;
    cursor.rewind(mark);
    return std::nullopt;
  }
}

inline std::vector<Token> proper_tokens_of(const std::vector<Token>& all,
                                           const Command& command) {
  std::vector<Token> out;
  for (const Token& t : command.tokens(all))
    if (t.is_proper()) out.push_back(t);
  return out;
}

}  // namespace detail

// Parses the head of a goal statement, `declare`, `lemmas` or
// `axiomatization`. For `lemmas` every attribute list in the command is
// collected (the interesting attributes sit on the right-hand side); goal
// statements only surface the attributes of their head.
inline std::optional<StatementHead> parse_statement_head(
    const std::vector<Token>& all_tokens, const Command& command) {
  const bool goal = command.category == CommandCategory::GoalStatement;
  const bool applies = goal || command.keyword == "declare" ||
                       command.keyword == "lemmas" ||
                       command.keyword == "axiomatization";
  if (!applies) return std::nullopt;

  std::vector<Token> proper = detail::proper_tokens_of(all_tokens, command);
  TokenCursor cursor({proper.data(), proper.size()});
  cursor.advance();  // command keyword

  StatementHead head;
  head.keyword = command.keyword;

  // optional locale target `(in name)`
  {
    const combinators::Parser<bool> target =
        [](TokenCursor& c) -> std::optional<bool> {
      if (c.expect_word("(") && c.expect_word("in") && c.expect_name() &&
          c.expect_word(")"))
        return true;
      return std::nullopt;
    };
    combinators::opt(cursor, target);
  }

  if (goal || command.keyword == "lemmas") {
    // `name`, `name[attrs]` or `[attrs]`, each valid only when followed by
    // `:` (goals) or `=` (lemmas); otherwise the statement is unnamed and
    // the token belongs to the body.
    const std::size_t mark = cursor.position();
    const Token* name = cursor.expect(TokenKind::Ident);
    if (!name) name = cursor.expect(TokenKind::LongIdent);
    std::vector<Attribute> attributes;
    bool bracketed = false;
    if (cursor.peek() && cursor.peek()->source == "[") {
      if (auto parsed = detail::parse_attribute_list(cursor)) {
        attributes = std::move(*parsed);
        bracketed = true;
      }
    }
    const Token* next = cursor.peek();
    const bool anchored =
        next && (next->source == ":" || (command.keyword == "lemmas" &&
                                         next->source == "="));
    if ((name || bracketed) && anchored) {
      if (name) head.name = name->source;
      head.attributes = std::move(attributes);
    } else {
      cursor.rewind(mark);
    }
  }

  if (command.keyword == "lemmas") {
    // collect right-hand side attribute lists as well
    while (!cursor.done()) {
      if (cursor.peek()->source == "[") {
        if (auto parsed = detail::parse_attribute_list(cursor)) {
          for (Attribute& attribute : *parsed)
            head.attributes.push_back(std::move(attribute));
          continue;
        }
      }
      cursor.advance();
    }
  }

  if (command.keyword == "axiomatization") {
    long depth = 0;
    while (!cursor.done()) {
      const Token& t = cursor.advance();
      if (t.source == "[" || t.source == "(") ++depth;
      if (t.source == "]" || t.source == ")") --depth;
      if (depth == 0 && t.kind == TokenKind::Keyword && t.source == "where")
        head.has_where_clause = true;
    }
  }

  return head;
}

// `declare` content: (fact, attribute, delete?) triples, one per attribute
// in each `fact[attrs]` group. Configuration options `[[...]]` are skipped.
struct DeclaredAttribute {
  std::string fact;
  std::string attribute;
  bool deleted = false;
};

inline std::vector<DeclaredAttribute> declared_attributes(
    const std::vector<Token>& all_tokens, const Command& command) {
  std::vector<DeclaredAttribute> out;
  if (command.keyword != "declare") return out;
  std::vector<Token> proper = detail::proper_tokens_of(all_tokens, command);
  TokenCursor cursor({proper.data(), proper.size()});
  cursor.advance();  // `declare`

  using combinators::Parser;
  static const Parser<const Token*> name_parsers[] = {
      [](TokenCursor& c) -> std::optional<const Token*> {
        if (const Token* t = c.expect(TokenKind::Ident)) return t;
        return std::nullopt;
      },
      [](TokenCursor& c) -> std::optional<const Token*> {
        if (const Token* t = c.expect(TokenKind::LongIdent)) return t;
        return std::nullopt;
      },
  };
  const Parser<std::vector<DeclaredAttribute>> fact_group =
      [](TokenCursor& c) -> std::optional<std::vector<DeclaredAttribute>> {
    const auto fact = combinators::alt<const Token*>(c, name_parsers);
    if (!fact) return std::nullopt;
    std::vector<DeclaredAttribute> group;
    if (c.peek() && c.peek()->source == "[" &&
        !(c.peek(1) && c.peek(1)->source == "[")) {
      if (auto attributes = detail::parse_attribute_list(c))
        for (const Attribute& attribute : *attributes)
          group.push_back(
              {(*fact)->source, attribute.name, attribute.has_arg("del")});
    }
    return group;
  };

  while (!cursor.done()) {
    for (auto& group : combinators::many(cursor, fact_group))
      out.insert(out.end(), group.begin(), group.end());
    if (!cursor.done()) cursor.advance();  // step over `and`, options, ...
  }
  return out;
}

// Options of a command: entries of bracket groups, `name` or
// `name = value`. Single brackets carry command options (`nitpick
// [expect = genuine]`); double brackets carry configuration changes
// (`declare [[smt_oracle]]`).
struct CommandOption {
  std::string name;
  std::vector<Token> value;  // empty when the option has no value
  bool double_bracketed = false;

  bool value_is(std::string_view word) const {
    return value.size() == 1 && value.front().source == word;
  }
};

inline std::vector<CommandOption> command_options(
    const std::vector<Token>& all_tokens, const Command& command) {
  std::vector<CommandOption> out;
  std::vector<Token> proper = detail::proper_tokens_of(all_tokens, command);
  TokenCursor cursor({proper.data(), proper.size()});
  while (!cursor.done()) {
    if (cursor.peek()->source != "[") {
      cursor.advance();
      continue;
    }
    bool double_bracketed = false;
    const std::size_t mark = cursor.position();
    cursor.advance();
    if (cursor.peek() && cursor.peek()->source == "[") {
      double_bracketed = true;
      cursor.advance();
    }
    // name (= value)? (, name (= value)?)* up to the closing bracket(s)
    while (true) {
      const Token* name = cursor.expect_name();
      if (!name) break;
      CommandOption option;
      option.name = name->source;
      option.double_bracketed = double_bracketed;
      if (cursor.expect_word("=")) {
        long depth = 0;
        while (const Token* t = cursor.peek()) {
          if (depth == 0 && (t->source == "," || t->source == "]")) break;
          if (t->source == "[" || t->source == "(") ++depth;
          if (t->source == "]" || t->source == ")") --depth;
          option.value.push_back(*t);
          cursor.advance();
        }
      }
      out.push_back(std::move(option));
      if (!cursor.expect_word(",")) break;
    }
    // skip to just past this group to avoid rescanning its innards
    if (cursor.position() == mark + (double_bracketed ? 2 : 1))
      cursor.advance();  // nothing parsed: step inside to make progress
  }
  return out;
}

}  // namespace isarlint
