#pragma once

// A backtracking cursor over proper tokens plus the small combinator set
// the parser lints are written with. A successful parse consumes a prefix;
// a failed one consumes nothing.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isarlint/token.hpp"

namespace isarlint {

class TokenCursor {
 public:
  TokenCursor() = default;
  explicit TokenCursor(std::span<const Token> tokens) : tokens_(tokens) {}

  bool done() const { return pos_ >= tokens_.size(); }
  std::size_t position() const { return pos_; }
  void rewind(std::size_t pos) { pos_ = pos; }
  std::size_t size() const { return tokens_.size(); }

  const Token* peek(std::size_t ahead = 0) const {
    return pos_ + ahead < tokens_.size() ? &tokens_[pos_ + ahead] : nullptr;
  }

  const Token& advance() { return tokens_[pos_++]; }

  // expect-kind: consume a token of `kind`, or fail without consuming.
  const Token* expect(TokenKind kind) {
    if (!done() && tokens_[pos_].kind == kind) return &tokens_[pos_++];
    return nullptr;
  }

  // expect-word: consume a token whose source equals `word`.
  const Token* expect_word(std::string_view word) {
    if (!done() && tokens_[pos_].source == word) return &tokens_[pos_++];
    return nullptr;
  }

  // A name-ish token: identifiers and symbolic identifiers. Minor keywords
  // pass too; attribute names such as `where` lex as keywords.
  const Token* expect_name() {
    if (done()) return nullptr;
    switch (tokens_[pos_].kind) {
      case TokenKind::Ident:
      case TokenKind::LongIdent:
      case TokenKind::SymIdent:
      case TokenKind::Keyword:
      case TokenKind::Nat:
        return &tokens_[pos_++];
      default:
        return nullptr;
    }
  }

  std::span<const Token> tokens() const { return tokens_; }

 private:
  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
};

namespace combinators {

template <typename T>
using Parser = std::function<std::optional<T>(TokenCursor&)>;

// optional: always succeeds, consuming the inner parse when it applies.
template <typename T>
std::optional<std::optional<T>> opt(TokenCursor& cursor,
                                    const Parser<T>& parser) {
  const std::size_t mark = cursor.position();
  if (auto value = parser(cursor)) return std::optional<T>(std::move(*value));
  cursor.rewind(mark);
  return std::optional<T>();
}

// many: zero or more, stopping at the first failure.
template <typename T>
std::vector<T> many(TokenCursor& cursor, const Parser<T>& parser) {
  std::vector<T> values;
  while (true) {
    const std::size_t mark = cursor.position();
    auto value = parser(cursor);
    if (!value) {
      cursor.rewind(mark);
      return values;
    }
    values.push_back(std::move(*value));
  }
}

// alternation: first parser that succeeds wins; none consumes on failure.
template <typename T>
std::optional<T> alt(TokenCursor& cursor,
                     std::span<const Parser<T>> parsers) {
  const std::size_t mark = cursor.position();
  for (const auto& parser : parsers) {
    if (auto value = parser(cursor)) return value;
    cursor.rewind(mark);
  }
  return std::nullopt;
}

// sequencing: both or nothing.
template <typename A, typename B>
std::optional<std::pair<A, B>> seq(TokenCursor& cursor, const Parser<A>& first,
                                   const Parser<B>& second) {
  const std::size_t mark = cursor.position();
  auto a = first(cursor);
  if (!a) {
    cursor.rewind(mark);
    return std::nullopt;
  }
  auto b = second(cursor);
  if (!b) {
    cursor.rewind(mark);
    return std::nullopt;
  }
  return std::make_pair(std::move(*a), std::move(*b));
}

}  // namespace combinators

// Tokens of a balanced bracket group. The cursor must sit on `open`;
// consumes through the matching `close` and returns the inner token span
// boundaries (exclusive of the delimiters), or fails without consuming.
struct BracketGroup {
  std::size_t inner_first = 0;  // cursor positions
  std::size_t inner_last = 0;   // exclusive
};

inline std::optional<BracketGroup> take_group(TokenCursor& cursor,
                                              std::string_view open,
                                              std::string_view close) {
  const std::size_t mark = cursor.position();
  if (!cursor.expect_word(open)) return std::nullopt;
  BracketGroup group;
  group.inner_first = cursor.position();
  std::size_t depth = 1;
  while (!cursor.done()) {
    const Token& token = cursor.advance();
    if (token.source == open) {
      ++depth;
    } else if (token.source == close) {
      if (--depth == 0) {
        group.inner_last = cursor.position() - 1;
        return group;
      }
    }
  }
  cursor.rewind(mark);
  return std::nullopt;
}

}  // namespace isarlint
