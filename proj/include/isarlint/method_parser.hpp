#pragma once

// Recursive-descent parser for Isar method expressions.
//
// Combinator precedence, weakest binding first: '|', then ',', then ';';
// parentheses override, n-ary chains associate left. Postfix modifiers
// ('?', '+', '[n]') bind to the nearest method or parenthesized group.
// Everything inside a simple method that is not a combinator, modifier or
// closing delimiter at the current depth is kept as raw argument tokens.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isarlint/command.hpp"
#include "isarlint/method.hpp"
#include "isarlint/token.hpp"

namespace isarlint {

namespace detail {

inline bool is_method_name(const Token& t) {
  return t.kind == TokenKind::Ident || t.kind == TokenKind::LongIdent ||
         t.kind == TokenKind::SymIdent;
}

class MethodParser {
 public:
  explicit MethodParser(std::vector<Token> tokens)
      : tokens_(std::move(tokens)) {}

  std::optional<Method> expression() { return parse_level(0); }

  bool done() const { return pos_ >= tokens_.size(); }

  // Range of the offending token; past-the-end failures point just after
  // the last token.
  SourceRange error_range() const {
    if (tokens_.empty()) return {};
    if (error_at_ < tokens_.size()) return tokens_[error_at_].range;
    SourceRange after = tokens_.back().range;
    after.start_line = after.end_line;
    after.start_col = after.end_col;
    after.byte_offset_start = after.byte_offset_end;
    return after;
  }

  void flag_leftover() { note_error(pos_); }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t error_at_ = 0;
  bool error_set_ = false;

  static constexpr std::string_view kCombinators[] = {"|", ",", ";"};
  static constexpr Combinator kCombinatorKind[] = {
      Combinator::Alt, Combinator::Seq, Combinator::Structural};

  const Token* peek(std::size_t ahead = 0) const {
    return pos_ + ahead < tokens_.size() ? &tokens_[pos_ + ahead] : nullptr;
  }

  bool peek_word(std::string_view word) const {
    const Token* t = peek();
    return t && t->source == word;
  }

  void note_error(std::size_t at) {
    if (!error_set_) {
      error_at_ = at;
      error_set_ = true;
    }
  }

  void span_over(Method& method, std::size_t first, std::size_t last) const {
    method.range = tokens_[first].range;
    method.range.end_line = tokens_[last].range.end_line;
    method.range.end_col = tokens_[last].range.end_col;
    method.range.byte_offset_end = tokens_[last].range.byte_offset_end;
  }

  // Levels 0..2 are '|', ',', ';'; level 3 is a postfixed atom.
  std::optional<Method> parse_level(std::size_t level) {
    if (level == 3) return parse_postfixed();
    const std::size_t first = pos_;
    auto left = parse_level(level + 1);
    if (!left) return std::nullopt;
    while (peek_word(kCombinators[level])) {
      ++pos_;
      auto right = parse_level(level + 1);
      if (!right) return std::nullopt;
      Method node;
      node.kind = Method::Kind::Combined;
      node.combinator = kCombinatorKind[level];
      node.children.push_back(std::move(*left));
      node.children.push_back(std::move(*right));
      span_over(node, first, pos_ - 1);
      left = std::move(node);
    }
    return left;
  }

  std::optional<Method> parse_postfixed() {
    const std::size_t first = pos_;
    auto method = parse_atom();
    if (!method) return std::nullopt;
    std::vector<Modifier> modifiers = parse_modifiers();
    if (!modifiers.empty()) {
      if (method->kind == Method::Kind::Placeholder) {
        note_error(first);
        return std::nullopt;
      }
      method->modifiers.insert(method->modifiers.end(), modifiers.begin(),
                               modifiers.end());
    }
    if (pos_ > first) span_over(*method, first, pos_ - 1);
    return method;
  }

  std::vector<Modifier> parse_modifiers() {
    std::vector<Modifier> modifiers;
    while (true) {
      if (peek_word("?")) {
        modifiers.push_back({Modifier::Kind::Try, 1});
        ++pos_;
      } else if (peek_word("+")) {
        modifiers.push_back({Modifier::Kind::Repeat, 1});
        ++pos_;
      } else if (std::size_t length = restrict_length(pos_)) {
        std::size_t goals = 1;
        if (length == 3) goals = std::stoul(tokens_[pos_ + 1].source);
        modifiers.push_back({Modifier::Kind::Restrict, goals});
        pos_ += length;
      } else {
        return modifiers;
      }
    }
  }

  // `[`, optional nat, `]` starting at `at`; 0 when not that shape.
  std::size_t restrict_length(std::size_t at) const {
    if (at >= tokens_.size() || tokens_[at].source != "[") return 0;
    std::size_t i = at + 1;
    if (i < tokens_.size() && tokens_[i].kind == TokenKind::Nat) ++i;
    if (i < tokens_.size() && tokens_[i].source == "]") return i - at + 1;
    return 0;
  }

  std::optional<Method> parse_atom() {
    const Token* t = peek();
    if (!t) {
      note_error(pos_);
      return std::nullopt;
    }
    const std::size_t first = pos_;
    if (t->source == "(") {
      ++pos_;
      auto inner = expression();
      if (!inner) return std::nullopt;
      if (!peek_word(")")) {
        note_error(pos_);
        return std::nullopt;
      }
      ++pos_;
      span_over(*inner, first, pos_ - 1);
      return inner;
    }
    if (t->source == "-") {
      ++pos_;
      Method placeholder;
      placeholder.kind = Method::Kind::Placeholder;
      span_over(placeholder, first, first);
      return placeholder;
    }
    if (is_method_name(*t)) {
      ++pos_;
      Method simple;
      simple.kind = Method::Kind::Simple;
      simple.name = t->source;
      if (!scan_args(simple.args)) return std::nullopt;
      span_over(simple, first, pos_ - 1);
      return simple;
    }
    note_error(pos_);
    return std::nullopt;
  }

  // Raw argument tokens up to a terminator at the current depth; balanced
  // (...) and [...] groups are swallowed whole.
  bool scan_args(std::vector<Token>& args) {
    while (const Token* t = peek()) {
      const std::string_view source = t->source;
      if (source == "," || source == ";" || source == "|" || source == ")" ||
          source == "]" || source == "?" || source == "+")
        return true;
      if (source == "[" && restrict_length(pos_) > 0) return true;
      if (source == "(" || source == "[") {
        if (!swallow_group(args, source == "(" ? ")" : "]")) return false;
        continue;
      }
      args.push_back(*t);
      ++pos_;
    }
    return true;
  }

  bool swallow_group(std::vector<Token>& args, std::string_view close) {
    const std::size_t opener = pos_;
    const std::string_view open = tokens_[pos_].source;
    std::size_t depth = 0;
    while (const Token* t = peek()) {
      if (t->source == open) ++depth;
      if (t->source == close && --depth == 0) {
        args.push_back(*t);
        ++pos_;
        return true;
      }
      args.push_back(*t);
      ++pos_;
    }
    note_error(opener);
    return false;
  }
};

inline std::vector<Token> proper_only(std::span<const Token> tokens) {
  std::vector<Token> out;
  for (const Token& t : tokens)
    if (t.is_proper()) out.push_back(t);
  return out;
}

}  // namespace detail

// Parses one whole method expression; improper tokens are ignored.
// Returns nullopt if the tokens are not exactly one expression; the
// offending position lands in `error_range` when provided.
inline std::optional<Method> parse_method(std::span<const Token> tokens,
                                          SourceRange* error_range = nullptr) {
  detail::MethodParser parser(detail::proper_only(tokens));
  auto method = parser.expression();
  if (method && !parser.done()) {
    parser.flag_leftover();
    method.reset();
  }
  if (!method && error_range) *error_range = parser.error_range();
  return method;
}

// Method expressions attached to a command. `apply`, `apply_end` and
// `proof` carry one; `by` carries one or two; `proof` without a method (or
// with `-`) yields the placeholder. Commands of any other keyword have
// none. A parse failure marks the whole command unlintable for method
// rules rather than aborting.
struct CommandMethods {
  std::vector<Method> methods;
  bool malformed = false;
  SourceRange error_range;
};

inline CommandMethods methods_of_command(const std::vector<Token>& all_tokens,
                                         const Command& command) {
  CommandMethods out;
  const std::string_view keyword = command.keyword;
  const bool takes_method = keyword == "apply" || keyword == "apply_end" ||
                            keyword == "by" || keyword == "proof";
  if (!takes_method) return out;

  std::vector<Token> rest;
  for (std::size_t i = command.first_token + 1;
       i < command.first_token + command.token_count; ++i)
    if (all_tokens[i].is_proper()) rest.push_back(all_tokens[i]);

  auto fail = [&](SourceRange where) {
    out.methods.clear();
    out.malformed = true;
    out.error_range = where;
  };

  if (keyword == "proof") {
    if (rest.empty()) {
      Method placeholder;
      placeholder.kind = Method::Kind::Placeholder;
      placeholder.range = all_tokens[command.first_token].range;
      out.methods.push_back(std::move(placeholder));
      return out;
    }
    SourceRange error;
    if (auto method = parse_method(rest, &error)) {
      out.methods.push_back(std::move(*method));
    } else {
      fail(error);
    }
    return out;
  }

  if (keyword == "by") {
    // `by` takes one or two method expressions. A bare expression is a
    // name (or `-`) plus modifiers; arguments require parentheses, which
    // is what separates `by simp auto` from one method with arguments.
    std::size_t pos = 0;
    while (pos < rest.size()) {
      if (out.methods.size() == 2) {
        fail(rest[pos].range);
        return out;
      }
      std::size_t end = pos;
      if (rest[pos].source == "(") {
        std::size_t depth = 0;
        while (end < rest.size()) {
          if (rest[end].source == "(") ++depth;
          if (rest[end].source == ")" && --depth == 0) break;
          ++end;
        }
        if (end == rest.size()) {
          fail(rest[pos].range);
          return out;
        }
        ++end;  // past ')'
      } else if (detail::is_method_name(rest[pos]) ||
                 rest[pos].source == "-") {
        ++end;
      } else {
        fail(rest[pos].range);
        return out;
      }
      // trailing modifiers belong to this expression
      while (end < rest.size()) {
        if (rest[end].source == "?" || rest[end].source == "+") {
          ++end;
        } else if (rest[end].source == "[") {
          std::size_t i = end + 1;
          if (i < rest.size() && rest[i].kind == TokenKind::Nat) ++i;
          if (i < rest.size() && rest[i].source == "]") {
            end = i + 1;
          } else {
            break;
          }
        } else {
          break;
        }
      }
      SourceRange error;
      std::span<const Token> span(rest.data() + pos, end - pos);
      if (auto method = parse_method(span, &error)) {
        out.methods.push_back(std::move(*method));
      } else {
        fail(error);
        return out;
      }
      pos = end;
    }
    if (out.methods.empty())
      fail(all_tokens[command.first_token].range);
    return out;
  }

  // apply / apply_end: the whole remainder is one expression.
  SourceRange error;
  if (rest.empty()) {
    fail(all_tokens[command.first_token].range);
    return out;
  }
  if (auto method = parse_method(rest, &error)) {
    out.methods.push_back(std::move(*method));
  } else {
    fail(error);
  }
  return out;
}

}  // namespace isarlint
