#pragma once

// Lossless tokenizer for Isar outer syntax. Concatenating the sources of
// the produced tokens reproduces the input byte-for-byte; malformed
// regions become Error tokens instead of aborting.
//
// Lexical conventions implemented here:
//   - comments (* *) nest to arbitrary depth, verbatim {* *} does not
//   - cartouches nest; the ASCII forms \<open>/\<close> are equivalent
//     to the Unicode delimiters
//   - strings and alt-strings take backslash escapes and may span lines
//   - unterminated delimited tokens become one Error token up to EOF
//   - \<name> and \<^name> symbol escapes join symbolic identifiers

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "isarlint/keyword_table.hpp"
#include "isarlint/token.hpp"

namespace isarlint {

namespace detail {

inline constexpr std::string_view kCartoucheOpen = "\xe2\x80\xb9";   // ‹
inline constexpr std::string_view kCartoucheClose = "\xe2\x80\xba";  // ›
inline constexpr std::string_view kMarginalDash = "\xe2\x80\x94";    // —
inline constexpr std::string_view kAsciiOpen = "\\<open>";
inline constexpr std::string_view kAsciiClose = "\\<close>";
inline constexpr std::string_view kAsciiComment = "\\<comment>";

inline bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

inline bool is_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

inline bool is_quasi_letter(char c) {
  return is_letter(c) || is_digit(c) || c == '_' || c == '\'';
}

inline bool is_sym_char(char c) {
  return std::string_view("!#$%&*+-/<=>?@^_|~").find(c) !=
         std::string_view::npos;
}

inline std::size_t scalar_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xe) return 3;
  if ((lead >> 3) == 0x1e) return 4;
  return 1;  // invalid lead byte: step one byte, keep going
}

class Scanner {
 public:
  Scanner(std::string_view text, const KeywordTable& keywords)
      : text_(text), keywords_(&keywords) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (!eof()) tokens.push_back(next_token());
    return tokens;
  }

 private:
  struct Mark {
    std::size_t pos, line, col;
  };

  std::string_view text_;
  const KeywordTable* keywords_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;

  bool eof() const { return pos_ >= text_.size(); }
  char byte() const { return text_[pos_]; }
  std::string_view rest() const { return text_.substr(pos_); }
  bool looking_at(std::string_view prefix) const {
    return rest().starts_with(prefix);
  }

  Mark mark() const { return {pos_, line_, col_}; }
  void reset(const Mark& m) {
    pos_ = m.pos;
    line_ = m.line;
    col_ = m.col;
  }

  // One Unicode scalar forward; invalid UTF-8 advances a single byte.
  void advance() {
    if (byte() == '\n') {
      ++line_;
      col_ = 1;
      ++pos_;
      return;
    }
    pos_ += std::min(scalar_length(static_cast<unsigned char>(byte())),
                     text_.size() - pos_);
    ++col_;
  }

  void advance_over(std::string_view prefix) {
    for (std::size_t consumed = 0; consumed < prefix.size();)
      consumed += step_width(), advance();
  }

  std::size_t step_width() const {
    return byte() == '\n'
               ? 1
               : std::min(scalar_length(static_cast<unsigned char>(byte())),
                          text_.size() - pos_);
  }

  Token finish(const Mark& start, TokenKind kind,
               CommandCategory category = CommandCategory::Other) const {
    Token token;
    token.kind = kind;
    token.source = std::string(text_.substr(start.pos, pos_ - start.pos));
    token.range = {start.line, start.col, line_, col_, start.pos, pos_};
    token.command_category = category;
    return token;
  }

  Token next_token() {
    const Mark start = mark();
    const char c = byte();

    if (is_ascii_space(c)) return scan_space(start);
    if (looking_at("(*")) return scan_comment(start);
    if (looking_at("{*")) return scan_verbatim(start);
    if (c == '"') return scan_delimited(start, '"', TokenKind::String);
    if (c == '`') return scan_delimited(start, '`', TokenKind::AltString);
    if (at_cartouche_open()) return scan_cartouche(start);
    if (at_cartouche_close()) {  // stray closing delimiter
      advance_over(looking_at(kCartoucheClose) ? kCartoucheClose : kAsciiClose);
      return finish(start, TokenKind::Error);
    }
    if (at_marginal_marker()) return scan_informal_comment(start);
    if (is_letter(c)) return scan_word(start);
    if (is_digit(c)) return scan_number(start);
    if (c == '?') return scan_var(start);
    if (c == '\'') return scan_type_ident(start);
    if (at_symbolic_unit()) return scan_symbolic(start);
    return scan_punctuation(start);
  }

  Token scan_space(const Mark& start) {
    while (!eof() && is_ascii_space(byte())) advance();
    return finish(start, TokenKind::Space);
  }

  Token scan_comment(const Mark& start) {
    advance_over("(*");
    for (std::size_t depth = 1; depth > 0;) {
      if (eof()) return finish(start, TokenKind::Error);
      if (looking_at("(*")) {
        ++depth;
        advance_over("(*");
      } else if (looking_at("*)")) {
        --depth;
        advance_over("*)");
      } else {
        advance();
      }
    }
    return finish(start, TokenKind::Comment);
  }

  Token scan_verbatim(const Mark& start) {
    advance_over("{*");
    while (!looking_at("*}")) {
      if (eof()) return finish(start, TokenKind::Error);
      advance();
    }
    advance_over("*}");
    return finish(start, TokenKind::Verbatim);
  }

  Token scan_delimited(const Mark& start, char quote, TokenKind kind) {
    advance();  // opening quote
    while (!eof()) {
      if (byte() == '\\') {
        advance();
        if (!eof()) advance();  // escaped character
        continue;
      }
      if (byte() == quote) {
        advance();
        return finish(start, kind);
      }
      advance();
    }
    return finish(start, TokenKind::Error);
  }

  bool at_cartouche_open() const {
    return looking_at(kCartoucheOpen) || looking_at(kAsciiOpen);
  }
  bool at_cartouche_close() const {
    return looking_at(kCartoucheClose) || looking_at(kAsciiClose);
  }
  bool at_marginal_marker() const {
    return looking_at(kMarginalDash) || looking_at(kAsciiComment);
  }

  Token scan_cartouche(const Mark& start) {
    advance_over(looking_at(kCartoucheOpen) ? kCartoucheOpen : kAsciiOpen);
    for (std::size_t depth = 1; depth > 0;) {
      if (eof()) return finish(start, TokenKind::Error);
      if (at_cartouche_open()) {
        ++depth;
        advance_over(looking_at(kCartoucheOpen) ? kCartoucheOpen : kAsciiOpen);
      } else if (at_cartouche_close()) {
        --depth;
        advance_over(looking_at(kCartoucheClose) ? kCartoucheClose
                                                 : kAsciiClose);
      } else {
        advance();
      }
    }
    return finish(start, TokenKind::Cartouche);
  }

  // Marginal comment: marker, optional horizontal space, then a cartouche.
  // A marker without a cartouche is an Error token on its own.
  Token scan_informal_comment(const Mark& start) {
    advance_over(looking_at(kMarginalDash) ? kMarginalDash : kAsciiComment);
    const Mark after_marker = mark();
    while (!eof() && (byte() == ' ' || byte() == '\t')) advance();
    if (!eof() && at_cartouche_open()) {
      Token inner = scan_cartouche(start);
      inner.kind = inner.kind == TokenKind::Error ? TokenKind::Error
                                                  : TokenKind::InformalComment;
      return inner;
    }
    reset(after_marker);
    return finish(start, TokenKind::Error);
  }

  Token scan_word(const Mark& start) {
    scan_ident_part();
    bool long_ident = false;
    while (!eof() && byte() == '.' && pos_ + 1 < text_.size() &&
           is_letter(text_[pos_ + 1])) {
      advance();  // '.'
      scan_ident_part();
      long_ident = true;
    }
    return classify_word(start,
                         long_ident ? TokenKind::LongIdent : TokenKind::Ident);
  }

  void scan_ident_part() {
    while (!eof() && is_quasi_letter(byte())) advance();
  }

  Token classify_word(const Mark& start, TokenKind fallback) {
    const std::string_view word = text_.substr(start.pos, pos_ - start.pos);
    if (auto category = keywords_->command_category(word))
      return finish(start, TokenKind::Command, *category);
    if (keywords_->is_minor(word)) return finish(start, TokenKind::Keyword);
    return finish(start, fallback);
  }

  Token scan_number(const Mark& start) {
    while (!eof() && is_digit(byte())) advance();
    if (!eof() && byte() == '.' && pos_ + 1 < text_.size() &&
        is_digit(text_[pos_ + 1])) {
      advance();  // '.'
      while (!eof() && is_digit(byte())) advance();
      return finish(start, TokenKind::Float);
    }
    return finish(start, TokenKind::Nat);
  }

  Token scan_var(const Mark& start) {
    if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '\'' &&
        pos_ + 2 < text_.size() && is_letter(text_[pos_ + 2])) {
      advance();  // '?'
      advance();  // '\''
      scan_ident_part();
      scan_var_index();
      return finish(start, TokenKind::TypeVar);
    }
    if (pos_ + 1 < text_.size() && is_letter(text_[pos_ + 1])) {
      advance();  // '?'
      scan_ident_part();
      scan_var_index();
      return finish(start, TokenKind::Var);
    }
    return scan_symbolic(start);  // bare '?' is symbolic
  }

  void scan_var_index() {
    if (!eof() && byte() == '.' && pos_ + 1 < text_.size() &&
        is_digit(text_[pos_ + 1])) {
      advance();
      while (!eof() && is_digit(byte())) advance();
    }
  }

  Token scan_type_ident(const Mark& start) {
    if (pos_ + 1 < text_.size() && is_letter(text_[pos_ + 1])) {
      advance();  // '\''
      scan_ident_part();
      return finish(start, TokenKind::TypeIdent);
    }
    advance();
    return finish(start, TokenKind::Error);
  }

  // A symbolic unit: a symbolic ASCII character, a \<name> or \<^name>
  // escape, or any non-ASCII scalar that is not a delimiter handled above.
  bool at_symbolic_unit() const {
    if (at_cartouche_open() || at_cartouche_close() || at_marginal_marker())
      return false;
    if (is_sym_char(byte())) return true;
    if (byte() == '\\' && symbol_escape_length() > 0) return true;
    return static_cast<unsigned char>(byte()) >= 0x80;
  }

  // Length of a \<name> or \<^name> escape at the cursor, 0 if none.
  std::size_t symbol_escape_length() const {
    std::string_view r = rest();
    if (!r.starts_with("\\<")) return 0;
    std::size_t i = 2;
    if (i < r.size() && r[i] == '^') ++i;
    std::size_t name_start = i;
    while (i < r.size() && (is_letter(r[i]) || is_digit(r[i]) || r[i] == '_'))
      ++i;
    if (i == name_start || i >= r.size() || r[i] != '>') return 0;
    return i + 1;
  }

  Token scan_symbolic(const Mark& start) {
    while (!eof() && at_symbolic_unit()) {
      if (byte() == '\\') {
        advance_over(rest().substr(0, symbol_escape_length()));
      } else {
        advance();
      }
    }
    if (pos_ == start.pos) {  // lone backslash or similar
      advance();
      return finish(start, TokenKind::Error);
    }
    return classify_word(start, TokenKind::SymIdent);
  }

  // Non-symbolic punctuation, longest match first: "...", "..", ".", "::",
  // ":", and the single-character delimiters.
  Token scan_punctuation(const Mark& start) {
    static constexpr std::string_view multi[] = {"...", "..", "::"};
    for (std::string_view candidate : multi) {
      if (looking_at(candidate)) {
        advance_over(candidate);
        return classify_word(start, TokenKind::Keyword);
      }
    }
    const char c = byte();
    if (std::string_view("()[]{},;:.").find(c) != std::string_view::npos) {
      advance();
      return classify_word(start, TokenKind::Keyword);
    }
    advance();
    return finish(start, TokenKind::Error);
  }
};

}  // namespace detail

inline std::vector<Token> tokenize(std::string_view text,
                                   const KeywordTable& keywords) {
  return detail::Scanner(text, keywords).run();
}

// Source lines of code: lines carrying at least one token that is neither
// white space nor a comment.
inline std::size_t source_lines_of_code(const std::vector<Token>& tokens) {
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  std::size_t max_line = 0;
  for (const Token& token : tokens) {
    if (!token.is_proper()) continue;
    std::size_t first = token.range.start_line;
    std::size_t last = token.range.end_line;
    // An exclusive end at column 1 means the token stops at the previous
    // line's newline and contributes nothing to `last`.
    if (last > first && token.range.end_col == 1) --last;
    spans.emplace_back(first, last);
    max_line = std::max(max_line, last);
  }
  std::vector<bool> counted(max_line + 1, false);
  for (auto [first, last] : spans)
    for (std::size_t l = first; l <= last; ++l) counted[l] = true;
  return static_cast<std::size_t>(
      std::count(counted.begin(), counted.end(), true));
}

inline std::size_t source_lines_of_code(std::string_view text,
                                        const KeywordTable& keywords) {
  return source_lines_of_code(tokenize(text, keywords));
}

}  // namespace isarlint
