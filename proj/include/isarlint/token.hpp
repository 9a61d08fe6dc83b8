#pragma once

// Outer-syntax tokens of Isabelle/Isar theory files.

#include <cstddef>
#include <string>
#include <string_view>

namespace isarlint {

// A contiguous span of source text. Lines and columns are 1-based; columns
// count Unicode scalar values, not bytes. End positions are exclusive.
// Byte offsets delimit exactly the covered source text.
struct SourceRange {
  std::size_t start_line = 1;
  std::size_t start_col = 1;
  std::size_t end_line = 1;
  std::size_t end_col = 1;
  std::size_t byte_offset_start = 0;
  std::size_t byte_offset_end = 0;

  bool operator==(const SourceRange&) const = default;
};

// Classification of command keywords. Drives command splitting and the
// rules that reason about proof structure.
enum class CommandCategory {
  TheoryBegin,
  TheoryBody,
  GoalStatement,
  ProofOpen,
  ProofStep,
  ProofClose,
  Diagnostic,
  Other,
};

enum class TokenKind {
  Command,  // command keyword; carries a CommandCategory
  Keyword,  // minor keyword or delimiter
  Ident,
  LongIdent,
  SymIdent,
  Var,       // schematic variable ?x
  TypeIdent, // type variable 'a
  TypeVar,   // schematic type variable ?'a
  Nat,
  Float,
  String,     // "..."
  AltString,  // `...`
  Cartouche,  // ‹...›, nests
  Verbatim,   // {*...*}, does not nest
  Comment,            // (*...*), nests
  InformalComment,    // marginal comment: \<comment> ‹...›
  Space,
  Error,
};

std::string_view to_string(TokenKind kind);
std::string_view to_string(CommandCategory category);

struct Token {
  TokenKind kind = TokenKind::Error;
  std::string source;  // exact substring of the input
  SourceRange range;
  // Meaningful only when kind == Command.
  CommandCategory command_category = CommandCategory::Other;

  // Space and both comment kinds are "improper": they carry no syntax.
  bool is_proper() const {
    return kind != TokenKind::Space && kind != TokenKind::Comment &&
           kind != TokenKind::InformalComment;
  }

  bool is_command(std::string_view word) const {
    return kind == TokenKind::Command && source == word;
  }

  // Keywords and symbolic identifiers compare by their text; "(" and "+"
  // arrive as either kind depending on the keyword table.
  bool is_word(std::string_view word) const { return source == word; }
};

inline std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Command: return "command";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Ident: return "ident";
    case TokenKind::LongIdent: return "long_ident";
    case TokenKind::SymIdent: return "sym_ident";
    case TokenKind::Var: return "var";
    case TokenKind::TypeIdent: return "type_ident";
    case TokenKind::TypeVar: return "type_var";
    case TokenKind::Nat: return "nat";
    case TokenKind::Float: return "float";
    case TokenKind::String: return "string";
    case TokenKind::AltString: return "alt_string";
    case TokenKind::Cartouche: return "cartouche";
    case TokenKind::Verbatim: return "verbatim";
    case TokenKind::Comment: return "comment";
    case TokenKind::InformalComment: return "informal_comment";
    case TokenKind::Space: return "space";
    case TokenKind::Error: return "error";
  }
  return "error";
}

inline std::string_view to_string(CommandCategory category) {
  switch (category) {
    case CommandCategory::TheoryBegin: return "theory_begin";
    case CommandCategory::TheoryBody: return "theory_body";
    case CommandCategory::GoalStatement: return "goal_statement";
    case CommandCategory::ProofOpen: return "proof_open";
    case CommandCategory::ProofStep: return "proof_step";
    case CommandCategory::ProofClose: return "proof_close";
    case CommandCategory::Diagnostic: return "diagnostic";
    case CommandCategory::Other: return "other";
  }
  return "other";
}

}  // namespace isarlint
