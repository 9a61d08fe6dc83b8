#pragma once

// Partial AST of Isar proof methods: simple methods with raw argument
// tokens, binary combined methods, and the standard-proof placeholder `-`.
// Arguments are never interpreted; this stays strictly at outer syntax.

#include <string>
#include <string_view>
#include <vector>

#include "isarlint/token.hpp"

namespace isarlint {

enum class Combinator {
  Seq,         // ','  sequential composition
  Structural,  // ';'  apply to new subgoals
  Alt,         // '|'  first success wins
};

inline std::string_view to_string(Combinator combinator) {
  switch (combinator) {
    case Combinator::Seq: return ",";
    case Combinator::Structural: return ";";
    case Combinator::Alt: return "|";
  }
  return ",";
}

struct Modifier {
  enum class Kind {
    Try,       // ?
    Repeat,    // +
    Restrict,  // [n]
  };
  Kind kind = Kind::Try;
  std::size_t goals = 1;  // Restrict argument; `[]` defaults to 1

  bool operator==(const Modifier&) const = default;
};

struct Method {
  enum class Kind { Simple, Combined, Placeholder };

  Kind kind = Kind::Placeholder;
  std::string name;         // Simple
  std::vector<Token> args;  // Simple: raw tokens, uninterpreted
  Combinator combinator = Combinator::Seq;  // Combined
  std::vector<Method> children;             // Combined: exactly two
  std::vector<Modifier> modifiers;          // in application order
  SourceRange range;  // extent in the source, set when parsed from a command

  bool is_simple(std::string_view method_name) const {
    return kind == Kind::Simple && name == method_name;
  }

  const Method& left() const { return children.front(); }
  const Method& right() const { return children.back(); }
};

// Equality up to positions; argument tokens compare by text.
inline bool structurally_equal(const Method& a, const Method& b) {
  if (a.kind != b.kind || a.modifiers != b.modifiers) return false;
  switch (a.kind) {
    case Method::Kind::Placeholder:
      return true;
    case Method::Kind::Simple: {
      if (a.name != b.name || a.args.size() != b.args.size()) return false;
      for (std::size_t i = 0; i < a.args.size(); ++i)
        if (a.args[i].source != b.args[i].source) return false;
      return true;
    }
    case Method::Kind::Combined:
      return a.combinator == b.combinator &&
             structurally_equal(a.left(), b.left()) &&
             structurally_equal(a.right(), b.right());
  }
  return false;
}

namespace detail {
inline void print_method_into(const Method& method, std::string& out) {
  switch (method.kind) {
    case Method::Kind::Placeholder:
      out += '-';
      break;
    case Method::Kind::Simple:
      out += method.name;
      for (const Token& arg : method.args) {
        out += ' ';
        out += arg.source;
      }
      break;
    case Method::Kind::Combined:
      out += '(';
      print_method_into(method.left(), out);
      out += ' ';
      out += to_string(method.combinator);
      out += ' ';
      print_method_into(method.right(), out);
      out += ')';
      break;
  }
  // Space-separated: adjacent '?'/'+' would otherwise lex as one symbolic
  // identifier and no longer read as modifiers.
  for (const Modifier& mod : method.modifiers) {
    switch (mod.kind) {
      case Modifier::Kind::Try: out += " ?"; break;
      case Modifier::Kind::Repeat: out += " +"; break;
      case Modifier::Kind::Restrict:
        out += " [";
        out += std::to_string(mod.goals);
        out += ']';
        break;
    }
  }
}
}  // namespace detail

// Canonical text of a method AST; parsing the result yields a structurally
// identical tree. Combined methods are always parenthesized.
inline std::string print_method(const Method& method) {
  std::string out;
  detail::print_method_into(method, out);
  return out;
}

}  // namespace isarlint
