#pragma once

// Keyword table: classifies command words and lists minor keywords.
// A built-in table covers Pure/HOL; a keyword file (one `word<TAB>category`
// entry per line) can extend or override it.

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "isarlint/token.hpp"

namespace isarlint {

class KeywordTable {
 public:
  std::optional<CommandCategory> command_category(std::string_view word) const {
    auto it = commands_.find(std::string(word));
    if (it == commands_.end()) return std::nullopt;
    return it->second;
  }

  bool is_command(std::string_view word) const {
    return commands_.contains(std::string(word));
  }

  bool is_minor(std::string_view word) const {
    return minor_.contains(std::string(word));
  }

  // Overrides any previous classification of `word`.
  void add_command(std::string word, CommandCategory category) {
    minor_.erase(word);
    commands_[std::move(word)] = category;
  }

  void add_minor(std::string word) {
    commands_.erase(word);
    minor_.insert(std::move(word));
  }

  std::size_t command_count() const { return commands_.size(); }

 private:
  std::unordered_map<std::string, CommandCategory> commands_;
  std::unordered_set<std::string> minor_;
};

inline std::optional<CommandCategory> parse_category(std::string_view name) {
  if (name == "theory_begin") return CommandCategory::TheoryBegin;
  if (name == "theory_body") return CommandCategory::TheoryBody;
  if (name == "goal_statement") return CommandCategory::GoalStatement;
  if (name == "proof_open") return CommandCategory::ProofOpen;
  if (name == "proof_step") return CommandCategory::ProofStep;
  if (name == "proof_close") return CommandCategory::ProofClose;
  if (name == "diagnostic") return CommandCategory::Diagnostic;
  if (name == "other") return CommandCategory::Other;
  return std::nullopt;
}

// Pure/HOL command words. Standalone linting cannot read session keyword
// files, so the table is static; `imports` and `begin` are treated as
// commands of their own to keep theory headers segmented.
inline KeywordTable builtin_keyword_table() {
  KeywordTable table;
  const auto add_all = [&](std::initializer_list<const char*> words,
                           CommandCategory category) {
    for (const char* word : words) table.add_command(word, category);
  };

  add_all({"theory"}, CommandCategory::TheoryBegin);

  add_all({"imports", "begin", "end",
           "chapter", "section", "subsection", "subsubsection", "paragraph",
           "subparagraph", "text", "text_raw", "txt",
           "definition", "abbreviation", "type_synonym", "type_notation",
           "typedecl", "typedef", "datatype", "codatatype", "record",
           "fun", "function", "primrec", "primcorec", "partial_function",
           "termination", "inductive", "inductive_set", "coinductive",
           "coinductive_set", "inductive_cases", "fun_cases",
           "instance", "instantiation", "interpretation",
           "global_interpretation", "sublocale", "subclass",
           "locale", "class", "context", "experiment", "notepad",
           "declare", "lemmas", "named_theorems", "axiomatization",
           "consts", "specification", "overloading", "nonterminal",
           "notation", "no_notation", "syntax", "no_syntax",
           "translations", "no_translations",
           "ML", "ML_file", "ML_command", "SML_file",
           "setup", "method_setup", "attribute_setup", "simproc_setup",
           "declaration", "syntax_declaration",
           "parse_translation", "print_translation",
           "bundle", "unbundle", "lift_definition", "setup_lifting",
           "code_datatype", "export_code", "code_printing", "code_reserved",
           "hide_const", "hide_fact", "hide_type", "hide_class"},
          CommandCategory::TheoryBody);

  add_all({"lemma", "theorem", "corollary", "proposition", "schematic_goal"},
          CommandCategory::GoalStatement);

  add_all({"proof"}, CommandCategory::ProofOpen);

  add_all({"apply", "apply_end", "back", "defer", "prefer",
           "using", "unfolding", "supply",
           "fix", "assume", "presume", "define", "note", "let", "write",
           "have", "show", "hence", "thus", "obtain", "consider", "guess",
           "from", "with", "then", "also", "moreover", "ultimately",
           "finally", "case", "next", "subgoal", "include", "including",
           "ML_prf", "{"},
          CommandCategory::ProofStep);

  add_all({"qed", "by", "done", "sorry", "oops", ".", "..", "}"},
          CommandCategory::ProofClose);

  add_all({"thm", "term", "typ", "prop", "value", "ML_val",
           "print_theorems", "print_statement", "print_context",
           "print_commands", "print_options", "print_facts",
           "print_methods", "print_attributes", "print_simpset",
           "print_rules", "print_locales", "print_classes",
           "class_deps", "thm_deps", "unused_thms",
           "find_theorems", "find_consts", "find_unused_assms",
           "sledgehammer", "try", "try0", "solve_direct",
           "nitpick", "quickcheck", "nunchaku"},
          CommandCategory::Diagnostic);

  for (const char* word :
       {"(", ")", "[", "]", ",", ";", ":", "::", "=", "==", "=>",
        "<=", "<", ">", "|", "+", "-", "--", "?", "!", "%", "_", "...",
        "and", "assumes", "attach", "binder", "constrains", "defines",
        "fixes", "for", "if", "in", "includes", "infix", "infixl",
        "infixr", "is", "notes", "obtains", "open", "opening", "output",
        "overloaded", "pervasive", "premises", "rewrites", "shows",
        "structure", "unchecked", "when", "where"})
    table.add_minor(word);

  return table;
}

// Keyword file format: `word<TAB>category`, one entry per line; blank
// lines and lines starting with `#` are skipped. Category `minor` adds a
// minor keyword; any CommandCategory name adds/overrides a command word.
inline void load_keyword_file(KeywordTable& table, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open keyword file: " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected `word<TAB>category`");
    std::string word = line.substr(0, tab);
    std::string category = line.substr(tab + 1);
    if (category == "minor") {
      table.add_minor(std::move(word));
    } else if (auto parsed = parse_category(category)) {
      table.add_command(std::move(word), *parsed);
    } else {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unknown category `" + category + "`");
    }
  }
}

}  // namespace isarlint
