#pragma once

// The built-in lint catalog. Severities follow the established rule table:
// info for stylistic nudges, warn for fragile constructs, error for
// patterns that break maintainability or verification guarantees.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isarlint/lint.hpp"
#include "isarlint/rule_sets.hpp"
#include "isarlint/store.hpp"

namespace isarlint {

namespace rules_detail {

template <typename Visitor>
void visit_methods(const Method& method, Visitor&& visit) {
  visit(method);
  for (const Method& child : method.children)
    visit_methods(child, visit);
}

inline std::size_t combined_node_count(const Method& method) {
  std::size_t count = 0;
  visit_methods(method, [&](const Method& node) {
    if (node.kind == Method::Kind::Combined) ++count;
  });
  return count;
}

inline bool has_restrict(const Method& method) {
  for (const Modifier& mod : method.modifiers)
    if (mod.kind == Modifier::Kind::Restrict) return true;
  return false;
}

inline SourceRange join(SourceRange first, const SourceRange& last) {
  first.end_line = last.end_line;
  first.end_col = last.end_col;
  first.byte_offset_end = last.byte_offset_end;
  return first;
}

}  // namespace rules_detail

// --- single-command rules ---------------------------------------------

class BadStyleCommand final : public ParserLint {
 public:
  explicit BadStyleCommand(RuleSets sets)
      : ParserLint({"bad_style_command", Severity::Error,
                    "command that should not appear in finished theories",
                    "Flags commands such as `back` and `apply_end` that "
                    "depend on internal search state or proof-script "
                    "positions and make theories fragile.",
                    LintAbstraction::Parser}),
        sets_(std::move(sets)) {}

  void lint_command(const TheoryDocument& doc, const Command& command,
                    std::vector<LintResult>& out) const override {
    if (sets_.bad_style_commands.contains(command.keyword))
      out.push_back(make_result(
          command, command.proper_range(doc.tokens),
          "command '" + command.keyword + "' is bad style"));
  }

 private:
  RuleSets sets_;
};

class CounterExampleFinder final : public ParserLint {
 public:
  explicit CounterExampleFinder(RuleSets sets)
      : ParserLint({"counter_example_finder", Severity::Error,
                    "counter-example search without an expect option",
                    "Counter-example finders are fine as regression tests "
                    "when they state the expected outcome; without an "
                    "`expect` option (or `satisfy` for model finding) they "
                    "are leftover interactive commands.",
                    LintAbstraction::Parser}),
        sets_(std::move(sets)) {}

  void lint_command(const TheoryDocument& doc, const Command& command,
                    std::vector<LintResult>& out) const override {
    if (!sets_.counterexample_commands.contains(command.keyword)) return;
    for (const CommandOption& option :
         command_options(doc.tokens, command)) {
      if (option.double_bracketed) continue;
      if (option.name == "expect") return;
      if (command.keyword == "nitpick" && option.name == "satisfy") return;
    }
    out.push_back(make_result(command, command.proper_range(doc.tokens),
                              "'" + command.keyword +
                                  "' without an 'expect' option"));
  }

 private:
  RuleSets sets_;
};

class ProofFinder final : public ParserLint {
 public:
  explicit ProofFinder(RuleSets sets)
      : ParserLint({"proof_finder", Severity::Info,
                    "proof-search command left in the theory",
                    "Commands like `sledgehammer` or `try0` search for "
                    "proofs interactively and have no effect in a finished "
                    "theory.",
                    LintAbstraction::Parser}),
        sets_(std::move(sets)) {}

  void lint_command(const TheoryDocument& doc, const Command& command,
                    std::vector<LintResult>& out) const override {
    if (sets_.proof_finder_commands.contains(command.keyword))
      out.push_back(make_result(
          command, command.proper_range(doc.tokens),
          "proof-finder command '" + command.keyword + "' left in theory"));
  }

 private:
  RuleSets sets_;
};

class DiagnosticCommand final : public ParserLint {
 public:
  explicit DiagnosticCommand(RuleSets sets)
      : ParserLint({"diagnostic_command", Severity::Info,
                    "diagnostic command left in the theory",
                    "Queries such as `find_theorems` are interactive aids "
                    "and only cost time in batch builds.",
                    LintAbstraction::Parser}),
        sets_(std::move(sets)) {}

  void lint_command(const TheoryDocument& doc, const Command& command,
                    std::vector<LintResult>& out) const override {
    if (sets_.diagnostic_commands.contains(command.keyword))
      out.push_back(make_result(
          command, command.proper_range(doc.tokens),
          "diagnostic command '" + command.keyword + "' left in theory"));
  }

 private:
  RuleSets sets_;
};

class SmtOracle final : public ParserLint {
 public:
  SmtOracle()
      : ParserLint({"smt_oracle", Severity::Error,
                    "smt_oracle option enabled",
                    "With `smt_oracle` the smt method trusts the external "
                    "solver instead of reconstructing the proof, so the "
                    "result is no longer checked by the kernel.",
                    LintAbstraction::Parser}) {}

  void lint_command(const TheoryDocument& doc, const Command& command,
                    std::vector<LintResult>& out) const override {
    for (const CommandOption& option : command_options(doc.tokens, command)) {
      if (!option.double_bracketed || option.name != "smt_oracle") continue;
      if (option.value.empty() || option.value_is("true")) {
        out.push_back(make_result(command, command.proper_range(doc.tokens),
                                  "smt_oracle turns smt into an unchecked "
                                  "oracle"));
        return;
      }
    }
  }
};

// Unnamed statement with a global attribute: the classic parser lint,
// built directly on the statement-head combinators.
class GlobalAttributeOnUnnamedLemma final : public ParserLint {
 public:
  GlobalAttributeOnUnnamedLemma()
      : ParserLint({"global_attribute_on_unnamed_lemma", Severity::Error,
                    "unnamed statement carries a global attribute",
                    "An attribute such as `[simp]` on an unnamed lemma "
                    "changes global behaviour through a fact that cannot be "
                    "referenced or revoked by name.",
                    LintAbstraction::Parser}) {}

  void lint_command(const TheoryDocument& doc, const Command& command,
                    std::vector<LintResult>& out) const override {
    if (command.category != CommandCategory::GoalStatement) return;
    const auto& head = doc.heads[command.index];
    if (head && !head->name && !head->attributes.empty())
      out.push_back(make_result(command, command.proper_range(doc.tokens),
                                "unnamed " + command.keyword +
                                    " with global attribute '" +
                                    head->attributes.front().name + "'"));
  }
};

class AxiomatizationWithWhere final : public ParserLint {
 public:
  AxiomatizationWithWhere()
      : ParserLint({"axiomatization_with_where", Severity::Error,
                    "axiomatization that introduces axioms",
                    "`axiomatization ... where` adds axioms to the theory; "
                    "outside object-logic bootstrapping a definition is "
                    "almost always the right tool.",
                    LintAbstraction::Parser}) {}

  void lint_command(const TheoryDocument& doc, const Command& command,
                    std::vector<LintResult>& out) const override {
    if (command.keyword != "axiomatization") return;
    const auto& head = doc.heads[command.index];
    if (head && head->has_where_clause)
      out.push_back(make_result(command, command.proper_range(doc.tokens),
                                "axiomatization with 'where' introduces "
                                "axioms"));
  }
};

// --- AST rules ----------------------------------------------------------

class AutoStructuralComposition final : public AstLint {
 public:
  AutoStructuralComposition()
      : AstLint({"auto_structural_composition", Severity::Info,
                 "auto on the left of a structural composition",
                 "In `(auto; m)` the method m runs on every subgoal auto "
                 "leaves behind, which is hard to predict and to maintain.",
                 LintAbstraction::Ast}) {}

  void lint_method(const TheoryDocument&, const Command& command,
                   const Method& method,
                   std::vector<LintResult>& out) const override {
    rules_detail::visit_methods(method, [&](const Method& node) {
      if (node.kind == Method::Kind::Combined &&
          node.combinator == Combinator::Structural &&
          node.left().is_simple("auto"))
        out.push_back(make_result(command, node.range,
                                  "'auto' feeds unpredictable subgoals into "
                                  "';' composition"));
    });
  }
};

class ComplexMethod final : public AstLint {
 public:
  ComplexMethod()
      : AstLint({"complex_method", Severity::Warn,
                 "overly complex method expression",
                 "Methods combining two or more combinators, or modifying a "
                 "combined method, are hard to read; split them into "
                 "structured steps.",
                 LintAbstraction::Ast}) {}

  void lint_method(const TheoryDocument&, const Command& command,
                   const Method& method,
                   std::vector<LintResult>& out) const override {
    bool modified_combined = false;
    rules_detail::visit_methods(method, [&](const Method& node) {
      if (node.kind == Method::Kind::Combined && !node.modifiers.empty())
        modified_combined = true;
    });
    if (rules_detail::combined_node_count(method) >= 2 || modified_combined)
      out.push_back(make_result(command, method.range,
                                "complex method expression; prefer simple "
                                "methods or a structured proof"));
  }
};

class ComplexIsarInitialMethod final : public AstLint {
 public:
  explicit ComplexIsarInitialMethod(RuleSets sets)
      : AstLint({"complex_isar_initial_method", Severity::Warn,
                 "structured proof starts with a complex method",
                 "Transforming the goal with a simplifier call or a "
                 "combined method before an Isar proof makes the stated "
                 "goals depend on unrelated simp rules.",
                 LintAbstraction::Ast}),
        sets_(std::move(sets)) {}

  void lint_method(const TheoryDocument&, const Command& command,
                   const Method& method,
                   std::vector<LintResult>& out) const override {
    if (command.keyword != "proof") return;
    const bool complex_shape = method.kind == Method::Kind::Combined ||
                               !method.modifiers.empty();
    const bool simplifier = method.kind == Method::Kind::Simple &&
                            sets_.simplifier_methods.contains(method.name);
    if (complex_shape || simplifier)
      out.push_back(make_result(command, method.range,
                                "initial proof method transforms the goal; "
                                "state the goals it produces instead"));
  }

 private:
  RuleSets sets_;
};

class ImplicitRule final : public AstLint {
 public:
  ImplicitRule()
      : AstLint({"implicit_rule", Severity::Warn,
                 "rule application without a named rule",
                 "A bare `rule` picks the rule by unification; naming it "
                 "keeps the proof stable when new intro rules appear.",
                 LintAbstraction::Ast}) {}

  void lint_method(const TheoryDocument&, const Command& command,
                   const Method& method,
                   std::vector<LintResult>& out) const override {
    rules_detail::visit_methods(method, [&](const Method& node) {
      if (node.is_simple("rule") && node.args.empty())
        out.push_back(make_result(command, node.range,
                                  "implicit rule application; name the rule "
                                  "explicitly"));
    });
  }
};

class TacticProofs final : public AstLint {
 public:
  explicit TacticProofs(RuleSets sets)
      : AstLint({"tactic_proofs", Severity::Error,
                 "proof uses a tactic method",
                 "Tactic methods such as `subgoal_tac` or `rule_tac` "
                 "reference generated names and goal positions, which makes "
                 "proofs break under unrelated changes.",
                 LintAbstraction::Ast}),
        sets_(std::move(sets)) {}

  void lint_method(const TheoryDocument&, const Command& command,
                   const Method& method,
                   std::vector<LintResult>& out) const override {
    std::string found;
    rules_detail::visit_methods(method, [&](const Method& node) {
      if (found.empty() && node.kind == Method::Kind::Simple &&
          sets_.tactic_methods.contains(node.name))
        found = node.name;
    });
    if (!found.empty())
      out.push_back(make_result(command, method.range,
                                "tactic method '" + found +
                                    "' relies on generated names"));
  }

 private:
  RuleSets sets_;
};

class LemmaTransformingAttribute final : public AstLint {
 public:
  explicit LemmaTransformingAttribute(RuleSets sets)
      : AstLint({"lemma_transforming_attribute", Severity::Warn,
                 "statement carries a transforming attribute",
                 "Attributes like `[simplified]` or `[OF ...]` store a "
                 "different fact than the one written down; state the "
                 "transformed fact directly.",
                 LintAbstraction::Ast}),
        sets_(std::move(sets)) {}

  void lint_statement(const TheoryDocument& doc, const Command& command,
                      const StatementHead& head,
                      std::vector<LintResult>& out) const override {
    if (command.category != CommandCategory::GoalStatement &&
        command.keyword != "lemmas")
      return;
    for (const Attribute& attribute : head.attributes) {
      if (sets_.transforming_attributes.contains(attribute.name)) {
        out.push_back(make_result(command, command.proper_range(doc.tokens),
                                  "transforming attribute '" +
                                      attribute.name + "' on a statement"));
        return;
      }
    }
  }

 private:
  RuleSets sets_;
};

// --- rules over the whole command list ----------------------------------

class ApplyIsarSwitch final : public ProperCommandsLint {
 public:
  ApplyIsarSwitch()
      : ProperCommandsLint(
            {"apply_isar_switch", Severity::Warn,
             "apply script switches to a structured proof",
             "A structured proof after apply steps states goals that "
             "depend on the exact output of the script, so it breaks when "
             "the simplifier or the rules improve. Structure the whole "
             "proof instead.",
             LintAbstraction::ProperCommands}) {}

  void lint_commands(const TheoryDocument& doc,
                     std::span<const std::size_t> proper,
                     std::vector<LintResult>& out) const override {
    for (std::size_t i = 1; i < proper.size(); ++i) {
      const Command& prev = doc.commands[proper[i - 1]];
      const Command& here = doc.commands[proper[i]];
      if (prev.keyword == "apply" && here.keyword == "proof")
        out.push_back(make_result(here, here.proper_range(doc.tokens),
                                  "structured proof on top of an apply "
                                  "script is fragile"));
    }
  }
};

class LowLevelApplyChain final : public ProperCommandsLint {
 public:
  explicit LowLevelApplyChain(RuleSets sets)
      : ProperCommandsLint(
            {"low_level_apply_chain", Severity::Info,
             "long chain of low-level apply steps",
             "Long runs of single rule applications can usually be "
             "replaced by one automated method or a structured proof.",
             LintAbstraction::ProperCommands}),
        sets_(std::move(sets)) {}

  void lint_commands(const TheoryDocument& doc,
                     std::span<const std::size_t> proper,
                     std::vector<LintResult>& out) const override {
    std::size_t run_start = 0;
    std::size_t run_length = 0;
    auto flush = [&](std::size_t end) {
      if (run_length >= sets_.apply_chain_threshold) {
        const Command& first = doc.commands[proper[run_start]];
        const Command& last = doc.commands[proper[end - 1]];
        out.push_back(make_result(
            first,
            rules_detail::join(first.proper_range(doc.tokens),
                               last.proper_range(doc.tokens)),
            "chain of " + std::to_string(run_length) +
                " low-level apply steps"));
      }
      run_length = 0;
    };
    for (std::size_t i = 0; i < proper.size(); ++i) {
      if (low_level_apply(doc, proper[i])) {
        if (run_length == 0) run_start = i;
        ++run_length;
      } else {
        flush(i);
      }
    }
    flush(proper.size());
  }

 private:
  bool low_level_apply(const TheoryDocument& doc, std::size_t index) const {
    const Command& command = doc.commands[index];
    if (command.keyword != "apply") return false;
    const CommandMethods& methods = doc.methods[index];
    if (methods.malformed || methods.methods.size() != 1) return false;
    const Method& method = methods.methods.front();
    return method.kind == Method::Kind::Simple &&
           sets_.low_level_methods.contains(method.name);
  }

  RuleSets sets_;
};

class UnrestrictedAuto final : public ProperCommandsLint {
 public:
  UnrestrictedAuto()
      : ProperCommandsLint(
            {"unrestricted_auto", Severity::Error,
             "unrestricted auto in the middle of a proof",
             "`apply auto` that is not the final step changes all "
             "remaining goals at once; restrict it (e.g. `(auto)[1]`) or "
             "finish the proof with it.",
             LintAbstraction::ProperCommands}) {}

  void lint_commands(const TheoryDocument& doc,
                     std::span<const std::size_t> proper,
                     std::vector<LintResult>& out) const override {
    for (std::size_t i = 0; i < proper.size(); ++i) {
      const Command& command = doc.commands[proper[i]];
      if (command.keyword != "apply") continue;
      const CommandMethods& methods = doc.methods[proper[i]];
      if (methods.malformed || methods.methods.size() != 1) continue;
      const Method& method = methods.methods.front();
      if (!method.is_simple("auto") || rules_detail::has_restrict(method))
        continue;
      if (i + 1 >= proper.size()) continue;  // nothing follows
      const Command& next = doc.commands[proper[i + 1]];
      if (next.keyword == "done") continue;  // terminal auto
      const bool continues = next.category == CommandCategory::ProofStep ||
                             next.category == CommandCategory::ProofOpen ||
                             next.keyword == "by";
      if (continues)
        out.push_back(make_result(command, command.proper_range(doc.tokens),
                                  "unrestricted 'auto' in the middle of an "
                                  "apply script"));
    }
  }
};

class GlobalAttributeChanges final : public ProperCommandsLint {
 public:
  GlobalAttributeChanges()
      : ProperCommandsLint(
            {"global_attribute_changes", Severity::Info,
             "attribute toggled globally via declare",
             "Adding and later removing an attribute of the same fact "
             "with `declare` is fragile bracketing; use `context` or "
             "`notes` to scope the change.",
             LintAbstraction::ProperCommands}) {}

  void lint_commands(const TheoryDocument& doc,
                     std::span<const std::size_t> proper,
                     std::vector<LintResult>& out) const override {
    std::map<std::pair<std::string, std::string>, bool> last_op;
    for (std::size_t index : proper) {
      const Command& command = doc.commands[index];
      for (const DeclaredAttribute& declared :
           declared_attributes(doc.tokens, command)) {
        auto key = std::make_pair(declared.fact, declared.attribute);
        auto it = last_op.find(key);
        if (it != last_op.end() && it->second != declared.deleted)
          out.push_back(make_result(
              command, command.proper_range(doc.tokens),
              "attribute '" + declared.attribute + "' of '" + declared.fact +
                  "' is toggled globally"));
        last_op[key] = declared.deleted;
      }
    }
  }
};

class UseBy final : public ProperCommandsLint {
 public:
  UseBy()
      : ProperCommandsLint(
            {"use_by", Severity::Info,
             "short apply script that is a single by",
             "One or two apply steps closed with `done` read better as a "
             "single `by`.",
             LintAbstraction::ProperCommands}) {}

  void lint_commands(const TheoryDocument& doc,
                     std::span<const std::size_t> proper,
                     std::vector<LintResult>& out) const override {
    std::size_t i = 0;
    while (i < proper.size()) {
      if (doc.commands[proper[i]].keyword != "apply") {
        ++i;
        continue;
      }
      std::size_t run_end = i;
      while (run_end < proper.size() &&
             doc.commands[proper[run_end]].keyword == "apply")
        ++run_end;
      const std::size_t run_length = run_end - i;
      if (run_length <= 2 && run_end < proper.size() &&
          doc.commands[proper[run_end]].keyword == "done") {
        std::string replacement = "by";
        bool printable = true;
        for (std::size_t j = i; j < run_end; ++j) {
          const CommandMethods& methods = doc.methods[proper[j]];
          if (methods.malformed || methods.methods.size() != 1) {
            printable = false;
            break;
          }
          replacement += ' ';
          replacement +=
              std::string(doc.source_of(methods.methods.front().range));
        }
        if (printable) {
          const Command& first = doc.commands[proper[i]];
          const Command& done = doc.commands[proper[run_end]];
          const SourceRange range =
              rules_detail::join(first.proper_range(doc.tokens),
                                 done.proper_range(doc.tokens));
          LintResult result =
              make_result(first, range,
                          "apply script collapses to '" + replacement + "'");
          result.edit = Edit{range, replacement};
          out.push_back(std::move(result));
        }
      }
      i = run_end;  // continue after the run
    }
  }
};

// --- registration --------------------------------------------------------

inline void register_builtin_lints(LintStore& store,
                                   const RuleSets& sets = {}) {
  store.register_lint(std::make_shared<ApplyIsarSwitch>());
  store.register_lint(std::make_shared<AutoStructuralComposition>());
  store.register_lint(std::make_shared<BadStyleCommand>(sets));
  store.register_lint(std::make_shared<ComplexIsarInitialMethod>(sets));
  store.register_lint(std::make_shared<ComplexMethod>());
  store.register_lint(std::make_shared<CounterExampleFinder>(sets));
  store.register_lint(std::make_shared<GlobalAttributeChanges>());
  store.register_lint(std::make_shared<GlobalAttributeOnUnnamedLemma>());
  store.register_lint(std::make_shared<ImplicitRule>());
  store.register_lint(std::make_shared<LemmaTransformingAttribute>(sets));
  store.register_lint(std::make_shared<LowLevelApplyChain>(sets));
  store.register_lint(std::make_shared<TacticProofs>(sets));
  store.register_lint(std::make_shared<UnrestrictedAuto>());
  store.register_lint(std::make_shared<SmtOracle>());
  store.register_lint(std::make_shared<AxiomatizationWithWhere>());
  store.register_lint(std::make_shared<ProofFinder>(sets));
  store.register_lint(std::make_shared<DiagnosticCommand>(sets));
  store.register_lint(std::make_shared<UseBy>());
}

inline const std::vector<std::string>& foundational_lints() {
  static const std::vector<std::string> names = {
      "apply_isar_switch",
      "auto_structural_composition",
      "bad_style_command",
      "complex_isar_initial_method",
      "complex_method",
      "global_attribute_changes",
      "global_attribute_on_unnamed_lemma",
      "implicit_rule",
      "lemma_transforming_attribute",
      "low_level_apply_chain",
      "tactic_proofs",
      "unrestricted_auto",
  };
  return names;
}

// foundational: safe in every context, including object-logic bootstrap.
// default: foundational plus the axiomatization check for user space.
// afp_mandatory: the automatically checkable submission guidelines.
// pedantic / non_interactive: add-ons composing with other selections.
inline void register_builtin_bundles(LintStore& store) {
  store.register_bundle({"foundational", foundational_lints()});

  std::vector<std::string> default_lints = foundational_lints();
  default_lints.push_back("axiomatization_with_where");
  store.register_bundle({std::string(kDefaultBundle), default_lints});

  store.register_bundle({"afp_mandatory",
                         {"bad_style_command", "counter_example_finder",
                          "global_attribute_on_unnamed_lemma", "smt_oracle"}});

  store.register_bundle({"pedantic", {"use_by"}});

  store.register_bundle({"non_interactive",
                         {"proof_finder", "diagnostic_command",
                          "counter_example_finder"}});
}

inline LintStore builtin_store(const RuleSets& sets = {}) {
  LintStore store;
  register_builtin_lints(store, sets);
  register_builtin_bundles(store);
  return store;
}

}  // namespace isarlint
