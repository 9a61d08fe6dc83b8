#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>
#include <vector>

#include "isarlint/document.hpp"
#include "isarlint/lexer.hpp"
#include "isarlint/rules.hpp"
#include "isarlint/store.hpp"
#include "support/io.hpp"
#include "support/rule_cases.hpp"

using namespace isarlint;

namespace {

const LintStore& store() {
  static const LintStore s = builtin_store();
  return s;
}

TheoryDocument doc_of(std::string text, std::string path = "snippet.thy") {
  static const KeywordTable table = builtin_keyword_table();
  return analyze(std::move(path), std::move(text), table);
}

std::vector<LintResult> run_lint(const std::string& lint,
                                 const std::string& source) {
  Selection selection;
  selection.active.insert(lint);
  return lint_document(doc_of(source), selection, store()).results;
}

const std::map<std::string, Severity>& expected_severity() {
  static const std::map<std::string, Severity> m = {
      {"apply_isar_switch", Severity::Warn},
      {"auto_structural_composition", Severity::Info},
      {"bad_style_command", Severity::Error},
      {"complex_isar_initial_method", Severity::Warn},
      {"complex_method", Severity::Warn},
      {"counter_example_finder", Severity::Error},
      {"global_attribute_changes", Severity::Info},
      {"global_attribute_on_unnamed_lemma", Severity::Error},
      {"implicit_rule", Severity::Warn},
      {"lemma_transforming_attribute", Severity::Warn},
      {"low_level_apply_chain", Severity::Info},
      {"tactic_proofs", Severity::Error},
      {"unrestricted_auto", Severity::Error},
      {"smt_oracle", Severity::Error},
      {"axiomatization_with_where", Severity::Error},
      {"proof_finder", Severity::Info},
      {"diagnostic_command", Severity::Info},
      {"use_by", Severity::Info},
  };
  return m;
}

}  // namespace

TEST_CASE("hand-annotated rule snippets") {
  const auto& cases = testing::rule_cases();
  CHECK(cases.size() >= 36);

  for (const testing::RuleCase& c : cases) {
    INFO(c.lint << " on:\n" << c.source);
    const auto results = run_lint(c.lint, c.source);
    std::vector<std::size_t> lines;
    for (const LintResult& result : results) {
      CHECK(result.lint_name == c.lint);
      CHECK(result.severity == expected_severity().at(c.lint));
      CHECK(!result.message.empty());
      lines.push_back(result.range.start_line);
    }
    CHECK(lines == c.lines);
  }
}

TEST_CASE("every catalog severity matches the published assignment") {
  for (const auto& [name, severity] : expected_severity()) {
    const Lint* lint = store().find(name);
    REQUIRE(lint != nullptr);
    CHECK(lint->descriptor().severity == severity);
  }
}

TEST_CASE("use_by suggests a working edit") {
  struct EditCase {
    std::string source;
    std::string replacement;
  };
  const std::vector<EditCase> cases = {
      {"apply simp\ndone\n", "by simp"},
      {"apply simp\napply auto\ndone\n", "by simp auto"},
      {"lemma g: ‹True›\n  apply (simp add: foo)\n  done\n",
       "by (simp add: foo)"},
  };
  static const KeywordTable table = builtin_keyword_table();
  for (const EditCase& c : cases) {
    const auto results = run_lint("use_by", c.source);
    REQUIRE(results.size() == 1);
    REQUIRE(results[0].edit);
    CHECK(results[0].edit->replacement == c.replacement);
    // applying the edit yields a source that re-tokenizes cleanly
    const Edit& edit = *results[0].edit;
    std::string patched = c.source;
    patched.replace(edit.range.byte_offset_start,
                    edit.range.byte_offset_end - edit.range.byte_offset_start,
                    edit.replacement);
    for (const Token& token : tokenize(patched, table))
      CHECK(token.kind != TokenKind::Error);
    // the edit lies within the result's range
    CHECK(edit.range.byte_offset_start >= results[0].range.byte_offset_start);
    CHECK(edit.range.byte_offset_end <= results[0].range.byte_offset_end);
  }
}

TEST_CASE("low_level_apply_chain result spans the whole run") {
  const auto results = run_lint(
      "low_level_apply_chain", testing::repeat_line("apply (rule exI)\n", 6));
  REQUIRE(results.size() == 1);
  CHECK(results[0].range.start_line == 1);
  CHECK(results[0].range.end_line == 6);
}

TEST_CASE("malformed methods never produce results") {
  for (const char* lint :
       {"complex_method", "implicit_rule", "tactic_proofs",
        "unrestricted_auto", "use_by", "auto_structural_composition"}) {
    INFO(lint);
    CHECK(run_lint(lint, "apply (simp\ndone\n").empty());
  }
}

TEST_CASE("rule sets can be recalibrated") {
  RuleSets sets;
  sets.apply_chain_threshold = 2;
  sets.bad_style_commands = {"back"};
  const LintStore custom = builtin_store(sets);
  Selection chain;
  chain.active.insert("low_level_apply_chain");
  const auto doc = doc_of(testing::repeat_line("apply (rule exI)\n", 2));
  CHECK(lint_document(doc, chain, custom).results.size() == 1);

  Selection bad;
  bad.active.insert("bad_style_command");
  const auto doc2 = doc_of("apply_end simp\n");
  CHECK(lint_document(doc2, bad, custom).results.empty());
}

TEST_CASE("foundational bundle over the annotated corpus") {
  const auto doc =
      doc_of(testing::read_fixture("corpus/mixed.thy"), "mixed.thy");
  const Report report = lint_document(
      doc, resolve_selection(store(), {"foundational"}, {}, {}), store());
  std::vector<std::pair<std::size_t, std::string>> found;
  for (const LintResult& result : report.results)
    found.emplace_back(result.range.start_line, result.lint_name);
  const std::vector<std::pair<std::size_t, std::string>> expected = {
      {3, "global_attribute_on_unnamed_lemma"},
      {7, "low_level_apply_chain"},
      {15, "unrestricted_auto"},
      {20, "tactic_proofs"},
      {21, "implicit_rule"},
      {25, "global_attribute_changes"},
  };
  CHECK(found == expected);
}
