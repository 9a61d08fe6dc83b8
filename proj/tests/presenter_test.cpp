#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "isarlint/document.hpp"
#include "isarlint/presenter.hpp"
#include "isarlint/rules.hpp"
#include "isarlint/store.hpp"
#include "support/format_readers.hpp"
#include "support/io.hpp"
#include "support/schema_validator.hpp"

using namespace isarlint;

namespace {

const LintStore& store() {
  static const LintStore s = builtin_store();
  return s;
}

Report report_for(const std::string& fixture, const std::string& path,
                  const std::vector<std::string>& bundles) {
  static const KeywordTable table = builtin_keyword_table();
  const TheoryDocument doc =
      analyze(path, testing::read_fixture(fixture), table);
  return lint_document(doc, resolve_selection(store(), bundles, {}, {}),
                       store());
}

Report golden_report() {
  static const KeywordTable table = builtin_keyword_table();
  const TheoryDocument doc = analyze(
      "golden_one.thy", testing::read_fixture("corpus/golden_one.thy"), table);
  Selection selection;
  selection.active.insert("use_by");
  return lint_document(doc, selection, store());
}

const nlohmann::json& schema() {
  static const nlohmann::json s =
      nlohmann::json::parse(testing::read_file_or_throw(SCHEMA_PATH));
  return s;
}

}  // namespace

TEST_CASE("text presenter matches its golden file") {
  CHECK(present_text(golden_report()) ==
        testing::read_fixture("golden/one.txt"));
}

TEST_CASE("json presenter matches its golden file") {
  CHECK(present_json(golden_report()) ==
        testing::read_fixture("golden/one.json"));
}

TEST_CASE("xml presenter matches its golden file") {
  CHECK(present_xml(golden_report()) ==
        testing::read_fixture("golden/one.xml"));
}

TEST_CASE("empty corpus renderings are pinned") {
  const std::vector<Report> none;
  CHECK(text_summary_line(aggregate_stats({none.data(), none.size()})) ==
        testing::read_fixture("golden/empty.txt"));
  CHECK(present_json({none.data(), none.size()}) ==
        testing::read_fixture("golden/empty.json"));
  CHECK(present_xml({none.data(), none.size()}) ==
        testing::read_fixture("golden/empty.xml"));
}

TEST_CASE("empty report renders a zero summary") {
  Report report;
  report.path = "empty.thy";
  const std::string text = present_text(report);
  CHECK(text == "problems: 0 (errors: 0, warnings: 0, infos: 0)\n");
}

TEST_CASE("json output validates against the shipped schema") {
  const std::vector<Report> reports = {
      golden_report(),
      report_for("corpus/mixed.thy", "mixed.thy", {"foundational"}),
      report_for("corpus/switch.thy", "switch.thy", {"foundational"}),
      Report{"empty.thy", {}, 0},
  };
  for (const Report& report : reports) {
    const auto instance = nlohmann::json::parse(present_json(report));
    const auto errors = testing::validate_against_schema(schema(), instance);
    for (const std::string& error : errors) {
      INFO(error);
    }
    CHECK(errors.empty());
  }
  const auto all = nlohmann::json::parse(
      present_json({reports.data(), reports.size()}));
  CHECK(testing::validate_against_schema(schema(), all).empty());
}

TEST_CASE("xml output is well-formed") {
  const std::vector<Report> reports = {
      golden_report(),
      report_for("corpus/mixed.thy", "mixed.thy", {"foundational"}),
      Report{"empty.thy", {}, 0},
  };
  for (const Report& report : reports)
    CHECK_NOTHROW(testing::parse_xml(present_xml(report)));
  CHECK_NOTHROW(
      testing::parse_xml(present_xml({reports.data(), reports.size()})));
}

TEST_CASE("xml escapes markup in messages and attributes") {
  Report report;
  report.path = "weird <&> \"path\".thy";
  LintResult result;
  result.lint_name = "bad_style_command";
  result.severity = Severity::Error;
  result.message = "contains <tags> & \"quotes\" and 'apostrophes'";
  report.results.push_back(result);
  const std::string xml = present_xml(report);
  const auto tree = testing::parse_xml(xml);  // throws if broken
  CHECK(tree.get<std::string>("lint_report.files.file.<xmlattr>.path") ==
        report.path);
  CHECK(tree.get<std::string>("lint_report.files.file.lint.message") ==
        result.message);
}

TEST_CASE("all three formats carry the same findings") {
  const Report report =
      report_for("corpus/mixed.thy", "mixed.thy", {"foundational"});
  REQUIRE(!report.results.empty());
  const auto from_text = testing::findings_from_text(present_text(report));
  const auto from_json = testing::findings_from_json(present_json(report));
  const auto from_xml = testing::findings_from_xml(present_xml(report));
  CHECK(from_text == from_json);
  CHECK(from_json == from_xml);
  CHECK(from_json.size() == report.results.size());
}

TEST_CASE("shares in presented output use one decimal place") {
  Report report;
  report.path = "p.thy";
  for (int i = 0; i < 3; ++i) {
    LintResult result;
    result.lint_name = "tactic_proofs";
    result.severity = i == 0 ? Severity::Error : Severity::Warn;
    result.message = "m";
    report.results.push_back(result);
  }
  const auto instance = nlohmann::json::parse(present_json(report));
  // 1/3 → 33.3, 2/3 → 66.7 after rounding
  CHECK(instance["summary"]["severities"]["error"]["share"].get<double>() ==
        Catch::Approx(33.3));
  CHECK(instance["summary"]["severities"]["warn"]["share"].get<double>() ==
        Catch::Approx(66.7));
}
