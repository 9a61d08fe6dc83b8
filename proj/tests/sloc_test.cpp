#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "isarlint/keyword_table.hpp"
#include "isarlint/lexer.hpp"
#include "support/io.hpp"

using namespace isarlint;

namespace {
std::size_t sloc(const std::string& text) {
  static const KeywordTable table = builtin_keyword_table();
  return source_lines_of_code(text, table);
}
}  // namespace

TEST_CASE("sloc of empty input is zero") {
  CHECK(sloc("") == 0);
}

TEST_CASE("comments and blank lines do not count") {
  CHECK(sloc("lemma x: \xe2\x80\xb9True\xe2\x80\xba\n(* note *)\n\n  by simp\n") == 2);
}

TEST_CASE("multi-line tokens count every line they touch") {
  CHECK(sloc("lemma long:\n \xe2\x80\xb9True\n  True\xe2\x80\xba\n") == 3);
  // ...but a token ending exactly at a newline stops on its own line
  CHECK(sloc("by simp\n") == 1);
}

TEST_CASE("hand-counted fixture corpus") {
  const std::vector<std::pair<std::string, std::size_t>> expected = {
      {"sloc/f01.thy", 0}, {"sloc/f02.thy", 2}, {"sloc/f03.thy", 4},
      {"sloc/f04.thy", 4}, {"sloc/f05.thy", 0}, {"sloc/f06.thy", 2},
      {"sloc/f07.thy", 3}, {"sloc/f08.thy", 1}, {"sloc/f09.thy", 2},
      {"sloc/f10.thy", 5},
  };
  for (const auto& [name, count] : expected) {
    INFO(name);
    CHECK(sloc(testing::read_fixture(name)) == count);
  }
}

TEST_CASE("sloc is monotone under appended code lines") {
  std::string text;
  std::size_t previous = sloc(text);
  const std::vector<std::string> lines = {
      "lemma a: \xe2\x80\xb9P\xe2\x80\xba", "  by simp", "definition d",
      "  unfolding d_def", "done"};
  for (const std::string& line : lines) {
    text += line + "\n";
    const std::size_t now = sloc(text);
    CHECK(now == previous + 1);
    previous = now;
    // comment or blank lines leave the count unchanged
    CHECK(sloc(text + "(* note *)\n") == now);
    CHECK(sloc(text + "\n") == now);
  }
}
