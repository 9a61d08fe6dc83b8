#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "isarlint/command.hpp"
#include "isarlint/keyword_table.hpp"
#include "isarlint/lexer.hpp"
#include "isarlint/statement.hpp"

using namespace isarlint;

namespace {

struct Parsed {
  std::vector<Token> tokens;
  std::vector<Command> commands;
};

Parsed parse_one(std::string_view text) {
  static const KeywordTable table = builtin_keyword_table();
  Parsed p;
  p.tokens = tokenize(text, table);
  p.commands = split_commands(p.tokens);
  return p;
}

std::optional<StatementHead> head_of(const Parsed& p, std::size_t i = 0) {
  return parse_statement_head(p.tokens, p.commands[i]);
}

}  // namespace

TEST_CASE("unnamed lemma with bracketed attribute") {
  const auto p = parse_one("lemma [simp]: \xe2\x80\xb9x = x\xe2\x80\xba");
  const auto head = head_of(p);
  REQUIRE(head);
  CHECK(!head->name);
  REQUIRE(head->attributes.size() == 1);
  CHECK(head->attributes[0].name == "simp");
}

TEST_CASE("named lemma with attribute") {
  const auto p = parse_one("lemma foo[simp]: \xe2\x80\xb9x = x\xe2\x80\xba");
  const auto head = head_of(p);
  REQUIRE(head);
  REQUIRE(head->name);
  CHECK(*head->name == "foo");
  REQUIRE(head->attributes.size() == 1);
  CHECK(head->attributes[0].name == "simp");
}

TEST_CASE("a bare proposition is not mistaken for a name") {
  const auto p = parse_one("lemma True");
  const auto head = head_of(p);
  REQUIRE(head);
  CHECK(!head->name);
  CHECK(head->attributes.empty());
}

TEST_CASE("locale target is skipped") {
  const auto p = parse_one("lemma (in group) assoc: \xe2\x80\xb9P\xe2\x80\xba");
  const auto head = head_of(p);
  REQUIRE(head);
  REQUIRE(head->name);
  CHECK(*head->name == "assoc");
}

TEST_CASE("attribute lists split on commas and keep arguments") {
  const auto p = parse_one(
      "lemma [simp, intro!, OF foo[simplified]]: \xe2\x80\xb9P\xe2\x80\xba");
  const auto head = head_of(p);
  REQUIRE(head);
  REQUIRE(head->attributes.size() == 3);
  CHECK(head->attributes[0].name == "simp");
  CHECK(head->attributes[1].name == "intro");
  CHECK(head->attributes[2].name == "OF");
  CHECK(head->attributes[2].args.size() >= 1);
}

TEST_CASE("lemmas collects right-hand-side attributes") {
  const auto p = parse_one("lemmas foo' = foo[simplified]");
  const auto head = head_of(p);
  REQUIRE(head);
  REQUIRE(head->attributes.size() == 1);
  CHECK(head->attributes[0].name == "simplified");
}

TEST_CASE("axiomatization where clause detection") {
  const auto with_where = parse_one(
      "axiomatization c :: \xe2\x80\xb9nat\xe2\x80\xba where ax: "
      "\xe2\x80\xb9"
      "c = c\xe2\x80\xba");
  REQUIRE(head_of(with_where));
  CHECK(head_of(with_where)->has_where_clause);

  const auto without = parse_one("axiomatization c :: \xe2\x80\xb9nat\xe2\x80\xba");
  REQUIRE(head_of(without));
  CHECK(!head_of(without)->has_where_clause);

  // `where` hidden inside attribute brackets does not count
  const auto nested = parse_one("lemmas z = foo[where x=1]");
  REQUIRE(head_of(nested));
  CHECK(!head_of(nested)->has_where_clause);
}

TEST_CASE("statement heads only exist for the relevant commands") {
  const auto p = parse_one("apply simp");
  CHECK(!head_of(p));
}

TEST_CASE("declare attribute operations") {
  const auto p =
      parse_one("declare foo[simp] bar[cong del] Baz.qux[intro]");
  const auto declared = declared_attributes(p.tokens, p.commands[0]);
  REQUIRE(declared.size() == 3);
  CHECK(declared[0].fact == "foo");
  CHECK(declared[0].attribute == "simp");
  CHECK(!declared[0].deleted);
  CHECK(declared[1].fact == "bar");
  CHECK(declared[1].attribute == "cong");
  CHECK(declared[1].deleted);
  CHECK(declared[2].fact == "Baz.qux");
  CHECK(!declared[2].deleted);
}

TEST_CASE("combinators consume a prefix on success and nothing on failure") {
  using namespace combinators;
  const auto p = parse_one("declare foo bar [simp] baz");
  std::vector<Token> proper;
  for (const Token& t : p.tokens)
    if (t.is_proper()) proper.push_back(t);
  TokenCursor cursor({proper.data(), proper.size()});

  const Parser<std::string> ident = [](TokenCursor& c)
      -> std::optional<std::string> {
    if (const Token* t = c.expect(TokenKind::Ident)) return t->source;
    return std::nullopt;
  };
  const Parser<std::string> bracket = [](TokenCursor& c)
      -> std::optional<std::string> {
    if (c.expect_word("[")) return "[";
    return std::nullopt;
  };

  // seq: both or nothing
  const std::size_t start = cursor.position();
  CHECK(!seq(cursor, ident, bracket));  // declare is a command, not an ident
  CHECK(cursor.position() == start);    // failure consumed nothing
  cursor.advance();                     // over `declare`

  auto pair = seq(cursor, ident, ident);
  REQUIRE(pair);
  CHECK(pair->first == "foo");
  CHECK(pair->second == "bar");

  // alt picks the first success; opt never fails
  const Parser<std::string> parsers[] = {ident, bracket};
  auto first = alt<std::string>(cursor, parsers);
  REQUIRE(first);
  CHECK(*first == "[");

  auto maybe = opt(cursor, ident);  // `simp`
  REQUIRE(maybe);
  CHECK(**maybe == "simp");

  // many stops at the first failure without consuming it
  const std::size_t before = cursor.position();
  CHECK(many(cursor, ident).empty());  // `]` is not an ident
  CHECK(cursor.position() == before);
  cursor.advance();  // `]`
  CHECK(many(cursor, ident).size() == 1);  // `baz`
  CHECK(cursor.done());
}

TEST_CASE("command options from single and double brackets") {
  const auto single = parse_one("nitpick [expect = genuine, timeout = 5]");
  const auto options = command_options(single.tokens, single.commands[0]);
  REQUIRE(options.size() == 2);
  CHECK(options[0].name == "expect");
  CHECK(options[0].value_is("genuine"));
  CHECK(!options[0].double_bracketed);
  CHECK(options[1].name == "timeout");

  const auto config = parse_one("declare [[smt_oracle = false]]");
  const auto config_options =
      command_options(config.tokens, config.commands[0]);
  REQUIRE(config_options.size() == 1);
  CHECK(config_options[0].name == "smt_oracle");
  CHECK(config_options[0].double_bracketed);
  CHECK(config_options[0].value_is("false"));

  const auto bare = parse_one("using [[smt_oracle]]");
  const auto bare_options = command_options(bare.tokens, bare.commands[0]);
  REQUIRE(bare_options.size() == 1);
  CHECK(bare_options[0].name == "smt_oracle");
  CHECK(bare_options[0].value.empty());
}
