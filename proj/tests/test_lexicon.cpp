#include <string>

#include "doctest.h"
#include "mixcat/lexicon.hpp"

using namespace mixcat;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    load_lexicon(text);
  } catch (const LexiconError& e) {
    return e.line();
  }
  FAIL("lexicon loaded without error");
  return 0;
}

}  // namespace

TEST_CASE("bank demo file") {
  const auto any = load_lexicon_file(std::string(MIXCAT_DATA_DIR) + "/bank.json");
  REQUIRE(std::holds_alternative<Lexicon<Rel>>(any));
  const auto& lex = std::get<Lexicon<Rel>>(any);
  CHECK(lex.model == MonadTag::Dist);
  const auto& bank = lex.lookup("bank");
  CHECK(bank.type == parse_type("n"));
  const auto& n = lex.objects.at("n");
  CHECK(bank.state.payload().weight(relation(Rel::unit(), n, {{0, 0}})) == Rational(9, 10));
  CHECK(bank.state.payload().weight(relation(Rel::unit(), n, {{0, 1}})) == Rational(1, 10));
}

TEST_CASE("empty text is an empty lexicon") {
  const auto any = load_lexicon("  \n");
  REQUIRE(std::holds_alternative<Lexicon<Rel>>(any));
  CHECK(std::get<Lexicon<Rel>>(any).words.empty());
}

TEST_CASE("weights must form a distribution") {
  const std::string text = R"({
  "model": "dist",
  "objects": {"n": ["a", "b"]},
  "words": {
    "w": {"type": "n", "terms": [
      {"weight": "7/10", "matrix": [[1], [0]]},
      {"weight": "1/2", "matrix": [[0], [1]]}
    ]}
  }
})";
  CHECK_THROWS_AS(load_lexicon(text), LexiconError);
  CHECK(error_line(text) == 5);
}

TEST_CASE("diagnostics carry line numbers") {
  CHECK(error_line("{\n  \"model\": \"dist\",\n  \"words\": {\n}") == 4);
  CHECK(error_line("{\n  \"model\": \"bogus\"\n}") == 2);
  const std::string unknown_basic = R"({
  "objects": {"n": ["a"]},
  "words": {
    "x": {"type": "n", "terms": [{"weight": "1", "matrix": [1]}]},
    "n": {"type": "q", "terms": [{"weight": "1", "matrix": [1]}]}
  }
})";
  CHECK(error_line(unknown_basic) == 5);
  const std::string wrong_rows = R"({
  "objects": {"n": ["a", "b"]},
  "words": {
    "x": {"type": "n", "terms": [{"weight": "1", "matrix": [1]}]}
  }
})";
  CHECK(error_line(wrong_rows) == 4);
}

TEST_CASE("bottom entries") {
  const std::string lift = R"({
  "model": "lift",
  "objects": {"n": ["a", "b"]},
  "words": {
    "x": {"type": "n", "bottom": true},
    "y": {"type": "n", "terms": [{"matrix": [[1], [0]]}]}
  }
})";
  const auto lex = std::get<Lexicon<Rel>>(load_lexicon(lift));
  CHECK(lex.lookup("x").state.is_bottom());
  CHECK_FALSE(lex.lookup("y").state.is_bottom());

  const std::string dist = R"({
  "model": "dist",
  "objects": {"n": ["a"]},
  "words": {"x": {"type": "n", "bottom": true}}
})";
  CHECK_THROWS_AS(load_lexicon(dist), LexiconError);
}

TEST_CASE("matrix lexicons") {
  const std::string text = R"({
  "model": "subdist",
  "base": "mat",
  "objects": {"n": 2},
  "words": {"x": {"type": "n", "terms": [{"weight": "1/2", "matrix": ["1/3", "-2"]}]}}
})";
  const auto any = load_lexicon(text);
  REQUIRE(std::holds_alternative<Lexicon<Mat>>(any));
  const auto& x = std::get<Lexicon<Mat>>(any).lookup("x");
  REQUIRE(x.state.terms().size() == 1);
  CHECK(x.state.terms()[0].second == Rational(1, 2));
  CHECK(x.state.terms()[0].first.matrix()(1, 0) == Rational(-2));
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(load_lexicon("[1, 2]"), LexiconError);
  CHECK_THROWS_AS(load_lexicon("{\"base\": \"vect\"}"), LexiconError);
  CHECK_THROWS_AS(load_lexicon_file("/nonexistent/lexicon.json"), LexiconError);
  const std::string negative = R"({
  "model": "subdist",
  "objects": {"n": ["a"]},
  "words": {"x": {"type": "n", "terms": [{"weight": "-1/2", "matrix": [1]}]}}
})";
  CHECK_THROWS_AS(load_lexicon(negative), LexiconError);
  CHECK_THROWS_AS(std::get<Lexicon<Rel>>(load_lexicon("{}")).lookup("x"), LexiconError);
}
