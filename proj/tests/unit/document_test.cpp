#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tcat/document.hpp"
#include "tcat/errors.hpp"
#include "tcat/fixtures.hpp"
#include "tcat/validate.hpp"

using namespace tcat;

namespace {

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
  auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

std::string parse_error(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  FAIL("document parsed");
  return {};
}

const char* kTerminal = R"({
  "schema": 1,
  "kind": "two_category",
  "objects": [{"name": "*"}]
})";

}  // namespace

TEST_CASE("terminal document") {
  Document d = parse_document(kTerminal);
  CHECK(d.kind == DocumentKind::two_category);
  const auto& c = std::get<MarkedTwoCategory>(d.payload);
  CHECK(c.category.object_count() == 1);
  CHECK(c.category.one_cell_count() == 1);
  CHECK(c.category.two_cell_count() == 1);
  CHECK(c.category.one_cell(0).name == "id_*");
  CHECK(c.category.two_cell(0).name == "id_id_*");
  CHECK(c.marking.size() == 1);
}

TEST_CASE("every fixture round-trips") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    Document d = fixture_document(name);
    std::string text = serialize(d);
    Document back = parse_document(text);
    CHECK(back.kind == d.kind);
    CHECK(back.name == name);
    CHECK(serialize(back) == text);
    if (d.kind == DocumentKind::two_category) {
      CHECK(std::get<MarkedTwoCategory>(back.payload) == std::get<MarkedTwoCategory>(d.payload));
    }
  }
  CHECK_THROWS_AS(fixture_document("nope"), PreconditionError);
}

TEST_CASE("shipped fixture files match the library") {
  std::filesystem::path dir = TCAT_FIXTURE_DIR;
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    std::filesystem::path file = dir / (name + ".json");
    REQUIRE(std::filesystem::exists(file));
    std::ifstream in(file);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == serialize(fixture_document(name)));
    Document d = load_document(file);
    CHECK(d.name == name);
  }
}

TEST_CASE("the adjunction document") {
  Document d = parse_document(serialize(fixture_document("adjunction_T")));
  REQUIRE(d.kind == DocumentKind::cat_valued_functor);
  const auto& t = std::get<CatValuedFunctor>(d.payload);
  CHECK(validate(t).ok());
  REQUIRE(t.categories.size() == 3);
  CHECK(t.categories[0].object_count() == 1);
  CHECK(t.categories[1].object_count() == 2);
  CHECK(t.categories[1].morphism_count() == 3);
  CHECK(t.categories[2].object_count() == 1);
  const TwoCategory& s = t.source.category;
  CHECK(t.source.marking.contains(*s.find_one_cell("0->1")));
  CHECK_FALSE(t.source.marking.contains(*s.find_one_cell("1->2")));

  Document k = parse_document(serialize(fixture_document("adjunction_cocone")));
  REQUIRE(k.kind == DocumentKind::cocone);
  const auto& cone = std::get<CoconeDocument>(k.payload);
  CHECK(check_marked_cocone(cone.functor, cone.cocone).ok());
}

TEST_CASE("a missing composite names the pair") {
  std::string text = serialize(fixture_document("interval_2"));
  std::string broken = replace_once(text, R"("compose": [
    [
      "1->2",
      "0->1",
      "0->2"
    ]
  ])", R"("compose": [])");
  std::string what = parse_error(broken);
  CHECK(what.find("(1->2, 0->1)") != std::string::npos);
}

TEST_CASE("schema errors carry a path") {
  std::string text = serialize(fixture_document("interval_2"));

  std::string what = parse_error(replace_once(text, R"("source": "1")", R"("source": "7")"));
  CHECK(what.find("/one_cells/2/source") != std::string::npos);
  CHECK(what.find("'7'") != std::string::npos);

  what = parse_error(replace_once(text, R"("schema": 1)", R"("schema": 9)"));
  CHECK(what.find("/schema") != std::string::npos);

  what = parse_error(replace_once(text, R"("kind": "two_category")", R"("kind": "monad")"));
  CHECK(what.find("/kind") != std::string::npos);

  what = parse_error(replace_once(text, R"("name": "0->2")", R"("name": "0->1")"));
  CHECK(what.find("duplicate name '0->1'") != std::string::npos);

  what = parse_error(replace_once(text, R"("marked": [])", R"("marked": ["2->0"])"));
  CHECK(what.find("/marked/0") != std::string::npos);

  what = parse_error(R"({"kind": "two_category"})");
  CHECK(what.find("missing field 'schema'") != std::string::npos);
}

TEST_CASE("syntax errors carry a line") {
  std::string text = serialize(fixture_document("terminal"));
  std::string broken = replace_once(text, R"("kind": "two_category",)", R"("kind": "two_category")");
  try {
    parse_document(broken);
    FAIL("document parsed");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).rfind("line 4: ", 0) == 0);
  }
}

TEST_CASE("law violations are rejected") {
  std::string text = serialize(fixture_document("interval_2"));
  std::string what = parse_error(replace_once(text, R"("0->2"
    ])", R"("0->1"
    ])"));
  CHECK_FALSE(what.empty());

  std::string functor = serialize(fixture_document("terminal_inclusion"));
  CHECK_NOTHROW(parse_document(functor));
  CHECK_THROWS_AS(load_document(std::filesystem::path(TCAT_FIXTURE_DIR) / "missing.json"), ParseError);
}
