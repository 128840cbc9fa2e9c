#include "lieco/io.hpp"
#include "lieco/group.hpp"

#include <doctest.h>

using namespace lieco;

namespace {

const char* kSu2Text =
    "# canonical example file\n"
    "algebra su2\n"
    "dim 3\n"
    "names X1 X2 X3\n"
    "bracket X1 X2 = 1 X3\n"
    "bracket X2 X3 = 1 X1\n"
    "bracket X3 X1 = 1 X2\n";

} // namespace

TEST_CASE("parse_algebra reads the documented format") {
  LieAlgebra L = parse_algebra_text(kSu2Text);
  CHECK(L.name() == "su2");
  CHECK(L.dim() == 3);
  CHECK(L.same_table(catalog_find("su2")->algebra));
  // the X3 X1 line lands in the (0, 2) slot with the sign flipped
  CHECK(L.c(0, 2, 1) == -1);
}

TEST_CASE("parse_algebra diagnoses structural problems") {
  CHECK_THROWS_WITH_AS(parse_algebra_text("algebra a\nnames X1\nbracket X1 X1 = 1 X1\n"),
                       doctest::Contains("missing 'dim N' line"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_algebra_text("algebra a\ndim 2\nnames X1 X2\nbracket X1 X1 = 1 X2\n"),
      doctest::Contains("itself"), ParseError);
  CHECK_THROWS_WITH_AS(parse_algebra_text("algebra a\ndim 2\nnames X1 X2\n"
                                          "bracket X1 X2 = 1 X1\nbracket X2 X1 = 1 X1\n"),
                       doctest::Contains("duplicate"), ParseError);
  CHECK_THROWS_WITH_AS(parse_algebra_text("algebra a\ndim 2\nnames X1 X2\n"
                                          "bracket X1 X2 = 1 Y9\n"),
                       doctest::Contains("unknown basis name"), ParseError);
  CHECK_THROWS_WITH_AS(parse_algebra_text("dim 2\nnames X1 X2\n"),
                       doctest::Contains("missing 'algebra NAME' line"), ParseError);
  CHECK_THROWS_WITH_AS(parse_algebra_text("algebra a\ndim 2\nnames X1 X2 X3\n"),
                       doctest::Contains("names count"), ParseError);
  // numeric-looking basis names would make bracket lines ambiguous
  CHECK_THROWS_WITH_AS(parse_algebra_text("algebra a\ndim 2\nnames 12 X2\n"),
                       doctest::Contains("ambiguous"), ParseError);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_algebra_text("algebra a\ndim 2\nnames X1 X2\nbracket X1 X1 = 1 X2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
    CHECK(e.kind() == "ParseError");
  }
}

TEST_CASE("decimal and fractional coefficients parse exactly") {
  LieAlgebra L = parse_algebra_text("algebra a\ndim 2\nnames A B\nbracket A B = 0.5 A + -3/4 B\n");
  CHECK(L.c(0, 1, 0) == Rat(1, 2));
  CHECK(L.c(0, 1, 1) == Rat(-3, 4));
}

TEST_CASE("algebra serialization round-trips every catalog entry") {
  for (const auto& g : catalog()) {
    CAPTURE(g->name);
    std::string text = serialize_algebra(g->algebra);
    LieAlgebra back = parse_algebra_text(text);
    CHECK(back.name() == g->algebra.name());
    CHECK(back.basis_names() == g->algebra.basis_names());
    CHECK(back.same_table(g->algebra));
    // canonical form is a fixed point
    CHECK(serialize_algebra(back) == text);
  }
}

TEST_CASE("cocycle files round-trip against their algebra") {
  for (const auto& g : catalog()) {
    for (const RealizationCocycle& c : g->cocycles) {
      CAPTURE(g->name);
      CAPTURE(c.name);
      std::string text = serialize_cocycle(g->algebra, c.gamma0, c.name);
      std::string name;
      CocycleMatrix back = parse_cocycle_text(text, g->algebra, &name);
      CHECK(name == c.name);
      CHECK(back == c.gamma0);
    }
  }
}

TEST_CASE("cocycle parsing rejects bad entries") {
  const LieAlgebra& su2 = catalog_find("su2")->algebra;
  CHECK_THROWS_WITH_AS(parse_cocycle_text("cocycle c\nX1 X1 = 1\n", su2),
                       doctest::Contains("diagonal"), ParseError);
  CHECK_THROWS_WITH_AS(parse_cocycle_text("cocycle c\nX1 X2 = 1\nX2 X1 = -1\n", su2),
                       doctest::Contains("duplicate"), ParseError);
  CHECK_THROWS_WITH_AS(parse_cocycle_text("X1 X2 = 1\n", su2),
                       doctest::Contains("missing 'cocycle NAME' line"), ParseError);
}

TEST_CASE("functional files round-trip") {
  RatVec l0{Rat(-1), Rat(0), Rat(3, 4)};
  std::string text = serialize_functional(l0, "rest-energy");
  std::string name;
  RatVec back = parse_functional_text(text, 3, &name);
  CHECK(name == "rest-energy");
  CHECK(back == l0);
  CHECK_THROWS_AS(parse_functional_text(text, 4), ParseError);
}

TEST_CASE("json reports are deterministic and keep rationals as strings") {
  auto build = [] {
    Report rep("h2", 42, 1e-8);
    rep.add_input("algebra", "galilei11");
    rep.results()["h2"] = 2;
    rep.results()["mu"] = ratvec_json({Rat(1, 3), Rat(-2)});
    rep.results()["residual"] = double_json(1.25e-9);
    return rep.to_json();
  };
  std::string a = build(), b = build();
  CHECK(a == b);
  CHECK(a.find("\"1/3\"") != std::string::npos);
  CHECK(a.find("\"-2\"") != std::string::npos);
  CHECK(a.find("\"version\"") != std::string::npos);
  // a trailing newline makes the reports concatenation-safe
  REQUIRE_FALSE(a.empty());
  CHECK(a.back() == '\n');
}

TEST_CASE("non-finite doubles are stringified rather than emitted as null") {
  Json inf = double_json(std::numeric_limits<double>::infinity());
  CHECK(inf.is_string());
  Json num = double_json(0.5);
  CHECK(num.is_number());
}

TEST_CASE("text reports render one key per line") {
  Report rep("omega", 7, 1e-6);
  rep.add_input("algebra", "su2");
  rep.results()["rank"] = 2;
  std::string text = rep.to_text();
  CHECK(text.find("command: omega\n") != std::string::npos);
  CHECK(text.find("seed: 7\n") != std::string::npos);
  CHECK(text.find("algebra: su2\n") != std::string::npos);
  CHECK(text.find("rank: 2\n") != std::string::npos);
}
