#include <cmath>

#include <doctest.h>

#include "lie2herm/lie2herm.hpp"

using namespace lie2herm;

TEST_CASE("parse: minimal file with comments and blank lines") {
  const std::string text =
      "# heisenberg algebra plus a flat direction\n"
      "dim 4\n"
      "\n"
      "bracket 3 4 : 1 1  # [b3,b4] = b1\n";
  const AlgebraFile file = parse_algebra_file(text);
  CHECK(file.dim == 4);
  REQUIRE(file.brackets.size() == 1);
  CHECK(file.brackets[0].i == 3);
  CHECK(file.brackets[0].j == 4);
  REQUIRE(file.brackets[0].coeffs.size() == 1);
  CHECK(file.brackets[0].coeffs[0].first == 1);
  CHECK(file.brackets[0].coeffs[0].second == 1.0);
  CHECK_FALSE(file.metric.has_value());
  CHECK_FALSE(file.J.has_value());

  const MetricLieAlgebra L = to_algebra(file);
  CHECK((L.metric() - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((L.bracket_basis(2, 3) - Vec::Unit(4, 0)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("parse: matrix blocks allow interior blank and comment lines") {
  const std::string text =
      "dim 2\n"
      "metric\n"
      "2 0\n"
      "\n"
      "# second row\n"
      "0 3\n"
      "J\n"
      "0 -1\n"
      "1 0\n"
      "hint_e1 1 0\n"
      "hint_e2 0 1\n";
  const AlgebraFile file = parse_algebra_file(text);
  REQUIRE(file.metric.has_value());
  CHECK((*file.metric)(0, 0) == 2.0);
  CHECK((*file.metric)(1, 1) == 3.0);
  REQUIRE(file.J.has_value());
  CHECK((*file.J)(0, 1) == -1.0);
  REQUIRE(file.hint_e1.has_value());
  CHECK((*file.hint_e1)[0] == 1.0);
  REQUIRE(file.hint_e2.has_value());
  CHECK((*file.hint_e2)[1] == 1.0);
}

TEST_CASE("serialize then parse is the identity, including irrational values") {
  AlgebraFile file;
  file.dim = 4;
  AlgebraFile::BracketRow row;
  row.i = 1;
  row.j = 2;
  row.coeffs = {{1, std::sqrt(2.0)}, {3, -std::atan(1.0) * 4}, {4, 1.0 / 3.0}};
  file.brackets.push_back(row);
  Mat G = Mat::Identity(4, 4);
  G(2, 2) = std::exp(1.0);
  file.metric = G;
  Vec h = Vec::Zero(4);
  h[0] = std::sqrt(0.5);
  h[1] = -std::sqrt(0.5);
  file.hint_e1 = h;

  const AlgebraFile back = parse_algebra_file(serialize_algebra_file(file));
  CHECK(back.dim == 4);
  REQUIRE(back.brackets.size() == 1);
  REQUIRE(back.brackets[0].coeffs.size() == 3);
  for (size_t s = 0; s < 3; ++s) {
    CHECK(back.brackets[0].coeffs[s].first == row.coeffs[s].first);
    CHECK(back.brackets[0].coeffs[s].second == row.coeffs[s].second); // bit-exact
  }
  REQUIRE(back.metric.has_value());
  CHECK((*back.metric - G).cwiseAbs().maxCoeff() == 0.0);
  REQUIRE(back.hint_e1.has_value());
  CHECK((*back.hint_e1 - h).cwiseAbs().maxCoeff() == 0.0);
  CHECK_FALSE(back.hint_e2.has_value());
}

TEST_CASE("parse errors carry the offending line") {
  auto bad = [](const std::string& text) {
    CHECK_THROWS_AS(parse_algebra_file(text), ParseError);
  };
  bad("");                                           // missing dim
  bad("bracket 1 2 : 1 1\ndim 4\n");                 // dim must come first
  bad("dim 4\ndim 4\n");                             // duplicate dim
  bad("dim 0\n");                                    // non-positive dim
  bad("dim 4 extra\n");                              // trailing token
  bad("dim 4\nbracket 2 1 : 1 1\n");                 // i >= j
  bad("dim 4\nbracket 1 1 : 1 1\n");                 // i == j
  bad("dim 4\nbracket 1 5 : 1 1\n");                 // index out of range
  bad("dim 4\nbracket 1 2 : 5 1\n");                 // target out of range
  bad("dim 4\nbracket 1 2 : 1 1\nbracket 1 2 : 1 1\n"); // duplicate pair
  bad("dim 4\nbracket 1 2 : 1 1 1 2\n");             // duplicate target
  bad("dim 4\nbracket 1 2 : 1\n");                   // k without value
  bad("dim 4\nbracket 1 2 :\n");                     // empty coefficient list
  bad("dim 4\nbracket 1 2 : 1 abc\n");               // not a number
  bad("dim 4\nbracket 1 2 : 1 1.5x\n");              // trailing characters
  bad("dim 4\nbracket 1 2 1 1\n");                   // missing colon
  bad("dim 2\nmetric\n1 0\n");                       // matrix block hits EOF
  bad("dim 2\nmetric\n1 0 0\n0 1\n");                // wrong row length
  bad("dim 2\nmetric extra\n1 0\n0 1\n");            // token after keyword
  bad("dim 2\nmetric\n1 0\n0 1\nmetric\n1 0\n0 1\n"); // duplicate matrix
  bad("dim 4\nhint_e1 1 0 0\n");                     // wrong hint length
  bad("dim 4\nhint_e1 1 0 0 0\nhint_e1 1 0 0 0\n");  // duplicate hint
  bad("dim 4\nfrobnicate 1\n");                      // unknown keyword

  try {
    parse_algebra_file("dim 4\nbracket 2 1 : 1 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("loading a missing file is a parse error") {
  CHECK_THROWS_AS(load_algebra_file("/nonexistent/path/algebra.lie2"), ParseError);
}

TEST_CASE("to_algebra validates shapes") {
  AlgebraFile file;
  file.dim = 3;
  file.metric = Mat::Identity(2, 2);
  CHECK_THROWS_AS(to_algebra(file), DimensionMismatchError);
}

TEST_CASE("from_algebra emits only what is needed") {
  MetricLieAlgebra L(4);
  L.set_bracket(2, 3, Vec::Unit(4, 0)); // single nonzero bracket
  const AlgebraFile file = from_algebra(L);
  CHECK(file.brackets.size() == 1); // zero rows are skipped
  CHECK_FALSE(file.metric.has_value()); // identity metric is implicit
  CHECK_FALSE(file.J.has_value());

  Mat G = Mat::Identity(4, 4);
  G(0, 0) = 2.0;
  const MetricLieAlgebra Lw(Tensor3(4), G);
  CHECK(from_algebra(Lw).metric.has_value());

  CHECK_THROWS_AS(from_algebra(L, Mat::Identity(3, 3)), DimensionMismatchError);
  CHECK_THROWS_AS(
      from_algebra(L, std::nullopt, std::make_pair(Vec::Zero(3).eval(), Vec::Zero(4).eval())),
      DimensionMismatchError);
}
