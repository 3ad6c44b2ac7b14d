#include <cmath>
#include <vector>

#include <doctest.h>

#include "lie2herm/lie2herm.hpp"

using namespace lie2herm;

TEST_CASE("fixture names are stable") {
  const std::vector<std::string> want{"sec2-mixed",       "ex8-A412-typeI",
                                      "ex9-h3R-typeI",    "ex10-A412-typeII",
                                      "ex12-rr-typeII",   "ex13-A64-typeI"};
  CHECK(catalog_names() == want);
  CHECK_THROWS_AS(catalog_get("no-such-fixture"), UnknownNameError);
}

TEST_CASE("every fixture is a valid instance") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const auto entry = catalog_get(name);
    CHECK(entry.name == name);
    CHECK(validate(entry.algebra).ok);

    REQUIRE(entry.J.has_value());
    const AlmostComplexStructure J(*entry.J); // must not throw
    CHECK(is_compatible(entry.algebra, *entry.J));

    REQUIRE(entry.hints.has_value());
    const auto dec = decompose_extended(entry.algebra, entry.hints);
    CHECK(dec.dim() == entry.algebra.dim());

    const auto type = classify_J_type(entry.algebra, J, dec);
    CHECK(type.type == entry.expected.type);
  }
}

TEST_CASE("recorded verdicts") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const auto entry = catalog_get(name);
    const auto rep = classify(entry.algebra, AlmostComplexStructure(*entry.J));
    if (name == "sec2-mixed") {
      CHECK_FALSE(entry.expected.verdict.has_value());
      CHECK(rep.verdict == Verdict::NonIntegrable);
    } else if (name == "ex13-A64-typeI") {
      // The recorded value; whether classification reproduces it is asserted
      // by the acceptance suite.
      REQUIRE(entry.expected.verdict.has_value());
      CHECK(*entry.expected.verdict == Verdict::SKT);
    } else {
      REQUIRE(entry.expected.verdict.has_value());
      CHECK(rep.verdict == *entry.expected.verdict);
    }
  }
}

TEST_CASE("recorded top-degree values") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const auto entry = catalog_get(name);
    if (name == "sec2-mixed" || name == "ex13-A64-typeI") {
      CHECK_FALSE(entry.expected.dc_top.has_value());
      continue;
    }
    REQUIRE(entry.expected.dc_top.has_value());
    const auto dec = decompose_extended(entry.algebra, entry.hints);
    const double got = dc_top(entry.algebra, AlmostComplexStructure(*entry.J), dec);
    CHECK(std::abs(got - *entry.expected.dc_top) <= 1e-9);
  }
}

TEST_CASE("fixtures survive the file format round trip") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const auto entry = catalog_get(name);
    const AlgebraFile out = from_algebra(entry.algebra, entry.J, entry.hints);
    const AlgebraFile in = parse_algebra_file(serialize_algebra_file(out));
    const MetricLieAlgebra L = to_algebra(in);

    CHECK(L.dim() == entry.algebra.dim());
    const auto& c0 = entry.algebra.structure_constants().v;
    const auto& c1 = L.structure_constants().v;
    REQUIRE(c0.size() == c1.size());
    for (size_t s = 0; s < c0.size(); ++s) CHECK(c0[s] == c1[s]);
    CHECK((L.metric() - entry.algebra.metric()).cwiseAbs().maxCoeff() == 0.0);

    REQUIRE(in.J.has_value());
    CHECK((*in.J - *entry.J).cwiseAbs().maxCoeff() == 0.0);
    REQUIRE(in.hint_e1.has_value());
    REQUIRE(in.hint_e2.has_value());
    CHECK((*in.hint_e1 - entry.hints->first).cwiseAbs().maxCoeff() == 0.0);
    CHECK((*in.hint_e2 - entry.hints->second).cwiseAbs().maxCoeff() == 0.0);
  }
}
