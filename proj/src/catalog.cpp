#include "lie2herm/catalog.hpp"

#include <cmath>

#include "lie2herm/errors.hpp"

namespace lie2herm {

namespace {

// Bracket rows are written 1-based to match the usual e_i notation; the
// builder shifts them down.
struct Row {
  int i, j, k;
  double v;
};

MetricLieAlgebra build(int n, std::initializer_list<Row> rows) {
  MetricLieAlgebra L(n);
  for (const Row& r : rows) {
    Vec coeffs = L.bracket_basis(r.i - 1, r.j - 1);
    coeffs[r.k - 1] = r.v;
    L.set_bracket(r.i - 1, r.j - 1, coeffs);
  }
  return L;
}

// 1-based (from, to, value): J e_from += value * e_to.
struct JEntry {
  int from, to;
  double v;
};

Mat build_J(int n, std::initializer_list<JEntry> cols) {
  Mat J = Mat::Zero(n, n);
  for (const JEntry& r : cols) J(r.to - 1, r.from - 1) = r.v;
  return J;
}

std::pair<Vec, Vec> ambient_hints(int n) {
  return {Vec::Unit(n, 0), Vec::Unit(n, 1)};
}

CatalogEntry make_sec2_mixed() {
  MetricLieAlgebra L = build(4, {{1, 3, 1, -1.0}, {3, 4, 2, 1.0}});
  const double s = std::sqrt(2.0) / 2.0;
  Mat J = Mat::Zero(4, 4);
  J.col(0) = Vec{{0.0, -s, s, 0.0}};  // J e1 = (e3 - e2)/sqrt(2)
  J.col(1) = Vec{{s, 0.0, 0.0, s}};   // J e2 = (e1 + e4)/sqrt(2)
  J.col(2) = Vec{{-s, 0.0, 0.0, s}};  // J e3 = (e4 - e1)/sqrt(2)
  J.col(3) = Vec{{0.0, -s, -s, 0.0}}; // J e4 = -(e2 + e3)/sqrt(2)
  CatalogExpected exp;
  exp.type = JType::Mixed;
  return {"sec2-mixed", std::move(L), std::move(J), exp, ambient_hints(4)};
}

MetricLieAlgebra build_A412() {
  // [e1,e3] = e1, [e2,e3] = e2, [e1,e4] = -e2, [e2,e4] = e1
  return build(4, {{1, 3, 1, 1.0}, {2, 3, 2, 1.0}, {1, 4, 2, -1.0}, {2, 4, 1, 1.0}});
}

CatalogEntry make_ex8() {
  MetricLieAlgebra L = build_A412();
  Mat J = build_J(4, {{1, 2, 1.0}, {2, 1, -1.0}, {3, 4, 1.0}, {4, 3, -1.0}});
  CatalogExpected exp;
  exp.type = JType::TypeI;
  exp.verdict = Verdict::WeakKT;
  exp.dc_top = -4.0;
  return {"ex8-A412-typeI", std::move(L), std::move(J), exp, ambient_hints(4)};
}

CatalogEntry make_ex9() {
  MetricLieAlgebra L = build(4, {{3, 4, 1, 1.0}}); // h3 x R: [e3,e4] = e1
  Mat J = build_J(4, {{1, 2, 1.0}, {2, 1, -1.0}, {3, 4, 1.0}, {4, 3, -1.0}});
  CatalogExpected exp;
  exp.type = JType::TypeI;
  exp.verdict = Verdict::SKT;
  exp.dc_top = 0.0;
  return {"ex9-h3R-typeI", std::move(L), std::move(J), exp, ambient_hints(4)};
}

CatalogEntry make_ex10() {
  MetricLieAlgebra L = build_A412();
  Mat J = build_J(4, {{1, 4, 1.0}, {4, 1, -1.0}, {2, 3, 1.0}, {3, 2, -1.0}});
  CatalogExpected exp;
  exp.type = JType::TypeII;
  exp.verdict = Verdict::WeakKT;
  exp.dc_top = 4.0;
  return {"ex10-A412-typeII", std::move(L), std::move(J), exp, ambient_hints(4)};
}

CatalogEntry make_ex12() {
  // r2 x r2: [e3,e1] = e1, [e4,e2] = e2
  MetricLieAlgebra L = build(4, {{1, 3, 1, -1.0}, {2, 4, 2, -1.0}});
  Mat J = build_J(4, {{1, 3, 1.0}, {3, 1, -1.0}, {2, 4, 1.0}, {4, 2, -1.0}});
  CatalogExpected exp;
  exp.type = JType::TypeII;
  exp.verdict = Verdict::Kahler;
  exp.dc_top = 0.0;
  return {"ex12-rr-typeII", std::move(L), std::move(J), exp, ambient_hints(4)};
}

CatalogEntry make_ex13() {
  // [e5,e6] = e1, [e5,e3] = e2, [e6,e4] = e2
  MetricLieAlgebra L =
      build(6, {{5, 6, 1, 1.0}, {3, 5, 2, -1.0}, {4, 6, 2, -1.0}});
  Mat J = build_J(6, {{1, 2, 1.0}, {2, 1, -1.0}, {3, 4, 1.0}, {4, 3, -1.0},
                      {5, 6, 1.0}, {6, 5, -1.0}});
  CatalogExpected exp;
  exp.type = JType::TypeI;
  exp.verdict = Verdict::SKT;
  return {"ex13-A64-typeI", std::move(L), std::move(J), exp, ambient_hints(6)};
}

} // namespace

std::vector<std::string> catalog_names() {
  return {"sec2-mixed",       "ex8-A412-typeI", "ex9-h3R-typeI",
          "ex10-A412-typeII", "ex12-rr-typeII", "ex13-A64-typeI"};
}

CatalogEntry catalog_get(const std::string& name) {
  if (name == "sec2-mixed") return make_sec2_mixed();
  if (name == "ex8-A412-typeI") return make_ex8();
  if (name == "ex9-h3R-typeI") return make_ex9();
  if (name == "ex10-A412-typeII") return make_ex10();
  if (name == "ex12-rr-typeII") return make_ex12();
  if (name == "ex13-A64-typeI") return make_ex13();
  throw UnknownNameError("no catalog entry named '" + name + "'");
}

} // namespace lie2herm
