#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lie2herm/lie2herm.hpp"

namespace {

using nlohmann::json;
using namespace lie2herm;

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

json json_vec(const Vec& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json json_mat(const Mat& M) {
  json rows = json::array();
  for (int r = 0; r < M.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < M.cols(); ++c) row.push_back(M(r, c));
    rows.push_back(row);
  }
  return rows;
}

// b_k-combination as "c1 b1 + c2 b3"; display threshold only (values are kept
// exact in --json output).
std::string combo(const Vec& v) {
  std::string s;
  for (int k = 0; k < v.size(); ++k) {
    if (std::abs(v[k]) <= 1e-12) continue;
    if (!s.empty()) s += " + ";
    if (v[k] == 1.0)
      s += "b" + std::to_string(k + 1);
    else if (v[k] == -1.0)
      s += "-b" + std::to_string(k + 1);
    else
      s += num(v[k]) + " b" + std::to_string(k + 1);
  }
  return s.empty() ? "0" : s;
}

std::optional<std::pair<Vec, Vec>> file_hints(const AlgebraFile& file) {
  if (file.hint_e1 && file.hint_e2) return std::make_pair(*file.hint_e1, *file.hint_e2);
  return std::nullopt;
}

// Split off the derived-algebra frame if the algebra is Lie(n,2)-shaped;
// empty when it is not (classification still works without it).
std::optional<Lie2Decomposition> try_decompose(const MetricLieAlgebra& L,
                                               const AlgebraFile& file) {
  try {
    return decompose_extended(L, file_hints(file));
  } catch (const Error&) {
    return std::nullopt;
  }
}

int cmd_validate(const std::string& path, bool as_json) {
  const AlgebraFile file = load_algebra_file(path);
  const MetricLieAlgebra L = to_algebra(file);
  const ValidationReport rep = validate(L);
  if (as_json) {
    json out{{"dim", L.dim()},
             {"antisymmetry_residual", rep.antisymmetry_residual},
             {"jacobi_residual", rep.jacobi_residual},
             {"ok", rep.ok}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "dim: " << L.dim() << "\n"
              << "antisymmetry residual: " << num(rep.antisymmetry_residual) << "\n"
              << "jacobi residual: " << num(rep.jacobi_residual) << "\n"
              << (rep.ok ? "valid" : "NOT a Lie algebra (residual above tolerance)") << "\n";
  }
  return rep.ok ? 0 : 1;
}

int cmd_classify(const std::string& path, bool as_json) {
  const AlgebraFile file = load_algebra_file(path);
  const MetricLieAlgebra L = to_algebra(file);
  if (!file.J) throw MissingJError("'" + path + "' has no J block");
  const AlmostComplexStructure J(*file.J);
  const ClassificationReport rep = classify(L, J);

  std::optional<JTypeReport> jt;
  std::optional<double> top;
  if (const auto dec = try_decompose(L, file)) {
    jt = classify_J_type(L, J, *dec);
    if (L.dim() == 4 && rep.compatible) top = dc_top(L, J, *dec);
  }

  if (as_json) {
    json out{{"compatible", rep.compatible},
             {"compatibility_residual", rep.compatibility_residual},
             {"nijenhuis_residual", rep.nijenhuis_residual},
             {"integrable", rep.integrable},
             {"abelian", rep.abelian},
             {"abelian_residual", rep.abelian_residual},
             {"verdict", to_string(rep.verdict)}};
    if (rep.compatible) {
      out["domega_norm"] = rep.domega_norm;
      out["c_norm"] = rep.c_norm;
      out["dc_norm"] = rep.dc_norm;
    }
    if (jt) {
      out["type"] = to_string(jt->type);
      out["lambda"] = jt->lambda;
      out["mu"] = jt->mu;
    }
    if (top) out["dc_top"] = *top;
    std::cout << out.dump(2) << "\n";
  } else {
    if (jt)
      std::cout << to_string(jt->type) << " (lambda=" << num(jt->lambda)
                << ", mu=" << num(jt->mu) << "), " << to_string(rep.verdict);
    else
      std::cout << to_string(rep.verdict);
    if (top) std::cout << ", dc_top = " << num(*top);
    std::cout << "\n"
              << "compatible: " << (rep.compatible ? "yes" : "no")
              << " (residual " << num(rep.compatibility_residual) << ")\n"
              << "integrable: " << (rep.integrable ? "yes" : "no")
              << " (Nijenhuis residual " << num(rep.nijenhuis_residual) << ")\n"
              << "abelian: " << (rep.abelian ? "yes" : "no")
              << " (residual " << num(rep.abelian_residual) << ")\n";
    if (rep.compatible)
      std::cout << "|domega| = " << num(rep.domega_norm) << ", |c| = " << num(rep.c_norm)
                << ", |dc| = " << num(rep.dc_norm) << "\n";
  }
  return 0;
}

int cmd_decompose(const std::string& path, bool as_json) {
  const AlgebraFile file = load_algebra_file(path);
  const MetricLieAlgebra L = to_algebra(file);
  const Lie2Decomposition dec = decompose_extended(L, file_hints(file));
  if (as_json) {
    json gamma = json::array();
    for (const Vec& g : dec.gamma) gamma.push_back(json_vec(g));
    json out{{"e1", json_vec(dec.e1)}, {"e2", json_vec(dec.e2)},
             {"gamma", gamma},         {"a1", json_vec(dec.a1)},
             {"a2", json_vec(dec.a2)}, {"b1", json_vec(dec.b1)},
             {"b2", json_vec(dec.b2)}, {"f1", json_mat(dec.f1)},
             {"f2", json_mat(dec.f2)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "e1 = " << combo(dec.e1) << "\n"
              << "e2 = " << combo(dec.e2) << "\n";
    for (size_t t = 0; t < dec.gamma.size(); ++t)
      std::cout << "gamma_" << t + 1 << " = " << combo(dec.gamma[t]) << "\n";
    std::cout << "a1 = " << combo(dec.a1) << "\n"
              << "a2 = " << combo(dec.a2) << "\n"
              << "b1 = " << combo(dec.b1) << "\n"
              << "b2 = " << combo(dec.b2) << "\n"
              << "f1 (gamma coordinates):\n" << dec.f1 << "\n"
              << "f2 (gamma coordinates):\n" << dec.f2 << "\n";
  }
  return 0;
}

int print_connection(const Connection& nabla, bool as_json) {
  const int n = nabla.dim();
  if (as_json) {
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
      json ji = json::array();
      for (int j = 0; j < n; ++j) ji.push_back(json_vec(nabla.apply_basis(i, j)));
      rows.push_back(ji);
    }
    std::cout << json{{"coeff", rows}}.dump(2) << "\n";
    return 0;
  }
  bool any = false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec v = nabla.apply_basis(i, j);
      if (v.cwiseAbs().maxCoeff() <= 1e-12) continue;
      std::cout << "nabla_b" << i + 1 << " b" << j + 1 << " = " << combo(v) << "\n";
      any = true;
    }
  if (!any) std::cout << "(all coefficients zero)\n";
  return 0;
}

int cmd_connection(const std::string& path, const std::string& which, bool as_json) {
  const AlgebraFile file = load_algebra_file(path);
  const MetricLieAlgebra L = to_algebra(file);
  if (which == "levi-civita") return print_connection(levi_civita_koszul(L), as_json);
  if (!file.J) throw MissingJError("'" + path + "' has no J block");
  const AlmostComplexStructure J(*file.J);
  return print_connection(bismut_connection(L, J, c_form(L, J)), as_json);
}

int cmd_curvature(const std::string& path, bool as_json) {
  const AlgebraFile file = load_algebra_file(path);
  const MetricLieAlgebra L = to_algebra(file);
  const int n = L.dim();
  const Connection nabla = levi_civita_koszul(L);
  const Tensor4 R = curvature(nabla, L);
  if (as_json) {
    json sec = json::array();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        sec.push_back(json{{"i", i + 1},
                           {"j", j + 1},
                           {"K", sectional_curvature(L, Vec::Unit(n, i), Vec::Unit(n, j))}});
    json rr = json::array();
    for (int i = 0; i < n; ++i) {
      json a = json::array();
      for (int j = 0; j < n; ++j) {
        json b = json::array();
        for (int k = 0; k < n; ++k) {
          json c = json::array();
          for (int l = 0; l < n; ++l) c.push_back(R(i, j, k, l));
          b.push_back(c);
        }
        a.push_back(b);
      }
      rr.push_back(a);
    }
    std::cout << json{{"sectional", sec}, {"curvature", rr}}.dump(2) << "\n";
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        std::cout << "K(b" << i + 1 << ", b" << j + 1 << ") = "
                  << num(sectional_curvature(L, Vec::Unit(n, i), Vec::Unit(n, j))) << "\n";
  }
  return 0;
}

int cmd_search(const std::string& path, int grid, bool as_json) {
  const AlgebraFile file = load_algebra_file(path);
  const MetricLieAlgebra L = to_algebra(file);
  const auto hits = search_type2_hermitian(L, grid);
  if (as_json) {
    json arr = json::array();
    for (const auto& h : hits)
      arr.push_back(json{{"i", h.i},
                         {"j", h.j},
                         {"theta", h.theta},
                         {"phi", h.phi},
                         {"u01", json_vec(h.u01)},
                         {"u02", json_vec(h.u02)},
                         {"J", json_mat(h.J)}});
    std::cout << json{{"grid", grid}, {"hits", arr}}.dump(2) << "\n";
  } else if (hits.empty()) {
    std::cout << "none found\n";
  } else {
    std::cout << hits.size() << " Hermitian Type II frame(s):\n";
    for (const auto& h : hits)
      std::cout << "  i=" << h.i << " j=" << h.j << "  u01 = " << combo(h.u01)
                << ", u02 = " << combo(h.u02) << "\n";
  }
  return 0;
}

int cmd_catalog(const std::string& name, const std::string& export_dir, bool as_json) {
  std::vector<std::string> names;
  if (name.empty())
    names = catalog_names();
  else
    names.push_back(catalog_get(name).name); // validates the name

  if (export_dir.empty()) {
    if (as_json) {
      json arr = json::array();
      for (const auto& nm : names) {
        const CatalogEntry entry = catalog_get(nm);
        const CatalogExpected& exp = entry.expected;
        json e{{"name", entry.name},
               {"dim", entry.algebra.dim()},
               {"type", to_string(exp.type)}};
        if (exp.verdict) e["verdict"] = to_string(*exp.verdict);
        if (exp.dc_top) e["dc_top"] = *exp.dc_top;
        arr.push_back(e);
      }
      std::cout << arr.dump(2) << "\n";
    } else {
      for (const auto& nm : names) {
        const CatalogEntry entry = catalog_get(nm);
        std::cout << entry.name << "  (dim " << entry.algebra.dim() << ", "
                  << to_string(entry.expected.type);
        if (entry.expected.verdict) std::cout << ", " << to_string(*entry.expected.verdict);
        std::cout << ")\n";
      }
    }
    return 0;
  }

  std::filesystem::create_directories(export_dir);
  json written = json::array();
  for (const auto& nm : names) {
    const CatalogEntry entry = catalog_get(nm);
    std::optional<Mat> J;
    if (entry.J) J = *entry.J;
    const AlgebraFile file = from_algebra(entry.algebra, J, entry.hints);
    const auto out_path = std::filesystem::path(export_dir) / (nm + ".lie2");
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write '" + out_path.string() + "'");
    out << serialize_algebra_file(file);
    written.push_back(out_path.string());
    if (!as_json) std::cout << "wrote " << out_path.string() << "\n";
  }
  if (as_json) std::cout << json{{"written", written}}.dump(2) << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric Lie algebras with two-dimensional derived algebra: "
               "decomposition, Hermitian structures, connections, curvature"};
  app.require_subcommand(1);

  double tol = tolerance();
  app.add_option("--tol", tol, "numerical tolerance (default 1e-9)")
      ->envname("LIE2_TOL")
      ->check(CLI::PositiveNumber);

  std::string path, which = "levi-civita", name, export_dir;
  int grid = 360;
  bool j_validate = false, j_classify = false, j_decompose = false, j_conn = false,
       j_curv = false, j_search = false, j_catalog = false;

  auto* validate_cmd = app.add_subcommand("validate", "check the Lie algebra axioms");
  validate_cmd->add_option("path", path, "algebra file")->required();
  validate_cmd->add_flag("--json", j_validate, "machine-readable output");

  auto* classify_cmd =
      app.add_subcommand("classify", "Kahler / SKT / weak-KT classification of (g, J)");
  classify_cmd->add_option("path", path, "algebra file with a J block")->required();
  classify_cmd->add_flag("--json", j_classify, "machine-readable output");

  auto* decompose_cmd =
      app.add_subcommand("decompose", "split frame and structure data (a, b, f)");
  decompose_cmd->add_option("path", path, "algebra file")->required();
  decompose_cmd->add_flag("--json", j_decompose, "machine-readable output");

  auto* conn_cmd = app.add_subcommand("connection", "connection coefficient table");
  conn_cmd->add_option("path", path, "algebra file")->required();
  conn_cmd->add_option("which", which, "levi-civita or bismut")
      ->required()
      ->check(CLI::IsMember({"levi-civita", "bismut"}));
  conn_cmd->add_flag("--json", j_conn, "machine-readable output");

  auto* curv_cmd = app.add_subcommand("curvature", "sectional curvatures of basis planes");
  curv_cmd->add_option("path", path, "algebra file")->required();
  curv_cmd->add_flag("--json", j_curv, "machine-readable output");

  auto* search_cmd = app.add_subcommand(
      "search-type2", "grid search for Hermitian Type II frames (dimension 4)");
  search_cmd->add_option("path", path, "algebra file")->required();
  search_cmd->add_option("--grid", grid, "angular grid steps (default 360)")
      ->check(CLI::PositiveNumber);
  search_cmd->add_flag("--json", j_search, "machine-readable output");

  auto* catalog_cmd = app.add_subcommand("catalog", "bundled fixture algebras");
  catalog_cmd->add_option("name", name, "a single entry (default: all)");
  catalog_cmd->add_option("--export", export_dir, "write entries as algebra files");
  catalog_cmd->add_flag("--json", j_catalog, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  set_tolerance(tol);
  try {
    if (validate_cmd->parsed()) return cmd_validate(path, j_validate);
    if (classify_cmd->parsed()) return cmd_classify(path, j_classify);
    if (decompose_cmd->parsed()) return cmd_decompose(path, j_decompose);
    if (conn_cmd->parsed()) return cmd_connection(path, which, j_conn);
    if (curv_cmd->parsed()) return cmd_curvature(path, j_curv);
    if (search_cmd->parsed()) return cmd_search(path, grid, j_search);
    if (catalog_cmd->parsed()) return cmd_catalog(name, export_dir, j_catalog);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2; // unreachable with require_subcommand(1)
}
