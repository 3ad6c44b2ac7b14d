#include "lie2herm/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "lie2herm/errors.hpp"

namespace lie2herm {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

std::vector<double> parse_numbers(std::istringstream& in, int line_no) {
  std::vector<double> out;
  std::string tok;
  while (in >> tok) {
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      fail(line_no, "expected a number, got '" + tok + "'");
    }
    if (used != tok.size()) fail(line_no, "trailing characters in number '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

int parse_index(const std::string& tok, int line_no) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    fail(line_no, "expected an index, got '" + tok + "'");
  }
  if (used != tok.size()) fail(line_no, "trailing characters in index '" + tok + "'");
  return v;
}

} // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
  AlgebraFile file;
  bool have_dim = false;
  std::set<std::pair<int, int>> seen_pairs;

  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;

  // Matrix-block state: after "metric"/"J" the next `dim` non-empty lines are rows.
  Mat* pending = nullptr;
  int pending_row = 0;
  std::string pending_name;

  while (std::getline(stream, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream in(raw);

    if (pending) {
      std::string peek;
      if (!(in >> peek)) continue; // blank line inside a matrix block
      in.clear();
      in.seekg(0);
      const auto row = parse_numbers(in, line_no);
      if (static_cast<int>(row.size()) != file.dim)
        fail(line_no, pending_name + " row needs " + std::to_string(file.dim) + " entries");
      for (int c = 0; c < file.dim; ++c) (*pending)(pending_row, c) = row[static_cast<size_t>(c)];
      if (++pending_row == file.dim) pending = nullptr;
      continue;
    }

    std::string key;
    if (!(in >> key)) continue;

    if (key == "dim") {
      if (have_dim) fail(line_no, "duplicate dim");
      std::string tok;
      if (!(in >> tok)) fail(line_no, "dim needs a value");
      file.dim = parse_index(tok, line_no);
      if (file.dim < 1) fail(line_no, "dim must be positive");
      if (in >> tok) fail(line_no, "unexpected token after dim");
      have_dim = true;
      continue;
    }
    if (!have_dim) fail(line_no, "dim must come before '" + key + "'");

    if (key == "bracket") {
      std::string ti, tj, colon;
      if (!(in >> ti >> tj >> colon) || colon != ":")
        fail(line_no, "expected 'bracket i j : k v ...'");
      AlgebraFile::BracketRow row;
      row.i = parse_index(ti, line_no);
      row.j = parse_index(tj, line_no);
      if (row.i < 1 || row.j < 1 || row.i > file.dim || row.j > file.dim)
        fail(line_no, "bracket indices out of range");
      if (row.i >= row.j) fail(line_no, "bracket rows require i < j");
      if (!seen_pairs.insert({row.i, row.j}).second)
        fail(line_no, "duplicate bracket pair " + ti + " " + tj);
      std::set<int> seen_k;
      std::string tk, tv;
      while (in >> tk) {
        if (!(in >> tv)) fail(line_no, "bracket coefficient needs 'k value'");
        const int k = parse_index(tk, line_no);
        if (k < 1 || k > file.dim) fail(line_no, "bracket target index out of range");
        if (!seen_k.insert(k).second) fail(line_no, "duplicate target index in bracket row");
        size_t used = 0;
        double v = 0.0;
        try {
          v = std::stod(tv, &used);
        } catch (const std::exception&) {
          fail(line_no, "expected a number, got '" + tv + "'");
        }
        if (used != tv.size()) fail(line_no, "trailing characters in number '" + tv + "'");
        row.coeffs.emplace_back(k, v);
      }
      if (row.coeffs.empty()) fail(line_no, "bracket row has no coefficients");
      file.brackets.push_back(std::move(row));
      continue;
    }

    if (key == "metric" || key == "J") {
      std::string extra;
      if (in >> extra) fail(line_no, "unexpected token after '" + key + "'");
      auto& slot = key == "metric" ? file.metric : file.J;
      if (slot) fail(line_no, "duplicate " + key);
      slot = Mat::Zero(file.dim, file.dim);
      pending = &*slot;
      pending_row = 0;
      pending_name = key;
      continue;
    }

    if (key == "hint_e1" || key == "hint_e2") {
      auto& slot = key == "hint_e1" ? file.hint_e1 : file.hint_e2;
      if (slot) fail(line_no, "duplicate " + key);
      const auto vals = parse_numbers(in, line_no);
      if (static_cast<int>(vals.size()) != file.dim)
        fail(line_no, key + " needs " + std::to_string(file.dim) + " entries");
      Vec v(file.dim);
      for (int c = 0; c < file.dim; ++c) v[c] = vals[static_cast<size_t>(c)];
      slot = std::move(v);
      continue;
    }

    fail(line_no, "unknown keyword '" + key + "'");
  }

  if (pending)
    throw ParseError(pending_name + " block ended after " + std::to_string(pending_row) +
                     " of " + std::to_string(file.dim) + " rows");
  if (!have_dim) throw ParseError("missing dim");
  return file;
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_file(buf.str());
}

std::string serialize_algebra_file(const AlgebraFile& file) {
  std::ostringstream out;
  out << "dim " << file.dim << "\n";
  for (const auto& row : file.brackets) {
    out << "bracket " << row.i << " " << row.j << " :";
    for (const auto& [k, v] : row.coeffs) out << " " << k << " " << fmt(v);
    out << "\n";
  }
  auto emit_matrix = [&](const char* name, const Mat& M) {
    out << name << "\n";
    for (int r = 0; r < M.rows(); ++r) {
      for (int c = 0; c < M.cols(); ++c) out << (c ? " " : "") << fmt(M(r, c));
      out << "\n";
    }
  };
  if (file.metric) emit_matrix("metric", *file.metric);
  if (file.J) emit_matrix("J", *file.J);
  auto emit_vector = [&](const char* name, const Vec& v) {
    out << name;
    for (int c = 0; c < v.size(); ++c) out << " " << fmt(v[c]);
    out << "\n";
  };
  if (file.hint_e1) emit_vector("hint_e1", *file.hint_e1);
  if (file.hint_e2) emit_vector("hint_e2", *file.hint_e2);
  return out.str();
}

MetricLieAlgebra to_algebra(const AlgebraFile& file) {
  const int n = file.dim;
  if (n < 1) throw ParseError("dim must be positive");
  Tensor3 C(n);
  for (const auto& row : file.brackets) {
    if (row.i < 1 || row.j < 1 || row.i > n || row.j > n || row.i >= row.j)
      throw ParseError("bracket indices out of range");
    for (const auto& [k, v] : row.coeffs) {
      if (k < 1 || k > n) throw ParseError("bracket target index out of range");
      C(row.i - 1, row.j - 1, k - 1) = v;
      C(row.j - 1, row.i - 1, k - 1) = -v;
    }
  }
  Mat G = file.metric ? *file.metric : Mat::Identity(n, n);
  if (G.rows() != n || G.cols() != n)
    throw DimensionMismatchError("metric size does not match dim");
  return MetricLieAlgebra(C, G);
}

AlgebraFile from_algebra(const MetricLieAlgebra& L, const std::optional<Mat>& J,
                         const std::optional<std::pair<Vec, Vec>>& hints) {
  const int n = L.dim();
  AlgebraFile file;
  file.dim = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      AlgebraFile::BracketRow row;
      row.i = i + 1;
      row.j = j + 1;
      const Vec c = L.bracket_basis(i, j);
      for (int k = 0; k < n; ++k)
        if (c[k] != 0.0) row.coeffs.emplace_back(k + 1, c[k]);
      if (!row.coeffs.empty()) file.brackets.push_back(std::move(row));
    }
  if ((L.metric() - Mat::Identity(n, n)).cwiseAbs().maxCoeff() != 0.0)
    file.metric = L.metric();
  if (J) {
    if (J->rows() != n || J->cols() != n)
      throw DimensionMismatchError("J size does not match the algebra");
    file.J = *J;
  }
  if (hints) {
    if (hints->first.size() != n || hints->second.size() != n)
      throw DimensionMismatchError("hint length does not match the algebra");
    file.hint_e1 = hints->first;
    file.hint_e2 = hints->second;
  }
  return file;
}

} // namespace lie2herm
