#include "lie2herm/kform.hpp"

#include <algorithm>
#include <cmath>

#include "lie2herm/algebra.hpp"

namespace lie2herm {

namespace {

// Sorts idx in place and returns the permutation sign, or 0 on repeats.
int sort_sign(int* idx, int k) {
  int sign = 1;
  for (int i = 1; i < k; ++i) {
    int j = i;
    while (j > 0 && idx[j - 1] > idx[j]) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
      --j;
    }
  }
  for (int i = 1; i < k; ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

} // namespace

KForm::KForm(int dim, int degree) : dim_(dim), degree_(degree) {
  if (degree < 2 || degree > 4)
    throw DimensionMismatchError("k-form degree must be 2, 3 or 4");
  if (dim < 0) throw DimensionMismatchError("negative dimension");

  // Enumerate increasing tuples in lexicographic order.
  std::array<int, 4> t{-1, -1, -1, -1};
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == degree_) {
      tuples_.push_back(t);
      return;
    }
    for (int v = start; v < dim_; ++v) {
      t[pos] = v;
      self(self, pos + 1, v + 1);
    }
    t[pos] = -1;
  };
  rec(rec, 0, 0);
  values_.assign(tuples_.size(), 0.0);

  size_t keys = 1;
  for (int d = 0; d < degree_; ++d) keys *= static_cast<size_t>(std::max(dim_, 1));
  slot_.assign(keys, -1);
  for (size_t s = 0; s < tuples_.size(); ++s) {
    size_t key = 0;
    for (int d = 0; d < degree_; ++d)
      key = key * static_cast<size_t>(dim_) + static_cast<size_t>(tuples_[s][d]);
    slot_[key] = static_cast<int>(s);
  }
}

int KForm::slot_index(const std::array<int, 4>& sorted) const {
  size_t key = 0;
  for (int d = 0; d < degree_; ++d)
    key = key * static_cast<size_t>(dim_) + static_cast<size_t>(sorted[d]);
  return slot_[key];
}

double KForm::get(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != degree_)
    throw DimensionMismatchError("index count does not match form degree");
  std::array<int, 4> s{-1, -1, -1, -1};
  for (int d = 0; d < degree_; ++d) {
    if (idx[d] < 0 || idx[d] >= dim_) throw DimensionMismatchError("index out of range");
    s[d] = idx[d];
  }
  const int sign = sort_sign(s.data(), degree_);
  if (sign == 0) return 0.0;
  return sign * values_[static_cast<size_t>(slot_index(s))];
}

void KForm::set(std::span<const int> idx, double value) {
  if (static_cast<int>(idx.size()) != degree_)
    throw DimensionMismatchError("index count does not match form degree");
  std::array<int, 4> s{-1, -1, -1, -1};
  for (int d = 0; d < degree_; ++d) {
    if (idx[d] < 0 || idx[d] >= dim_) throw DimensionMismatchError("index out of range");
    s[d] = idx[d];
  }
  const int sign = sort_sign(s.data(), degree_);
  if (sign == 0) throw DimensionMismatchError("repeated index in k-form assignment");
  values_[static_cast<size_t>(slot_index(s))] = sign * value;
}

double KForm::evaluate(const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != degree_)
    throw DimensionMismatchError("argument count does not match form degree");
  for (const Vec& a : args)
    if (a.size() != dim_) throw DimensionMismatchError("argument length mismatch");

  double total = 0.0;
  Eigen::MatrixXd minor(degree_, degree_);
  for (size_t s = 0; s < tuples_.size(); ++s) {
    if (values_[s] == 0.0) continue;
    for (int r = 0; r < degree_; ++r)
      for (int c = 0; c < degree_; ++c) minor(r, c) = args[c][tuples_[s][r]];
    total += values_[s] * minor.determinant();
  }
  return total;
}

double KForm::max_abs() const {
  double m = 0.0;
  for (double x : values_) m = std::max(m, std::abs(x));
  return m;
}

KForm exterior_derivative(const KForm& form, const MetricLieAlgebra& L) {
  if (form.degree() != 2 && form.degree() != 3)
    throw DimensionMismatchError("exterior derivative implemented for degrees 2 and 3");
  if (form.dim() != L.dim())
    throw DimensionMismatchError("form dimension does not match the algebra");

  const int k = form.degree(); // result degree k+1
  KForm out(form.dim(), k + 1);
  std::vector<int> idx(static_cast<size_t>(k));

  auto& out_values = out.values();
  const auto& out_tuples = out.tuples();
  for (size_t s = 0; s < out_tuples.size(); ++s) {
    const auto& T = out_tuples[s];
    double val = 0.0;
    for (int i = 0; i <= k; ++i) {
      for (int j = i + 1; j <= k; ++j) {
        const Vec br = L.bracket_basis(T[i], T[j]);
        // remaining tuple entries, order preserved
        int p = 1;
        for (int q = 0; q <= k; ++q)
          if (q != i && q != j) idx[static_cast<size_t>(p++)] = T[q];
        const double sgn = ((i + j) % 2 == 0) ? 1.0 : -1.0;
        for (int m = 0; m < L.dim(); ++m) {
          if (br[m] == 0.0) continue;
          idx[0] = m;
          val += sgn * br[m] * form.get(std::span<const int>(idx.data(), idx.size()));
        }
      }
    }
    out_values[s] = val;
  }
  return out;
}

} // namespace lie2herm
