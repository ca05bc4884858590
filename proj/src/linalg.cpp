#include "eqc/linalg.hpp"

#include <stdexcept>

namespace eqc {

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (a == 0 || x.empty()) return;
  SparseVector out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].column < x[j].column)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].column < y[i].column) {
      out.push_back({x[j].column, a * x[j].value});
      ++j;
    } else {
      Rational v = y[i].value + a * x[j].value;
      if (v != 0) out.push_back({x[j].column, std::move(v)});
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

void scale(SparseVector& v, const Rational& a) {
  if (a == 0) {
    v.clear();
    return;
  }
  for (auto& e : v) e.value *= a;
}

SparseVector sparse_from_dense(const std::vector<Rational>& dense) {
  SparseVector v;
  for (std::size_t c = 0; c < dense.size(); ++c)
    if (dense[c] != 0) v.push_back({c, dense[c]});
  return v;
}

std::vector<Rational> dense_from_sparse(const SparseVector& v, std::size_t columns) {
  std::vector<Rational> dense(columns, Rational(0));
  for (const auto& e : v) dense.at(e.column) = e.value;
  return dense;
}

SparseVector Echelon::reduce_leading(SparseVector v) const {
  while (!v.empty()) {
    const std::size_t p = pivot_of_column_[v.front().column];
    if (p == npos) break;
    const Rational a = -v.front().value;
    axpy(v, a, rows_[p]);
  }
  return v;
}

bool Echelon::insert(SparseVector v) {
  v = reduce_leading(std::move(v));
  if (v.empty()) return false;
  const Rational lead = v.front().value;
  if (lead != 1) scale(v, 1 / lead);
  pivot_of_column_.at(v.front().column) = rows_.size();
  rows_.push_back(std::move(v));
  return true;
}

bool Echelon::contains(SparseVector v) const { return reduce_leading(std::move(v)).empty(); }

SparseVector Echelon::normal_form(SparseVector v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    const std::size_t p = pivot_of_column_[v[pos].column];
    if (p == npos) {
      ++pos;
      continue;
    }
    // Pivot rows only touch columns >= their pivot, so entries before pos stay put.
    const Rational a = -v[pos].value;
    axpy(v, a, rows_[p]);
  }
  return v;
}

std::vector<std::size_t> Echelon::pivot_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < pivot_of_column_.size(); ++c)
    if (pivot_of_column_[c] != npos) out.push_back(c);
  return out;
}

void TrackedEchelon::reduce(SparseVector& v, SparseVector& combo) const {
  while (!v.empty()) {
    const std::size_t p = pivot_of_column_[v.front().column];
    if (p == npos) break;
    const Rational a = -v.front().value;
    axpy(v, a, rows_[p]);
    axpy(combo, a, combos_[p]);
  }
}

std::optional<SparseVector> TrackedEchelon::insert(SparseVector v, std::size_t index) {
  SparseVector combo{{index, Rational(1)}};
  reduce(v, combo);
  if (v.empty()) return combo;
  const Rational inv = 1 / v.front().value;
  scale(v, inv);
  scale(combo, inv);
  pivot_of_column_.at(v.front().column) = rows_.size();
  rows_.push_back(std::move(v));
  combos_.push_back(std::move(combo));
  return std::nullopt;
}

std::optional<SparseVector> TrackedEchelon::solve(SparseVector target) const {
  SparseVector combo;
  reduce(target, combo);
  if (!target.empty()) return std::nullopt;
  scale(combo, Rational(-1));
  return combo;
}

std::size_t rank_of(const std::vector<SparseVector>& vectors, std::size_t columns) {
  Echelon ech(columns);
  for (const auto& v : vectors) ech.insert(v);
  return ech.rank();
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t inner = b.size();
  const std::size_t m = inner == 0 ? 0 : b.front().size();
  DenseMatrix out(n, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

Rational trace(const DenseMatrix& a) {
  Rational t(0);
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i].at(i);
  return t;
}

}  // namespace eqc
