#pragma once

#include "eqc/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace eqc {

struct SparseEntry {
  std::size_t column;
  Rational value;

  bool operator==(const SparseEntry& o) const { return column == o.column && value == o.value; }
};

// Sorted strictly by column, no stored zeros.
using SparseVector = std::vector<SparseEntry>;

// y += a * x
void axpy(SparseVector& y, const Rational& a, const SparseVector& x);
void scale(SparseVector& v, const Rational& a);
SparseVector sparse_from_dense(const std::vector<Rational>& dense);
std::vector<Rational> dense_from_sparse(const SparseVector& v, std::size_t columns);

// Incremental row echelon form over Q. Each stored row has a unit leading
// entry in a column no other stored row leads in.
class Echelon {
 public:
  explicit Echelon(std::size_t columns = 0) : pivot_of_column_(columns, npos) {}

  std::size_t columns() const { return pivot_of_column_.size(); }
  std::size_t rank() const { return rows_.size(); }

  // Adds v to the row space. Returns false when v was already in it.
  bool insert(SparseVector v);
  bool contains(SparseVector v) const;

  // Eliminates every entry of v that sits in a pivot column. The result is
  // the normal form of v modulo the row space, supported on non-pivot columns.
  SparseVector normal_form(SparseVector v) const;

  std::vector<std::size_t> pivot_columns() const;
  bool is_pivot(std::size_t column) const { return pivot_of_column_[column] != npos; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // Leading-entry reduction only; returns the reduced vector.
  SparseVector reduce_leading(SparseVector v) const;

  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivot_of_column_;
};

// Echelon form that remembers how each stored row was combined from the
// inputs. Used for kernels and for solving x = sum c_i v_i.
class TrackedEchelon {
 public:
  explicit TrackedEchelon(std::size_t columns = 0) : pivot_of_column_(columns, npos) {}

  std::size_t rank() const { return rows_.size(); }

  // Inserts input number `index`. When v depends on earlier inputs the
  // returned combination c satisfies sum_j c_j v_j = 0 with c_index = 1.
  std::optional<SparseVector> insert(SparseVector v, std::size_t index);

  // Coefficients c with sum_j c_j v_j = target, if target lies in the span.
  std::optional<SparseVector> solve(SparseVector target) const;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void reduce(SparseVector& v, SparseVector& combo) const;

  std::vector<SparseVector> rows_;
  std::vector<SparseVector> combos_;
  std::vector<std::size_t> pivot_of_column_;
};

std::size_t rank_of(const std::vector<SparseVector>& vectors, std::size_t columns);

// Dense rational matrices for small verification work (projectors, traces).
using DenseMatrix = std::vector<std::vector<Rational>>;

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
Rational trace(const DenseMatrix& a);

}  // namespace eqc
