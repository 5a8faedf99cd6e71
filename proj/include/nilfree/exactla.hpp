#pragma once

#include "nilfree/rational.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace nilfree {

// Sorted by column, no stored zeros.
struct SparseVector {
  std::vector<std::pair<std::size_t, Rational>> entries;

  SparseVector() = default;
  explicit SparseVector(std::vector<std::pair<std::size_t, Rational>> e);
  static SparseVector from_dense(const std::vector<Rational>& dense);

  bool empty() const { return entries.empty(); }
  std::size_t nnz() const { return entries.size(); }
  Rational at(std::size_t col) const;
  std::vector<Rational> to_dense(std::size_t ncols) const;
  bool operator==(const SparseVector&) const = default;
};

// this + a * other
SparseVector axpy(const SparseVector& x, const Rational& a, const SparseVector& y);
Rational dot(const SparseVector& x, const SparseVector& y);

class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t ncols = 0) : ncols_(ncols) {}
  RationalMatrix(std::size_t ncols, std::vector<SparseVector> rows);

  std::size_t ncols() const { return ncols_; }
  std::size_t nrows() const { return rows_.size(); }
  const std::vector<SparseVector>& rows() const { return rows_; }
  const SparseVector& row(std::size_t i) const { return rows_[i]; }

  void add_row(SparseVector row);
  void add_row(const std::vector<Rational>& dense) { add_row(SparseVector::from_dense(dense)); }
  // A times x, x dense of length ncols.
  std::vector<Rational> apply(const std::vector<Rational>& x) const;

 private:
  std::size_t ncols_;
  std::vector<SparseVector> rows_;
};

struct RankProfile {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

enum class Method { FractionFree, Rational };

RankProfile rank(const RationalMatrix& m, Method method = Method::FractionFree);

/// Fully reduced row echelon form; pivot entries are 1, rows ordered by pivot.
std::vector<SparseVector> reduced_echelon(const RationalMatrix& m);

bool in_row_space(const RationalMatrix& m, const SparseVector& v);

/// Right nullspace basis; one vector per free column, primitive integral,
/// positive at its free column.
std::vector<SparseVector> nullspace(const RationalMatrix& m);

// Incrementally grown row space kept in reduced echelon form.
class RowSpace {
 public:
  explicit RowSpace(std::size_t ncols) : ncols_(ncols) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t dim() const { return rows_.size(); }
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  /// Returns false when v was already in the span.
  bool insert(const SparseVector& v);
  std::vector<std::size_t> pivots() const;

 private:
  std::size_t ncols_;
  std::map<std::size_t, SparseVector> rows_;  // pivot column -> row
};

}  // namespace nilfree
