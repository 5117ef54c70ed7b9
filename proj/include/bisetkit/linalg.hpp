#pragma once

#include <optional>
#include <vector>

#include "bisetkit/cyclotomic.hpp"
#include "bisetkit/rational.hpp"

namespace bisetkit {

/// Incrementally maintained reduced row echelon form over an exact field
/// (Rational or Cyclotomic).
template <class T>
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<T>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection onto the row space along pivot columns.
  std::vector<T> reduce(std::vector<T> v) const {
    require(v.size() == dim_, ErrorCode::Internal, "vector length mismatch in row reduction");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const T c = v[pivots_[r]];
      if (is_zero(c)) continue;
      const auto& row = rows_[r];
      for (std::size_t j = 0; j < dim_; ++j)
        if (!is_zero(row[j])) v[j] -= c * row[j];
    }
    return v;
  }

  bool contains(const std::vector<T>& v) const {
    auto r = reduce(v);
    for (const auto& x : r)
      if (!is_zero(x)) return false;
    return true;
  }

  /// Adds v to the spanning set; returns true when the rank grows.
  bool insert(std::vector<T> v) {
    v = reduce(std::move(v));
    std::size_t p = dim_;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!is_zero(v[j])) {
        p = j;
        break;
      }
    if (p == dim_) return false;
    const T inv = T(1) / v[p];
    for (std::size_t j = p; j < dim_; ++j)
      if (!is_zero(v[j])) v[j] = v[j] * inv;
    for (auto& row : rows_) {
      const T c = row[p];
      if (is_zero(c)) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        if (!is_zero(v[j])) row[j] -= c * v[j];
    }
    // keep rows ordered by pivot
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    return true;
  }

  bool full() const { return rows_.size() == dim_; }

 private:
  std::size_t dim_;
  std::vector<std::vector<T>> rows_;
  std::vector<std::size_t> pivots_;
};

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
std::size_t matrix_rank(const Matrix<T>& rows, std::size_t ncols) {
  RowEchelon<T> e(ncols);
  for (const auto& r : rows) {
    e.insert(r);
    if (e.full()) break;
  }
  return e.rank();
}

/// Basis of { x : A x = 0 } for A with `ncols` columns.
template <class T>
Matrix<T> nullspace(const Matrix<T>& a, std::size_t ncols) {
  RowEchelon<T> e(ncols);
  for (const auto& r : a) e.insert(r);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots()) is_pivot[p] = true;
  Matrix<T> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> x(ncols, T(0));
    x[f] = T(1);
    for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots()[r]] = -e.rows()[r][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Solves A x = b for the unique x, or returns nullopt when the system is
/// inconsistent. Throws Internal when the solution is not unique.
template <class T>
std::optional<std::vector<T>> solve_unique(const Matrix<T>& a, const std::vector<T>& b, std::size_t ncols) {
  RowEchelon<T> e(ncols + 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto row = a[i];
    row.push_back(b[i]);
    e.insert(std::move(row));
  }
  for (auto p : e.pivots())
    if (p == ncols) return std::nullopt;
  require(e.rank() == ncols, ErrorCode::Internal, "linear system is underdetermined");
  std::vector<T> x(ncols, T(0));
  for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots()[r]] = e.rows()[r][ncols];
  return x;
}

}  // namespace bisetkit
