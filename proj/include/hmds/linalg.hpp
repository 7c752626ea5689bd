#pragma once

// Dense linear algebra over GF(q).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hmds/field.hpp"

namespace hmds {

using Vector = std::vector<Fq>;

/// Row-major dense matrix over GF(q).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Throws std::invalid_argument on ragged input.
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fq& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fq operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Fq> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Fq> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  /// Columns `idx` in the given order.
  Matrix select_columns(std::span<const std::size_t> idx) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fq> data_;
};

/// Reduced row echelon form. Pivots are the first nonzero entry in column
/// order; zero rows are kept at the bottom.
Matrix rref(const GaloisField& F, Matrix m);

std::size_t rank(const GaloisField& F, const Matrix& m);

/// Basis of {v : m·v = 0}, one vector per free column of rref(m), in column
/// order, with a 1 in that free column.
std::vector<Vector> kernel_basis(const GaloisField& F, const Matrix& m);

/// One solution of m·v = rhs (free variables set to zero), or nullopt when
/// the system is inconsistent. Throws std::invalid_argument on a dimension
/// mismatch.
std::optional<Vector> solve(const GaloisField& F, const Matrix& m, std::span<const Fq> rhs);

/// m·v. Throws std::invalid_argument on a dimension mismatch.
Vector multiply(const GaloisField& F, const Matrix& m, std::span<const Fq> v);

/// Whether `v` lies in the row space of `m`.
bool in_row_space(const GaloisField& F, const Matrix& m, std::span<const Fq> v);

/// Equal row spaces (compared via canonical rref with zero rows dropped).
bool same_row_space(const GaloisField& F, const Matrix& a, const Matrix& b);

/// One row per line, entries as canonical integers separated by single
/// spaces, each line terminated by '\n'.
std::string to_text(const Matrix& m);

/// Inverse of to_text; entries are range-checked against F. Throws
/// std::invalid_argument on malformed input.
Matrix matrix_from_text(const GaloisField& F, const std::string& text);

}  // namespace hmds
