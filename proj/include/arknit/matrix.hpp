#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arknit/field.hpp"

namespace arknit {

/// Dense exact matrix acting on column vectors.
class Matrix {
public:
  Matrix() = default;
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  /// Builds from integer rows; all rows must have equal length.
  static Matrix from_ints(const Field& field, std::size_t rows, std::size_t cols,
                          const std::vector<long>& row_major);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  struct Echelon;
  /// Reduced row echelon form and pivot columns.
  Echelon rref() const;
  std::size_t rank() const;

  /// Basis of {x : A x = 0}, as the columns of a cols() x k matrix. Deterministic: one
  /// basis vector per free column of the reduced echelon form.
  Matrix nullspace() const;
  /// Basis of the column space chosen among the original columns (pivot columns).
  Matrix column_basis() const;
  /// Some X with A X = B, or nullopt when inconsistent.
  std::optional<Matrix> solve(const Matrix& rhs) const;
  std::optional<Matrix> inverse() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix column(std::size_t c) const { return block(0, c, rows_, 1); }
  Matrix hstack(const Matrix& right) const;
  Matrix vstack(const Matrix& below) const;

  std::string to_string() const;

private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Matrix::Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Block-diagonal assembly of square or rectangular blocks.
Matrix block_diagonal(const Field& field, const std::vector<Matrix>& blocks);

/// Dense univariate polynomial, coefficients from degree 0 upwards; no trailing zeros.
using Polynomial = std::vector<Scalar>;

Polynomial minimal_polynomial(const Matrix& a);
Matrix evaluate(const Polynomial& p, const Matrix& a);
/// Roots lying in the base field. Over Q this uses the rational root test and gives up
/// (returns the roots found so far) when coefficients are too large to factor by trial division.
std::vector<Scalar> roots_in_field(const Polynomial& p);
/// True when `a` is nilpotent.
bool is_nilpotent(const Matrix& a);

}  // namespace arknit
