#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strata/core/rational.hpp"

namespace strata {

// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols);
  static Matrix diagonal(const Vector& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  Matrix transpose() const;
  bool is_symmetric() const;
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);

// Rank over Q.
std::size_t rank_of(const Matrix& m);
std::size_t rank_of(const std::vector<Vector>& vectors);

// Unique x with a*x = b; nullopt when b is outside the column span.
// Fails when the columns of a are linearly dependent.
std::optional<Vector> solve_unique(const Matrix& a, const Vector& b);

// Fails on singular input.
Matrix inverse(const Matrix& a);
Rational determinant(const Matrix& a);

// Coefficients of target in the span of basis (assumed independent).
std::optional<Vector> coordinates_in(const std::vector<Vector>& basis, const Vector& target);

std::string to_string(const Matrix& m);

}  // namespace strata
