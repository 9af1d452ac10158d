#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qweyl/scalar.hpp"

namespace qweyl {

using Vector = std::vector<Scalar>;
/// Sorted (index, nonzero value) pairs.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// Dense row-major matrix over one coefficient field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field f);

  static Matrix identity(std::size_t n, Field f);
  static Matrix scalar(std::size_t n, const Scalar& c);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Field field() const noexcept { return field_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const Vector& data() const noexcept { return data_; }

  Matrix transpose() const;
  Matrix pow(unsigned k) const;
  bool is_zero() const;
  /// c when the matrix equals c * Id.
  std::optional<Scalar> scalar_value() const;
  Scalar trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, Matrix a);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void require_shape(const Matrix& o) const;
  std::size_t rows_ = 0, cols_ = 0;
  Field field_ = Field::rational();
  Vector data_;
};

Matrix kronecker(const Matrix& a, const Matrix& b);
/// Row-major flattening.
Vector flatten(const Matrix& m);
SparseVector sparsify(const Vector& v);

/// Incrementally maintained row echelon form. Rows are kept sparse with a
/// unit leading coefficient, keyed by pivot column.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t dim, Field f) : dim_(dim), field_(f) {}

  /// Adds v to the span; true when v was independent of the current rows.
  bool insert(SparseVector v);
  bool insert(const Vector& v) { return insert(sparsify(v)); }
  bool contains(const Vector& v) const;
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t dimension() const noexcept { return dim_; }
  /// Basis of the solution space of row . x = 0 for every stored row.
  std::vector<Vector> null_space() const;

 private:
  SparseVector reduce(SparseVector v) const;
  std::size_t dim_;
  Field field_;
  std::map<std::size_t, SparseVector> rows_;
};

std::size_t rank(const Matrix& m);
/// Right kernel basis.
std::vector<Vector> kernel(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Characteristic polynomial det(t I - M), coefficients c_0..c_N (c_N = 1).
Vector charpoly(const Matrix& m);

/// Basis of {M : M G_k = c_k G_k M} for square G_k of one size; c_k defaults to 1.
std::vector<Matrix> commutant_basis(const std::vector<Matrix>& ops, const std::vector<Scalar>& scales = {});

}  // namespace qweyl
