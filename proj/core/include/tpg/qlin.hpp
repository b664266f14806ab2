#pragma once

// Exact rational linear algebra. Every scalar is a GMP rational; there is no
// floating-point path anywhere in this module.

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace tpg::qlin {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reduced p/q. Throws std::domain_error when q == 0.
Rational ratio(long p, long q = 1);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : coords_(n) {}
  Vector(std::initializer_list<Rational> xs) : coords_(xs) {}
  explicit Vector(std::vector<Rational> xs) : coords_(std::move(xs)) {}

  static Vector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Rational& s);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Rational& s, Vector a) { return a *= s; }
  friend Vector operator-(Vector a) { return a *= Rational(-1); }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Rational> coords_;
};

Rational dot(const Vector& a, const Vector& b);

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of equal length).
  static Matrix from_columns(const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator*(const Rational& s, Matrix a);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row-echelon form together with its pivot columns.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;
};
Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {x : Mx = 0}, one vector per free column in increasing column
/// order, each with a 1 in its free column and 0 in the other free columns.
std::vector<Vector> kernel(const Matrix& m);

/// kernel(M - lambda I). Throws DimensionError for non-square M.
std::vector<Vector> eigenspace(const Matrix& m, const Rational& lambda);

/// Solves A x = b for square invertible A. Throws std::domain_error if singular.
Vector solve(const Matrix& a, const Vector& b);
Matrix inverse(const Matrix& a);

/// Exact positive-semidefiniteness test by symmetric elimination.
/// Throws std::invalid_argument for non-symmetric input.
bool is_psd(const Matrix& g);

}  // namespace tpg::qlin
