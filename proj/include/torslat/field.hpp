#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace torslat {

/// Arithmetic in the prime field F_p. Elements are stored as residues in
/// [0, p).
class PrimeField {
 public:
  explicit PrimeField(int p);

  int order() const { return p_; }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>((a + b) % p_);
  }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>((a + p_ - b) % p_);
  }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
    return static_cast<std::uint8_t>((a * b) % p_);
  }
  std::uint8_t neg(std::uint8_t a) const {
    return static_cast<std::uint8_t>((p_ - a) % p_);
  }
  // a must be nonzero.
  std::uint8_t inv(std::uint8_t a) const { return inverse_[a]; }

  std::uint8_t reduce(long long v) const {
    long long r = v % p_;
    return static_cast<std::uint8_t>(r < 0 ? r + p_ : r);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }

 private:
  int p_;
  std::vector<std::uint8_t> inverse_;
};

bool is_prime(int n);

/// Dense row-major matrix over a prime field. A matrix with zero rows or
/// zero columns is legal and represents the unique map to/from the zero
/// space.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> entries;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), entries(std::size_t(r) * c, 0) {}

  static Matrix identity(int n);

  std::uint8_t& operator()(int r, int c) { return entries[std::size_t(r) * cols + c]; }
  std::uint8_t operator()(int r, int c) const { return entries[std::size_t(r) * cols + c]; }

  bool is_zero() const;
  bool is_square() const { return rows == cols; }

  Matrix column(int c) const;
  Matrix columns(int first, int count) const;
  Matrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const Matrix& m);

  friend auto operator<=>(const Matrix&, const Matrix&) = default;
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix subtract(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix scale(const PrimeField& f, std::uint8_t s, const Matrix& a);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix power(const PrimeField& f, const Matrix& a, int exponent);

struct RowEchelon {
  Matrix reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RowEchelon rref(const PrimeField& f, Matrix a);

int rank(const PrimeField& f, const Matrix& a);

/// Columns form a basis of {x : a x = 0}; one column per free variable, in
/// increasing free-column order.
Matrix null_space(const PrimeField& f, const Matrix& a);

/// Columns of `a` at the pivot positions: a basis of the column space.
Matrix column_basis(const PrimeField& f, const Matrix& a);

/// Solves basis * x = v for x, where basis has independent columns. Returns
/// nullopt if some column of v is outside the span.
std::optional<Matrix> coordinates(const PrimeField& f, const Matrix& basis, const Matrix& v);

std::optional<Matrix> inverse(const PrimeField& f, const Matrix& a);

bool is_invertible(const PrimeField& f, const Matrix& a);

/// Standard basis vectors of F_p^n (as columns) that extend the independent
/// columns of `basis` to a basis of the whole space.
Matrix complement_basis(const PrimeField& f, const Matrix& basis, int n);

/// Every subspace of F_p^n, each given by a basis in column form. Ordered by
/// dimension, then by reduced echelon data.
std::vector<Matrix> all_subspaces(const PrimeField& f, int n);

}  // namespace torslat
