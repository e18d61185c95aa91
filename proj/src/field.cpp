#include "torslat/field.hpp"

#include <stdexcept>
#include <string>

namespace torslat {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(int p) : p_(p), inverse_(std::size_t(p > 0 ? p : 1), 0) {
  if (!is_prime(p) || p > 251) throw std::invalid_argument("field order must be a prime: " + std::to_string(p));
  for (int a = 1; a < p; ++a)
    for (int b = 1; b < p; ++b)
      if ((a * b) % p == 1) inverse_[a] = static_cast<std::uint8_t>(b);
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (auto e : entries)
    if (e != 0) return false;
  return true;
}

Matrix Matrix::column(int c) const { return columns(c, 1); }

Matrix Matrix::columns(int first, int count) const { return block(0, first, rows, count); }

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  Matrix m(nr, nc);
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

void Matrix::set_block(int r0, int c0, const Matrix& m) {
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch in multiply");
  Matrix c(a.rows, b.cols);
  const int p = f.order();
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const int aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j) c(i, j) = static_cast<std::uint8_t>((c(i, j) + aik * b(k, j)) % p);
    }
  return c;
}

Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix shape mismatch in add");
  Matrix c = a;
  for (std::size_t i = 0; i < c.entries.size(); ++i) c.entries[i] = f.add(a.entries[i], b.entries[i]);
  return c;
}

Matrix subtract(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix shape mismatch in subtract");
  Matrix c = a;
  for (std::size_t i = 0; i < c.entries.size(); ++i) c.entries[i] = f.sub(a.entries[i], b.entries[i]);
  return c;
}

Matrix scale(const PrimeField& f, std::uint8_t s, const Matrix& a) {
  Matrix c = a;
  for (auto& e : c.entries) e = f.mul(s, e);
  return c;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows) throw std::invalid_argument("row mismatch in hstack");
  Matrix c(a.rows, a.cols + b.cols);
  c.set_block(0, 0, a);
  c.set_block(0, a.cols, b);
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols != b.cols) throw std::invalid_argument("column mismatch in vstack");
  Matrix c(a.rows + b.rows, a.cols);
  c.set_block(0, 0, a);
  c.set_block(a.rows, 0, b);
  return c;
}

Matrix power(const PrimeField& f, const Matrix& a, int exponent) {
  Matrix result = Matrix::identity(a.rows);
  Matrix base = a;
  while (exponent > 0) {
    if (exponent & 1) result = multiply(f, result, base);
    exponent >>= 1;
    if (exponent > 0) base = multiply(f, base, base);
  }
  return result;
}

RowEchelon rref(const PrimeField& f, Matrix a) {
  RowEchelon out;
  int row = 0;
  for (int col = 0; col < a.cols && row < a.rows; ++col) {
    int pivot = -1;
    for (int r = row; r < a.rows; ++r)
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < a.cols; ++c) std::swap(a(pivot, c), a(row, c));
    const std::uint8_t inv = f.inv(a(row, col));
    for (int c = 0; c < a.cols; ++c) a(row, c) = f.mul(inv, a(row, c));
    for (int r = 0; r < a.rows; ++r) {
      if (r == row || a(r, col) == 0) continue;
      const std::uint8_t factor = a(r, col);
      for (int c = 0; c < a.cols; ++c) a(r, c) = f.sub(a(r, c), f.mul(factor, a(row, c)));
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

int rank(const PrimeField& f, const Matrix& a) { return static_cast<int>(rref(f, a).pivots.size()); }

Matrix null_space(const PrimeField& f, const Matrix& a) {
  const RowEchelon e = rref(f, a);
  std::vector<bool> is_pivot(std::size_t(a.cols), false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < a.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(a.cols, static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const int fc = free_cols[k];
    basis(fc, static_cast<int>(k)) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], static_cast<int>(k)) = f.neg(e.reduced(static_cast<int>(r), fc));
  }
  return basis;
}

Matrix column_basis(const PrimeField& f, const Matrix& a) {
  const RowEchelon e = rref(f, a);
  Matrix basis(a.rows, static_cast<int>(e.pivots.size()));
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (int r = 0; r < a.rows; ++r) basis(r, static_cast<int>(k)) = a(r, e.pivots[k]);
  return basis;
}

std::optional<Matrix> coordinates(const PrimeField& f, const Matrix& basis, const Matrix& v) {
  if (basis.rows != v.rows) throw std::invalid_argument("row mismatch in coordinates");
  const RowEchelon e = rref(f, hstack(basis, v));
  const int k = basis.cols;
  // Independence of the basis columns means exactly the first k columns pivot.
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    if (e.pivots[r] >= k) return std::nullopt;
  if (static_cast<int>(e.pivots.size()) != k) throw std::invalid_argument("coordinates: basis columns are dependent");
  Matrix x(k, v.cols);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < v.cols; ++c) x(r, c) = e.reduced(r, k + c);
  return x;
}

std::optional<Matrix> inverse(const PrimeField& f, const Matrix& a) {
  if (!a.is_square()) return std::nullopt;
  const int n = a.rows;
  const RowEchelon e = rref(f, hstack(a, Matrix::identity(n)));
  for (int r = 0; r < n; ++r)
    if (r >= static_cast<int>(e.pivots.size()) || e.pivots[r] != r) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

bool is_invertible(const PrimeField& f, const Matrix& a) {
  return a.is_square() && rank(f, a) == a.rows;
}

Matrix complement_basis(const PrimeField& f, const Matrix& basis, int n) {
  Matrix current = basis.cols == 0 ? Matrix(n, 0) : basis;
  int r = rank(f, current);
  std::vector<int> chosen;
  for (int i = 0; i < n && r < n; ++i) {
    Matrix e(n, 1);
    e(i, 0) = 1;
    Matrix trial = hstack(current, e);
    const int tr = rank(f, trial);
    if (tr > r) {
      current = std::move(trial);
      r = tr;
      chosen.push_back(i);
    }
  }
  Matrix out(n, static_cast<int>(chosen.size()));
  for (std::size_t k = 0; k < chosen.size(); ++k) out(chosen[k], static_cast<int>(k)) = 1;
  return out;
}

namespace {

void enumerate_rref(const PrimeField& f, int n, int k, std::vector<int>& pivots, int next_col,
                    std::vector<Matrix>& out) {
  if (static_cast<int>(pivots.size()) == k) {
    // Free positions: row r, column c > pivots[r], c not a pivot column.
    std::vector<std::pair<int, int>> free;
    std::vector<bool> is_pivot(std::size_t(n), false);
    for (int c : pivots) is_pivot[c] = true;
    for (int r = 0; r < k; ++r)
      for (int c = pivots[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free.emplace_back(r, c);
    std::vector<int> digits(free.size(), 0);
    const int p = f.order();
    while (true) {
      Matrix basis(n, k);
      for (int r = 0; r < k; ++r) basis(pivots[r], r) = 1;
      for (std::size_t i = 0; i < free.size(); ++i)
        basis(free[i].second, free[i].first) = static_cast<std::uint8_t>(digits[i]);
      out.push_back(std::move(basis));
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
    return;
  }
  for (int c = next_col; c < n; ++c) {
    pivots.push_back(c);
    enumerate_rref(f, n, k, pivots, c + 1, out);
    pivots.pop_back();
  }
}

}  // namespace

std::vector<Matrix> all_subspaces(const PrimeField& f, int n) {
  std::vector<Matrix> out;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> pivots;
    enumerate_rref(f, n, k, pivots, 0, out);
  }
  return out;
}

}  // namespace torslat
