#include "tpg/qlin.hpp"

#include <algorithm>
#include <stdexcept>

namespace tpg::qlin {

Rational ratio(long p, long q) {
  if (q == 0) throw std::domain_error("rational with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& x) {
    x.erase(0, x.find_first_not_of(" \t"));
    x.erase(x.find_last_not_of(" \t") + 1);
  };
  trim(s);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::domain_error("rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

Vector Vector::unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x == 0; });
}

Vector& Vector::operator+=(const Vector& o) {
  if (o.size() != size()) throw DimensionError("vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (o.size() != size()) throw DimensionError("vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& s) {
  for (auto& x : coords_) x *= s;
  return *this;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
  if (cols.empty()) return {};
  Matrix m(cols.front().size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != m.rows()) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = cols[c][r];
  }
  return m;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Vector Matrix::row(std::size_t r) const {
  Vector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix shape mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix shape mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += x * b(k, j);
    }
  return p;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
  return out;
}

Matrix operator*(const Rational& s, Matrix a) {
  for (auto& x : a.data_) x *= s;
  return a;
}

Echelon row_reduce(Matrix m) {
  Echelon e;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead, j));
    const Rational inv = 1 / m(lead, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(lead, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) -= f * m(lead, j);
    }
    e.pivots.push_back(c);
    ++lead;
  }
  e.rref = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> kernel(const Matrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> eigenspace(const Matrix& m, const Rational& lambda) {
  if (!m.is_square()) throw DimensionError("eigenspace of a non-square matrix");
  return kernel(m - lambda * Matrix::identity(m.rows()));
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const Echelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
  return inv;
}

Vector solve(const Matrix& a, const Vector& b) { return inverse(a) * b; }

bool is_psd(const Matrix& g) {
  if (!g.is_square()) throw DimensionError("PSD test of a non-square matrix");
  if (!g.is_symmetric()) throw std::invalid_argument("PSD test of a non-symmetric matrix");
  Matrix a = g;
  const std::size_t n = a.rows();
  // Diagonal pivoting keeps every step a congruence transformation.
  for (std::size_t k = 0; k < n; ++k) {
    const Rational d = a(k, k);
    if (d < 0) return false;
    if (d == 0) {
      // A zero diagonal entry with a nonzero off-diagonal entry in its row
      // gives an indefinite 2x2 principal minor.
      for (std::size_t j = k + 1; j < n; ++j)
        if (a(k, j) != 0) return false;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / d;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
    for (std::size_t j = k + 1; j < n; ++j) a(k, j) = 0;
  }
  return true;
}

}  // namespace tpg::qlin
