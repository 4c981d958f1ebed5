#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdelab/errors.hpp"
#include "cdelab/ratfunc.hpp"

namespace cdelab {

template <class T>
using Vec = std::vector<T>;

// Dense row-major matrix over an exact field (Cyclo or RatFunc).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<T>>& rows, std::size_t cols = 0) {
    Matrix m(rows.size(), rows.empty() ? cols : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_columns(const std::vector<Vec<T>>& columns, std::size_t rows = 0) {
    Matrix m(columns.empty() ? rows : columns[0].size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec<T> row(std::size_t i) const { return Vec<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
  Vec<T> column(std::size_t j) const {
    Vec<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const T& x) { return x.is_zero(); });
  }
  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
      }
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  template <class F>
  auto map(F f) const {
    using U = decltype(f(std::declval<const T&>()));
    Matrix<U> m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = f((*this)(i, j));
    }
    return m;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) {
      if (!o.a_[k].is_zero()) a_[k] += o.a_[k];
    }
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) {
      if (!o.a_[k].is_zero()) a_[k] -= o.a_[k];
    }
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : a_) {
      if (!x.is_zero()) x *= s;
    }
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.a_) x = -x;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InternalError("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (!y.is_zero()) r(i, j) += x * y;
        }
      }
    }
    return r;
  }
  friend Vec<T> operator*(const Matrix& a, const Vec<T>& v) {
    if (a.cols_ != v.size()) throw InternalError("matrix-vector shape mismatch");
    Vec<T> r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
      }
    }
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  // Stack vertically / horizontally.
  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw InternalError("vstack shape mismatch");
    Matrix r(a.rows_ + b.rows_, a.cols_);
    std::copy(a.a_.begin(), a.a_.end(), r.a_.begin());
    std::copy(b.a_.begin(), b.a_.end(), r.a_.begin() + a.a_.size());
    return r;
  }
  static Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw InternalError("hstack shape mismatch");
    Matrix r(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
    }
    return r;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
      s += "]";
    }
    return s + "]";
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

// Reduced row echelon form in place; returns the pivot columns. Among the
// candidate pivots of a column the cheapest entry (pivot_cost) is used.
template <class T>
std::vector<std::size_t> rref_in_place(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = m.rows();
    int best_cost = 0;
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      const int cost = pivot_cost(m(i, c));
      if (best == m.rows() || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best == m.rows()) continue;
    if (best != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(r, j));
    }
    const T inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref_in_place(m).size();
}

// Basis of {x : m x = 0}, one vector per free column.
template <class T>
std::vector<Vec<T>> kernel(Matrix<T> m) {
  const auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<T> v(m.cols());
    v[f] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (!m(r, f).is_zero()) v[pivots[r]] = -m(r, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some x with a x = b, or nullopt.
template <class T>
std::optional<Vec<T>> solve(const Matrix<T>& a, const Vec<T>& b) {
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec<T> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

// Solves a X = b for a matrix right-hand side; nullopt if inconsistent.
template <class T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> aug = Matrix<T>::hstack(a, b);
  const auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() >= a.cols()) return std::nullopt;
  Matrix<T> x(a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, a.cols() + j);
  }
  return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw InternalError("inverse of a non-square matrix");
  if (m.rows() == 0) return m;
  Matrix<T> aug = Matrix<T>::hstack(m, Matrix<T>::identity(m.rows()));
  const auto pivots = rref_in_place(aug);
  if (pivots.size() < m.rows() || pivots.back() >= m.cols()) throw InternalError("matrix is singular");
  Matrix<T> inv(m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.rows(); ++j) inv(i, j) = aug(i, m.cols() + j);
  }
  return inv;
}

// Indices of a maximal linearly independent subset of the columns, chosen
// greedily from the left.
template <class T>
std::vector<std::size_t> independent_columns(Matrix<T> m) {
  return rref_in_place(m);
}

// Row-reduced basis (as row vectors) of the row space.
template <class T>
std::vector<Vec<T>> row_space_basis(Matrix<T> m) {
  const auto pivots = rref_in_place(m);
  std::vector<Vec<T>> basis;
  for (std::size_t r = 0; r < pivots.size(); ++r) basis.push_back(m.row(r));
  return basis;
}

template <class T>
Vec<T> add(Vec<T> a, const Vec<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) a[i] += b[i];
  }
  return a;
}

template <class T>
Vec<T> sub(Vec<T> a, const Vec<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) a[i] -= b[i];
  }
  return a;
}

template <class T>
Vec<T> scale(Vec<T> a, const T& s) {
  for (auto& x : a) {
    if (!x.is_zero()) x *= s;
  }
  return a;
}

template <class T>
bool is_zero_vector(const Vec<T>& v) {
  return std::all_of(v.begin(), v.end(), [](const T& x) { return x.is_zero(); });
}

template <class T>
T trace(const Matrix<T>& m) {
  T s;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) s += m(i, i);
  return s;
}

// Incrementally maintained echelon basis of a subspace of T^n.
template <class T>
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t n = 0) : n_(n) {}

  std::size_t ambient() const { return n_; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<Vec<T>>& vectors() const { return rows_; }

  // Residual of v after elimination against the basis.
  Vec<T> reduce(Vec<T> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const T c = v[pivots_[r]];
      if (c.is_zero()) continue;
      for (std::size_t j = pivots_[r]; j < n_; ++j) {
        if (!rows_[r][j].is_zero()) v[j] -= c * rows_[r][j];
      }
    }
    return v;
  }
  bool contains(const Vec<T>& v) const { return is_zero_vector(reduce(v)); }

  // Adds v; returns false if it was already in the span.
  bool insert(const Vec<T>& v) {
    Vec<T> w = reduce(v);
    std::size_t p = 0;
    while (p < n_ && w[p].is_zero()) ++p;
    if (p == n_) return false;
    const T inv = w[p].inverse();
    for (std::size_t j = p; j < n_; ++j) {
      if (!w[j].is_zero()) w[j] *= inv;
    }
    for (auto& row : rows_) {
      const T c = row[p];
      if (c.is_zero()) continue;
      for (std::size_t j = p; j < n_; ++j) {
        if (!w[j].is_zero()) row[j] -= c * w[j];
      }
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(w));
    return true;
  }

 private:
  std::size_t n_;
  std::vector<Vec<T>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace cdelab
