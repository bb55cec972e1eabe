#pragma once
// Dense exact linear algebra over a field: row reduction, rank, kernels,
// inverses. Sizes here stay in the low thousands.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cremona/field.hpp"

namespace cremona {

template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix(const F& field, int rows, int cols)
      : f_(field), r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, field.zero()) {}

  static Matrix identity(const F& field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }
  static Matrix from_rows(const F& field, const std::vector<std::vector<Elem>>& rows, int cols = -1) {
    int c = cols >= 0 ? cols : (rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    Matrix m(field, static_cast<int>(rows.size()), c);
    for (int i = 0; i < m.r_; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    return m;
  }

  const F& field() const { return f_; }
  int rows() const { return r_; }
  int cols() const { return c_; }
  Elem& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Elem& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
  std::vector<Elem> row(int i) const { return {a_.begin() + static_cast<size_t>(i) * c_, a_.begin() + static_cast<size_t>(i + 1) * c_}; }

  Matrix operator*(const Matrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
    if (f_ != o.f_) throw FieldMismatch("matrix field mismatch");
    Matrix m(f_, r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const Elem& x = at(i, k);
        if (f_.is_zero(x)) continue;
        for (int j = 0; j < o.c_; ++j) m.at(i, j) = f_.add(m.at(i, j), f_.mul(x, o.at(k, j)));
      }
    return m;
  }
  bool operator==(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
      if (!f_.eq(a_[i], o.a_[i])) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix m(f_, c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  // In-place reduced row echelon form; returns pivot columns.
  std::vector<int> rref_inplace() {
    std::vector<int> piv;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
      int sel = -1;
      for (int i = row; i < r_; ++i)
        if (!f_.is_zero(at(i, col))) {
          sel = i;
          break;
        }
      if (sel < 0) continue;
      if (sel != row)
        for (int j = 0; j < c_; ++j) std::swap(at(sel, j), at(row, j));
      Elem iv = f_.inv(at(row, col));
      for (int j = col; j < c_; ++j) at(row, j) = f_.mul(at(row, j), iv);
      for (int i = 0; i < r_; ++i) {
        if (i == row || f_.is_zero(at(i, col))) continue;
        Elem fac = at(i, col);
        for (int j = col; j < c_; ++j)
          if (!f_.is_zero(at(row, j))) at(i, j) = f_.sub(at(i, j), f_.mul(fac, at(row, j)));
      }
      piv.push_back(col);
      ++row;
    }
    return piv;
  }

  Matrix rref(std::vector<int>* pivots = nullptr) const {
    Matrix m = *this;
    auto p = m.rref_inplace();
    if (pivots) *pivots = std::move(p);
    return m;
  }

  int rank() const {
    Matrix m = *this;
    return static_cast<int>(m.rref_inplace().size());
  }

  // Basis of {x : A x = 0}.
  std::vector<std::vector<Elem>> kernel() const {
    std::vector<int> piv;
    Matrix m = rref(&piv);
    std::vector<char> is_piv(c_, 0);
    for (int p : piv) is_piv[p] = 1;
    std::vector<std::vector<Elem>> out;
    for (int free = 0; free < c_; ++free) {
      if (is_piv[free]) continue;
      std::vector<Elem> v(c_, f_.zero());
      v[free] = f_.one();
      for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = f_.neg(m.at(static_cast<int>(r), free));
      out.push_back(std::move(v));
    }
    return out;
  }

  std::optional<Matrix> inverse() const {
    if (r_ != c_) return std::nullopt;
    Matrix aug(f_, r_, 2 * c_);
    for (int i = 0; i < r_; ++i) {
      for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, c_ + i) = f_.one();
    }
    auto piv = aug.rref_inplace();
    if (static_cast<int>(piv.size()) < r_ || piv[r_ - 1] >= c_) return std::nullopt;
    Matrix inv(f_, r_, c_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) inv.at(i, j) = aug.at(i, c_ + j);
    return inv;
  }

  Elem det() const {
    if (r_ != c_) throw std::invalid_argument("det of non-square matrix");
    Matrix m = *this;
    Elem d = f_.one();
    for (int col = 0; col < c_; ++col) {
      int sel = -1;
      for (int i = col; i < r_; ++i)
        if (!f_.is_zero(m.at(i, col))) {
          sel = i;
          break;
        }
      if (sel < 0) return f_.zero();
      if (sel != col) {
        for (int j = 0; j < c_; ++j) std::swap(m.at(sel, j), m.at(col, j));
        d = f_.neg(d);
      }
      d = f_.mul(d, m.at(col, col));
      Elem iv = f_.inv(m.at(col, col));
      for (int i = col + 1; i < r_; ++i) {
        if (f_.is_zero(m.at(i, col))) continue;
        Elem fac = f_.mul(m.at(i, col), iv);
        for (int j = col; j < c_; ++j) m.at(i, j) = f_.sub(m.at(i, j), f_.mul(fac, m.at(col, j)));
      }
    }
    return d;
  }

  static Matrix random(const F& field, int rows, int cols, Rng& rng) {
    Matrix m(field, rows, cols);
    for (auto& x : m.a_) x = field.random(rng);
    return m;
  }
  static Matrix random_invertible(const F& field, int n, Rng& rng) {
    for (;;) {
      Matrix m = random(field, n, n, rng);
      if (m.rank() == n) return m;
    }
  }

 private:
  F f_;
  int r_, c_;
  std::vector<Elem> a_;
};

// Row space of a list of vectors, kept in reduced echelon form.
template <class F>
std::vector<std::vector<typename F::Elem>> row_basis(const F& f, const std::vector<std::vector<typename F::Elem>>& vecs, int width) {
  if (vecs.empty()) return {};
  auto m = Matrix<F>::from_rows(f, vecs, width);
  auto piv = m.rref_inplace();
  std::vector<std::vector<typename F::Elem>> out;
  for (size_t i = 0; i < piv.size(); ++i) out.push_back(m.row(static_cast<int>(i)));
  return out;
}

// Basis of the intersection of two subspaces given by spanning rows.
template <class F>
std::vector<std::vector<typename F::Elem>> intersect_spans(const F& f, const std::vector<std::vector<typename F::Elem>>& a,
                                                           const std::vector<std::vector<typename F::Elem>>& b, int width) {
  using E = typename F::Elem;
  auto A = row_basis(f, a, width), B = row_basis(f, b, width);
  if (A.empty() || B.empty()) return {};
  // Solve sum x_i A_i = sum y_j B_j.
  int na = static_cast<int>(A.size()), nb = static_cast<int>(B.size());
  Matrix<F> m(f, width, na + nb);
  for (int k = 0; k < width; ++k) {
    for (int i = 0; i < na; ++i) m.at(k, i) = A[i][k];
    for (int j = 0; j < nb; ++j) m.at(k, na + j) = f.neg(B[j][k]);
  }
  std::vector<std::vector<E>> out;
  for (auto& v : m.kernel()) {
    std::vector<E> w(width, f.zero());
    for (int i = 0; i < na; ++i)
      if (!f.is_zero(v[i]))
        for (int k = 0; k < width; ++k) w[k] = f.add(w[k], f.mul(v[i], A[i][k]));
    out.push_back(std::move(w));
  }
  return row_basis(f, out, width);
}

}  // namespace cremona
