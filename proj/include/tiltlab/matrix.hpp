#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tiltlab/field.hpp"

namespace tiltlab {

template <class F>
using Vec = std::vector<typename F::Elem>;

// (index, coefficient) pairs, strictly increasing indices, no zero entries.
template <class F>
using SparseVec = std::vector<std::pair<std::size_t, typename F::Elem>>;

// Dense row-major matrix over an exact field.  Rows usually play the role
// of vectors, so "the rows of B span the subspace" is the standing idiom.
template <class F>
class Mat {
public:
  using Elem = typename F::Elem;

  Mat(F field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Mat identity(F field, std::size_t n) {
    Mat m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec<F> row(std::size_t i) const {
    return Vec<F>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  void set_row(std::size_t i, const Vec<F>& v) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
  }

  bool operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!field_.eq(data_[i], o.data_[i])) return false;
    return true;
  }

  Mat transpose() const {
    Mat t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
    Mat r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Elem& a = at(i, k);
        if (field_.is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Elem& b = o.at(k, j);
          if (field_.is_zero(b)) continue;
          r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, b));
        }
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    Mat r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(data_[i], o.data_[i]);
    return r;
  }
  Mat operator-(const Mat& o) const {
    Mat r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(data_[i], o.data_[i]);
    return r;
  }

  bool is_zero() const {
    for (const auto& e : data_)
      if (!field_.is_zero(e)) return false;
    return true;
  }

  // In-place reduced row echelon form.  Returns the pivot columns in order.
  // Zero rows are dropped, so the result is the canonical basis matrix of
  // the row space: two matrices have the same row space iff their rref
  // forms are identical.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t sel = rows_;
      for (std::size_t i = r; i < rows_; ++i)
        if (!field_.is_zero(at(i, c))) {
          sel = i;
          break;
        }
      if (sel == rows_) continue;
      if (sel != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
      Elem piv_inv = field_.inv(at(r, c));
      for (std::size_t j = c; j < cols_; ++j) at(r, j) = field_.mul(at(r, j), piv_inv);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        const Elem f = at(i, c);
        if (field_.is_zero(f)) continue;
        for (std::size_t j = c; j < cols_; ++j)
          at(i, j) = field_.sub(at(i, j), field_.mul(f, at(r, j)));
      }
      pivots.push_back(c);
      ++r;
    }
    rows_ = r;
    data_.resize(rows_ * cols_);
    return pivots;
  }

  std::size_t rank() const {
    Mat c(*this);
    return c.rref().size();
  }

  // Row basis of { x : (*this) * x^T = 0 }, i.e. the kernel of the matrix
  // acting on column vectors, returned as canonical rref rows of length cols().
  Mat right_nullspace() const {
    Mat c(*this);
    std::vector<std::size_t> pivots = c.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    Mat ns(field_, cols_ - pivots.size(), cols_);
    std::size_t k = 0;
    for (std::size_t c0 = 0; c0 < cols_; ++c0) {
      if (is_pivot[c0]) continue;
      ns.at(k, c0) = field_.one();
      for (std::size_t r0 = 0; r0 < pivots.size(); ++r0)
        ns.at(k, pivots[r0]) = field_.neg(c.at(r0, c0));
      ++k;
    }
    ns.rref();
    return ns;
  }

  // Row basis of { v : v * (*this) = 0 }.
  Mat left_nullspace() const { return transpose().right_nullspace(); }

  // Solve c * B = v for a row vector c, where B = *this.  Returns nullopt
  // when v is outside the row space.
  std::optional<Vec<F>> solve_left(const Vec<F>& v) const {
    // Eliminate on [B^T | v^T].
    Mat aug(field_, cols_, rows_ + 1);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) aug.at(j, i) = at(i, j);
    for (std::size_t j = 0; j < cols_; ++j) aug.at(j, rows_) = v[j];
    std::vector<std::size_t> pivots = aug.rref();
    Vec<F> c(rows_, field_.zero());
    for (std::size_t r0 = 0; r0 < pivots.size(); ++r0) {
      if (pivots[r0] == rows_) return std::nullopt;  // pivot in augmented column
      c[pivots[r0]] = aug.at(r0, rows_);
    }
    return c;
  }

  std::optional<Mat> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Mat aug(field_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = field_.one();
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (pivots.size() != rows_) return std::nullopt;
    for (std::size_t r0 = 0; r0 < pivots.size(); ++r0)
      if (pivots[r0] != r0) return std::nullopt;
    Mat inv(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
  }

  static Mat from_rows(F field, const std::vector<Vec<F>>& rows, std::size_t cols) {
    Mat m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
  }

private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<Elem> data_;
};

// Row-vector helpers.

template <class F>
Vec<F> zero_vec(const F& f, std::size_t n) {
  return Vec<F>(n, f.zero());
}

template <class F>
bool vec_is_zero(const F& f, const Vec<F>& v) {
  for (const auto& e : v)
    if (!f.is_zero(e)) return false;
  return true;
}

template <class F>
Vec<F> vec_add(const F& f, const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(r[i], b[i]);
  return r;
}

template <class F>
Vec<F> vec_sub(const F& f, const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.sub(r[i], b[i]);
  return r;
}

template <class F>
Vec<F> vec_scale(const F& f, const typename F::Elem& c, const Vec<F>& a) {
  Vec<F> r(a);
  for (auto& e : r) e = f.mul(c, e);
  return r;
}

template <class F>
bool vec_eq(const F& f, const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!f.eq(a[i], b[i])) return false;
  return true;
}

template <class F>
SparseVec<F> to_sparse(const F& f, const Vec<F>& v) {
  SparseVec<F> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!f.is_zero(v[i])) s.emplace_back(i, v[i]);
  return s;
}

template <class F>
Vec<F> to_dense(const F& f, const SparseVec<F>& s, std::size_t n) {
  Vec<F> v = zero_vec(f, n);
  for (const auto& [i, c] : s) v[i] = c;
  return v;
}

// v * M for a row vector v.
template <class F>
Vec<F> vec_mat(const F& f, const Vec<F>& v, const Mat<F>& m) {
  Vec<F> r = zero_vec(f, m.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (f.is_zero(v[i])) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      r[j] = f.add(r[j], f.mul(v[i], m.at(i, j)));
  }
  return r;
}

// M * v^T for a column vector given (and returned) as a flat vector.
template <class F>
Vec<F> mat_vec(const F& f, const Mat<F>& m, const Vec<F>& v) {
  Vec<F> r = zero_vec(f, m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!f.is_zero(m.at(i, j)) && !f.is_zero(v[j]))
        r[i] = f.add(r[i], f.mul(m.at(i, j), v[j]));
  return r;
}

}  // namespace tiltlab
