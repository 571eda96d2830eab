#pragma once

#include <vector>

#include "tiltlab/matrix.hpp"

namespace tiltlab {

// Incremental row-space builder.  Maintains a reduced echelon basis so that
// membership tests and insertions stay cheap while a span is being grown to
// closure.  Rows are kept pivot-sorted; extract() returns the canonical form.
template <class F>
class SpanBuilder {
public:
  SpanBuilder(F field, std::size_t ambient)
      : field_(field), ambient_(ambient) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }

  // Reduces v against the current basis; returns the residue.
  Vec<F> reduce(Vec<F> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& c = v[pivots_[i]];
      if (field_.is_zero(c)) continue;
      auto coef = c;
      for (std::size_t j = 0; j < ambient_; ++j)
        v[j] = field_.sub(v[j], field_.mul(coef, rows_[i][j]));
    }
    return v;
  }

  bool contains(const Vec<F>& v) const { return vec_is_zero(field_, reduce(v)); }

  // Inserts v; returns true when the dimension grew.
  bool add(const Vec<F>& v) {
    Vec<F> r = reduce(v);
    std::size_t p = ambient_;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!field_.is_zero(r[j])) {
        p = j;
        break;
      }
    if (p == ambient_) return false;
    auto inv = field_.inv(r[p]);
    for (auto& e : r) e = field_.mul(inv, e);
    // Back-substitute into existing rows, keep rows pivot-ordered.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto c = rows_[i][p];
      if (field_.is_zero(c)) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        rows_[i][j] = field_.sub(rows_[i][j], field_.mul(c, r[j]));
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(r));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
  }

  Mat<F> extract() const {
    Mat<F> m = Mat<F>::from_rows(field_, rows_, ambient_);
    return m;
  }

  const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
  F field_;
  std::size_t ambient_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

// A subspace of k^n in canonical reduced-echelon form.  Equality of
// subspaces is literal equality of basis matrices.
template <class F>
class Subspace {
public:
  Subspace(F field, std::size_t ambient)
      : field_(field), basis_(field, 0, ambient) {}

  static Subspace from_rows(F field, const std::vector<Vec<F>>& rows, std::size_t ambient) {
    Subspace s(field, ambient);
    Mat<F> m = Mat<F>::from_rows(field, rows, ambient);
    m.rref();
    s.basis_ = m;
    return s;
  }

  static Subspace from_matrix(Mat<F> m) {
    F field = m.field();
    std::size_t ambient = m.cols();
    m.rref();
    Subspace s(field, ambient);
    s.basis_ = m;
    return s;
  }

  static Subspace full(F field, std::size_t ambient) {
    Subspace s(field, ambient);
    s.basis_ = Mat<F>::identity(field, ambient);
    return s;
  }

  const F& field() const { return field_; }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Mat<F>& basis() const { return basis_; }
  Vec<F> basis_row(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec<F>& v) const {
    SpanBuilder<F> sb(field_, ambient());
    for (std::size_t i = 0; i < basis_.rows(); ++i) sb.add(basis_.row(i));
    return sb.contains(v);
  }

  bool contains(const Subspace& other) const {
    if (other.dim() > dim()) return false;
    SpanBuilder<F> sb(field_, ambient());
    for (std::size_t i = 0; i < basis_.rows(); ++i) sb.add(basis_.row(i));
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
      if (!sb.contains(other.basis_.row(i))) return false;
    return true;
  }

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

  Subspace sum(const Subspace& o) const {
    SpanBuilder<F> sb(field_, ambient());
    for (std::size_t i = 0; i < basis_.rows(); ++i) sb.add(basis_.row(i));
    for (std::size_t i = 0; i < o.basis_.rows(); ++i) sb.add(o.basis_.row(i));
    Subspace s(field_, ambient());
    s.basis_ = sb.extract();
    return s;
  }

  Subspace intersect(const Subspace& o) const {
    // Rows v with v in both spaces: v = x*B1 = y*B2.  Solve [B1; -B2]
    // left-kernel and project onto the B1 part.
    std::size_t r1 = basis_.rows(), r2 = o.basis_.rows();
    Mat<F> stacked(field_, r1 + r2, ambient());
    for (std::size_t i = 0; i < r1; ++i)
      for (std::size_t j = 0; j < ambient(); ++j) stacked.at(i, j) = basis_.at(i, j);
    for (std::size_t i = 0; i < r2; ++i)
      for (std::size_t j = 0; j < ambient(); ++j)
        stacked.at(r1 + i, j) = field_.neg(o.basis_.at(i, j));
    Mat<F> ker = stacked.left_nullspace();
    std::vector<Vec<F>> rows;
    for (std::size_t i = 0; i < ker.rows(); ++i) {
      Vec<F> x(ker.row(i).begin(), ker.row(i).begin() + r1);
      rows.push_back(vec_mat(field_, x, basis_));
    }
    return from_rows(field_, rows, ambient());
  }

  // Coordinates of v on the basis rows; nullopt if v is outside.
  std::optional<Vec<F>> coords(const Vec<F>& v) const { return basis_.solve_left(v); }

private:
  F field_;
  Mat<F> basis_;
};

}  // namespace tiltlab
