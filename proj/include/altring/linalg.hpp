#pragma once

// Exact dense linear algebra over a ScalarField: reduced row echelon form,
// kernels, linear solves and canonical subspaces.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "altring/field.hpp"

namespace altring {

template <ScalarField F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix() = default;
  Matrix(const F& field, std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  Vec<F> column(std::size_t c) const {
    Vec<F> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  void set_column(std::size_t c, std::span<const Element> values) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
  }

  bool operator==(const Matrix&) const = default;

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const F& field, std::size_t cols, const std::vector<Vec<F>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
  }

  // Matrix whose columns are the given vectors.
  static Matrix from_columns(const F& field, std::size_t rows,
                             const std::vector<Vec<F>>& columns) {
    Matrix m(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

// ---- vector helpers ------------------------------------------------------

template <ScalarField F>
Vec<F> zero_vec(const F& f, std::size_t n) {
  return Vec<F>(n, f.zero());
}

template <ScalarField F>
Vec<F> unit_vec(const F& f, std::size_t n, std::size_t i) {
  Vec<F> v(n, f.zero());
  v[i] = f.one();
  return v;
}

template <ScalarField F>
bool is_zero_vec(const F& f, std::span<const typename F::Element> v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return f.is_zero(x); });
}

template <ScalarField F>
Vec<F> vec_add(const F& f, std::span<const typename F::Element> a,
               std::span<const typename F::Element> b) {
  Vec<F> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

template <ScalarField F>
Vec<F> vec_sub(const F& f, std::span<const typename F::Element> a,
               std::span<const typename F::Element> b) {
  Vec<F> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

template <ScalarField F>
Vec<F> vec_neg(const F& f, std::span<const typename F::Element> a) {
  Vec<F> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.neg(a[i]);
  return out;
}

template <ScalarField F>
Vec<F> vec_scale(const F& f, const typename F::Element& s,
                 std::span<const typename F::Element> a) {
  Vec<F> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(s, a[i]);
  return out;
}

// acc += s * a
template <ScalarField F>
void vec_axpy(const F& f, const typename F::Element& s,
              std::span<const typename F::Element> a,
              std::span<typename F::Element> acc) {
  if (f.is_zero(s)) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!f.is_zero(a[i])) acc[i] = f.add(acc[i], f.mul(s, a[i]));
  }
}

template <ScalarField F>
Vec<F> mat_vec(const F& f, const Matrix<F>& m, std::span<const typename F::Element> x) {
  Vec<F> out(m.rows(), f.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto acc = f.zero();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!f.is_zero(x[c]) && !f.is_zero(m(r, c))) acc = f.add(acc, f.mul(m(r, c), x[c]));
    }
    out[r] = std::move(acc);
  }
  return out;
}

template <ScalarField F>
Matrix<F> mat_mul(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = f.add(out(i, j), f.mul(a(i, k), b(k, j)));
      }
    }
  }
  return out;
}

// ---- elimination ---------------------------------------------------------

/// Reduces `m` in place to reduced row echelon form (pivots equal to one,
/// leftmost pivot columns). Returns the pivot column of each nonzero row.
template <ScalarField F>
std::vector<std::size_t> rref(const F& f, Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && f.is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      auto a = m.row(pivot);
      auto b = m.row(lead_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto scale = f.inv(m(lead_row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) = f.mul(scale, m(lead_row, c));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || f.is_zero(m(r, col))) continue;
      auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!f.is_zero(m(lead_row, c))) {
          m(r, c) = f.sub(m(r, c), f.mul(factor, m(lead_row, c)));
        }
      }
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return pivots;
}

template <ScalarField F>
std::size_t rank(const F& f, Matrix<F> m) {
  return rref(f, m).size();
}

/// Basis of {x : A x = 0}: one vector per free column, with that column set
/// to one. Deterministic for a given A.
template <ScalarField F>
std::vector<Vec<F>> nullspace(const F& f, Matrix<F> a) {
  auto pivots = rref(f, a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(a.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(a(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <ScalarField F>
struct SolveResult {
  std::optional<Vec<F>> solution;  // a particular solution, if consistent
  std::size_t kernel_dim = 0;      // dimension of the solution space of A x = 0
};

template <ScalarField F>
SolveResult<F> solve(const F& f, const Matrix<F>& a, std::span<const typename F::Element> b) {
  Matrix<F> aug(f, a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto pivots = rref(f, aug);
  SolveResult<F> result;
  std::size_t coeff_rank = pivots.size();
  if (!pivots.empty() && pivots.back() == a.cols()) {
    --coeff_rank;
    result.kernel_dim = a.cols() - coeff_rank;
    return result;
  }
  result.kernel_dim = a.cols() - coeff_rank;
  Vec<F> x(a.cols(), f.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  result.solution = std::move(x);
  return result;
}

// ---- subspaces -----------------------------------------------------------

/// A subspace of F^n stored as the nonzero rows of a reduced row echelon
/// form. Two subspaces are equal iff their bases are identical.
template <ScalarField F>
class Subspace {
 public:
  using Element = typename F::Element;

  Subspace(F field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  static Subspace span(const F& field, std::size_t ambient, const std::vector<Vec<F>>& vectors) {
    Subspace s(field, ambient);
    if (vectors.empty()) return s;
    auto m = Matrix<F>::from_rows(field, ambient, vectors);
    s.pivots_ = rref(field, m);
    for (std::size_t r = 0; r < s.pivots_.size(); ++r) {
      s.basis_.emplace_back(m.row(r).begin(), m.row(r).end());
    }
    return s;
  }

  static Subspace whole(const F& field, std::size_t ambient) {
    std::vector<Vec<F>> vs;
    for (std::size_t i = 0; i < ambient; ++i) vs.push_back(unit_vec(field, ambient, i));
    return span(field, ambient, vs);
  }

  const F& field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<Vec<F>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_zero() const { return basis_.empty(); }

  // Residual of v after eliminating every pivot coordinate.
  Vec<F> reduce(std::span<const Element> v) const {
    Vec<F> r(v.begin(), v.end());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      auto coeff = r[pivots_[i]];
      if (field_.is_zero(coeff)) continue;
      vec_axpy(field_, field_.neg(coeff), std::span<const Element>(basis_[i]), std::span<Element>(r));
    }
    return r;
  }

  bool contains(std::span<const Element> v) const { return is_zero_vec(field_, std::span<const Element>(reduce(v))); }

  // Coefficients of v in this basis, or nullopt if v is not a member.
  std::optional<Vec<F>> coordinates(std::span<const Element> v) const {
    if (!contains(v)) return std::nullopt;
    Vec<F> c;
    c.reserve(basis_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
  }

  Vec<F> combine(std::span<const Element> coeffs) const {
    Vec<F> out(ambient_, field_.zero());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      vec_axpy(field_, coeffs[i], std::span<const Element>(basis_[i]), std::span<Element>(out));
    }
    return out;
  }

  bool contains(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [&](const Vec<F>& v) { return contains(std::span<const Element>(v)); });
  }

  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }

 private:
  F field_;
  std::size_t ambient_;
  std::vector<Vec<F>> basis_;
  std::vector<std::size_t> pivots_;
};

/// Incremental (non-reduced) echelon basis: cheap insertion and membership,
/// used inside closures and rank tests. Convert with to_subspace() for the
/// canonical form.
template <ScalarField F>
class EchelonBuilder {
 public:
  using Element = typename F::Element;

  EchelonBuilder(F field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }

  // Returns true when v was independent of the rows so far.
  bool insert(std::span<const Element> v) {
    Vec<F> r(v.begin(), v.end());
    reduce_in_place(r);
    auto lead = std::find_if(r.begin(), r.end(), [&](const Element& x) { return !field_.is_zero(x); });
    if (lead == r.end()) return false;
    const auto pivot = static_cast<std::size_t>(lead - r.begin());
    auto scale = field_.inv(r[pivot]);
    for (auto& x : r) x = field_.mul(scale, x);
    rows_.push_back(std::move(r));
    pivots_.push_back(pivot);
    return true;
  }

  bool contains(std::span<const Element> v) const {
    Vec<F> r(v.begin(), v.end());
    reduce_in_place(r);
    return is_zero_vec(field_, std::span<const Element>(r));
  }

  const std::vector<Vec<F>>& rows() const { return rows_; }

  Subspace<F> to_subspace() const { return Subspace<F>::span(field_, ambient_, rows_); }

 private:
  void reduce_in_place(Vec<F>& r) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      auto coeff = r[pivots_[i]];
      if (field_.is_zero(coeff)) continue;
      vec_axpy(field_, field_.neg(coeff), std::span<const Element>(rows_[i]), std::span<Element>(r));
    }
  }

  F field_;
  std::size_t ambient_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

template <ScalarField F>
Subspace<F> subspace_sum(const Subspace<F>& a, const Subspace<F>& b) {
  auto vs = a.basis();
  vs.insert(vs.end(), b.basis().begin(), b.basis().end());
  return Subspace<F>::span(a.field(), a.ambient_dim(), vs);
}

template <ScalarField F>
Subspace<F> subspace_intersection(const Subspace<F>& a, const Subspace<F>& b) {
  const F& f = a.field();
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace<F>(f, n);
  // solve sum_i s_i a_i - sum_j t_j b_j = 0
  Matrix<F> m(f, n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t r = 0; r < n; ++r) m(r, i) = a.basis()[i][r];
  }
  for (std::size_t j = 0; j < b.dim(); ++j) {
    for (std::size_t r = 0; r < n; ++r) m(r, a.dim() + j) = f.neg(b.basis()[j][r]);
  }
  std::vector<Vec<F>> vs;
  for (const auto& k : nullspace(f, m)) {
    Vec<F> v(n, f.zero());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      vec_axpy(f, k[i], std::span<const typename F::Element>(a.basis()[i]),
               std::span<typename F::Element>(v));
    }
    vs.push_back(std::move(v));
  }
  return Subspace<F>::span(f, n, vs);
}

/// Column space of m.
template <ScalarField F>
Subspace<F> image(const F& f, const Matrix<F>& m) {
  std::vector<Vec<F>> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace<F>::span(f, m.rows(), cols);
}

}  // namespace altring
