#pragma once

// Exact dense linear algebra over any Eigen scalar with exact arithmetic
// (is_zero(x) and division must be exact).

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "vl/error.hpp"
#include "vl/field.hpp"

namespace vl {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

namespace detail {

template <class S>
S one_like(const S&) {
  return S(1);
}
inline FieldElement one_like(const FieldElement& x) {
  return x.typed() ? FieldElement::one(x.field()) : FieldElement(1);
}

template <class Derived>
typename Derived::Scalar typed_sample(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  if constexpr (std::is_same_v<S, FieldElement>) {
    for (Index j = 0; j < m.cols(); ++j)
      for (Index i = 0; i < m.rows(); ++i)
        if (m(i, j).typed()) return m(i, j);
  }
  return S(0);
}

}  // namespace detail

template <class Scalar>
struct RowEchelon {
  DenseMatrix<Scalar> form;
  std::vector<Index> pivots;  // pivot column of each nonzero row
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

// Reduced row-echelon form by Gauss-Jordan elimination.
template <class Derived>
RowEchelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  RowEchelon<S> out;
  out.form = m;
  auto& a = out.form;
  const Index rows = a.rows(), cols = a.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = r;
    while (piv < rows && is_zero(a(piv, c))) ++piv;
    if (piv == rows) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const S inv = detail::one_like(a(r, c)) / a(r, c);
    for (Index k = c; k < cols; ++k)
      if (!is_zero(a(r, k))) a(r, k) = a(r, k) * inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const S f = a(i, c);
      for (Index k = c; k < cols; ++k)
        if (!is_zero(a(r, k))) a(i, k) = a(i, k) - f * a(r, k);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

// Columns form a basis of {v : m v = 0}.
template <class Derived>
DenseMatrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const auto e = rref(m);
  const S sample = detail::typed_sample(m);
  const S zero = sample - sample;
  const S one = detail::one_like(sample);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  DenseMatrix<S> basis = DenseMatrix<S>::Constant(cols, cols - e.rank(), zero);
  Index k = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(f, k) = one;
    for (Index i = 0; i < e.rank(); ++i)
      if (!is_zero(e.form(i, f))) basis(e.pivots[static_cast<std::size_t>(i)], k) = -e.form(i, f);
    ++k;
  }
  return basis;
}

// One solution of m x = b, or nullopt when the system is inconsistent.
template <class DerivedM, class DerivedB>
std::optional<DenseVector<typename DerivedM::Scalar>> solve(const Eigen::MatrixBase<DerivedM>& m,
                                                            const Eigen::MatrixBase<DerivedB>& b) {
  using S = typename DerivedM::Scalar;
  if (b.rows() != m.rows() || b.cols() != 1)
    throw DimensionMismatch("solve: right-hand side has " + std::to_string(b.rows()) + " rows, matrix has " +
                            std::to_string(m.rows()));
  DenseMatrix<S> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  const auto e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  S sample = detail::typed_sample(aug);
  DenseVector<S> x = DenseVector<S>::Constant(m.cols(), sample - sample);
  for (Index i = 0; i < e.rank(); ++i) x(e.pivots[static_cast<std::size_t>(i)]) = e.form(i, m.cols());
  return x;
}

// Solves m X = B column by column; nullopt if any column is inconsistent.
template <class DerivedM, class DerivedB>
std::optional<DenseMatrix<typename DerivedM::Scalar>> solve_many(const Eigen::MatrixBase<DerivedM>& m,
                                                                 const Eigen::MatrixBase<DerivedB>& b) {
  using S = typename DerivedM::Scalar;
  if (b.rows() != m.rows()) throw DimensionMismatch("solve_many: row count mismatch");
  DenseMatrix<S> aug(m.rows(), m.cols() + b.cols());
  aug.leftCols(m.cols()) = m;
  aug.rightCols(b.cols()) = b;
  const auto e = rref(aug);
  for (Index p : e.pivots)
    if (p >= m.cols()) return std::nullopt;
  S sample = detail::typed_sample(aug);
  DenseMatrix<S> x = DenseMatrix<S>::Constant(m.cols(), b.cols(), sample - sample);
  for (Index i = 0; i < e.rank(); ++i)
    x.row(e.pivots[static_cast<std::size_t>(i)]) = e.form.block(i, m.cols(), 1, b.cols());
  return x;
}

template <class Derived>
std::optional<DenseMatrix<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const S sample = detail::typed_sample(m);
  DenseMatrix<S> id = DenseMatrix<S>::Constant(m.rows(), m.rows(), sample - sample);
  for (Index i = 0; i < m.rows(); ++i) id(i, i) = detail::one_like(sample);
  return solve_many(m, id);
}

// Canonical basis (rref rows, transposed) of the span of the columns of m.
template <class Derived>
DenseMatrix<typename Derived::Scalar> column_space(const Eigen::MatrixBase<Derived>& m) {
  const auto e = rref(m.transpose());
  return e.form.topRows(e.rank()).transpose();
}

template <class Scalar>
struct Quotient {
  DenseMatrix<Scalar> subspace_basis;  // ambient x s
  DenseMatrix<Scalar> coset_basis;     // ambient x q, standard basis vectors
  DenseMatrix<Scalar> projection;      // q x ambient, kills the subspace
  Index dimension() const { return coset_basis.cols(); }
};

// Complements span(subspace) by standard basis vectors; projection reads off
// coordinates of v + span(subspace) against those representatives.
template <class Derived>
Quotient<typename Derived::Scalar> quotient_representatives(Index ambient, const Eigen::MatrixBase<Derived>& subspace,
                                                            const typename Derived::Scalar& sample) {
  using S = typename Derived::Scalar;
  if (subspace.rows() != ambient && subspace.cols() > 0)
    throw DimensionMismatch("quotient: subspace vectors have length " + std::to_string(subspace.rows()) +
                            ", ambient dimension is " + std::to_string(ambient));
  const S zero = sample - sample;
  const S one = detail::one_like(sample);
  Quotient<S> q;
  std::vector<Index> pivots;
  DenseMatrix<S> rows(0, ambient);
  if (subspace.cols() > 0) {
    const auto e = rref(subspace.transpose());
    rows = e.form.topRows(e.rank());
    pivots = e.pivots;
  }
  q.subspace_basis = rows.transpose();
  std::vector<bool> is_pivot(static_cast<std::size_t>(ambient), false);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free;
  for (Index c = 0; c < ambient; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  const Index qd = static_cast<Index>(free.size());
  q.coset_basis = DenseMatrix<S>::Constant(ambient, qd, zero);
  q.projection = DenseMatrix<S>::Constant(qd, ambient, zero);
  for (Index k = 0; k < qd; ++k) {
    const Index c = free[static_cast<std::size_t>(k)];
    q.coset_basis(c, k) = one;
    q.projection(k, c) = one;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (!is_zero(rows(static_cast<Index>(i), c))) q.projection(k, pivots[i]) = -rows(static_cast<Index>(i), c);
  }
  return q;
}

inline Quotient<FieldElement> quotient_representatives(const FieldSpec& f, Index ambient, const Matrix& subspace) {
  return quotient_representatives(ambient, subspace, FieldElement::zero(f));
}

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

// Whether v lies in the span of the columns of basis.
template <class DerivedB, class DerivedV>
bool in_span(const Eigen::MatrixBase<DerivedB>& basis, const Eigen::MatrixBase<DerivedV>& v) {
  if (basis.cols() == 0) return is_zero_matrix(v);
  return solve(basis, v).has_value();
}

// Basis of the intersection of two column spans.
Matrix intersect_spans(const Matrix& a, const Matrix& b);
// Basis of the sum of two column spans.
Matrix sum_spans(const Matrix& a, const Matrix& b);
// Kronecker product of two matrices.
Matrix kronecker(const Matrix& a, const Matrix& b);

}  // namespace vl
