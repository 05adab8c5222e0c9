#include "vl/linalg.hpp"

namespace vl {

Matrix sum_spans(const Matrix& a, const Matrix& b) {
  if (a.cols() == 0) return b.cols() == 0 ? b : column_space(b);
  if (b.cols() == 0) return column_space(a);
  if (a.rows() != b.rows()) throw DimensionMismatch("sum_spans: ambient dimensions differ");
  Matrix both(a.rows(), a.cols() + b.cols());
  both << a, b;
  return column_space(both);
}

Matrix intersect_spans(const Matrix& a, const Matrix& b) {
  if (a.cols() == 0) return a;
  if (b.cols() == 0) return b;
  if (a.rows() != b.rows()) throw DimensionMismatch("intersect_spans: ambient dimensions differ");
  // x in span(a) and span(b): a u = b w, so [a | -b] (u, w) = 0.
  Matrix stacked(a.rows(), a.cols() + b.cols());
  stacked << a, -b;
  const Matrix k = kernel_basis(stacked);
  if (k.cols() == 0) return Matrix(a.rows(), 0);
  const Matrix vecs = a * k.topRows(a.cols());
  return column_space(vecs);
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  const FieldElement zero = detail::typed_sample(a) - detail::typed_sample(a);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) {
        r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()).setConstant(zero);
      } else {
        for (Index k = 0; k < b.rows(); ++k)
          for (Index l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
      }
    }
  return r;
}

}  // namespace vl
