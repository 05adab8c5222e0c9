#include "vl/frobenius.hpp"

#include "vl/error.hpp"

namespace vl {

FrobeniusAlgebra::FrobeniusAlgebra(AlgebraPtr algebra, Vector form) : algebra_(std::move(algebra)) {
  if (!algebra_) throw std::invalid_argument("Frobenius structure on a null algebra");
  const auto& a = *algebra_;
  const Index n = a.dim();
  if (form.size() != n)
    throw DimensionMismatch("form has " + std::to_string(form.size()) + " entries, algebra has dimension " +
                            std::to_string(n));
  form_ = form;
  for (Index i = 0; i < n; ++i) form_(i) = form_(i).in(a.field());
  gram_ = zero_matrix(a.field(), n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (const auto& [k, c] : a.product(i, j)) gram_(i, j) += c * form_(k);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (gram_(i, j) != gram_(j, i))
        throw InvalidStructure("form is not symmetric: lambda(e" + std::to_string(i) + " e" + std::to_string(j) +
                               ") != lambda(e" + std::to_string(j) + " e" + std::to_string(i) + ")");
  auto inv = inverse(gram_);
  if (!inv) throw InvalidStructure("form is degenerate: Gram matrix has rank " + std::to_string(rank(gram_)));
  duals_ = std::move(*inv);
}

FieldElement FrobeniusAlgebra::lambda(const Vector& a) const {
  FieldElement s = FieldElement::zero(algebra_->field());
  for (Index i = 0; i < a.size(); ++i)
    if (!a(i).is_zero()) s += a(i) * form_(i);
  return s;
}

FrobeniusAlgebra FrobeniusAlgebra::rescaled(const FieldElement& c) const {
  if (c.in(algebra_->field()).is_zero()) throw InvalidStructure("cannot rescale a form by zero");
  return FrobeniusAlgebra(algebra_, Vector(form_ * c.in(algebra_->field())));
}

Matrix SweedlerTensor::coefficients(const FieldSpec& f, Index n) const {
  Matrix c = zero_matrix(f, n, n);
  for (const auto& [l, r] : terms) c += l * r.transpose();
  return c;
}

std::pair<Matrix, Matrix> dual_bases(const FrobeniusAlgebra& F) {
  return {identity_matrix(F.alg().field(), F.alg().dim()), F.duals()};
}

SweedlerTensor frobenius_coproduct(const FrobeniusAlgebra& F, const Vector& a) {
  const auto& A = F.alg();
  const Index n = A.dim();
  // row k of the right factor: sum_i (a e_i)_k f_i
  const Matrix la = A.left_multiplication(a);
  const Matrix right = F.duals() * la.transpose();
  SweedlerTensor t;
  for (Index k = 0; k < n; ++k) {
    const Vector r = right.col(k);
    if (!is_zero_matrix(r)) t.terms.emplace_back(A.basis(k), r);
  }
  return t;
}

Matrix canonical_element(const FrobeniusAlgebra& F) { return F.duals().transpose(); }

Vector star(const FrobeniusAlgebra& F, const Vector& a, const Vector& b) {
  const auto& A = F.alg();
  Vector out = A.zero();
  for (Index i = 0; i < A.dim(); ++i) {
    const Vector left = A.multiply(a, A.basis(i));
    if (is_zero_matrix(left)) continue;
    out += A.multiply(A.multiply(left, b), F.duals().col(i));
  }
  return out;
}

FieldElement handle_trace(const FrobeniusAlgebra& F, const Vector& pi, const Vector& rho) {
  if (!is_idempotent(F.alg(), pi) || !is_idempotent(F.alg(), rho))
    throw InvalidStructure("handle_trace needs idempotent arguments");
  return F.lambda(star(F, pi, rho));
}

FieldElement modified_dimension(const FrobeniusAlgebra& F, const Vector& pi) {
  if (!is_idempotent(F.alg(), pi)) throw InvalidStructure("modified_dimension needs an idempotent");
  return F.lambda(pi);
}

std::vector<Vector> block_idempotents(const std::vector<Vector>& idempotents, const BlockPartition& blocks) {
  std::vector<Vector> out;
  for (const auto& cls : blocks.classes) {
    Vector c = idempotents.at(static_cast<std::size_t>(cls.front()));
    for (std::size_t k = 1; k < cls.size(); ++k) c += idempotents.at(static_cast<std::size_t>(cls[k]));
    out.push_back(std::move(c));
  }
  return out;
}

BlockCertificate certify_block_diagonal(const FrobeniusAlgebra& F, const std::vector<Vector>& idempotents,
                                        const BlockPartition& blocks) {
  const auto& A = F.alg();
  const auto cs = block_idempotents(idempotents, blocks);
  const auto q = hh0(A);
  BlockCertificate cert;
  cert.block_count = cs.size();
  std::vector<Matrix> spans;
  for (const auto& c : cs) spans.push_back(column_space(A.left_multiplication(c)));
  for (std::size_t l = 0; l < cs.size(); ++l)
    for (std::size_t m = 0; m < cs.size(); ++m)
      for (Index x = 0; x < spans[l].cols(); ++x)
        for (Index y = 0; y < spans[m].cols(); ++y) {
          ++cert.pairs_checked;
          const Vector s = star(F, spans[l].col(x), spans[m].col(y));
          bool ok;
          if (l != m) {
            ok = is_zero_matrix(Vector(q.quotient.projection * s));
          } else {
            Matrix allowed(A.dim(), spans[l].cols() + q.commutators.cols());
            allowed << spans[l], q.commutators;
            ok = in_span(allowed, s);
          }
          if (!ok && cert.pass) {
            cert.pass = false;
            cert.failing_blocks = {l, m};
            cert.detail = "basis vectors " + std::to_string(x) + " of block " + std::to_string(l) + " and " +
                          std::to_string(y) + " of block " + std::to_string(m);
          }
        }
  return cert;
}

BlockCertificate certify_block_diagonal(const FrobeniusAlgebra& F) {
  const auto ids = primitive_idempotents(F.alg());
  return certify_block_diagonal(F, ids, blocks(cartan_matrix(F.alg(), ids)));
}

}  // namespace vl
