#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vl/algebra.hpp"

namespace vl {

// Algebra with a symmetric nondegenerate form lambda (coefficient vector:
// lambda(e_i) = form(i)).
class FrobeniusAlgebra {
 public:
  FrobeniusAlgebra(AlgebraPtr algebra, Vector form);

  const AlgebraPtr& algebra() const { return algebra_; }
  const StructureAlgebra& alg() const { return *algebra_; }
  const Vector& form() const { return form_; }
  FieldElement lambda(const Vector& a) const;
  // gram(i,j) = lambda(e_i e_j)
  const Matrix& gram() const { return gram_; }
  // column i holds f_i with lambda(e_i f_j) = delta_ij
  const Matrix& duals() const { return duals_; }

  FrobeniusAlgebra rescaled(const FieldElement& c) const;

 private:
  AlgebraPtr algebra_;
  Vector form_;
  Matrix gram_;
  Matrix duals_;
};

// Sum of left (x) right; canonical form has distinct basis vectors on the left.
struct SweedlerTensor {
  std::vector<std::pair<Vector, Vector>> terms;
  // coefficient matrix c(j,k) of e_j (x) e_k
  Matrix coefficients(const FieldSpec& f, Index n) const;
};

std::pair<Matrix, Matrix> dual_bases(const FrobeniusAlgebra& F);
// Delta(a) = sum_i (a e_i) (x) f_i
SweedlerTensor frobenius_coproduct(const FrobeniusAlgebra& F, const Vector& a);
// sum_i e_i (x) f_i, as a coefficient matrix
Matrix canonical_element(const FrobeniusAlgebra& F);
// a * b = a' b a''
Vector star(const FrobeniusAlgebra& F, const Vector& a, const Vector& b);
// lambda(pi * rho); equals dim(pi A rho) in the field
FieldElement handle_trace(const FrobeniusAlgebra& F, const Vector& pi, const Vector& rho);
FieldElement modified_dimension(const FrobeniusAlgebra& F, const Vector& pi);

struct BlockCertificate {
  bool pass = true;
  std::size_t block_count = 0;
  std::size_t pairs_checked = 0;
  // first failing pair of basis vectors of the block subalgebras, with their blocks
  std::optional<std::pair<std::size_t, std::size_t>> failing_blocks;
  std::string detail;
};

// Central idempotent of each block: sum of the idempotents in that class.
std::vector<Vector> block_idempotents(const std::vector<Vector>& idempotents, const BlockPartition& blocks);
// Checks A_l * A_m = 0 in A/[A,A] for l != m and A_l * A_l inside A_l + [A,A],
// over all basis pairs of the block subalgebras A_l = c_l A.
BlockCertificate certify_block_diagonal(const FrobeniusAlgebra& F, const std::vector<Vector>& idempotents,
                                        const BlockPartition& blocks);
BlockCertificate certify_block_diagonal(const FrobeniusAlgebra& F);

}  // namespace vl
