#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "vl/field.hpp"
#include "vl/linalg.hpp"

namespace vl {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

struct StructureTerm {
  Index i, j, k;
  FieldElement value;
};

// Finite-dimensional associative unital algebra: e_i e_j = sum_k c[i][j][k] e_k.
// Associativity and the unit axiom are checked by the constructor.
class StructureAlgebra {
 public:
  using SparseVector = std::vector<std::pair<Index, FieldElement>>;

  StructureAlgebra(FieldSpec f, Index dim, const std::vector<StructureTerm>& terms, const Vector& unit,
                   std::string name = {});

  const FieldSpec& field() const { return f_; }
  Index dim() const { return n_; }
  const std::string& name() const { return name_; }

  const SparseVector& product(Index i, Index j) const { return table_[static_cast<std::size_t>(i * n_ + j)]; }
  FieldElement constant(Index i, Index j, Index k) const;
  std::vector<StructureTerm> terms() const;

  const Vector& unit() const { return unit_; }
  Vector basis(Index i) const { return unit_vector(f_, n_, i); }
  Vector zero() const { return zero_vector(f_, n_); }
  Vector multiply(const Vector& a, const Vector& b) const;
  Vector commutator(const Vector& a, const Vector& b) const;
  Vector power(const Vector& a, std::int64_t e) const;
  // Column k holds a e_k (left) or e_k a (right).
  Matrix left_multiplication(const Vector& a) const;
  Matrix right_multiplication(const Vector& a) const;

  bool is_commutative() const { return commutative_; }
  // A small generating set of basis indices (computed on first use).
  const std::vector<Index>& generators() const;

 private:
  FieldSpec f_;
  Index n_;
  std::string name_;
  std::vector<SparseVector> table_;
  Vector unit_;
  bool commutative_ = true;

  mutable std::once_flag generators_once_;
  mutable std::vector<Index> generators_;
};

using AlgebraPtr = std::shared_ptr<const StructureAlgebra>;

AlgebraPtr make_algebra(FieldSpec f, Index dim, const std::vector<StructureTerm>& terms, const Vector& unit,
                        std::string name = {});
AlgebraPtr tensor_product(const StructureAlgebra& a, const StructureAlgebra& b, std::string name = {});

// Left module: action[i] = rho(e_i).
class AlgebraModule {
 public:
  AlgebraModule(AlgebraPtr algebra, std::vector<Matrix> action, std::string label = {});
  // Skips the homomorphism check; for modules built by operations that preserve it.
  static AlgebraModule trusted(AlgebraPtr algebra, std::vector<Matrix> action, std::string label = {});

  const AlgebraPtr& algebra() const { return algebra_; }
  Index dim() const { return dim_; }
  const Matrix& action(Index i) const { return action_[static_cast<std::size_t>(i)]; }
  const std::vector<Matrix>& actions() const { return action_; }
  Matrix act(const Vector& a) const;
  const std::string& label() const { return label_; }

  // Verifies rho(e_i) rho(e_j) = sum_k c[i][j][k] rho(e_k) and rho(1) = id.
  void validate() const;

 private:
  AlgebraModule() = default;
  AlgebraPtr algebra_;
  Index dim_ = 0;
  std::vector<Matrix> action_;
  std::string label_;
};

AlgebraModule regular_module(const AlgebraPtr& a);
AlgebraModule direct_sum(const AlgebraModule& m, const AlgebraModule& n);
// Action on an invariant subspace (columns of basis) and on the quotient by it.
AlgebraModule submodule(const AlgebraModule& m, const Matrix& basis);
AlgebraModule quotient_module(const AlgebraModule& m, const Matrix& basis);
// Smallest invariant subspace containing the given vectors.
Matrix generated_submodule(const AlgebraModule& m, const Matrix& vectors);

struct HomSpace {
  Index dimension = 0;
  std::vector<Matrix> basis;  // each dim(N) x dim(M)
};
HomSpace hom_space(const AlgebraModule& m, const AlgebraModule& n);
bool is_isomorphic(const AlgebraModule& m, const AlgebraModule& n);

// Center, as columns.
Matrix center(const StructureAlgebra& a);

struct HH0 {
  Matrix commutators;           // basis of [A,A]
  Quotient<FieldElement> quotient;  // A -> A/[A,A]
};
HH0 hh0(const StructureAlgebra& a);

// Jacobson radical, as columns.
Matrix radical(const StructureAlgebra& a);

// Complete orthogonal system of primitive idempotents (sums to 1).
std::vector<Vector> primitive_idempotents(const StructureAlgebra& a);

// Groups a complete primitive system into isomorphism classes of A e; returns
// one representative index per class, in order of first appearance.
std::vector<std::size_t> isomorphism_class_representatives(const StructureAlgebra& a,
                                                           const std::vector<Vector>& idempotents,
                                                           const Matrix& radical);

// Pairwise non-isomorphic primitive idempotents, one per projective indecomposable.
std::vector<Vector> basic_idempotents(const StructureAlgebra& a);

// Basis of e A f.
Matrix corner(const StructureAlgebra& a, const Vector& e, const Vector& f);
Index corner_dimension(const StructureAlgebra& a, const Vector& e, const Vector& f);

// Cartan(i,j) = dim e_i A e_j over the basic idempotents.
IntMatrix cartan_matrix(const StructureAlgebra& a, const std::vector<Vector>& idempotents);
IntMatrix cartan_matrix(const StructureAlgebra& a);

struct BlockPartition {
  std::vector<std::vector<Index>> classes;
  Index block_of(Index i) const;
};
BlockPartition blocks(const IntMatrix& cartan);

// Simple tops A e / J e of the projective indecomposables, in the order of
// basic_idempotents.
std::vector<AlgebraModule> simple_modules(const AlgebraPtr& a);
AlgebraModule projective_cover(const AlgebraPtr& a, const Vector& idempotent, std::string label = {});

// Jordan-Hoelder multiplicities of the given simples in m (radical filtration).
std::vector<long long> composition_multiplicities(const AlgebraModule& m, const std::vector<AlgebraModule>& simples,
                                                  const Matrix& radical);

bool is_idempotent(const StructureAlgebra& a, const Vector& e);

}  // namespace vl
