#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vl/algebra.hpp"

namespace vl {

// Sparse element of A^(x)k; keys are big-endian flattened basis tuples.
class Tensor {
 public:
  Tensor(FieldSpec f, Index n, int order) : f_(std::move(f)), n_(n), order_(order) {}
  static Tensor from_matrix(const Matrix& m);  // order 2, m(j,k) = coefficient of e_j (x) e_k
  static Tensor from_vector(const Vector& v);  // order 1

  const FieldSpec& field() const { return f_; }
  Index n() const { return n_; }
  int order() const { return order_; }
  const std::map<Index, FieldElement>& terms() const { return terms_; }
  void add(Index key, const FieldElement& c);
  void add(const std::vector<Index>& tuple, const FieldElement& c);
  std::vector<Index> tuple(Index key) const;
  Index key(const std::vector<Index>& tuple) const;
  Matrix to_matrix() const;  // order 2 only
  Vector to_vector() const;  // order 1 only

  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor operator*(const FieldElement& c) const;
  bool operator==(const Tensor& o) const;
  bool operator!=(const Tensor& o) const { return !(*this == o); }
  bool is_zero() const { return terms_.empty(); }

 private:
  FieldSpec f_;
  Index n_;
  int order_;
  std::map<Index, FieldElement> terms_;
};

// Product in A^(x)k.
Tensor multiply(const StructureAlgebra& a, const Tensor& x, const Tensor& y);
// Places the factors of x at the given slots of an order-k tensor, unit elsewhere.
Tensor embed(const StructureAlgebra& a, const Tensor& x, const std::vector<int>& slots, int order);
// Applies a linear map (column j = image of e_j) to one slot.
Tensor apply_to_slot(const Tensor& x, int slot, const Matrix& map);
// Swaps the two factors of an order-2 tensor.
Tensor flip(const Tensor& x);

class HopfAlgebra {
 public:
  struct CoproductTerm {
    Index i, j, k;
    FieldElement value;  // Delta(e_i) contains value * e_j (x) e_k
  };

  // Checks coassociativity, counit, multiplicativity of Delta and epsilon, and
  // the antipode axiom. Antipode column j = S(e_j).
  HopfAlgebra(AlgebraPtr algebra, const std::vector<CoproductTerm>& coproduct, Vector counit, Matrix antipode,
              std::string name = {});

  const AlgebraPtr& algebra() const { return algebra_; }
  const StructureAlgebra& alg() const { return *algebra_; }
  const FieldSpec& field() const { return algebra_->field(); }
  Index dim() const { return algebra_->dim(); }
  const std::string& name() const { return name_; }

  const Tensor& coproduct(Index i) const { return delta_[static_cast<std::size_t>(i)]; }
  Tensor coproduct(const Vector& a) const;
  // Delta applied to one slot of a tensor.
  Tensor coproduct_on_slot(const Tensor& x, int slot) const;
  const Vector& counit() const { return counit_; }
  FieldElement counit(const Vector& a) const;
  const Matrix& antipode() const { return antipode_; }
  std::vector<CoproductTerm> coproduct_terms() const;

  // Convolution product on A*: (f g)(a) = f(a') g(a'').
  Vector convolve(const Vector& f, const Vector& g) const;
  // Covector coordinates of the algebra counit as an element of A* (unit of A*).
  const Vector& dual_unit() const { return counit_; }

 private:
  AlgebraPtr algebra_;
  std::string name_;
  std::vector<Tensor> delta_;
  Vector counit_;
  Matrix antipode_;
};

class QuasiTriangular {
 public:
  // Checks invertibility of R, Delta^op = R Delta R^-1, the hexagon relations,
  // and that the ribbon element is central, invertible, with counit 1.
  QuasiTriangular(const HopfAlgebra& h, Tensor r, Vector ribbon);
  // R only; no ribbon data.
  QuasiTriangular(const HopfAlgebra& h, Tensor r);

  const Tensor& r() const { return r_; }
  const Tensor& r_inverse() const { return r_inv_; }
  const std::optional<Vector>& ribbon() const { return ribbon_; }

 private:
  Tensor r_, r_inv_;
  std::optional<Vector> ribbon_;
};

bool yang_baxter_holds(const HopfAlgebra& h, const Tensor& r);
// u = sum S(R2) R1
Vector drinfeld_element(const HopfAlgebra& h, const Tensor& r);

// a Lambda = eps(a) Lambda, first nonzero coordinate 1
Vector integral(const HopfAlgebra& h);
bool integral_is_two_sided(const HopfAlgebra& h, const Vector& lambda);
// (id (x) lambda) Delta(a) = lambda(a) 1, first nonzero coordinate 1
Vector cointegral(const HopfAlgebra& h);

// Matrix of D(f) = (f (x) id)(R21 R), acting on covector coordinates.
Matrix drinfeld_map_matrix(const HopfAlgebra& h, const Tensor& r);
Vector drinfeld_map(const HopfAlgebra& h, const Tensor& r, const Vector& f);

// Psi(a) = lambda(a -): the covector b -> lambda(a b). Matrix column i = Psi(e_i).
Matrix radford_map(const HopfAlgebra& h);
Matrix radford_map_inverse(const HopfAlgebra& h);

// Basis (columns) of {f : f(ab) = f(b S^2(a))}.
Matrix class_functions(const HopfAlgebra& h);

struct STransform {
  Matrix class_function_basis;  // n x m
  Matrix on_class_functions;    // m x m, coordinates in class_function_basis
  Matrix on_dual;               // n x n, Psi o D on all of A*
};
STransform s_transform(const HopfAlgebra& h, const Tensor& r);

// ch(M)(e_i) = trace rho_M(e_i)
Vector internal_character(const HopfAlgebra& h, const AlgebraModule& m);
AlgebraModule tensor_product(const HopfAlgebra& h, const AlgebraModule& m, const AlgebraModule& n);
AlgebraModule trivial_module(const HopfAlgebra& h);

// N[i][j][l]: multiplicity of simple l in simple_i (x) simple_j. Semisimple
// algebras use hom dimensions, otherwise composition series.
struct FusionTensor {
  std::size_t n = 0;
  std::vector<long long> data;
  explicit FusionTensor(std::size_t size = 0) : n(size), data(size * size * size, 0) {}
  long long& operator()(std::size_t i, std::size_t j, std::size_t l) { return data[(i * n + j) * n + l]; }
  long long operator()(std::size_t i, std::size_t j, std::size_t l) const { return data[(i * n + j) * n + l]; }
  bool operator==(const FusionTensor& o) const { return n == o.n && data == o.data; }
};
FusionTensor fusion_multiplicities(const HopfAlgebra& h, const std::vector<AlgebraModule>& simples, bool semisimple);

struct CorGrvReport {
  bool pass = true;
  FusionTensor fusion;
  std::vector<Vector> phi;  // Psi^-1(ch X_i)
  std::vector<std::string> lines;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};
// Checks S^-1(S phi_i . S phi_j) = sum_l N_ij^l phi_l with S = D o Psi.
CorGrvReport corgrv_check(const HopfAlgebra& h, const Tensor& r, const std::vector<AlgebraModule>& simples,
                          const FusionTensor& fusion);

}  // namespace vl
