#include "vl/algebra.hpp"
#include "vl/error.hpp"

namespace vl {

AlgebraModule::AlgebraModule(AlgebraPtr algebra, std::vector<Matrix> action, std::string label)
    : AlgebraModule(trusted(std::move(algebra), std::move(action), std::move(label))) {
  validate();
}

AlgebraModule AlgebraModule::trusted(AlgebraPtr algebra, std::vector<Matrix> action, std::string label) {
  if (!algebra) throw std::invalid_argument("module over a null algebra");
  if (static_cast<Index>(action.size()) != algebra->dim())
    throw DimensionMismatch("module needs one matrix per basis element: got " + std::to_string(action.size()) +
                            ", algebra has dimension " + std::to_string(algebra->dim()));
  AlgebraModule m;
  m.dim_ = action.empty() ? 0 : action.front().rows();
  const FieldSpec& f = algebra->field();
  for (auto& mat : action) {
    if (mat.rows() != m.dim_ || mat.cols() != m.dim_) throw DimensionMismatch("module matrices must be square and equal-sized");
    for (Index i = 0; i < mat.rows(); ++i)
      for (Index j = 0; j < mat.cols(); ++j) mat(i, j) = mat(i, j).in(f);
  }
  m.algebra_ = std::move(algebra);
  m.action_ = std::move(action);
  m.label_ = std::move(label);
  return m;
}

Matrix AlgebraModule::act(const Vector& a) const {
  Matrix r = zero_matrix(algebra_->field(), dim_, dim_);
  for (Index i = 0; i < a.size(); ++i)
    if (!a(i).is_zero()) r += a(i) * action(i);
  return r;
}

void AlgebraModule::validate() const {
  const auto& alg = *algebra_;
  const Index n = alg.dim();
  if (act(alg.unit()) != identity_matrix(alg.field(), dim_))
    throw InvalidStructure("module " + label_ + ": the unit does not act as the identity");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Matrix rhs = zero_matrix(alg.field(), dim_, dim_);
      for (const auto& [k, c] : alg.product(i, j)) rhs += c * action(k);
      if (Matrix(action(i) * action(j)) != rhs)
        throw InvalidStructure("module " + label_ + ": action is not multiplicative at basis pair (" +
                               std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

AlgebraModule regular_module(const AlgebraPtr& a) {
  std::vector<Matrix> act;
  for (Index i = 0; i < a->dim(); ++i) act.push_back(a->left_multiplication(a->basis(i)));
  return AlgebraModule::trusted(a, std::move(act), "regular");
}

AlgebraModule direct_sum(const AlgebraModule& m, const AlgebraModule& n) {
  if (m.algebra() != n.algebra()) throw DimensionMismatch("direct sum of modules over different algebras");
  const FieldSpec& f = m.algebra()->field();
  std::vector<Matrix> act;
  for (Index i = 0; i < m.algebra()->dim(); ++i) {
    Matrix r = zero_matrix(f, m.dim() + n.dim(), m.dim() + n.dim());
    r.topLeftCorner(m.dim(), m.dim()) = m.action(i);
    r.bottomRightCorner(n.dim(), n.dim()) = n.action(i);
    act.push_back(std::move(r));
  }
  return AlgebraModule::trusted(m.algebra(), std::move(act), m.label() + "+" + n.label());
}

AlgebraModule submodule(const AlgebraModule& m, const Matrix& basis) {
  std::vector<Matrix> act;
  for (Index i = 0; i < m.algebra()->dim(); ++i) {
    auto x = solve_many(basis, Matrix(m.action(i) * basis));
    if (!x) throw InvalidStructure("subspace is not invariant under basis element " + std::to_string(i));
    act.push_back(std::move(*x));
  }
  return AlgebraModule::trusted(m.algebra(), std::move(act), m.label());
}

AlgebraModule quotient_module(const AlgebraModule& m, const Matrix& basis) {
  const auto q = quotient_representatives(m.algebra()->field(), m.dim(), basis);
  std::vector<Matrix> act;
  for (Index i = 0; i < m.algebra()->dim(); ++i) act.push_back(q.projection * m.action(i) * q.coset_basis);
  return AlgebraModule::trusted(m.algebra(), std::move(act), m.label());
}

Matrix generated_submodule(const AlgebraModule& m, const Matrix& vectors) {
  if (vectors.cols() == 0) return Matrix(m.dim(), 0);
  Matrix current = column_space(vectors);
  const auto& gens = m.algebra()->generators();
  for (;;) {
    Matrix grown(m.dim(), current.cols() * (1 + static_cast<Index>(gens.size())));
    grown.leftCols(current.cols()) = current;
    Index c = current.cols();
    for (Index g : gens) {
      grown.middleCols(c, current.cols()) = m.action(g) * current;
      c += current.cols();
    }
    Matrix next = column_space(grown);
    if (next.cols() == current.cols()) return next;
    current = std::move(next);
  }
}

HomSpace hom_space(const AlgebraModule& m, const AlgebraModule& n) {
  if (m.algebra() != n.algebra() && !(m.algebra()->dim() == n.algebra()->dim() &&
                                       m.algebra()->field() == n.algebra()->field()))
    throw DimensionMismatch("hom_space: modules over different algebras");
  const FieldSpec& f = m.algebra()->field();
  const Index dm = m.dim(), dn = n.dim();
  HomSpace out;
  if (dm == 0 || dn == 0) return out;
  const auto& gens = m.algebra()->generators();
  // unknown T (dn x dm), column-major: T(r, c) -> r + c * dn
  const Index unknowns = dn * dm;
  Matrix eqs = zero_matrix(f, static_cast<Index>(gens.size()) * unknowns, unknowns);
  Index row = 0;
  for (Index g : gens) {
    const Matrix& rm = m.action(g);
    const Matrix& rn = n.action(g);
    for (Index r = 0; r < dn; ++r)
      for (Index c = 0; c < dm; ++c, ++row) {
        // (T rm - rn T)(r, c)
        for (Index k = 0; k < dm; ++k)
          if (!rm(k, c).is_zero()) eqs(row, r + k * dn) += rm(k, c);
        for (Index k = 0; k < dn; ++k)
          if (!rn(r, k).is_zero()) eqs(row, k + c * dn) -= rn(r, k);
      }
  }
  const Matrix ker = kernel_basis(eqs);
  out.dimension = ker.cols();
  for (Index b = 0; b < ker.cols(); ++b) {
    Matrix t(dn, dm);
    for (Index r = 0; r < dn; ++r)
      for (Index c = 0; c < dm; ++c) t(r, c) = ker(r + c * dn, b);
    out.basis.push_back(std::move(t));
  }
  return out;
}

bool is_isomorphic(const AlgebraModule& m, const AlgebraModule& n) {
  if (m.dim() != n.dim()) return false;
  if (m.dim() == 0) return true;
  const auto h = hom_space(m, n);
  if (h.basis.empty()) return false;
  // Exact for simple modules (Schur); otherwise tries the basis and their sum.
  Matrix sum = zero_matrix(m.algebra()->field(), n.dim(), m.dim());
  for (const auto& t : h.basis) {
    if (rank(t) == m.dim()) return true;
    sum += t;
  }
  return rank(sum) == m.dim();
}

AlgebraModule projective_cover(const AlgebraPtr& a, const Vector& idempotent, std::string label) {
  const Matrix basis = corner(*a, a->unit(), idempotent);
  AlgebraModule p = submodule(regular_module(a), basis);
  return AlgebraModule::trusted(a, p.actions(), std::move(label));
}

std::vector<AlgebraModule> simple_modules(const AlgebraPtr& a) {
  const Matrix rad = radical(*a);
  std::vector<AlgebraModule> out;
  const auto idems = basic_idempotents(*a);
  for (std::size_t i = 0; i < idems.size(); ++i) {
    const AlgebraModule p = projective_cover(a, idems[i]);
    Matrix jp(p.dim(), 0);
    if (rad.cols() > 0) {
      Matrix vecs(p.dim(), p.dim() * rad.cols());
      for (Index c = 0; c < rad.cols(); ++c) vecs.middleCols(c * p.dim(), p.dim()) = p.act(rad.col(c));
      jp = column_space(vecs);
    }
    AlgebraModule top = quotient_module(p, jp);
    out.push_back(AlgebraModule::trusted(a, top.actions(), "S" + std::to_string(i)));
  }
  return out;
}

std::vector<long long> composition_multiplicities(const AlgebraModule& m, const std::vector<AlgebraModule>& simples,
                                                  const Matrix& rad) {
  const FieldSpec& f = m.algebra()->field();
  std::vector<long long> mult(simples.size(), 0);
  std::vector<Index> end_dims;
  for (const auto& s : simples) end_dims.push_back(hom_space(s, s).dimension);

  Matrix layer = identity_matrix(f, m.dim());
  while (layer.cols() > 0) {
    // next = J * layer
    Matrix next(m.dim(), 0);
    if (rad.cols() > 0) {
      Matrix vecs(m.dim(), layer.cols() * rad.cols());
      for (Index c = 0; c < rad.cols(); ++c) vecs.middleCols(c * layer.cols(), layer.cols()) = m.act(rad.col(c)) * layer;
      next = column_space(vecs);
    }
    if (next.cols() == layer.cols())
      throw InvalidStructure("radical filtration does not descend; the supplied radical is not the Jacobson radical");
    const AlgebraModule sub = submodule(m, layer);
    Matrix inner(layer.cols(), next.cols());
    if (next.cols() > 0) {
      auto x = solve_many(layer, next);
      if (!x) throw InvalidStructure("radical filtration is not nested");
      inner = *x;
    }
    const AlgebraModule top = quotient_module(sub, inner);
    for (std::size_t s = 0; s < simples.size(); ++s) {
      const Index h = hom_space(simples[s], top).dimension;
      if (h % end_dims[s] != 0) throw NonSplit("hom dimension is not a multiple of the endomorphism dimension");
      mult[s] += h / end_dims[s];
    }
    layer = next;
  }
  long long total = 0;
  for (std::size_t s = 0; s < simples.size(); ++s) total += mult[s] * simples[s].dim();
  if (total != m.dim())
    throw NonSplit("composition factors account for dimension " + std::to_string(total) + " of " +
                   std::to_string(m.dim()) + "; the list of simples is incomplete or not split");
  return mult;
}

}  // namespace vl
