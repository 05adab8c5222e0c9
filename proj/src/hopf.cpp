#include "vl/hopf.hpp"

#include "vl/error.hpp"

namespace vl {

// ---- Tensor ----

Tensor Tensor::from_matrix(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("order-2 tensor needs a square coefficient matrix");
  const FieldSpec f = detail::typed_sample(m).field();
  Tensor t(f, m.rows(), 2);
  for (Index j = 0; j < m.rows(); ++j)
    for (Index k = 0; k < m.cols(); ++k) t.add(j * m.rows() + k, m(j, k));
  return t;
}

Tensor Tensor::from_vector(const Vector& v) {
  const FieldSpec f = detail::typed_sample(v).field();
  Tensor t(f, v.size(), 1);
  for (Index j = 0; j < v.size(); ++j) t.add(j, v(j));
  return t;
}

void Tensor::add(Index key, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c.in(f_));
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Tensor::add(const std::vector<Index>& tuple, const FieldElement& c) { add(key(tuple), c); }

std::vector<Index> Tensor::tuple(Index key) const {
  std::vector<Index> t(static_cast<std::size_t>(order_));
  for (int s = order_ - 1; s >= 0; --s) {
    t[static_cast<std::size_t>(s)] = key % n_;
    key /= n_;
  }
  return t;
}

Index Tensor::key(const std::vector<Index>& tuple) const {
  Index k = 0;
  for (Index i : tuple) k = k * n_ + i;
  return k;
}

Matrix Tensor::to_matrix() const {
  if (order_ != 2) throw DimensionMismatch("to_matrix needs an order-2 tensor");
  Matrix m = zero_matrix(f_, n_, n_);
  for (const auto& [k, c] : terms_) m(k / n_, k % n_) = c;
  return m;
}

Vector Tensor::to_vector() const {
  if (order_ != 1) throw DimensionMismatch("to_vector needs an order-1 tensor");
  Vector v = zero_vector(f_, n_);
  for (const auto& [k, c] : terms_) v(k) = c;
  return v;
}

Tensor Tensor::operator+(const Tensor& o) const {
  Tensor r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k, c);
  return r;
}

Tensor Tensor::operator-(const Tensor& o) const {
  Tensor r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k, -c);
  return r;
}

Tensor Tensor::operator*(const FieldElement& c) const {
  Tensor r(f_, n_, order_);
  for (const auto& [k, v] : terms_) r.add(k, v * c);
  return r;
}

bool Tensor::operator==(const Tensor& o) const { return n_ == o.n_ && order_ == o.order_ && terms_ == o.terms_; }

Tensor multiply(const StructureAlgebra& a, const Tensor& x, const Tensor& y) {
  if (x.order() != y.order() || x.n() != a.dim() || y.n() != a.dim())
    throw DimensionMismatch("tensor product of mismatched orders");
  const int order = x.order();
  Tensor out(a.field(), a.dim(), order);
  std::vector<const StructureAlgebra::SparseVector*> slot(static_cast<std::size_t>(order));
  std::vector<std::size_t> pos(static_cast<std::size_t>(order));
  for (const auto& [kx, cx] : x.terms()) {
    const auto tx = x.tuple(kx);
    for (const auto& [ky, cy] : y.terms()) {
      const auto ty = y.tuple(ky);
      bool empty = false;
      for (int s = 0; s < order; ++s) {
        slot[static_cast<std::size_t>(s)] = &a.product(tx[static_cast<std::size_t>(s)], ty[static_cast<std::size_t>(s)]);
        if (slot[static_cast<std::size_t>(s)]->empty()) empty = true;
      }
      if (empty) continue;
      const FieldElement c = cx * cy;
      std::fill(pos.begin(), pos.end(), 0);
      for (;;) {
        Index key = 0;
        FieldElement coef = c;
        for (int s = 0; s < order; ++s) {
          const auto& [idx, v] = (*slot[static_cast<std::size_t>(s)])[pos[static_cast<std::size_t>(s)]];
          key = key * a.dim() + idx;
          coef *= v;
        }
        out.add(key, coef);
        int s = order - 1;
        while (s >= 0 && ++pos[static_cast<std::size_t>(s)] == slot[static_cast<std::size_t>(s)]->size()) {
          pos[static_cast<std::size_t>(s)] = 0;
          --s;
        }
        if (s < 0) break;
      }
    }
  }
  return out;
}

Tensor embed(const StructureAlgebra& a, const Tensor& x, const std::vector<int>& slots, int order) {
  if (static_cast<int>(slots.size()) != x.order()) throw DimensionMismatch("embed: one slot per tensor factor");
  std::vector<std::pair<Index, FieldElement>> unit;
  for (Index i = 0; i < a.dim(); ++i)
    if (!a.unit()(i).is_zero()) unit.emplace_back(i, a.unit()(i));
  std::vector<int> free;
  for (int s = 0; s < order; ++s)
    if (std::find(slots.begin(), slots.end(), s) == slots.end()) free.push_back(s);
  Tensor out(a.field(), a.dim(), order);
  std::vector<Index> t(static_cast<std::size_t>(order));
  std::vector<std::size_t> pos(free.size());
  for (const auto& [k, c] : x.terms()) {
    const auto tx = x.tuple(k);
    for (std::size_t s = 0; s < slots.size(); ++s) t[static_cast<std::size_t>(slots[s])] = tx[s];
    std::fill(pos.begin(), pos.end(), 0);
    for (;;) {
      FieldElement coef = c;
      for (std::size_t f = 0; f < free.size(); ++f) {
        t[static_cast<std::size_t>(free[f])] = unit[pos[f]].first;
        coef *= unit[pos[f]].second;
      }
      out.add(t, coef);
      int f = static_cast<int>(free.size()) - 1;
      while (f >= 0 && ++pos[static_cast<std::size_t>(f)] == unit.size()) {
        pos[static_cast<std::size_t>(f)] = 0;
        --f;
      }
      if (f < 0) break;
    }
  }
  return out;
}

Tensor apply_to_slot(const Tensor& x, int slot, const Matrix& map) {
  Tensor out(x.field(), x.n(), x.order());
  for (const auto& [k, c] : x.terms()) {
    auto t = x.tuple(k);
    const Index src = t[static_cast<std::size_t>(slot)];
    for (Index r = 0; r < map.rows(); ++r) {
      if (map(r, src).is_zero()) continue;
      t[static_cast<std::size_t>(slot)] = r;
      out.add(t, c * map(r, src));
    }
  }
  return out;
}

Tensor flip(const Tensor& x) {
  if (x.order() != 2) throw DimensionMismatch("flip needs an order-2 tensor");
  Tensor out(x.field(), x.n(), 2);
  for (const auto& [k, c] : x.terms()) out.add((k % x.n()) * x.n() + k / x.n(), c);
  return out;
}

// ---- HopfAlgebra ----

namespace {
Tensor unit_tensor(const StructureAlgebra& a, int order) {
  Tensor one(a.field(), a.dim(), 0);
  one.add(0, FieldElement::one(a.field()));
  return embed(a, one, {}, order);
}

Vector multiply_out(const StructureAlgebra& a, const Tensor& t) {
  Vector v = a.zero();
  for (const auto& [k, c] : t.terms()) {
    for (const auto& [idx, coef] : a.product(k / a.dim(), k % a.dim())) v(idx) += c * coef;
  }
  return v;
}

std::string basis_name(Index i) { return "e" + std::to_string(i); }
}  // namespace

HopfAlgebra::HopfAlgebra(AlgebraPtr algebra, const std::vector<CoproductTerm>& coproduct, Vector counit,
                         Matrix antipode, std::string name)
    : algebra_(std::move(algebra)), name_(std::move(name)) {
  if (!algebra_) throw std::invalid_argument("Hopf structure on a null algebra");
  const auto& A = *algebra_;
  const Index n = A.dim();
  const FieldSpec& f = A.field();
  if (counit.size() != n) throw DimensionMismatch("counit has the wrong length");
  if (antipode.rows() != n || antipode.cols() != n) throw DimensionMismatch("antipode must be n x n");
  counit_ = counit;
  for (Index i = 0; i < n; ++i) counit_(i) = counit_(i).in(f);
  antipode_ = antipode;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) antipode_(i, j) = antipode_(i, j).in(f);
  delta_.assign(static_cast<std::size_t>(n), Tensor(f, n, 2));
  for (const auto& t : coproduct) {
    if (t.i < 0 || t.i >= n || t.j < 0 || t.j >= n || t.k < 0 || t.k >= n)
      throw InvalidStructure("coproduct index out of range");
    delta_[static_cast<std::size_t>(t.i)].add(t.j * n + t.k, t.value);
  }

  for (Index i = 0; i < n; ++i) {
    const Tensor& d = delta_[static_cast<std::size_t>(i)];
    if (coproduct_on_slot(d, 0) != coproduct_on_slot(d, 1))
      throw InvalidStructure("coproduct is not coassociative on " + basis_name(i));
    Vector left = A.zero(), right = A.zero();
    for (const auto& [k, c] : d.terms()) {
      left(k % n) += counit_(k / n) * c;
      right(k / n) += counit_(k % n) * c;
    }
    if (left != A.basis(i) || right != A.basis(i)) throw InvalidStructure("counit axiom fails on " + basis_name(i));
  }
  if (this->counit(A.unit()) != FieldElement::one(f)) throw InvalidStructure("counit of the unit is not 1");
  if (this->coproduct(A.unit()) != unit_tensor(A, 2)) throw InvalidStructure("coproduct of the unit is not 1 (x) 1");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vector prod = A.multiply(A.basis(i), A.basis(j));
      if (this->counit(prod) != counit_(i) * counit_(j))
        throw InvalidStructure("counit is not multiplicative at (" + basis_name(i) + "," + basis_name(j) + ")");
      if (this->coproduct(prod) != multiply(A, delta_[static_cast<std::size_t>(i)], delta_[static_cast<std::size_t>(j)]))
        throw InvalidStructure("coproduct is not multiplicative at (" + basis_name(i) + "," + basis_name(j) + ")");
    }
  for (Index i = 0; i < n; ++i) {
    const Tensor& d = delta_[static_cast<std::size_t>(i)];
    const Vector want = A.unit() * counit_(i);
    if (multiply_out(A, apply_to_slot(d, 0, antipode_)) != want ||
        multiply_out(A, apply_to_slot(d, 1, antipode_)) != want)
      throw InvalidStructure("antipode axiom fails on " + basis_name(i));
  }
}

Tensor HopfAlgebra::coproduct(const Vector& a) const {
  Tensor out(field(), dim(), 2);
  for (Index i = 0; i < a.size(); ++i)
    if (!a(i).is_zero()) out = out + delta_[static_cast<std::size_t>(i)] * a(i);
  return out;
}

Tensor HopfAlgebra::coproduct_on_slot(const Tensor& x, int slot) const {
  Tensor out(field(), dim(), x.order() + 1);
  std::vector<Index> t(static_cast<std::size_t>(x.order() + 1));
  for (const auto& [k, c] : x.terms()) {
    const auto tx = x.tuple(k);
    for (const auto& [dk, dc] : delta_[static_cast<std::size_t>(tx[static_cast<std::size_t>(slot)])].terms()) {
      std::size_t p = 0;
      for (int s = 0; s < x.order(); ++s) {
        if (s == slot) {
          t[p++] = dk / dim();
          t[p++] = dk % dim();
        } else {
          t[p++] = tx[static_cast<std::size_t>(s)];
        }
      }
      out.add(t, c * dc);
    }
  }
  return out;
}

FieldElement HopfAlgebra::counit(const Vector& a) const {
  FieldElement s = FieldElement::zero(field());
  for (Index i = 0; i < a.size(); ++i)
    if (!a(i).is_zero()) s += a(i) * counit_(i);
  return s;
}

std::vector<HopfAlgebra::CoproductTerm> HopfAlgebra::coproduct_terms() const {
  std::vector<CoproductTerm> out;
  for (Index i = 0; i < dim(); ++i)
    for (const auto& [k, c] : delta_[static_cast<std::size_t>(i)].terms()) out.push_back({i, k / dim(), k % dim(), c});
  return out;
}

Vector HopfAlgebra::convolve(const Vector& f, const Vector& g) const {
  Vector out = zero_vector(field(), dim());
  for (Index i = 0; i < dim(); ++i)
    for (const auto& [k, c] : delta_[static_cast<std::size_t>(i)].terms()) out(i) += c * f(k / dim()) * g(k % dim());
  return out;
}

// ---- quasitriangular data ----

QuasiTriangular::QuasiTriangular(const HopfAlgebra& h, Tensor r) : r_(std::move(r)), r_inv_(h.field(), h.dim(), 2) {
  const auto& A = h.alg();
  if (r_.order() != 2 || r_.n() != h.dim()) throw DimensionMismatch("R must be an element of A (x) A");
  const Tensor one = unit_tensor(A, 2);
  // for a quasitriangular R the inverse is (S (x) id)(R)
  r_inv_ = apply_to_slot(r_, 0, h.antipode());
  if (multiply(A, r_, r_inv_) != one || multiply(A, r_inv_, r_) != one)
    throw InvalidStructure("R is not invertible with inverse (S (x) id)R");
  for (Index i = 0; i < h.dim(); ++i) {
    const Tensor& d = h.coproduct(i);
    if (multiply(A, flip(d), r_) != multiply(A, r_, d))
      throw InvalidStructure("R does not intertwine the coproduct and its opposite on e" + std::to_string(i));
  }
  if (h.coproduct_on_slot(r_, 0) != multiply(A, embed(A, r_, {0, 2}, 3), embed(A, r_, {1, 2}, 3)))
    throw InvalidStructure("hexagon (Delta (x) id)R = R13 R23 fails");
  if (h.coproduct_on_slot(r_, 1) != multiply(A, embed(A, r_, {0, 2}, 3), embed(A, r_, {0, 1}, 3)))
    throw InvalidStructure("hexagon (id (x) Delta)R = R13 R12 fails");
}

QuasiTriangular::QuasiTriangular(const HopfAlgebra& h, Tensor r, Vector ribbon) : QuasiTriangular(h, std::move(r)) {
  const auto& A = h.alg();
  if (ribbon.size() != h.dim()) throw DimensionMismatch("ribbon element has the wrong length");
  for (Index i = 0; i < h.dim(); ++i)
    if (A.multiply(ribbon, A.basis(i)) != A.multiply(A.basis(i), ribbon))
      throw InvalidStructure("ribbon element is not central");
  if (!inverse(A.left_multiplication(ribbon))) throw InvalidStructure("ribbon element is not invertible");
  if (h.counit(ribbon) != FieldElement::one(h.field())) throw InvalidStructure("ribbon element has counit != 1");
  ribbon_ = std::move(ribbon);
}

bool yang_baxter_holds(const HopfAlgebra& h, const Tensor& r) {
  const auto& A = h.alg();
  const Tensor r12 = embed(A, r, {0, 1}, 3), r13 = embed(A, r, {0, 2}, 3), r23 = embed(A, r, {1, 2}, 3);
  return multiply(A, multiply(A, r12, r13), r23) == multiply(A, multiply(A, r23, r13), r12);
}

Vector drinfeld_element(const HopfAlgebra& h, const Tensor& r) {
  const auto& A = h.alg();
  Vector u = A.zero();
  for (const auto& [k, c] : r.terms())
    u += A.multiply(Vector(h.antipode().col(k % h.dim())), A.basis(k / h.dim())) * c;
  return u;
}

// ---- integrals ----

namespace {
Vector normalized_line(const Matrix& kernel, const char* what) {
  if (kernel.cols() != 1)
    throw InvalidStructure(std::string(what) + " space has dimension " + std::to_string(kernel.cols()) +
                           " instead of 1");
  Vector v = kernel.col(0);
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return v * v(i).inverse();
  return v;
}
}  // namespace

Vector integral(const HopfAlgebra& h) {
  const auto& A = h.alg();
  const Index n = h.dim();
  Matrix eqs(n * n, n);
  for (Index a = 0; a < n; ++a)
    eqs.middleRows(a * n, n) = A.left_multiplication(A.basis(a)) - identity_matrix(h.field(), n) * h.counit()(a);
  return normalized_line(kernel_basis(eqs), "integral");
}

bool integral_is_two_sided(const HopfAlgebra& h, const Vector& lambda) {
  const auto& A = h.alg();
  for (Index a = 0; a < h.dim(); ++a)
    if (A.multiply(lambda, A.basis(a)) != Vector(lambda * h.counit()(a))) return false;
  return true;
}

Vector cointegral(const HopfAlgebra& h) {
  const auto& A = h.alg();
  const Index n = h.dim();
  Matrix eqs = zero_matrix(h.field(), n * n, n);
  for (Index a = 0; a < n; ++a) {
    for (const auto& [k, c] : h.coproduct(a).terms()) eqs(a * n + k / n, k % n) += c;
    for (Index m = 0; m < n; ++m) eqs(a * n + m, a) -= A.unit()(m);
  }
  return normalized_line(kernel_basis(eqs), "cointegral");
}

// ---- Drinfeld and Radford maps ----

Matrix drinfeld_map_matrix(const HopfAlgebra& h, const Tensor& r) {
  return multiply(h.alg(), flip(r), r).to_matrix().transpose();
}

Vector drinfeld_map(const HopfAlgebra& h, const Tensor& r, const Vector& f) { return drinfeld_map_matrix(h, r) * f; }

Matrix radford_map(const HopfAlgebra& h) {
  const auto& A = h.alg();
  const Vector lambda = cointegral(h);
  const Index n = h.dim();
  Matrix p = zero_matrix(h.field(), n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (const auto& [k, c] : A.product(i, j)) p(j, i) += c * lambda(k);
  return p;
}

Matrix radford_map_inverse(const HopfAlgebra& h) {
  const Matrix p = radford_map(h);
  auto inv = inverse(p);
  if (!inv) throw SingularMatrix("Radford map is not invertible: rank " + std::to_string(rank(p)) + " of " +
                                 std::to_string(h.dim()));
  return *inv;
}

Matrix class_functions(const HopfAlgebra& h) {
  const auto& A = h.alg();
  const Index n = h.dim();
  const Matrix s2 = h.antipode() * h.antipode();
  Matrix eqs = zero_matrix(h.field(), n * n, n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Index row = a * n + b;
      for (const auto& [k, c] : A.product(a, b)) eqs(row, k) += c;
      for (Index m = 0; m < n; ++m) {
        if (s2(m, a).is_zero()) continue;
        for (const auto& [k, c] : A.product(b, m)) eqs(row, k) -= s2(m, a) * c;
      }
    }
  return kernel_basis(eqs);
}

STransform s_transform(const HopfAlgebra& h, const Tensor& r) {
  STransform s;
  s.class_function_basis = class_functions(h);
  const Matrix d = drinfeld_map_matrix(h, r);
  const Matrix db = d * s.class_function_basis;
  if (rank(db) != s.class_function_basis.cols())
    throw SingularMatrix("Drinfeld map is not injective on class functions (rank " + std::to_string(rank(db)) +
                         " of " + std::to_string(s.class_function_basis.cols()) + "); the braiding is degenerate");
  s.on_dual = radford_map(h) * d;
  auto x = solve_many(s.class_function_basis, Matrix(s.on_dual * s.class_function_basis));
  if (!x) throw InvalidStructure("S-transformation does not preserve class functions");
  s.on_class_functions = std::move(*x);
  return s;
}

// ---- modules ----

Vector internal_character(const HopfAlgebra& h, const AlgebraModule& m) {
  if (Matrix(h.antipode() * h.antipode()) != identity_matrix(h.field(), h.dim()))
    throw Unsupported("internal characters need S^2 = id; pivotal bookkeeping is not implemented");
  Vector ch(h.dim());
  for (Index i = 0; i < h.dim(); ++i) ch(i) = m.action(i).trace();
  if (m.dim() == 0) ch = zero_vector(h.field(), h.dim());
  return ch;
}

AlgebraModule tensor_product(const HopfAlgebra& h, const AlgebraModule& m, const AlgebraModule& n) {
  std::vector<Matrix> act;
  const Index d = m.dim() * n.dim();
  for (Index i = 0; i < h.dim(); ++i) {
    Matrix r = zero_matrix(h.field(), d, d);
    for (const auto& [k, c] : h.coproduct(i).terms()) r += kronecker(m.action(k / h.dim()), n.action(k % h.dim())) * c;
    act.push_back(std::move(r));
  }
  return AlgebraModule::trusted(h.algebra(), std::move(act), m.label() + "(x)" + n.label());
}

AlgebraModule trivial_module(const HopfAlgebra& h) {
  std::vector<Matrix> act;
  for (Index i = 0; i < h.dim(); ++i) {
    Matrix r(1, 1);
    r(0, 0) = h.counit()(i);
    act.push_back(std::move(r));
  }
  return AlgebraModule::trusted(h.algebra(), std::move(act), "1");
}

FusionTensor fusion_multiplicities(const HopfAlgebra& h, const std::vector<AlgebraModule>& simples, bool semisimple) {
  const std::size_t n = simples.size();
  FusionTensor t(n);
  std::vector<Index> end_dims;
  for (const auto& s : simples) end_dims.push_back(hom_space(s, s).dimension);
  const Matrix rad = semisimple ? Matrix(h.dim(), 0) : radical(h.alg());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const AlgebraModule prod = tensor_product(h, simples[i], simples[j]);
      if (semisimple) {
        long long total = 0;
        for (std::size_t l = 0; l < n; ++l) {
          const Index hd = hom_space(simples[l], prod).dimension;
          if (hd % end_dims[l] != 0) throw NonSplit("hom dimension not divisible by the endomorphism dimension");
          t(i, j, l) = hd / end_dims[l];
          total += t(i, j, l) * simples[l].dim();
        }
        if (total != prod.dim())
          throw NonSplit("simple summands account for dimension " + std::to_string(total) + " of " +
                         std::to_string(prod.dim()) + "; the algebra is not semisimple or the simples are incomplete");
      } else {
        const auto mult = composition_multiplicities(prod, simples, rad);
        for (std::size_t l = 0; l < n; ++l) t(i, j, l) = mult[l];
      }
    }
  return t;
}

CorGrvReport corgrv_check(const HopfAlgebra& h, const Tensor& r, const std::vector<AlgebraModule>& simples,
                          const FusionTensor& fusion) {
  const auto& A = h.alg();
  CorGrvReport rep;
  rep.fusion = fusion;
  const Matrix psi_inv = radford_map_inverse(h);
  const Matrix d = drinfeld_map_matrix(h, r);
  const Matrix s = d * radford_map(h);
  auto s_inv = inverse(s);
  if (!s_inv) throw SingularMatrix("D o Psi is not invertible: rank " + std::to_string(rank(s)));
  const Matrix zc = center(A);
  for (std::size_t i = 0; i < simples.size(); ++i) {
    rep.phi.push_back(psi_inv * internal_character(h, simples[i]));
    if (!in_span(zc, rep.phi.back())) {
      rep.pass = false;
      rep.lines.push_back("phi_" + std::to_string(i) + " is not central");
    }
  }
  std::vector<Vector> sphi;
  for (const auto& p : rep.phi) sphi.push_back(s * p);
  for (std::size_t i = 0; i < simples.size(); ++i)
    for (std::size_t j = 0; j < simples.size(); ++j) {
      const Vector lhs = *s_inv * A.multiply(sphi[i], sphi[j]);
      Vector rhs = A.zero();
      for (std::size_t l = 0; l < simples.size(); ++l)
        if (fusion(i, j, l) != 0) rhs += rep.phi[l] * FieldElement::from_int(h.field(), fusion(i, j, l));
      const bool ok = lhs == rhs;
      rep.lines.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ") " + (ok ? "ok" : "MISMATCH"));
      if (!ok && rep.pass) {
        rep.pass = false;
        rep.witness = {i, j};
      }
    }
  return rep;
}

}  // namespace vl
