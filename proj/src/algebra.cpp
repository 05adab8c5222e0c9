#include "vl/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "vl/error.hpp"

namespace vl {

namespace {

void accumulate(std::vector<FieldElement>& acc, const StructureAlgebra::SparseVector& v, const FieldElement& c) {
  for (const auto& [k, x] : v) acc[static_cast<std::size_t>(k)] += c * x;
}

// Sparse sum c * v into acc, dropping cancelled entries.
void accumulate(std::map<Index, FieldElement>& acc, const StructureAlgebra::SparseVector& v, const FieldElement& c) {
  for (const auto& [k, x] : v) {
    auto [it, fresh] = acc.try_emplace(k, c * x);
    if (!fresh) {
      it->second += c * x;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

std::string triple(Index i, Index j, Index k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

StructureAlgebra::StructureAlgebra(FieldSpec f, Index dim, const std::vector<StructureTerm>& terms,
                                   const Vector& unit, std::string name)
    : f_(f), n_(dim), name_(std::move(name)) {
  if (dim < 1) throw InvalidStructure("algebra dimension must be positive");
  if (unit.size() != dim) throw DimensionMismatch("unit vector has length " + std::to_string(unit.size()));
  table_.assign(static_cast<std::size_t>(dim * dim), {});
  std::map<Index, FieldElement> sparse;
  for (const auto& t : terms) {
    if (t.i < 0 || t.j < 0 || t.k < 0 || t.i >= dim || t.j >= dim || t.k >= dim)
      throw InvalidStructure("structure constant index out of range at " + triple(t.i, t.j, t.k));
    auto [it, fresh] = sparse.try_emplace((t.i * dim + t.j) * dim + t.k, t.value.in(f));
    if (!fresh) it->second += t.value.in(f);
  }
  for (const auto& [key, v] : sparse)
    if (!v.is_zero()) table_[static_cast<std::size_t>(key / dim)].emplace_back(key % dim, v);
  unit_ = unit;
  for (Index i = 0; i < dim; ++i) unit_(i) = unit_(i).in(f);

  for (Index i = 0; i < dim && commutative_; ++i)
    for (Index j = i + 1; j < dim && commutative_; ++j)
      if (product(i, j) != product(j, i)) commutative_ = false;

  // unit axiom
  for (Index i = 0; i < dim; ++i) {
    const Vector e = basis(i);
    if (multiply(unit_, e) != e || multiply(e, unit_) != e)
      throw InvalidStructure("unit axiom fails for basis element " + std::to_string(i));
  }
  // associativity
  std::map<Index, FieldElement> lhs, rhs;
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j)
      for (Index k = 0; k < dim; ++k) {
        lhs.clear();
        rhs.clear();
        for (const auto& [m, c] : product(i, j)) accumulate(lhs, product(m, k), c);
        for (const auto& [m, c] : product(j, k)) accumulate(rhs, product(i, m), c);
        if (lhs != rhs) throw InvalidStructure("associativity fails at basis triple " + triple(i, j, k));
      }
}

FieldElement StructureAlgebra::constant(Index i, Index j, Index k) const {
  for (const auto& [kk, v] : product(i, j))
    if (kk == k) return v;
  return FieldElement::zero(f_);
}

std::vector<StructureTerm> StructureAlgebra::terms() const {
  std::vector<StructureTerm> out;
  for (Index i = 0; i < n_; ++i)
    for (Index j = 0; j < n_; ++j)
      for (const auto& [k, v] : product(i, j)) out.push_back({i, j, k, v});
  return out;
}

Vector StructureAlgebra::multiply(const Vector& a, const Vector& b) const {
  std::vector<FieldElement> acc(static_cast<std::size_t>(n_), FieldElement::zero(f_));
  for (Index i = 0; i < n_; ++i) {
    if (a(i).is_zero()) continue;
    for (Index j = 0; j < n_; ++j) {
      if (b(j).is_zero()) continue;
      accumulate(acc, product(i, j), a(i) * b(j));
    }
  }
  Vector r(n_);
  for (Index k = 0; k < n_; ++k) r(k) = std::move(acc[static_cast<std::size_t>(k)]);
  return r;
}

Vector StructureAlgebra::commutator(const Vector& a, const Vector& b) const { return multiply(a, b) - multiply(b, a); }

Vector StructureAlgebra::power(const Vector& a, std::int64_t e) const {
  if (e < 0) throw std::invalid_argument("negative power in an algebra");
  Vector r = unit_, base = a;
  while (e > 0) {
    if (e & 1) r = multiply(r, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return r;
}

Matrix StructureAlgebra::left_multiplication(const Vector& a) const {
  Matrix m(n_, n_);
  for (Index k = 0; k < n_; ++k) m.col(k) = multiply(a, basis(k));
  return m;
}

Matrix StructureAlgebra::right_multiplication(const Vector& a) const {
  Matrix m(n_, n_);
  for (Index k = 0; k < n_; ++k) m.col(k) = multiply(basis(k), a);
  return m;
}

const std::vector<Index>& StructureAlgebra::generators() const {
  std::call_once(generators_once_, [this] {
    // Greedy: add basis elements not yet in the generated subalgebra.
    Matrix span = column_space(Matrix(unit_));
    std::vector<Index> gens;
    for (Index b = 0; b < n_ && span.cols() < n_; ++b) {
      if (in_span(span, basis(b))) continue;
      gens.push_back(b);
      Matrix current = span;
      for (;;) {
        Matrix grown(n_, current.cols() * (1 + static_cast<Index>(gens.size())));
        Index c = 0;
        for (Index v = 0; v < current.cols(); ++v) {
          grown.col(c++) = current.col(v);
          for (Index g : gens) grown.col(c++) = multiply(current.col(v), basis(g));
        }
        Matrix next = column_space(grown);
        if (next.cols() == current.cols()) break;
        current = next;
      }
      span = current;
    }
    generators_ = gens;
  });
  return generators_;
}

AlgebraPtr make_algebra(FieldSpec f, Index dim, const std::vector<StructureTerm>& terms, const Vector& unit,
                        std::string name) {
  return std::make_shared<const StructureAlgebra>(f, dim, terms, unit, std::move(name));
}

AlgebraPtr tensor_product(const StructureAlgebra& a, const StructureAlgebra& b, std::string name) {
  if (!(a.field() == b.field())) throw DimensionMismatch("tensor product of algebras over different fields");
  const Index n = a.dim() * b.dim();
  std::vector<StructureTerm> terms;
  for (Index i1 = 0; i1 < a.dim(); ++i1)
    for (Index j1 = 0; j1 < a.dim(); ++j1)
      for (const auto& [k1, x] : a.product(i1, j1))
        for (Index i2 = 0; i2 < b.dim(); ++i2)
          for (Index j2 = 0; j2 < b.dim(); ++j2)
            for (const auto& [k2, y] : b.product(i2, j2))
              terms.push_back({i1 * b.dim() + i2, j1 * b.dim() + j2, k1 * b.dim() + k2, x * y});
  Vector unit(n);
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j) unit(i * b.dim() + j) = a.unit()(i) * b.unit()(j);
  return make_algebra(a.field(), n, terms, unit, std::move(name));
}

Matrix center(const StructureAlgebra& a) {
  const auto& gens = a.generators();
  const Index n = a.dim();
  Matrix eqs = zero_matrix(a.field(), n * static_cast<Index>(std::max<std::size_t>(gens.size(), 1)), n);
  Index r = 0;
  for (Index g : gens) {
    const Vector eg = a.basis(g);
    eqs.block(r, 0, n, n) = a.right_multiplication(eg) - a.left_multiplication(eg);
    r += n;
  }
  return kernel_basis(eqs);
}

HH0 hh0(const StructureAlgebra& a) {
  const Index n = a.dim();
  std::vector<Vector> comms;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      Vector c = a.commutator(a.basis(i), a.basis(j));
      if (!is_zero_matrix(c)) comms.push_back(std::move(c));
    }
  Matrix span(n, static_cast<Index>(comms.size()));
  for (std::size_t k = 0; k < comms.size(); ++k) span.col(static_cast<Index>(k)) = comms[k];
  HH0 out;
  out.commutators = comms.empty() ? Matrix(n, 0) : column_space(span);
  out.quotient = quotient_representatives(a.field(), n, out.commutators);
  return out;
}

Matrix radical(const StructureAlgebra& a) {
  const Index n = a.dim();
  const FieldSpec& f = a.field();
  if (f.characteristic() == 0) {
    // kernel of (x, y) -> tr(L_{xy})
    std::vector<FieldElement> tr(static_cast<std::size_t>(n), FieldElement::zero(f));
    for (Index k = 0; k < n; ++k)
      for (Index j = 0; j < n; ++j) tr[static_cast<std::size_t>(k)] += a.constant(k, j, j);
    Matrix gram = zero_matrix(f, n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (const auto& [k, c] : a.product(i, j)) gram(i, j) += c * tr[static_cast<std::size_t>(k)];
    return kernel_basis(gram);
  }
  if (!a.is_commutative())
    throw Unsupported("radical of a noncommutative algebra over " + f.to_string() + " is not supported");
  // Over F_p and commutative, x -> x^p is linear; its high powers kill exactly the nilradical.
  const std::int64_t p = f.characteristic();
  Matrix frob(n, n);
  for (Index i = 0; i < n; ++i) frob.col(i) = a.power(a.basis(i), p);
  Matrix iter = frob;
  std::int64_t pm = p;
  while (pm < n) {
    iter = frob * iter;
    pm *= p;
  }
  return kernel_basis(iter);
}

Matrix corner(const StructureAlgebra& a, const Vector& e, const Vector& f) {
  const Index n = a.dim();
  Matrix vecs(n, n);
  for (Index b = 0; b < n; ++b) vecs.col(b) = a.multiply(a.multiply(e, a.basis(b)), f);
  return column_space(vecs);
}

Index corner_dimension(const StructureAlgebra& a, const Vector& e, const Vector& f) {
  return corner(a, e, f).cols();
}

IntMatrix cartan_matrix(const StructureAlgebra& a, const std::vector<Vector>& idempotents) {
  const Index m = static_cast<Index>(idempotents.size());
  IntMatrix c(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      c(i, j) = corner_dimension(a, idempotents[static_cast<std::size_t>(i)], idempotents[static_cast<std::size_t>(j)]);
  return c;
}

IntMatrix cartan_matrix(const StructureAlgebra& a) { return cartan_matrix(a, basic_idempotents(a)); }

Index BlockPartition::block_of(Index i) const {
  for (std::size_t b = 0; b < classes.size(); ++b)
    for (Index x : classes[b])
      if (x == i) return static_cast<Index>(b);
  throw std::out_of_range("index not in any block");
}

BlockPartition blocks(const IntMatrix& cartan) {
  const Index m = cartan.rows();
  std::vector<Index> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Index x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      if (cartan(i, j) != 0) {
        const Index ri = find(i), rj = find(j);
        if (ri != rj) parent[static_cast<std::size_t>(std::max(ri, rj))] = std::min(ri, rj);
      }
  BlockPartition out;
  std::vector<Index> slot(static_cast<std::size_t>(m), -1);
  for (Index i = 0; i < m; ++i) {
    const Index r = find(i);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<Index>(out.classes.size());
      out.classes.emplace_back();
    }
    out.classes[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(i);
  }
  return out;
}

bool is_idempotent(const StructureAlgebra& a, const Vector& e) { return a.multiply(e, e) == e; }

}  // namespace vl
