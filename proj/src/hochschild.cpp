#include "vl/hochschild.hpp"

#include <algorithm>
#include <random>

#include "vl/error.hpp"

namespace vl {

namespace {

Index ipow(Index n, int e) {
  Index r = 1;
  for (int k = 0; k < e; ++k) r *= n;
  return r;
}

void check_bound(int degree, int bound, const char* op) {
  if (degree > bound)
    throw DegreeOverflow(std::string(op) + " would produce degree " + std::to_string(degree) +
                         ", above the degree bound " + std::to_string(bound));
  if (degree < 0) throw DegreeOverflow(std::string(op) + " would produce a negative degree");
}

// Table sizes beyond this are refused rather than allocated.
constexpr Index kMaxEntries = 2'000'000;
// Assembled differentials get eliminated over exact scalars; keep them small.
constexpr Index kMaxMatrixEntries = 300'000;

void check_same_algebra(const Cochain& a, const Cochain& b) {
  if (a.algebra() != b.algebra()) throw DimensionMismatch("cochains over different algebras");
}

// Left and right multiplication by each basis vector.
struct MultTables {
  std::vector<Matrix> left, right;
  explicit MultTables(const StructureAlgebra& a) {
    for (Index i = 0; i < a.dim(); ++i) {
      left.push_back(a.left_multiplication(a.basis(i)));
      right.push_back(a.right_multiplication(a.basis(i)));
    }
  }
};

Matrix differential_table(const Cochain& c) {
  const auto& A = *c.algebra();
  const Index n = A.dim();
  const int p = c.degree();
  const Index rows = ipow(n, p + 1);
  const MultTables mt(A);
  const FieldSpec& f = A.field();
  Matrix out = zero_matrix(f, n, rows);
  const Matrix& t = c.table();
  const Index np = ipow(n, p);
  for (Index T = 0; T < rows; ++T) {
    Vector v = mt.left[static_cast<std::size_t>(T / np)] * t.col(T % np);
    for (int i = 1; i <= p; ++i) {
      // merge slots i and i+1 (1-based)
      const Index tail = ipow(n, p - i);
      const Index prefix = T / ipow(n, p + 2 - i);
      const Index ai = (T / ipow(n, p + 1 - i)) % n;
      const Index aj = (T / tail) % n;
      const Index suffix = T % tail;
      const bool neg = i % 2 == 1;
      for (const auto& [k, coef] : A.product(ai, aj)) {
        const Index idx = (prefix * n + k) * tail + suffix;
        if (neg)
          v -= coef * t.col(idx);
        else
          v += coef * t.col(idx);
      }
    }
    const Vector last = mt.right[static_cast<std::size_t>(T % n)] * t.col(T / n);
    if ((p + 1) % 2 == 1)
      v -= last;
    else
      v += last;
    out.col(T) = v;
  }
  return out;
}

}  // namespace

Cochain::Cochain(AlgebraPtr algebra, int degree, Matrix table)
    : algebra_(std::move(algebra)), degree_(degree), table_(std::move(table)) {
  if (!algebra_) throw std::invalid_argument("cochain over a null algebra");
  if (degree_ < 0) throw DegreeOverflow("negative cochain degree");
  const Index n = algebra_->dim();
  if (table_.rows() != n || table_.cols() != ipow(n, degree_))
    throw DimensionMismatch("cochain table of degree " + std::to_string(degree_) + " must be " + std::to_string(n) +
                            " x " + std::to_string(ipow(n, degree_)));
  for (Index i = 0; i < table_.rows(); ++i)
    for (Index j = 0; j < table_.cols(); ++j) table_(i, j) = table_(i, j).in(algebra_->field());
}

Cochain Cochain::zero(const AlgebraPtr& a, int degree) {
  if (ipow(a->dim(), degree + 1) > kMaxEntries) throw DegreeOverflow("cochain table too large");
  return Cochain(a, degree, zero_matrix(a->field(), a->dim(), ipow(a->dim(), degree)));
}

Cochain Cochain::element(const AlgebraPtr& a, const Vector& z) { return Cochain(a, 0, Matrix(z)); }

Cochain Cochain::identity(const AlgebraPtr& a) { return Cochain(a, 1, identity_matrix(a->field(), a->dim())); }

Cochain Cochain::linear_map(const AlgebraPtr& a, const Matrix& m) { return Cochain(a, 1, m); }

Cochain Cochain::from_function(const AlgebraPtr& a, int degree,
                               const std::function<Vector(const std::vector<Index>&)>& fn) {
  Cochain c = zero(a, degree);
  const Index n = a->dim();
  std::vector<Index> tuple(static_cast<std::size_t>(degree));
  for (Index t = 0; t < c.table_.cols(); ++t) {
    Index r = t;
    for (int j = degree - 1; j >= 0; --j) {
      tuple[static_cast<std::size_t>(j)] = r % n;
      r /= n;
    }
    c.table_.col(t) = fn(tuple);
  }
  return Cochain(a, degree, std::move(c.table_));
}

Vector Cochain::at(const std::vector<Index>& tuple) const {
  if (static_cast<int>(tuple.size()) != degree_) throw DimensionMismatch("tuple length differs from cochain degree");
  Index t = 0;
  for (Index i : tuple) t = t * algebra_->dim() + i;
  return table_.col(t);
}

Vector Cochain::coordinates() const { return table_.reshaped(); }

Cochain Cochain::from_coordinates(const AlgebraPtr& a, int degree, const Vector& v) {
  const Index n = a->dim();
  if (v.size() != ipow(n, degree + 1)) throw DimensionMismatch("cochain coordinate vector has the wrong length");
  return Cochain(a, degree, v.reshaped(n, ipow(n, degree)));
}

Cochain Cochain::operator+(const Cochain& o) const {
  check_same_algebra(*this, o);
  if (degree_ != o.degree_) throw DimensionMismatch("adding cochains of different degrees");
  return Cochain(algebra_, degree_, table_ + o.table_);
}

Cochain Cochain::operator-(const Cochain& o) const {
  check_same_algebra(*this, o);
  if (degree_ != o.degree_) throw DimensionMismatch("subtracting cochains of different degrees");
  return Cochain(algebra_, degree_, table_ - o.table_);
}

Cochain Cochain::operator-() const { return Cochain(algebra_, degree_, -table_); }

Cochain Cochain::operator*(const FieldElement& c) const { return Cochain(algebra_, degree_, table_ * c); }

bool Cochain::operator==(const Cochain& o) const {
  return algebra_ == o.algebra_ && degree_ == o.degree_ && table_ == o.table_;
}

Cochain cochain_differential(const Cochain& a, int bound) {
  check_bound(a.degree() + 1, bound, "differential");
  return Cochain(a.algebra(), a.degree() + 1, differential_table(a));
}

Cochain cup(const Cochain& a, const Cochain& b, int bound) {
  check_same_algebra(a, b);
  const int p = a.degree(), q = b.degree();
  check_bound(p + q, bound, "cup product");
  const auto& A = *a.algebra();
  const Index n = A.dim(), nq = ipow(n, q);
  Matrix out(n, ipow(n, p + q));
  for (Index T = 0; T < out.cols(); ++T) out.col(T) = A.multiply(a.table().col(T / nq), b.table().col(T % nq));
  return Cochain(a.algebra(), p + q, std::move(out));
}

Cochain circle_i(const Cochain& a, const Cochain& b, int i, int bound) {
  check_same_algebra(a, b);
  const int p = a.degree(), q = b.degree();
  if (i < 0 || i >= p)
    throw std::out_of_range("slot " + std::to_string(i) + " out of range for a cochain of degree " + std::to_string(p));
  check_bound(p + q - 1, bound, "partial composition");
  const auto& A = *a.algebra();
  const Index n = A.dim();
  const Index tail = ipow(n, p - 1 - i), nq = ipow(n, q);
  Matrix out = zero_matrix(A.field(), n, ipow(n, p + q - 1));
  for (Index T = 0; T < out.cols(); ++T) {
    const Index suffix = T % tail;
    const Index mid = (T / tail) % nq;
    const Index prefix = T / (tail * nq);
    const auto bv = b.table().col(mid);
    Vector v = zero_vector(A.field(), n);
    for (Index k = 0; k < n; ++k)
      if (!bv(k).is_zero()) v += bv(k) * a.table().col((prefix * n + k) * tail + suffix);
    out.col(T) = v;
  }
  return Cochain(a.algebra(), p + q - 1, std::move(out));
}

Cochain circle(const Cochain& a, const Cochain& b, int bound) {
  const int p = a.degree(), q = b.degree();
  check_bound(p + q - 1, bound, "circle product");
  if (p == 0) return Cochain::zero(a.algebra(), q - 1);
  Cochain out = Cochain::zero(a.algebra(), p + q - 1);
  for (int i = 0; i < p; ++i) {
    const Cochain c = circle_i(a, b, i, bound);
    out = ((q - 1) * i) % 2 == 0 ? out + c : out - c;
  }
  return out;
}

Cochain gerstenhaber_bracket(const Cochain& a, const Cochain& b, int bound) {
  const int p = a.degree(), q = b.degree();
  check_bound(p + q - 1, bound, "bracket");
  const Cochain ab = circle(a, b, bound);
  const Cochain ba = circle(b, a, bound);
  return ((p - 1) * (q - 1)) % 2 == 0 ? ba - ab : ba + ab;
}

Cochain homotopy_h(const Cochain& a, const Cochain& b, int bound) {
  const int p = a.degree(), q = b.degree();
  check_bound(p + q - 1, bound, "homotopy");
  if (p == 0) return Cochain::zero(a.algebra(), q - 1);
  Cochain out = Cochain::zero(a.algebra(), p + q - 1);
  for (int i = 0; i < p; ++i) {
    const Cochain c = circle_i(a, b, i, bound);
    out = (i + (p - 1 - i) * q) % 2 == 0 ? out + c : out - c;
  }
  return out;
}

Chain::Chain(AlgebraPtr algebra, int degree, Vector coords)
    : algebra_(std::move(algebra)), degree_(degree), coords_(std::move(coords)) {
  if (!algebra_) throw std::invalid_argument("chain over a null algebra");
  if (degree_ < 0) throw DegreeOverflow("negative chain degree");
  if (coords_.size() != ipow(algebra_->dim(), degree_ + 1)) throw DimensionMismatch("chain coordinates have the wrong length");
  for (Index i = 0; i < coords_.size(); ++i) coords_(i) = coords_(i).in(algebra_->field());
}

Chain chain_boundary(const Chain& c) {
  const auto& A = *c.algebra();
  const int p = c.degree();
  if (p == 0) throw DegreeOverflow("degree-0 chains have no boundary");
  const Index n = A.dim();
  Vector out = zero_vector(A.field(), ipow(n, p));
  const Vector& x = c.coordinates();
  for (Index T = 0; T < x.size(); ++T) {
    if (x(T).is_zero()) continue;
    // digits a_0..a_p
    std::vector<Index> d(static_cast<std::size_t>(p + 1));
    Index r = T;
    for (int j = p; j >= 0; --j) {
      d[static_cast<std::size_t>(j)] = r % n;
      r /= n;
    }
    auto index_of = [&](const std::vector<Index>& digits) {
      Index t = 0;
      for (Index v : digits) t = t * n + v;
      return t;
    };
    for (int i = 0; i < p; ++i) {
      for (const auto& [k, coef] : A.product(d[static_cast<std::size_t>(i)], d[static_cast<std::size_t>(i + 1)])) {
        std::vector<Index> e;
        for (int j = 0; j <= p; ++j) {
          if (j == i) e.push_back(k);
          else if (j != i + 1) e.push_back(d[static_cast<std::size_t>(j)]);
        }
        if (i % 2 == 0)
          out(index_of(e)) += coef * x(T);
        else
          out(index_of(e)) -= coef * x(T);
      }
    }
    for (const auto& [k, coef] : A.product(d[static_cast<std::size_t>(p)], d[0])) {
      std::vector<Index> e{k};
      for (int j = 1; j < p; ++j) e.push_back(d[static_cast<std::size_t>(j)]);
      if (p % 2 == 0)
        out(index_of(e)) += coef * x(T);
      else
        out(index_of(e)) -= coef * x(T);
    }
  }
  return Chain(c.algebra(), p - 1, std::move(out));
}

Matrix cochain_differential_matrix(const AlgebraPtr& a, int p, int bound) {
  check_bound(p + 1, bound, "differential");
  const Index n = a->dim();
  const Index cols = ipow(n, p + 1), rows = ipow(n, p + 2);
  if (rows * cols > kMaxMatrixEntries)
    throw DegreeOverflow("differential matrix in degree " + std::to_string(p) + " has " + std::to_string(rows) + " x " +
                         std::to_string(cols) + " entries; too large to assemble");
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    const Cochain e = Cochain::from_coordinates(a, p, unit_vector(a->field(), cols, j));
    m.col(j) = cochain_differential(e, bound).coordinates();
  }
  return m;
}

Matrix chain_boundary_matrix(const AlgebraPtr& a, int p) {
  const Index n = a->dim();
  const Index cols = ipow(n, p + 1), rows = p == 0 ? 0 : ipow(n, p);
  if (rows * cols > kMaxMatrixEntries)
    throw DegreeOverflow("boundary matrix in degree " + std::to_string(p) + " is too large to assemble");
  Matrix m(rows, cols);
  if (p == 0) return m;
  for (Index j = 0; j < cols; ++j) m.col(j) = chain_boundary(Chain(a, p, unit_vector(a->field(), cols, j))).coordinates();
  return m;
}

bool CohomologyGroup::is_cycle(const Vector& v) const { return in_span(cycles, v); }

bool CohomologyGroup::is_boundary(const Vector& v) const { return in_span(boundaries, v); }

namespace {
CohomologyGroup assemble(int p, const FieldSpec& f, Index ambient, const Matrix& outgoing, const Matrix& incoming) {
  CohomologyGroup g;
  g.degree = p;
  g.cycles = outgoing.rows() == 0 ? identity_matrix(f, ambient) : kernel_basis(outgoing);
  g.boundaries = incoming.cols() == 0 ? Matrix(ambient, 0) : column_space(incoming);
  // complete the boundaries to a basis of the cycles
  Matrix current = g.boundaries;
  Index r = current.cols();
  std::vector<Index> picked;
  for (Index c = 0; c < g.cycles.cols(); ++c) {
    Matrix trial(ambient, current.cols() + 1);
    trial << current, g.cycles.col(c);
    if (rank(trial) > r) {
      current = trial;
      ++r;
      picked.push_back(c);
    }
  }
  g.representatives = Matrix(ambient, static_cast<Index>(picked.size()));
  for (std::size_t k = 0; k < picked.size(); ++k) g.representatives.col(static_cast<Index>(k)) = g.cycles.col(picked[k]);
  g.dimension = g.representatives.cols();
  return g;
}
}  // namespace

CohomologyGroup cohomology(const AlgebraPtr& a, int p, int bound) {
  if (p < 0) throw DegreeOverflow("negative cohomological degree");
  const Index ambient = ipow(a->dim(), p + 1);
  const Matrix out = cochain_differential_matrix(a, p, bound);
  const Matrix in = p == 0 ? Matrix(ambient, 0) : cochain_differential_matrix(a, p - 1, bound);
  return assemble(p, a->field(), ambient, out, in);
}

CohomologyGroup homology(const AlgebraPtr& a, int p, int bound) {
  if (p < 0) throw DegreeOverflow("negative homological degree");
  check_bound(p + 1, bound, "homology");
  const Index ambient = ipow(a->dim(), p + 1);
  const Matrix out = chain_boundary_matrix(a, p);
  const Matrix in = chain_boundary_matrix(a, p + 1);
  return assemble(p, a->field(), ambient, out, in);
}

HomotopyReport homotopy_check(const AlgebraPtr& a, int max_degree, int samples, std::uint32_t seed) {
  const int bound = std::max(kDefaultDegreeBound, 2 * max_degree + 1);
  const FieldSpec& f = a->field();
  const Index n = a->dim();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(-3, 3);
  auto random = [&](int p) {
    Index cols = 1;
    for (int k = 0; k < p; ++k) cols *= n;
    Matrix m(n, cols);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = FieldElement::from_int(f, pick(rng));
    return Cochain(a, p, std::move(m));
  };
  auto sign = [&](int e) { return FieldElement::from_int(f, e % 2 == 0 ? 1 : -1); };

  HomotopyReport rep;
  for (int p = 0; p <= max_degree; ++p)
    for (int q = 0; q <= max_degree; ++q) {
      std::size_t bad_h = 0, bad_ledger = 0;
      for (int s = 0; s < samples; ++s) {
        const Cochain x = random(p), y = random(q);
        Cochain lhs = homotopy_h(cochain_differential(x, bound), y, bound) +
                      homotopy_h(x, cochain_differential(y, bound), bound) * sign(p);
        if (p + q > 0) lhs = lhs + cochain_differential(homotopy_h(x, y, bound), bound);
        if (lhs != cup(y, x, bound) * sign(p * q) - cup(x, y, bound)) ++bad_h;
        if (p >= 1) {
          Cochain sum = Cochain::zero(a, p + q - 1);
          for (int i = 0; i < p; ++i) sum = sum + circle_i(x, y, i, bound) * sign(i + (p - 1 - i) * q);
          if (sum != circle(x, y, bound) * sign(p * q + q)) ++bad_ledger;
        }
        ++rep.samples_checked;
      }
      std::string line = "p=" + std::to_string(p) + " q=" + std::to_string(q) + " samples=" + std::to_string(samples);
      if (bad_h || bad_ledger) {
        line += " FAIL homotopy:" + std::to_string(bad_h) + " ledger:" + std::to_string(bad_ledger);
        if (rep.pass) rep.witness = {p, q};
        rep.pass = false;
      } else {
        line += " ok";
      }
      rep.lines.push_back(line);
    }
  return rep;
}

}  // namespace vl
