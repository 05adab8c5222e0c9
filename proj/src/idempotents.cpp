#include <algorithm>

#include "vl/algebra.hpp"
#include "vl/error.hpp"
#include "vl/polynomial.hpp"

namespace vl {

namespace {

// p(x) in the corner algebra whose unit is e.
Vector evaluate(const StructureAlgebra& a, const Polynomial& p, const Vector& x, const Vector& e) {
  Vector acc = a.zero();
  for (int k = p.degree(); k >= 0; --k) {
    acc = a.multiply(acc, x);
    if (!p.coefficient(k).is_zero()) acc += p.coefficient(k) * e;
  }
  return acc;
}

// Minimal polynomial of x inside the corner algebra with unit e.
Polynomial minimal_polynomial(const StructureAlgebra& a, const Vector& x, const Vector& e) {
  const FieldSpec& f = a.field();
  std::vector<Vector> powers{e};
  for (;;) {
    const Vector next = a.multiply(powers.back(), x);
    Matrix span(a.dim(), static_cast<Index>(powers.size()));
    for (std::size_t k = 0; k < powers.size(); ++k) span.col(static_cast<Index>(k)) = powers[k];
    if (auto c = solve(span, next)) {
      std::vector<FieldElement> coeffs;
      for (Index k = 0; k < c->size(); ++k) coeffs.push_back(-(*c)(k));
      coeffs.push_back(FieldElement::one(f));
      return Polynomial(f, coeffs);
    }
    powers.push_back(next);
  }
}

// Splits e along the generalized eigenspaces of x (x in eAe). Returns the
// orthogonal pieces, or a single element if x does not split e.
std::vector<Vector> split_by(const StructureAlgebra& a, const Vector& x, const Vector& e) {
  const FieldSpec& f = a.field();
  const Polynomial m = minimal_polynomial(a, x, e);
  if (m.degree() < 2) return {e};
  const RootSet rs = roots_in_field(m);
  std::vector<Polynomial> factors;
  Polynomial rest = m;
  for (const auto& r : rs.roots) {
    Polynomial q = Polynomial::constant(f, FieldElement::one(f));
    for (int k = 0; k < r.multiplicity; ++k) q = q * Polynomial::linear(f, r.value);
    rest = divmod(rest, q).first;
    factors.push_back(q);
  }
  if (rest.degree() > 0) factors.push_back(rest);
  if (factors.size() < 2) return {e};
  std::vector<Vector> pieces;
  for (const auto& q : factors) {
    const Polynomial cofactor = divmod(m, q).first;
    const ExtendedGcd g = extended_gcd(cofactor, q);
    const Polynomial u = divmod(g.s * cofactor, m).second;
    pieces.push_back(evaluate(a, u, x, e));
  }
  return pieces;
}

bool is_primitive(const StructureAlgebra& a, const Vector& e, const Matrix& rad) {
  const Index full = corner_dimension(a, e, e);
  Matrix ej(a.dim(), rad.cols());
  for (Index c = 0; c < rad.cols(); ++c) ej.col(c) = a.multiply(a.multiply(e, rad.col(c)), e);
  const Index small = rad.cols() == 0 ? 0 : rank(ej);
  return full - small == 1;
}

std::vector<Vector> split_generic(const StructureAlgebra& a) {
  const Matrix rad = radical(a);
  const Index n = a.dim();
  std::vector<Vector> todo{a.unit()}, done;
  while (!todo.empty()) {
    Vector e = todo.back();
    todo.pop_back();
    if (is_primitive(a, e, rad)) {
      done.push_back(e);
      continue;
    }
    std::vector<Vector> pieces;
    auto attempt = [&](const Vector& b) {
      const Vector x = a.multiply(a.multiply(e, b), e);
      pieces = split_by(a, x, e);
      return pieces.size() > 1;
    };
    bool ok = false;
    for (Index b = 0; b < n && !ok; ++b) ok = attempt(a.basis(b));
    for (Index b1 = 0; b1 < n && !ok; ++b1)
      for (Index b2 = b1 + 1; b2 < n && !ok; ++b2) ok = attempt(a.basis(b1) + a.basis(b2));
    for (Index b1 = 0; b1 < n && !ok; ++b1)
      for (Index b2 = 0; b2 < n && !ok; ++b2) ok = attempt(a.multiply(a.basis(b1), a.basis(b2)));
    if (!ok)
      throw NonSplit("cannot split an idempotent of " + (a.name().empty() ? std::string("the algebra") : a.name()) +
                     " over " + a.field().to_string() + "; the semisimple quotient may not be split");
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) todo.push_back(*it);
  }
  return done;
}

// Commutative algebra over F_p: the image of x -> x^(p^m) is the split
// semisimple part (if split); separate it with 1 - (s - lambda)^(p-1).
std::vector<Vector> split_frobenius(const StructureAlgebra& a) {
  const FieldSpec& f = a.field();
  const std::int64_t p = f.characteristic();
  const Index n = a.dim();
  Matrix frob(n, n);
  for (Index i = 0; i < n; ++i) frob.col(i) = a.power(a.basis(i), p);
  Matrix iter = frob;
  std::int64_t pm = p;
  while (pm < n) {
    iter = frob * iter;
    pm *= p;
  }
  const Matrix s = column_space(iter);
  for (Index c = 0; c < s.cols(); ++c)
    if (a.power(s.col(c), p) != Vector(s.col(c)))
      throw NonSplit("semisimple quotient of " + (a.name().empty() ? std::string("the algebra") : a.name()) +
                     " is not split over " + f.to_string());
  std::vector<Vector> idems{a.unit()};
  for (Index c = 0; c < s.cols(); ++c) {
    std::vector<Vector> next;
    for (const auto& e : idems) {
      const Vector es = a.multiply(e, s.col(c));
      for (std::int64_t lam = 0; lam < p; ++lam) {
        const Vector shifted = es - FieldElement::from_int(f, lam) * e;
        const Vector u = e - a.multiply(e, a.power(shifted, p - 1));
        if (!is_zero_matrix(u)) next.push_back(u);
      }
    }
    idems = std::move(next);
  }
  if (static_cast<Index>(idems.size()) != s.cols())
    throw NonSplit("Frobenius splitting of " + a.name() + " produced an inconsistent idempotent count");
  return idems;
}

Index leading_index(const Vector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return i;
  return v.size();
}

}  // namespace

std::vector<Vector> primitive_idempotents(const StructureAlgebra& a) {
  std::vector<Vector> out;
  if (a.field().characteristic() != 0) {
    if (!a.is_commutative())
      throw Unsupported("primitive idempotents of a noncommutative algebra over " + a.field().to_string() +
                        " are not supported");
    out = split_frobenius(a);
  } else {
    out = split_generic(a);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Vector& x, const Vector& y) { return leading_index(x) < leading_index(y); });
  return out;
}

std::vector<std::size_t> isomorphism_class_representatives(const StructureAlgebra& a,
                                                           const std::vector<Vector>& idempotents,
                                                           const Matrix& rad) {
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < idempotents.size(); ++i) {
    bool seen = false;
    for (std::size_t r : reps) {
      // A e_i and A e_r are isomorphic iff e_r A e_i is not inside the radical.
      const Matrix full = corner(a, idempotents[r], idempotents[i]);
      if (full.cols() == 0) continue;
      Matrix inrad(a.dim(), rad.cols());
      for (Index c = 0; c < rad.cols(); ++c)
        inrad.col(c) = a.multiply(a.multiply(idempotents[r], rad.col(c)), idempotents[i]);
      const Index small = rad.cols() == 0 ? 0 : rank(inrad);
      if (full.cols() > small) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(i);
  }
  return reps;
}

std::vector<Vector> basic_idempotents(const StructureAlgebra& a) {
  const auto all = primitive_idempotents(a);
  const Matrix rad = radical(a);
  std::vector<Vector> out;
  for (std::size_t r : isomorphism_class_representatives(a, all, rad)) out.push_back(all[r]);
  return out;
}

}  // namespace vl
