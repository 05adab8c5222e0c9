#include <doctest.h>

#include "support.hpp"
#include "vl/catalog.hpp"
#include "vl/error.hpp"
#include "vl/frobenius.hpp"

using namespace vl;
using vl::test::num;
using vl::test::vec;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

FrobeniusAlgebra frob(const std::string& name) {
  const auto e = catalog_algebra(name);
  return FrobeniusAlgebra(e.algebra, *e.form);
}

// 3-tensor coordinates, index (j*n + k)*n + l
using Tensor3 = std::vector<FieldElement>;

Tensor3 zeros3(const FieldSpec& f, Index n) { return Tensor3(static_cast<std::size_t>(n * n * n), FieldElement::zero(f)); }

Tensor3 delta_then_left(const FrobeniusAlgebra& F, const Vector& a) {
  const Index n = F.alg().dim();
  Tensor3 t = zeros3(F.alg().field(), n);
  for (const auto& [l, r] : frobenius_coproduct(F, a).terms) {
    const Matrix inner = frobenius_coproduct(F, l).coefficients(F.alg().field(), n);
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        for (Index m = 0; m < n; ++m) t[static_cast<std::size_t>((j * n + k) * n + m)] += inner(j, k) * r(m);
  }
  return t;
}

Tensor3 delta_then_right(const FrobeniusAlgebra& F, const Vector& a) {
  const Index n = F.alg().dim();
  Tensor3 t = zeros3(F.alg().field(), n);
  for (const auto& [l, r] : frobenius_coproduct(F, a).terms) {
    const Matrix inner = frobenius_coproduct(F, r).coefficients(F.alg().field(), n);
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        for (Index m = 0; m < n; ++m) t[static_cast<std::size_t>((j * n + k) * n + m)] += l(j) * inner(k, m);
  }
  return t;
}

std::vector<std::string> small_catalog() {
  std::vector<std::string> out;
  for (const auto& n : catalog_frobenius_names())
    if (n != "d-s3-char0") out.push_back(n);
  return out;
}
}  // namespace

TEST_CASE("dual bases") {
  const auto dual = frob("q-dual-numbers");
  const auto [e, f] = dual_bases(dual);
  CHECK(e == identity_matrix(Q, 2));
  CHECK(f.col(0) == vec(Q, {"0", "1"}));
  CHECK(f.col(1) == vec(Q, {"1", "0"}));

  // group algebra: dual of h is h^-1
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  const auto qs3 = frob("q-group-s3");
  for (int h = 0; h < 6; ++h) CHECK(qs3.duals().col(h) == unit_vector(Q, 6, s3.inv(h)));

  const auto fun = frob("f2-functions-z2");
  CHECK(fun.gram() == identity_matrix(F2, 2));
  CHECK(fun.duals() == identity_matrix(F2, 2));

  // the defining property on the whole catalog
  for (const auto& name : small_catalog()) {
    const auto F = frob(name);
    CHECK(Matrix(F.gram() * F.duals()) == identity_matrix(F.alg().field(), F.alg().dim()));
  }
}

TEST_CASE("frobenius coproduct") {
  const auto dual = frob("q-dual-numbers");
  const Vector one = vec(Q, {"1", "0"}), x = vec(Q, {"0", "1"});
  CHECK(frobenius_coproduct(dual, one).coefficients(Q, 2) == vl::test::mat(Q, {{"0", "1"}, {"1", "0"}}));
  CHECK(frobenius_coproduct(dual, x).coefficients(Q, 2) == vl::test::mat(Q, {{"0", "0"}, {"0", "1"}}));
  const auto pt = frob("q-one");
  CHECK(frobenius_coproduct(pt, vec(Q, {"1"})).coefficients(Q, 1) == vl::test::mat(Q, {{"1"}}));
  // canonical form: distinct basis vectors on the left
  const auto t = frobenius_coproduct(dual, one);
  REQUIRE(t.terms.size() == 2);
  CHECK(t.terms[0].first != t.terms[1].first);
}

TEST_CASE("star product examples") {
  const auto dual = frob("q-dual-numbers");
  const Vector one = vec(Q, {"1", "0"}), x = vec(Q, {"0", "1"});
  CHECK(star(dual, one, one) == vec(Q, {"0", "2"}));
  CHECK(is_zero_matrix(star(dual, one, x)));
  CHECK(is_zero_matrix(star(dual, x, x)));

  const auto qs3 = frob("q-group-s3");
  CHECK(star(qs3, qs3.alg().unit(), qs3.alg().unit()) == Vector(qs3.alg().unit() * FieldElement::from_int(Q, 6)));
  const auto f2z2 = frob("f2-group-z2");
  CHECK(is_zero_matrix(star(f2z2, f2z2.alg().unit(), f2z2.alg().unit())));
}

TEST_CASE("handle traces and modified dimensions") {
  const auto dual = frob("q-dual-numbers");
  CHECK(handle_trace(dual, dual.alg().unit(), dual.alg().unit()) == num(Q, "2"));
  const auto f2z2 = frob("f2-group-z2");
  CHECK(handle_trace(f2z2, f2z2.alg().unit(), f2z2.alg().unit()).is_zero());
  const auto dz2 = frob("d-z2-char2");
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const Vector d0 = unit_vector(F2, 4, double_index(z2, 0, 0)), d1 = unit_vector(F2, 4, double_index(z2, 1, 0));
  CHECK(handle_trace(dz2, d0, d1).is_zero());
  CHECK_THROWS_AS(handle_trace(dual, vec(Q, {"0", "1"}), dual.alg().unit()), InvalidStructure);

  CHECK(modified_dimension(dual, dual.alg().unit()).is_zero());
  CHECK(modified_dimension(dz2, d0).is_one());
  CHECK(modified_dimension(frob("q-group-z2"), vec(Q, {"1/2", "1/2"})) == num(Q, "1/2"));
}

TEST_CASE("block diagonality certificates") {
  const auto c1 = certify_block_diagonal(frob("f2-dual-numbers"));
  CHECK(c1.pass);
  CHECK(c1.block_count == 1);
  const auto c2 = certify_block_diagonal(frob("d-z2-char2"));
  CHECK(c2.pass);
  CHECK(c2.block_count == 2);
  const auto c3 = certify_block_diagonal(frob("q-group-z2"));
  CHECK(c3.pass);
  CHECK(c3.block_count == 2);
  CHECK(c3.pairs_checked == 4);

  // M2(Q) is one block; splitting its diagonal idempotents apart must fail
  const auto m2 = frob("m2-q");
  const std::vector<Vector> diag = {unit_vector(Q, 4, 0), unit_vector(Q, 4, 3)};
  BlockPartition split;
  split.classes = {{0}, {1}};
  CHECK_FALSE(certify_block_diagonal(m2, diag, split).pass);
}

TEST_CASE("frobenius structure properties on the catalog") {
  std::mt19937 rng(11);
  for (const auto& name : small_catalog()) {
    CAPTURE(name);
    const auto F = frob(name);
    const auto& A = F.alg();
    const FieldSpec f = A.field();
    const Index n = A.dim();
    const Matrix C = canonical_element(F);
    const Matrix comm = hh0(A).commutators;
    for (Index i = 0; i < n; ++i) {
      const Vector a = A.basis(i);
      // coassociativity and counit
      CHECK(delta_then_left(F, a) == delta_then_right(F, a));
      Vector left = A.zero(), right = A.zero();
      for (const auto& [l, r] : frobenius_coproduct(F, a).terms) {
        left += F.lambda(l) * r;
        right += F.lambda(r) * l;
      }
      CHECK(left == a);
      CHECK(right == a);
      // Casimir: (a (x) 1) C = C (1 (x) a)
      Matrix lhs = zero_matrix(f, n, n), rhs = zero_matrix(f, n, n);
      for (Index j = 0; j < n; ++j) {
        lhs += A.multiply(a, A.basis(j)) * C.row(j);
        rhs += A.basis(j) * A.multiply(Vector(C.row(j).transpose()), a).transpose();
      }
      CHECK(lhs == rhs);
    }
    // star is commutative and associative modulo [A,A]
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        const Vector ij = star(F, A.basis(i), A.basis(j));
        CHECK(in_span(comm, Vector(ij - star(F, A.basis(j), A.basis(i)))));
        if (n <= 9)
          for (Index k = 0; k < n; ++k)
            CHECK(in_span(comm, Vector(star(F, ij, A.basis(k)) - star(F, A.basis(i), star(F, A.basis(j), A.basis(k))))));
      }
    // handle traces recover dimensions of corners, for every rescaling
    const auto ids = primitive_idempotents(A);
    std::vector<FrobeniusAlgebra> scaled{F};
    for (int s = 0; s < 3; ++s) {
      FieldElement c = vl::test::random_element(f, rng);
      if (c.is_zero()) c = FieldElement::from_int(f, 1 + s);
      if (c.is_zero()) c = FieldElement::one(f);
      scaled.push_back(F.rescaled(c));
    }
    for (const auto& G : scaled) {
      for (const auto& p : ids)
        for (const auto& r : ids)
          CHECK(handle_trace(G, p, r) == FieldElement::from_int(f, corner_dimension(A, p, r)));
      CHECK(certify_block_diagonal(G).pass);
    }
  }
}

TEST_CASE("invalid forms are rejected") {
  const auto m2 = catalog_algebra("m2-q").algebra;
  // lambda(E_01) = 1 breaks symmetry
  CHECK_THROWS_AS(FrobeniusAlgebra(m2, vec(Q, {"1", "1", "0", "1"})), InvalidStructure);
  const auto dual = catalog_algebra("q-dual-numbers").algebra;
  CHECK_THROWS_AS(FrobeniusAlgebra(dual, vec(Q, {"1", "0"})), InvalidStructure);
  CHECK_THROWS_AS(FrobeniusAlgebra(dual, vec(Q, {"1"})), DimensionMismatch);
  // F2[Z2] with the trace of the regular representation is degenerate
  const auto f2z2 = catalog_algebra("f2-group-z2").algebra;
  CHECK_THROWS_AS(FrobeniusAlgebra(f2z2, vec(F2, {"0", "0"})), InvalidStructure);
  CHECK_THROWS_AS(frob("q-dual-numbers").rescaled(FieldElement::zero(Q)), InvalidStructure);
}
