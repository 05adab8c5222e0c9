#include <doctest.h>

#include "support.hpp"
#include "vl/catalog.hpp"
#include "vl/error.hpp"
#include "vl/hochschild.hpp"

using namespace vl;
using vl::test::mat;
using vl::test::num;
using vl::test::vec;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F3 = FieldSpec::prime(3);

Cochain random_cochain(const AlgebraPtr& a, int p, std::mt19937& rng) {
  return Cochain(a, p, vl::test::random_matrix(a->field(), a->dim(), vl::test::power_of(a->dim(), p), rng));
}

// d/dt and t d/dt on k[t]/(t^m), as matrices (column j = image of t^j)
Matrix d_dt(const FieldSpec& f, int m) {
  Matrix d = zero_matrix(f, m, m);
  for (int j = 1; j < m; ++j) d(j - 1, j) = FieldElement::from_int(f, j);
  return d;
}
Matrix t_d_dt(const FieldSpec& f, int m) {
  Matrix d = zero_matrix(f, m, m);
  for (int j = 1; j < m; ++j) d(j, j) = FieldElement::from_int(f, j);
  return d;
}

FieldElement sign(int e) { return FieldElement(e % 2 == 0 ? 1 : -1); }
}  // namespace

TEST_CASE("cochain differential") {
  // degree 0: dz = 0 exactly for central z
  auto qs3 = group_algebra(FiniteGroup::symmetric3(), Q);
  const Matrix z = center(*qs3);
  for (Index c = 0; c < z.cols(); ++c) CHECK(cochain_differential(Cochain::element(qs3, z.col(c))).is_zero());
  CHECK_FALSE(cochain_differential(Cochain::element(qs3, qs3->basis(1))).is_zero());

  // Q[x]/(x^2), alpha(1) = 0, alpha(x) = 1: d alpha(x,x) = 2x
  auto dual = truncated_polynomial_algebra(Q, 2);
  const Cochain alpha = Cochain::linear_map(dual, mat(Q, {{"0", "1"}, {"0", "0"}}));
  CHECK(cochain_differential(alpha).at({1, 1}) == vec(Q, {"0", "2"}));

  // d^2 = 0 on random tables
  std::mt19937 rng(3);
  auto t3 = truncated_polynomial_algebra(F3, 3);
  for (auto a : {t3, dual, qs3, group_algebra(FiniteGroup::cyclic(2), FieldSpec::prime(2))})
    for (int p = 0; p <= (a->dim() > 4 ? 1 : 2); ++p)
      for (int trial = 0; trial < 5; ++trial)
        CHECK(cochain_differential(cochain_differential(random_cochain(a, p, rng))).is_zero());
  CHECK_THROWS_AS(cochain_differential(random_cochain(t3, 4, rng)), DegreeOverflow);
  CHECK_NOTHROW(cochain_differential(random_cochain(t3, 4, rng), 5));
}

TEST_CASE("cup product") {
  auto dual = truncated_polynomial_algebra(Q, 2);
  const Vector x = vec(Q, {"0", "1"});
  CHECK(cup(Cochain::element(dual, x), Cochain::element(dual, x)).is_zero());
  CHECK(cup(Cochain::element(dual, dual->unit()), Cochain::element(dual, x)) == Cochain::element(dual, x));
  const Cochain alpha = Cochain::linear_map(dual, mat(Q, {{"0", "1"}, {"0", "0"}}));
  CHECK(cup(alpha, alpha).at({1, 1}) == vec(Q, {"1", "0"}));

  std::mt19937 rng(5);
  auto t3 = truncated_polynomial_algebra(F3, 3);
  auto qs3 = group_algebra(FiniteGroup::symmetric3(), Q);
  const Cochain one = Cochain::element(t3, t3->unit());
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q + p <= 3; ++q) {
      const Cochain a = random_cochain(t3, p, rng), b = random_cochain(t3, q, rng);
      CHECK(cup(one, b) == b);
      // strict chain map
      CHECK(cochain_differential(cup(a, b)) ==
            cup(cochain_differential(a), b) + cup(a, cochain_differential(b)) * sign(p));
      // strict associativity
      if (p + q <= 2) {
        const Cochain c = random_cochain(t3, 1, rng);
        CHECK(cup(cup(a, b), c) == cup(a, cup(b, c)));
      }
    }
  const Cochain a = random_cochain(qs3, 1, rng), b = random_cochain(qs3, 1, rng);
  CHECK(cochain_differential(cup(a, b)) == cup(cochain_differential(a), b) - cup(a, cochain_differential(b)));
}

TEST_CASE("partial compositions and the circle product") {
  std::mt19937 rng(9);
  auto t3 = truncated_polynomial_algebra(F3, 3);
  const Cochain id = Cochain::identity(t3);
  for (int q = 0; q <= 3; ++q) {
    const Cochain b = random_cochain(t3, q, rng);
    if (q >= 1) CHECK(circle_i(id, b, 0) == b);
  }
  // 1-cochains compose as linear maps
  const Matrix ma = vl::test::random_matrix(F3, 3, 3, rng), mb = vl::test::random_matrix(F3, 3, 3, rng);
  CHECK(circle_i(Cochain::linear_map(t3, ma), Cochain::linear_map(t3, mb), 0).table() == Matrix(ma * mb));
  // alpha = t d/dt, beta = d/dt: (alpha o_0 beta)(t) = alpha(1) = 0, (alpha o_0 beta)(t^2) = alpha(2t) = 2t
  const Cochain alpha = Cochain::linear_map(t3, t_d_dt(F3, 3)), beta = Cochain::linear_map(t3, d_dt(F3, 3));
  const Cochain ab = circle_i(alpha, beta, 0);
  CHECK(ab.at({1}) == vec(F3, {"0", "0", "0"}));
  CHECK(ab.at({2}) == vec(F3, {"0", "2", "0"}));
  CHECK_THROWS_AS(circle_i(alpha, beta, 1), std::out_of_range);

  // p = 1: circle is o_0
  const Cochain c2 = random_cochain(t3, 2, rng);
  CHECK(circle(alpha, c2) == circle_i(alpha, c2, 0));

  // the signed sum defining h equals (-1)^(pq+q) times the circle product
  for (int p = 1; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) {
      const Cochain a = random_cochain(t3, p, rng), b = random_cochain(t3, q, rng);
      Cochain lhs = Cochain::zero(t3, p + q - 1);
      for (int i = 0; i < p; ++i) lhs = lhs + circle_i(a, b, i, 6) * sign(i + (p - 1 - i) * q);
      CHECK(lhs == circle(a, b, 6) * sign(p * q + q));
      CHECK(homotopy_h(a, b, 6) == lhs);
    }
  // degree-0 b inserted into a 1-cochain a
  const Cochain a1 = random_cochain(t3, 1, rng);
  const Vector z = vec(F3, {"1", "2", "0"});
  CHECK(circle(a1, Cochain::element(t3, z)).table() == Matrix(a1.table() * z));
}

TEST_CASE("gerstenhaber bracket") {
  auto t3 = truncated_polynomial_algebra(F3, 3);
  const Cochain alpha = Cochain::linear_map(t3, d_dt(F3, 3));
  const Cochain beta = Cochain::linear_map(t3, t_d_dt(F3, 3));
  // oracle: for derivations the bracket is beta alpha - alpha beta as operators
  const Matrix oracle = t_d_dt(F3, 3) * d_dt(F3, 3) - d_dt(F3, 3) * t_d_dt(F3, 3);
  const Cochain br = gerstenhaber_bracket(alpha, beta);
  CHECK(br.table() == oracle);
  CHECK(br == -alpha);
  const auto hh1 = cohomology(t3, 1);
  CHECK(hh1.nonzero_class(br.coordinates()));
  CHECK(gerstenhaber_bracket(alpha, alpha).is_zero());

  std::mt19937 rng(13);
  const Cochain id = Cochain::identity(t3);
  for (int trial = 0; trial < 5; ++trial) CHECK(gerstenhaber_bracket(id, random_cochain(t3, 1, rng)).is_zero());

  // graded antisymmetry, and [a,a] = 0 for odd p away from characteristic 2
  auto dual = truncated_polynomial_algebra(Q, 2);
  for (auto a : {t3, dual})
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q) {
        if (p + q == 0) continue;
        const Cochain x = random_cochain(a, p, rng), y = random_cochain(a, q, rng);
        CHECK(gerstenhaber_bracket(x, y, 6) == gerstenhaber_bracket(y, x, 6) * sign((p - 1) * (q - 1) + 1));
        if (p % 2 == 1) CHECK(gerstenhaber_bracket(x, x, 6).is_zero());
      }
}

TEST_CASE("pre-Lie identity") {
  std::mt19937 rng(17);
  for (auto a : {truncated_polynomial_algebra(F3, 3), truncated_polynomial_algebra(Q, 2),
                 group_algebra(FiniteGroup::cyclic(3), FieldSpec::cyclotomic(3))})
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= 2; ++q)
        for (int r = 0; r <= 2; ++r) {
          if (p + q - 1 < 0 || p + r - 1 < 0 || q + r - 1 < 0 || p + q + r - 2 < 0) continue;
          const Cochain x = random_cochain(a, p, rng), y = random_cochain(a, q, rng), z = random_cochain(a, r, rng);
          auto assoc = [&](const Cochain& u, const Cochain& v, const Cochain& w) {
            return circle(circle(u, v), w) - circle(u, circle(v, w));
          };
          CHECK(assoc(x, y, z) == assoc(x, z, y) * sign((q - 1) * (r - 1)));
        }
}

TEST_CASE("homotopy identity") {
  std::mt19937 rng(19);
  for (auto a : {truncated_polynomial_algebra(F3, 3), truncated_polynomial_algebra(Q, 2)})
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q)
        for (int trial = 0; trial < 3; ++trial) {
          CAPTURE(p);
          CAPTURE(q);
          const Cochain x = random_cochain(a, p, rng), y = random_cochain(a, q, rng);
          const int B = 6;
          Cochain lhs = homotopy_h(cochain_differential(x, B), y, B) +
                        homotopy_h(x, cochain_differential(y, B), B) * sign(p);
          // h(x (x) y) has degree p+q-1 and vanishes when that is negative
          if (p + q > 0) lhs = lhs + cochain_differential(homotopy_h(x, y, B), B);
          const Cochain rhs = cup(y, x, B) * sign(p * q) - cup(x, y, B);
          CHECK(lhs == rhs);
        }
  // p = 0 gives h = 0
  auto t3 = truncated_polynomial_algebra(F3, 3);
  CHECK(homotopy_h(Cochain::element(t3, t3->unit()), Cochain::identity(t3)).is_zero());
}

TEST_CASE("cohomology and homology") {
  auto qs3 = group_algebra(FiniteGroup::symmetric3(), Q);
  CHECK(cohomology(qs3, 0).dimension == center(*qs3).cols());
  CHECK(homology(qs3, 0).dimension == hh0(*qs3).quotient.dimension());
  auto m2 = matrix_algebra(Q, 2);
  CHECK(homology(m2, 0).dimension == 1);
  CHECK(cohomology(m2, 1).dimension == 0);
  for (long long p : {2, 3, 5}) {
    auto a = truncated_polynomial_algebra(FieldSpec::prime(p), static_cast<int>(p));
    CHECK(cohomology(a, 1).dimension == p);
  }
  // over Q, k[t]/(t^3) has HH^1 of dimension 2 (derivations t -> t, t -> t^2)
  CHECK(cohomology(truncated_polynomial_algebra(Q, 3), 1).dimension == 2);

  // chain boundary squares to zero
  std::mt19937 rng(23);
  auto t3 = truncated_polynomial_algebra(F3, 3);
  for (int p = 2; p <= 3; ++p) {
    const Chain c(t3, p, vl::test::random_vector(F3, vl::test::power_of(3, p + 1), rng));
    CHECK(is_zero_matrix(chain_boundary(chain_boundary(c)).coordinates()));
  }
  CHECK_THROWS_AS(cohomology(t3, 4), DegreeOverflow);
}

TEST_CASE("bracket is a derivation of cup on cohomology") {
  for (long long p : {3, 5}) {
    auto a = truncated_polynomial_algebra(FieldSpec::prime(p), 3);
    const auto hh1 = cohomology(a, 1);
    const auto hh2 = cohomology(a, 2);
    std::vector<Cochain> reps;
    for (Index c = 0; c < hh1.representatives.cols(); ++c)
      reps.push_back(Cochain::from_coordinates(a, 1, hh1.representatives.col(c)));
    for (const auto& x : reps)
      for (const auto& y : reps)
        for (const auto& z : reps) {
          const Cochain defect = gerstenhaber_bracket(x, cup(y, z)) - cup(gerstenhaber_bracket(x, y), z) -
                                 cup(y, gerstenhaber_bracket(x, z)) * sign((x.degree() - 1) * y.degree());
          CHECK(hh2.is_cycle(defect.coordinates()));
          CHECK(hh2.is_boundary(defect.coordinates()));
        }
  }
}
