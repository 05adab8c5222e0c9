#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "vl/catalog.hpp"
#include "vl/doubles.hpp"
#include "vl/error.hpp"

using namespace vl;

namespace {
const FieldSpec Q = FieldSpec::rationals();

DrinfeldDouble dbl0(const FiniteGroup& g) { return drinfeld_double(g, default_char0_field(g)); }

// Burnside: #orbits = (1/|G|) sum_x #{commuting (a,b) fixed by conjugation with x}
std::size_t burnside_orbit_count(const FiniteGroup& g) {
  long long fixed = 0;
  for (int x = 0; x < g.order(); ++x)
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        if (g.commute(a, b) && g.conj(x, a) == a && g.conj(x, b) == b) ++fixed;
  return static_cast<std::size_t>(fixed / g.order());
}

SL2Z power(const SL2Z& m, int e) {
  SL2Z r = kSL2ZIdentity;
  for (int k = 0; k < e; ++k) r = sl2z_multiply(r, m);
  return r;
}

SL2Z random_sl2z(std::mt19937& rng) {
  const SL2Z tinv{1, -1, 0, 1};
  SL2Z m = kSL2ZIdentity;
  for (int k = 0; k < 6; ++k) {
    switch (rng() % 3) {
      case 0: m = sl2z_multiply(m, kSL2ZS); break;
      case 1: m = sl2z_multiply(m, kSL2ZT); break;
      default: m = sl2z_multiply(m, tinv); break;
    }
  }
  return m;
}

std::vector<FiniteGroup> groups() {
  return {catalog_group("z1"), catalog_group("z2"), catalog_group("z3"), catalog_group("z4"),
          catalog_group("z2z2"), catalog_group("s3")};
}
}  // namespace

TEST_CASE("small doubles") {
  const auto k = drinfeld_double(FiniteGroup::trivial(), Q);
  CHECK(k.hopf.dim() == 1);
  Tensor one(Q, 1, 2);
  one.add({0, 0}, FieldElement::one(Q));
  CHECK(k.braiding.r() == one);

  const auto d = drinfeld_double(catalog_group("z2"), Q);
  CHECK(d.hopf.dim() == 4);
  CHECK(d.hopf.alg().is_commutative());
  for (Index i = 0; i < 4; ++i) CHECK(flip(d.hopf.coproduct(i)) == d.hopf.coproduct(i));
  Tensor trivial(Q, 4, 2);
  const Vector& u = d.hopf.alg().unit();
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j) trivial.add({i, j}, u(i) * u(j));
  CHECK(d.braiding.r() != trivial);

  const auto s3 = dbl0(catalog_group("s3"));
  CHECK(s3.hopf.dim() == 36);
  CHECK(s3.hopf.field() == FieldSpec::cyclotomic(6));
  CHECK_FALSE(s3.hopf.alg().is_commutative());
}

TEST_CASE("group and function algebras are Hopf") {
  for (const auto& g : groups()) {
    CHECK_NOTHROW(group_algebra_hopf(g, Q));
    CHECK_NOTHROW(function_algebra_hopf(g, FieldSpec::prime(2)));
  }
}

TEST_CASE("commuting-pair orbits") {
  const auto z2 = pbun_orbits(catalog_group("z2"));
  CHECK(z2.size() == 4);
  for (const auto& o : z2) CHECK(o.size() == 1);
  CHECK(pbun_orbits(FiniteGroup::trivial()).size() == 1);
  CHECK(pbun_orbits(catalog_group("s3")).size() == 8);

  for (const auto& g : groups()) {
    const auto orbits = pbun_orbits(g);
    CHECK(orbits.size() == burnside_orbit_count(g));
    std::size_t total = 0;
    for (const auto& o : orbits) {
      total += o.size();
      for (const auto& [a, b] : o.members) CHECK(g.commute(a, b));
    }
    std::size_t pairs = 0;
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) pairs += g.commute(a, b) ? 1 : 0;
    CHECK(total == pairs);
  }
}

TEST_CASE("SL(2,Z) action on commuting pairs") {
  const auto z2 = catalog_group("z2");
  const auto orbits = pbun_orbits(z2);
  const auto id = sl2z_action(z2, orbits, kSL2ZIdentity);
  for (std::size_t i = 0; i < orbits.size(); ++i) CHECK(id[i] == i);
  CHECK(sl2z_act(z2, kSL2ZS, {0, 1}) == CommutingPair{1, 0});
  CHECK(sl2z_act(z2, kSL2ZS, {1, 0}) == CommutingPair{0, 1});
  CHECK(sl2z_act(z2, kSL2ZS, {0, 0}) == CommutingPair{0, 0});
  CHECK(sl2z_act(z2, kSL2ZS, {1, 1}) == CommutingPair{1, 1});
  CHECK_THROWS_AS(sl2z_act(z2, {2, 0, 0, 1}, {0, 1}), InvalidStructure);

  const auto s3 = catalog_group("s3");
  // S: (a,b) -> (b^-1, a), T: (a,b) -> (a, a^-1 b)
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      if (!s3.commute(a, b)) continue;
      CHECK(sl2z_act(s3, kSL2ZS, {a, b}) == CommutingPair{s3.inv(b), a});
      CHECK(sl2z_act(s3, kSL2ZT, {a, b}) == CommutingPair{a, s3.mul(s3.inv(a), b)});
    }

  const SL2Z st = sl2z_multiply(kSL2ZS, kSL2ZT);
  for (const char* name : {"z2", "z3", "s3"}) {
    const auto g = catalog_group(name);
    const auto o = pbun_orbits(g);
    const auto s = [&](int e) { return sl2z_action(g, o, power(kSL2ZS, e)); };
    CHECK(s(4) == sl2z_action(g, o, kSL2ZIdentity));
    CHECK(sl2z_action(g, o, power(st, 3)) == s(2));
    // composing the permutations, not the matrices
    const auto ps = sl2z_action(g, o, kSL2ZS);
    std::vector<std::size_t> s4(o.size());
    for (std::size_t i = 0; i < o.size(); ++i) s4[i] = ps[ps[ps[ps[i]]]];
    CHECK(s4 == sl2z_action(g, o, kSL2ZIdentity));
    const auto pst = sl2z_action(g, o, st);
    for (std::size_t i = 0; i < o.size(); ++i) CHECK(pst[pst[pst[i]]] == ps[ps[i]]);
  }
}

TEST_CASE("SL(2,Z) action composes") {
  std::mt19937 rng(7);
  for (const char* name : {"z3", "z4", "s3"}) {
    const auto g = catalog_group(name);
    for (int trial = 0; trial < 20; ++trial) {
      const SL2Z m1 = random_sl2z(rng), m2 = random_sl2z(rng);
      for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) {
          if (!g.commute(a, b)) continue;
          CHECK(sl2z_act(g, sl2z_multiply(m1, m2), {a, b}) == sl2z_act(g, m1, sl2z_act(g, m2, {a, b})));
        }
    }
  }
}

TEST_CASE("char-0 simples of D(G)") {
  const auto count_dims = [](const std::vector<DoubleSimple>& s) {
    std::vector<Index> d;
    for (const auto& x : s) d.push_back(x.module.dim());
    std::sort(d.begin(), d.end());
    return d;
  };
  const auto z2 = dbl0(catalog_group("z2"));
  CHECK(count_dims(simple_modules_char0(z2.group, z2.hopf.algebra())) == std::vector<Index>(4, 1));
  const auto z3 = dbl0(catalog_group("z3"));
  CHECK(count_dims(simple_modules_char0(z3.group, z3.hopf.algebra())) == std::vector<Index>(9, 1));
  const auto s3 = dbl0(catalog_group("s3"));
  const auto simples = simple_modules_char0(s3.group, s3.hopf.algebra());
  CHECK(count_dims(simples) == std::vector<Index>{1, 1, 2, 2, 2, 2, 3, 3});
  Index sq = 0;
  for (const auto& s : simples) sq += s.module.dim() * s.module.dim();
  CHECK(sq == 36);

  for (const auto& g : groups()) {
    const auto d = dbl0(g);
    const auto mods = simple_modules_char0(g, d.hopf.algebra());
    CHECK(mods.size() == pbun_orbits(g).size());
    for (std::size_t i = 0; i < mods.size(); ++i)
      for (std::size_t j = 0; j < mods.size(); ++j)
        CHECK(hom_space(mods[i].module, mods[j].module).dimension == (i == j ? 1 : 0));
  }
}

TEST_CASE("missing centralizer irreps are a catalog gap") {
  const auto g = FiniteGroup::direct_product(catalog_group("s3"), catalog_group("z2"));
  CHECK_THROWS_AS(centralizer_irreps(g, 0, FieldSpec::cyclotomic(6)), CatalogGap);
  CHECK_THROWS_AS(simple_modules_char0(g, double_algebra(g, FieldSpec::cyclotomic(6))), CatalogGap);
  CHECK_THROWS_AS(simple_modules_char0(catalog_group("z3"), drinfeld_double(catalog_group("z3"), Q).hopf.algebra()),
                  NonSplit);
}

TEST_CASE("modular S-matrix agrees with the geometric S") {
  for (const char* name : {"z1", "z2", "z3", "s3"}) {
    INFO(name);
    const auto d = dbl0(catalog_group(name));
    const auto m = smatrix_modular(d);
    const Matrix perm = bundle_permutation_matrix(d.group, d.hopf.field(), m.orbits, kSL2ZS);
    CHECK(m.bundle == perm);
    const Index k = m.s.rows();
    // S^2 is the charge conjugation: a permutation, an involution
    const Matrix s2 = m.s * m.s;
    CHECK(Matrix(s2 * s2) == identity_matrix(d.hopf.field(), k));
    for (Index i = 0; i < k; ++i) {
      int ones = 0;
      for (Index j = 0; j < k; ++j) {
        CHECK((s2(i, j).is_zero() || s2(i, j).is_one()));
        ones += s2(i, j).is_one() ? 1 : 0;
      }
      CHECK(ones == 1);
    }
  }
  const auto z2 = smatrix_modular(dbl0(catalog_group("z2")));
  const auto half = FieldElement::from_rational(Q, mpq_class(1, 2));
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j) CHECK((z2.s(i, j) == half || z2.s(i, j) == -half));
  CHECK(Matrix(z2.s * z2.s) == identity_matrix(Q, 4));
}
