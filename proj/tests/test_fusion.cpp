#include <doctest.h>

#include "support.hpp"
#include "vl/catalog.hpp"
#include "vl/error.hpp"
#include "vl/fusion.hpp"

using namespace vl;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

DrinfeldDouble dbl0(const std::string& g) {
  const auto G = catalog_group(g);
  return drinfeld_double(G, default_char0_field(G));
}

std::vector<AlgebraModule> modules_of(const std::vector<DoubleSimple>& s) {
  std::vector<AlgebraModule> out;
  for (const auto& x : s) out.push_back(x.module);
  return out;
}

// Simple (c, chi) of an abelian double is the character delta_g -> [g = c],
// x -> chi(x); tensor products multiply both parts. Returns N from that rule.
FusionTensor abelian_double_fusion(const DrinfeldDouble& d, const std::vector<DoubleSimple>& simples) {
  const auto& G = d.group;
  const std::size_t n = simples.size();
  std::vector<int> cls;
  std::vector<std::vector<FieldElement>> chi;
  for (const auto& s : simples) {
    REQUIRE(s.module.dim() == 1);
    int c = -1;
    std::vector<FieldElement> ch;
    for (int g = 0; g < G.order(); ++g) {
      if (!s.module.action(double_index(G, g, 0))(0, 0).is_zero()) c = g;
      Vector group_element = d.hopf.alg().zero();  // 1 (x) g
      for (int h = 0; h < G.order(); ++h) group_element(double_index(G, h, g)) = FieldElement::one(d.hopf.field());
      ch.push_back(s.module.act(group_element)(0, 0));
    }
    cls.push_back(c);
    chi.push_back(ch);
  }
  FusionTensor N(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<FieldElement> prod;
      for (int g = 0; g < G.order(); ++g) prod.push_back(chi[i][static_cast<std::size_t>(g)] * chi[j][static_cast<std::size_t>(g)]);
      for (std::size_t l = 0; l < n; ++l)
        N(i, j, l) = (cls[l] == G.mul(cls[i], cls[j]) && chi[l] == prod) ? 1 : 0;
    }
  return N;
}
}  // namespace

TEST_CASE("modular data validation") {
  ModularData md{{"0", "1"}, test::mat(Q, {{"1", "1"}, {"1", "1"}}), std::nullopt};
  CHECK_THROWS_AS(md.validate(), SingularMatrix);
  md.s = test::mat(Q, {{"1", "0"}, {"1", "1"}});
  CHECK_THROWS_AS(md.validate(), InvalidStructure);
  md.s = test::mat(Q, {{"1", "1"}, {"1", "-1"}});
  CHECK_NOTHROW(md.validate());
  md.labels.push_back("2");
  CHECK_THROWS_AS(md.validate(), DimensionMismatch);
}

TEST_CASE("Verlinde coefficients of abelian doubles match the group fusion") {
  for (const char* g : {"z1", "z2", "z3", "z4", "z2z2"}) {
    INFO(g);
    const auto d = dbl0(g);
    const auto md = modular_data(d);
    const auto v = verlinde_coefficients(md.data);
    const auto N = v.to_fusion();
    REQUIRE(N.has_value());
    CHECK(*N == abelian_double_fusion(d, md.simples));
    CHECK(*N == fusion_oracle(d.hopf, modules_of(md.simples), true));
  }
}

TEST_CASE("Verlinde formula for D(S3)") {
  const auto d = dbl0("s3");
  const auto md = modular_data(d);
  const auto oracle = fusion_oracle(d.hopf, modules_of(md.simples), true);
  const auto rep = verlinde_check(md.data, oracle);
  CHECK(rep.pass);
  CHECK(rep.lines.front() == "triples checked: 512");
  const auto N = *verlinde_coefficients(md.data).to_fusion();
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      long long dim = 0;
      for (std::size_t l = 0; l < 8; ++l) {
        CHECK(N(i, j, l) == N(j, i, l));
        CHECK(N(0, j, l) == (j == l ? 1 : 0));
        dim += N(i, j, l) * md.simples[l].module.dim();
      }
      CHECK(dim == md.simples[i].module.dim() * md.simples[j].module.dim());
    }
}

TEST_CASE("twists") {
  const auto md = modular_data(dbl0("z2"));
  REQUIRE(md.data.t.has_value());
  // theta(c, chi) = chi(c)
  int minus = 0;
  for (Index i = 0; i < 4; ++i) minus += (*md.data.t)(i) == FieldElement::from_int(Q, -1) ? 1 : 0;
  CHECK(minus == 1);
  CHECK((*md.data.t)(0).is_one());
}

TEST_CASE("a corrupted S-matrix is caught with a witness") {
  const auto d = dbl0("z2");
  auto md = modular_data(d);
  const auto oracle = fusion_oracle(d.hopf, modules_of(md.simples), true);
  md.data.s(1, 2) = md.data.s(1, 2) * FieldElement::from_int(Q, 3);
  const auto rep = verlinde_check(md.data, oracle);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.to_text().find("RESULT verlinde FAIL") != std::string::npos);
}

TEST_CASE("diagonalization") {
  for (const char* g : {"z1", "z2", "z3", "z4", "s3"}) {
    INFO(g);
    const auto d = dbl0(g);
    const auto md = modular_data(d);
    const auto mods = modules_of(md.simples);
    const auto N = fusion_oracle(d.hopf, mods, true);
    const FrobeniusAlgebra fa(d.hopf.algebra(), cointegral(d.hopf));
    const auto rep = diagonalization_check(md.data, N, fa, mods);
    CHECK(rep.pass);
    if (!rep.pass) MESSAGE(rep.to_text());
    CHECK(md.data.s(0, 0) == FieldElement::from_int(d.hopf.field(), d.group.order()).inverse());
  }
  const auto d = dbl0("z3");
  const auto md = modular_data(d);
  const auto mods = modules_of(md.simples);
  const auto N = fusion_oracle(d.hopf, mods, true);
  const FrobeniusAlgebra fa(d.hopf.algebra(), cointegral(d.hopf));
  for (const char* c : {"2", "-5", "7/3"})
    CHECK(diagonalization_check(md.data, N, fa.rescaled(test::num(d.hopf.field(), c)), mods).pass);
}

TEST_CASE("K0 identity") {
  SUBCASE("D(Z2) over F2") {
    const auto d = drinfeld_double(catalog_group("z2"), F2);
    const auto k = k0_check(d);
    CHECK(k.report.pass);
    CHECK(k.blocks.pass);
    // oracle: delta_l acts on P_i (x) P_j as the projection onto degree l, each
    // P_l is 2-dim with delta_l = id, so M_ij^l = dim(degree l part) / 2
    const auto idem = basic_idempotents(d.hopf.alg());
    REQUIRE(idem.size() == 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        const auto pp = tensor_product(d.hopf, projective_cover(d.hopf.algebra(), idem[i]),
                                       projective_cover(d.hopf.algebra(), idem[j]));
        for (std::size_t l = 0; l < 2; ++l) {
          // which grading does P_l carry
          const auto pl = projective_cover(d.hopf.algebra(), idem[l]);
          int grade = -1;
          for (int g = 0; g < 2; ++g)
            if (pl.action(double_index(d.group, g, 0)) == identity_matrix(F2, 2)) grade = g;
          REQUIRE(grade >= 0);
          const long long m = rank(pp.action(double_index(d.group, grade, 0))) / 2;
          CHECK(k.m(i, j, l) == m);
        }
      }
    CHECK(k.m(0, 0, 0) + k.m(0, 0, 1) == 2);
  }
  SUBCASE("D(Z3) over F3 and semisimple D(Z2)") {
    CHECK(k0_check(drinfeld_double(catalog_group("z3"), F3)).report.pass);
    const auto k = k0_check(drinfeld_double(catalog_group("z2"), Q));
    CHECK(k.report.pass);
    // projectives are the simples: M is the group fusion
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        long long s = 0;
        for (std::size_t l = 0; l < 4; ++l) s += k.m(i, j, l);
        CHECK(s == 1);
      }
  }
  SUBCASE("the wrong identification is detected") {
    const auto k = k0_check(drinfeld_double(catalog_group("z2"), Q), kSL2ZIdentity);
    CHECK_FALSE(k.report.pass);
    CHECK(k.report.witness.has_value());
    CHECK(k.blocks.pass);
  }
}

TEST_CASE("nonzero Gerstenhaber bracket on F_p[Z_p]") {
  for (int p : {2, 3, 5}) {
    INFO(p);
    const auto w = bracket_witness(p);
    CHECK(w.report.pass);
    CHECK(w.nonzero_class);
    CHECK(w.alpha_alpha_zero);
    // oracle: for derivations the bracket is beta o alpha - alpha o beta; evaluate on g
    const auto& A = *w.alpha.algebra();
    const Vector g = A.basis(1);
    const Matrix a = w.alpha.table(), b = w.beta.table();
    const Vector comm = Vector(b * (a * g)) - Vector(a * (b * g));
    CHECK(w.bracket.at({1}) == comm);
  }
  CHECK_THROWS_AS(bracket_witness(4), std::invalid_argument);
}
