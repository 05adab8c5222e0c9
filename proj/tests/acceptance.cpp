// One line per acceptance criterion: number, verdict, elapsed time, limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vl/catalog.hpp"
#include "vl/error.hpp"
#include "vl/frobenius.hpp"
#include "vl/fusion.hpp"
#include "vl/hochschild.hpp"

using namespace vl;

namespace {

// Collects failures; a criterion passes when nothing was recorded.
struct Log {
  std::vector<std::string> problems;
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

template <class E, class F>
bool throws(F&& f) {
  try {
    f();
  } catch (const E&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

std::vector<AlgebraModule> modules_of(const std::vector<DoubleSimple>& s) {
  std::vector<AlgebraModule> out;
  for (const auto& x : s) out.push_back(x.module);
  return out;
}

DrinfeldDouble double0(const std::string& name) {
  const auto g = catalog_group(name);
  return drinfeld_double(g, default_char0_field(g));
}

const std::vector<std::string> kSemisimpleDoubles = {"z2", "z3", "z4", "s3"};

void verlinde(Log& log) {
  for (const auto& g : kSemisimpleDoubles) {
    const auto d = double0(g);
    const auto md = modular_data(d);
    const auto oracle = fusion_oracle(d.hopf, modules_of(md.simples), true);
    const auto rep = verlinde_check(md.data, oracle);
    log.require(rep.pass, "D(" + g + "): " + (rep.lines.empty() ? "" : rep.lines.back()));
    const auto n = md.data.size();
    log.require(rep.lines.front() == "triples checked: " + std::to_string(n * n * n), "D(" + g + ") triple count");
  }
}

void diagonalization(Log& log) {
  for (const auto& g : kSemisimpleDoubles) {
    const auto d = double0(g);
    const auto md = modular_data(d);
    const auto mods = modules_of(md.simples);
    const auto n = fusion_oracle(d.hopf, mods, true);
    const FrobeniusAlgebra fa(d.hopf.algebra(), cointegral(d.hopf));
    const auto rep = diagonalization_check(md.data, n, fa, mods);
    log.require(rep.pass, "D(" + g + ") not diagonal");
    log.require(md.data.s(0, 0) == FieldElement::from_int(d.hopf.field(), d.group.order()).inverse(),
                "D(" + g + ") normalization");
  }
}

void corgrv(Log& log) {
  {
    const auto d = double0("z2");
    const auto mods = modules_of(modular_data(d).simples);
    const auto rep = corgrv_check(d.hopf, d.braiding.r(), mods, fusion_multiplicities(d.hopf, mods, true));
    log.require(rep.pass, "D(Z2) char 0");
  }
  for (auto [g, p] : {std::pair{"z2", 2}, std::pair{"z3", 3}}) {
    const auto d = drinfeld_double(catalog_group(g), FieldSpec::prime(p));
    const auto mods = simple_modules(d.hopf.algebra());
    const auto rep = corgrv_check(d.hopf, d.braiding.r(), mods, fusion_multiplicities(d.hopf, mods, false));
    log.require(rep.pass, std::string("D(") + g + ") over F" + std::to_string(p));
  }
}

void k0(Log& log) {
  const auto d = drinfeld_double(catalog_group("z2"), FieldSpec::prime(2));
  const auto k = k0_check(d);
  log.require(k.report.pass, "congruence mod [A,A]");
  log.require(k.blocks.pass, "block certificate");
  // oracle: P_l is 2-dim with delta_{g_l} acting as the identity; the
  // multiplicity of P_l in P_i (x) P_j is rank(delta_{g_l}) / 2
  const auto idem = basic_idempotents(d.hopf.alg());
  log.require(idem.size() == 2 && k.m.n == 2, "two projectives");
  if (idem.size() != 2 || k.m.n != 2) return;
  const FieldSpec f2 = FieldSpec::prime(2);
  std::vector<int> grade;
  for (const auto& e : idem) {
    const auto p = projective_cover(d.hopf.algebra(), e);
    int gr = -1;
    for (int g = 0; g < 2; ++g)
      if (p.action(double_index(d.group, g, 0)) == identity_matrix(f2, p.dim())) gr = g;
    grade.push_back(gr);
  }
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const auto pp = tensor_product(d.hopf, projective_cover(d.hopf.algebra(), idem[i]),
                                     projective_cover(d.hopf.algebra(), idem[j]));
      for (std::size_t l = 0; l < 2; ++l) {
        const long long oracle = rank(pp.action(double_index(d.group, grade[l], 0))) / 2;
        const long long expected = (grade[l] == (grade[i] + grade[j]) % 2) ? 2 : 0;
        log.require(oracle == expected && k.m(i, j, l) == oracle,
                    "M(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) + ")");
      }
    }
}

FieldElement random_unit(const FieldSpec& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(1, 97);
  for (;;) {
    const auto x = FieldElement::from_int(f, pick(rng));
    if (!x.is_zero()) return x;
  }
}

void cartan(Log& log) {
  std::mt19937 rng(5);
  for (const auto& name : catalog_frobenius_names()) {
    const auto c = catalog_algebra(name);
    if (!c.form) continue;
    const FrobeniusAlgebra base(c.algebra, *c.form);
    const auto idem = primitive_idempotents(*c.algebra);
    std::vector<FrobeniusAlgebra> forms{base};
    for (int k = 0; k < 3; ++k) forms.push_back(base.rescaled(random_unit(c.algebra->field(), rng)));
    for (std::size_t i = 0; i < idem.size(); ++i)
      for (std::size_t j = 0; j < idem.size(); ++j) {
        const auto dim = FieldElement::from_int(c.algebra->field(), corner_dimension(*c.algebra, idem[i], idem[j]));
        for (const auto& F : forms)
          log.require(handle_trace(F, idem[i], idem[j]) == dim, name + " pair " + std::to_string(i) + "," + std::to_string(j));
      }
  }
}

void block_diagonal(Log& log) {
  for (const char* name : {"d-z2-char2", "fp-z2z2", "q-group-s3"}) {
    const auto c = catalog_algebra(name);
    const auto cert = certify_block_diagonal(FrobeniusAlgebra(c.algebra, *c.form));
    log.require(cert.pass && cert.pairs_checked > 0, std::string(name) + ": " + cert.detail);
  }
}

void homotopy(Log& log) {
  for (const char* name : {"fp-truncated-3", "q-dual-numbers"}) {
    const auto rep = homotopy_check(catalog_algebra(name).algebra, 3, 200, 2024);
    log.require(rep.pass && rep.samples_checked == 16 * 200, name);
  }
}

void bracket(Log& log) {
  for (int p : {2, 3, 5}) {
    const auto w = bracket_witness(p);
    log.require(w.report.pass && w.nonzero_class, "p = " + std::to_string(p));
  }
}

void sl2z(Log& log) {
  for (const char* name : {"z2", "z3", "s3"}) {
    const auto g = catalog_group(name);
    const auto orbits = pbun_orbits(g);
    const SL2Z s2 = sl2z_multiply(kSL2ZS, kSL2ZS);
    const SL2Z st = sl2z_multiply(kSL2ZS, kSL2ZT);
    const auto id = sl2z_action(g, orbits, kSL2ZIdentity);
    log.require(sl2z_action(g, orbits, sl2z_multiply(s2, s2)) == id, std::string(name) + " S^4");
    log.require(sl2z_action(g, orbits, sl2z_multiply(st, sl2z_multiply(st, st))) == sl2z_action(g, orbits, s2),
                std::string(name) + " (ST)^3");
    // the same relations on the permutations, composed one generator at a time
    const auto s = sl2z_action(g, orbits, kSL2ZS), t = sl2z_action(g, orbits, kSL2ZT);
    auto after = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
      std::vector<std::size_t> r(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
      return r;
    };
    const auto ss = after(s, s), stp = after(s, t);
    log.require(after(ss, ss) == id, std::string(name) + " S^4 composed");
    log.require(after(stp, after(stp, stp)) == ss, std::string(name) + " (ST)^3 composed");
  }
  for (const char* name : {"z2", "z3"}) {
    const auto d = double0(name);
    const auto m = smatrix_modular(d);
    log.require(m.bundle == bundle_permutation_matrix(d.group, d.hopf.field(), m.orbits, kSL2ZS),
                std::string("D(") + name + ") S-transformation vs geometric S");
  }
}

void structural(Log& log) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(-3, 3);
  auto random_cochain = [&](const AlgebraPtr& a, int p) {
    Index cols = 1;
    for (int k = 0; k < p; ++k) cols *= a->dim();
    Matrix m(a->dim(), cols);
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = FieldElement::from_int(a->field(), pick(rng));
    return Cochain(a, p, m);
  };
  auto sign = [](const FieldSpec& f, int e) { return FieldElement::from_int(f, e % 2 == 0 ? 1 : -1); };

  // catalog algebras: construction checks associativity and the unit
  for (const auto& name : catalog_algebra_names()) {
    const auto c = catalog_algebra(name);
    const auto& A = *c.algebra;
    if (c.form) {
      const FrobeniusAlgebra F(c.algebra, *c.form);  // symmetric and nondegenerate
      const Matrix cas = canonical_element(F);
      for (Index a = 0; a < A.dim(); ++a) {
        const Matrix la = A.left_multiplication(A.basis(a)), ra = A.right_multiplication(A.basis(a));
        log.require(Matrix(la * cas) == Matrix(cas * ra.transpose()), name + " Casimir");
      }
    }
    if (A.dim() <= 9)
      for (int p = 0; p <= 2; ++p)
        log.require(cochain_differential(cochain_differential(random_cochain(c.algebra, p))).is_zero(),
                    name + " d^2 in degree " + std::to_string(p));
  }
  // pre-Lie identity
  for (const char* name : {"fp-truncated-3", "q-dual-numbers", "cyc3-group-z3"}) {
    const auto a = catalog_algebra(name).algebra;
    for (int p = 1; p <= 2; ++p)
      for (int q = 1; q <= 2; ++q)
        for (int r = 1; r <= 2; ++r) {
          const Cochain x = random_cochain(a, p), y = random_cochain(a, q), z = random_cochain(a, r);
          auto assoc = [](const Cochain& u, const Cochain& v, const Cochain& w) {
            return circle(circle(u, v), w) - circle(u, circle(v, w));
          };
          log.require(assoc(x, y, z) == assoc(x, z, y) * sign(a->field(), (q - 1) * (r - 1)), std::string(name) + " pre-Lie");
        }
  }
  // Hopf axioms and Yang-Baxter on every catalog double, in char 0 and in
  // each prime dividing the order
  for (const auto& gname : catalog_group_names()) {
    const auto g = catalog_group(gname);
    std::vector<FieldSpec> fields{default_char0_field(g)};
    for (int p : {2, 3})
      if (g.order() % p == 0) fields.push_back(FieldSpec::prime(p));
    for (const auto& f : fields) {
      group_algebra_hopf(g, f);
      function_algebra_hopf(g, f);
      const auto d = drinfeld_double(g, f);
      log.require(yang_baxter_holds(d.hopf, d.braiding.r()), "YBE for D(" + gname + ") over " + f.to_string());
    }
  }

  // corrupted inputs
  const FieldSpec Q = FieldSpec::rationals();
  {
    const auto terms = catalog_algebra("q-dual-numbers").algebra->terms();
    log.require(throws<InvalidStructure>([&] { make_algebra(Q, 2, terms, unit_vector(Q, 2, 1)); }), "bad unit accepted");
    // unit e0, e1 e2 = e1, e2 e2 = e1: (e1 e2) e2 = e1 but e1 (e2 e2) = 0
    const FieldElement one = FieldElement::one(Q);
    std::vector<StructureTerm> nonassoc = {{1, 2, 1, one}, {2, 2, 1, one}};
    for (Index i = 0; i < 3; ++i) {
      nonassoc.push_back({0, i, i, one});
      if (i) nonassoc.push_back({i, 0, i, one});
    }
    log.require(throws<InvalidStructure>([&] { make_algebra(Q, 3, nonassoc, unit_vector(Q, 3, 0)); }),
                "non-associative table accepted");
  }
  {
    const auto m2 = catalog_algebra("m2-q").algebra;
    log.require(throws<InvalidStructure>([&] { FrobeniusAlgebra(m2, unit_vector(Q, 4, 1)); }), "non-symmetric form accepted");
    log.require(throws<InvalidStructure>([&] { FrobeniusAlgebra(m2, zero_vector(Q, 4)); }), "degenerate form accepted");
  }
  {
    const auto d = drinfeld_double(catalog_group("z2"), Q);
    Matrix bad = d.hopf.antipode();
    bad(0, 0) = FieldElement::zero(Q);
    log.require(throws<InvalidStructure>([&] { HopfAlgebra(d.hopf.algebra(), d.hopf.coproduct_terms(), d.hopf.counit(), bad); }),
                "broken antipode accepted");
    Vector eps = d.hopf.counit();
    eps(2) = FieldElement::one(Q);
    log.require(throws<InvalidStructure>([&] { HopfAlgebra(d.hopf.algebra(), d.hopf.coproduct_terms(), eps, d.hopf.antipode()); }),
                "broken counit accepted");
    log.require(throws<InvalidStructure>([&] { QuasiTriangular(d.hopf, d.braiding.r() * FieldElement::from_int(Q, 2)); }),
                "scaled R-matrix accepted");
    auto md = modular_data(d);
    const auto oracle = fusion_oracle(d.hopf, modules_of(md.simples), true);
    md.data.s(1, 2) = md.data.s(1, 2) * FieldElement::from_int(Q, 3);
    const auto rep = verlinde_check(md.data, oracle);
    log.require(!rep.pass && rep.witness.has_value(), "corrupted S-matrix accepted");
  }
}

struct Criterion {
  int number;
  const char* name;
  double limit;
  std::function<void(Log&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Verlinde formula on D(Z2), D(Z3), D(Z4), D(S3)", 60, verlinde},
      {2, "S-conjugated fusion product is diagonal", 30, diagonalization},
      {3, "internal-character identity", 30, corgrv},
      {4, "K0 block identity for D(Z2) over F2", 10, k0},
      {5, "handle elements give the Cartan matrix", 10, cartan},
      {6, "star product is block diagonal", 10, block_diagonal},
      {7, "homotopy and sign identities, 200 samples per degree pair", 60, homotopy},
      {8, "nonzero Gerstenhaber bracket on F_p[Z_p]", 10, bracket},
      {9, "SL(2,Z) relations and the S-transformation", 30, sl2z},
      {10, "structural invariants and corrupted inputs", 60, structural},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Log log;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(log);
    } catch (const std::exception& e) {
      log.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit) log.problems.push_back("over the time limit");
    const bool pass = log.problems.empty();
    failed += pass ? 0 : 1;
    char line[256];
    std::snprintf(line, sizeof line, "criterion %2d %s  %6.2fs / %3.0fs  %s", c.number, pass ? "PASS" : "FAIL", secs,
                  c.limit, c.name);
    std::cout << line << "\n";
    for (const auto& p : log.problems) std::cout << "    " << p << "\n";
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
