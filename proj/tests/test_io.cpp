#include <doctest.h>

#include <functional>
#include <sstream>

#include "support.hpp"
#include "vl/catalog.hpp"
#include "vl/error.hpp"
#include "vl/io.hpp"

using namespace vl;
using namespace std::string_literals;

namespace {
const FieldSpec Q = FieldSpec::rationals();

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}
}  // namespace

TEST_CASE("algebra files round trip") {
  for (const char* name : {"q-dual-numbers", "m2-q", "fp-truncated-3", "cyc3-group-z3", "d-z2-char2"}) {
    INFO(name);
    const auto c = catalog_algebra(name);
    const std::string text = write_algebra(*c.algebra, c.form);
    std::istringstream in(text);
    const auto back = parse_algebra(in);
    CHECK(back.algebra->dim() == c.algebra->dim());
    CHECK(back.algebra->field() == c.algebra->field());
    CHECK(back.algebra->unit() == c.algebra->unit());
    for (Index i = 0; i < c.algebra->dim(); ++i)
      for (Index j = 0; j < c.algebra->dim(); ++j)
        CHECK(back.algebra->multiply(c.algebra->basis(i), c.algebra->basis(j)) ==
              c.algebra->multiply(c.algebra->basis(i), c.algebra->basis(j)));
    CHECK(back.form.has_value() == c.form.has_value());
    if (c.form) CHECK(*back.form == *c.form);
    CHECK(write_algebra(*back.algebra, back.form) == text);
  }
}

TEST_CASE("hand-written algebra with comments") {
  std::istringstream in(
      "# dual numbers\n"
      "algebra q 2\n"
      "0 0 0 1\n"
      "product 0 1 1 1   # e0 e1 = e1\n"
      "1 0 1 1\n"
      "\n"
      "unit 1 0\n"
      "form 0 1\n");
  const auto a = parse_algebra(in);
  CHECK(a.algebra->dim() == 2);
  CHECK(is_zero_matrix(a.algebra->multiply(a.algebra->basis(1), a.algebra->basis(1))));
  CHECK(a.form.has_value());
}

TEST_CASE("parse errors carry line numbers") {
  auto err = [](const std::string& text) {
    return error_of([&] {
      std::istringstream in(text);
      parse_algebra(in, "t.alg");
    });
  };
  CHECK(err("algebra q 2\n0 0 0 1\n0 5 0 1\nunit 1 0\n").find("t.alg:3:") == 0);
  CHECK(err("algebra q 2\n\n# x\n0 0 0 zz\nunit 1 0\n").find("t.alg:4:") == 0);
  CHECK(err("algebra r 2\n").find("t.alg:1:") == 0);
  CHECK(err("algebra q 2\n0 0 0 1\nunit 1 0 0\n").find("t.alg:3:") == 0);
  CHECK(err("algebra q 2\ncounit 1 1\n").find("t.alg:2:") == 0);
  CHECK(err("algebra q 1\n0 0 0 1\n").find("missing 'unit'") != std::string::npos);
  // parses fine but is not associative/unital
  std::istringstream nonunital("algebra q 2\n0 0 0 1\n1 1 1 1\nunit 1 0\n");
  CHECK_THROWS_AS(parse_algebra(nonunital), InvalidStructure);
}

TEST_CASE("Hopf files round trip with R and ribbon") {
  for (const char* g : {"z2", "z3", "s3"}) {
    INFO(g);
    const auto G = catalog_group(g);
    const auto d = drinfeld_double(G, default_char0_field(G));
    const Vector v = *d.braiding.ribbon();
    const std::string text = write_hopf(d.hopf, &d.braiding.r(), &v);
    std::istringstream in(text);
    const auto back = parse_hopf(in);
    REQUIRE(back.hopf.has_value());
    REQUIRE(back.r.has_value());
    CHECK(*back.r == d.braiding.r());
    CHECK(*back.ribbon == v);
    CHECK(back.hopf->antipode() == d.hopf.antipode());
    CHECK(back.hopf->counit() == d.hopf.counit());
    for (Index i = 0; i < d.hopf.dim(); ++i) CHECK(back.hopf->coproduct(i) == d.hopf.coproduct(i));
    CHECK(write_hopf(*back.hopf, &*back.r, &*back.ribbon) == text);
  }
}

TEST_CASE("Hopf file with a broken antipode is rejected") {
  const auto d = drinfeld_double(catalog_group("z2"), Q);
  std::string text = write_hopf(d.hopf);
  std::istringstream ok(text);
  CHECK_NOTHROW(parse_hopf(ok));
  // swap the first antipode row for a zero row
  const auto at = text.find("antipode\n") + 9;
  const auto eol = text.find('\n', at);
  text.replace(at, eol - at, "0 0 0 0");
  std::istringstream broken(text);
  CHECK_THROWS_AS(parse_hopf(broken), InvalidStructure);
  std::istringstream missing("algebra q 1\n0 0 0 1\nunit 1\n");
  CHECK_THROWS_AS(parse_hopf(missing), ParseError);
}

TEST_CASE("group files") {
  std::istringstream in("group 3\n0 1 2\n1 2 0\n2 0 1\n");
  const auto g = parse_group(in, "<in>", "c3");
  CHECK(g.order() == 3);
  CHECK(g.mul(1, 1) == 2);
  std::istringstream bad("group 2\n0 1\n1 1\n");
  CHECK_THROWS_AS(parse_group(bad), InvalidStructure);
  std::istringstream shortrow("group 2\n0 1\n1\n");
  CHECK(error_of([&] { parse_group(shortrow, "g"); }).find("g:3:") == 0);
  CHECK(resolve_group("s3").order() == 6);
}

TEST_CASE("S-matrix files") {
  const auto G = catalog_group("z3");
  const auto md = modular_data(drinfeld_double(G, default_char0_field(G))).data;
  const std::string text = write_smatrix(md);
  std::istringstream in(text);
  const auto back = parse_smatrix(in);
  CHECK(back.s == md.s);
  CHECK(back.labels == md.labels);
  REQUIRE(back.t.has_value());
  CHECK(*back.t == *md.t);
  std::istringstream plain("smatrix q 2\n1/2 1/2\n1/2 -1/2\n");
  const auto p = parse_smatrix(plain);
  CHECK(p.labels == std::vector<std::string>{"0", "1"});
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("irrep files supply the missing S3 x Z2 centralizer data") {
  const auto G = FiniteGroup::direct_product(catalog_group("s3"), catalog_group("z2"));
  const FieldSpec f = FieldSpec::cyclotomic(6);
  CHECK_THROWS_AS(centralizer_irreps(G, 0, f), CatalogGap);
  // (a, b) sits at index 2a + b; the two central classes {0} and {1} have all
  // of G as centralizer and need std (x) sign^b for both signs.
  std::ostringstream file;
  for (int cls : {0, 1})
    for (int sign : {1, -1}) {
      file << "irrep " << cls << " 2 1\ngenerators 2 6 1\n";  // 3-cycle, transposition, z
      file << "0 -1\n1 -1\n";  // r, t r t = r^-1
      file << "0 1\n1 0\n";
      file << sign << " 0\n0 " << sign << "\n";
    }
  std::istringstream in(file.str());
  const auto extra = parse_irreps(in, f, "s3z2.irr");
  CHECK(extra.size() == 2);
  CHECK(centralizer_irreps(G, 0, f, extra).size() == 6);
  const auto mods = simple_modules_char0(G, double_algebra(G, f), extra);
  CHECK(mods.size() == pbun_orbits(G).size());

  std::istringstream wrong_field("irrep 0 1 4\ngenerators 1\n1\n");
  CHECK_THROWS_AS(parse_irreps(wrong_field, f), ParseError);
  std::istringstream truncated("irrep 0 2 1\ngenerators 1 2\n1 0\n0 1\n");
  CHECK(error_of([&] { parse_irreps(truncated, f, "x"); }).find("unexpected end") != std::string::npos);
}
