#include "vl/catalog.hpp"

#include <regex>

#include "vl/error.hpp"

namespace vl {

namespace {

Vector make_unit(const FieldSpec& f, Index n, const std::vector<Index>& ones) {
  Vector u = zero_vector(f, n);
  for (Index i : ones) u(i) = FieldElement::one(f);
  return u;
}

FieldSpec parse_field_token(const std::string& tok) {
  if (tok == "q") return FieldSpec::rationals();
  std::smatch m;
  static const std::regex fp("f(\\d+)"), cyc("cyc(\\d+)");
  if (std::regex_match(tok, m, fp)) return FieldSpec::prime(std::stoll(m[1]));
  if (std::regex_match(tok, m, cyc)) return FieldSpec::cyclotomic(std::stoll(m[1]));
  throw CatalogGap("unknown field token '" + tok + "' in catalog name");
}

Vector group_form(const FiniteGroup& g, const FieldSpec& f) { return unit_vector(f, g.order(), 0); }

Vector double_form(const FiniteGroup& g, const FieldSpec& f) {
  Vector v = zero_vector(f, g.order() * g.order());
  for (int d = 0; d < g.order(); ++d) v(double_index(g, d, 0)) = FieldElement::one(f);
  return v;
}

}  // namespace

AlgebraPtr group_algebra(const FiniteGroup& g, const FieldSpec& f) {
  std::vector<StructureTerm> terms;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) terms.push_back({a, b, g.mul(a, b), FieldElement::one(f)});
  return make_algebra(f, g.order(), terms, unit_vector(f, g.order(), 0), f.to_string() + "[" + g.name() + "]");
}

AlgebraPtr function_algebra(const FiniteGroup& g, const FieldSpec& f) {
  std::vector<StructureTerm> terms;
  std::vector<Index> all;
  for (int a = 0; a < g.order(); ++a) {
    terms.push_back({a, a, a, FieldElement::one(f)});
    all.push_back(a);
  }
  return make_algebra(f, g.order(), terms, make_unit(f, g.order(), all), "functions on " + g.name());
}

AlgebraPtr truncated_polynomial_algebra(const FieldSpec& f, int m) {
  if (m < 1) throw InvalidStructure("truncation degree must be positive");
  std::vector<StructureTerm> terms;
  for (int a = 0; a < m; ++a)
    for (int b = 0; a + b < m; ++b) terms.push_back({a, b, a + b, FieldElement::one(f)});
  return make_algebra(f, m, terms, unit_vector(f, m, 0), f.to_string() + "[t]/(t^" + std::to_string(m) + ")");
}

AlgebraPtr matrix_algebra(const FieldSpec& f, int n) {
  std::vector<StructureTerm> terms;
  std::vector<Index> diag;
  for (int a = 0; a < n; ++a) {
    diag.push_back(a * n + a);
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) terms.push_back({a * n + b, b * n + d, a * n + d, FieldElement::one(f)});
  }
  return make_algebra(f, n * n, terms, make_unit(f, n * n, diag), "M" + std::to_string(n) + "(" + f.to_string() + ")");
}

AlgebraPtr double_algebra(const FiniteGroup& g, const FieldSpec& f) {
  const int n = g.order();
  std::vector<StructureTerm> terms;
  std::vector<Index> unit;
  for (int d = 0; d < n; ++d) {
    unit.push_back(double_index(g, d, 0));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        // (delta_d x)(delta_h y) = [d = x h x^-1] delta_d xy
        const int h = g.conj(g.inv(x), d);
        terms.push_back({double_index(g, d, x), double_index(g, h, y), double_index(g, d, g.mul(x, y)),
                         FieldElement::one(f)});
      }
  }
  return make_algebra(f, n * n, terms, make_unit(f, n * n, unit), "D(" + g.name() + ") over " + f.to_string());
}

FieldSpec default_char0_field(const FiniteGroup& g) {
  const int e = g.exponent();
  return e <= 2 ? FieldSpec::rationals() : FieldSpec::cyclotomic(e);
}

FiniteGroup catalog_group(const std::string& name) {
  if (name == "z1" || name == "trivial") return FiniteGroup::trivial();
  if (name == "z2z2" || name == "klein") return FiniteGroup::klein();
  if (name == "s3") return FiniteGroup::symmetric3();
  static const std::regex zn("z(\\d+)");
  std::smatch m;
  if (std::regex_match(name, m, zn)) {
    const int n = std::stoi(m[1]);
    if (n < 1 || n > 24) throw CatalogGap("cyclic groups in the catalog have order 1..24, got " + name);
    return FiniteGroup::cyclic(n);
  }
  throw CatalogGap("no catalog group named '" + name + "'");
}

std::vector<std::string> catalog_group_names() { return {"z1", "z2", "z3", "z4", "z2z2", "s3"}; }

CatalogAlgebra catalog_algebra(const std::string& name) {
  const FieldSpec Q = FieldSpec::rationals();
  if (name == "q-dual-numbers" || name == "f2-dual-numbers") {
    const FieldSpec f = name[0] == 'q' ? Q : FieldSpec::prime(2);
    return {truncated_polynomial_algebra(f, 2), unit_vector(f, 2, 1)};
  }
  if (name == "m2-q") {
    auto a = matrix_algebra(Q, 2);
    return {a, make_unit(Q, 4, {0, 3})};
  }
  if (name == "q-one") return {truncated_polynomial_algebra(Q, 1), unit_vector(Q, 1, 0)};
  if (name == "fp-z2z2") {
    const FieldSpec f2 = FieldSpec::prime(2);
    const FiniteGroup k = FiniteGroup::klein();
    return {group_algebra(k, f2), group_form(k, f2)};
  }
  std::smatch m;
  static const std::regex truncated("fp-truncated-(\\d+)");
  if (std::regex_match(name, m, truncated)) {
    const long long p = std::stoll(m[1]);
    const FieldSpec f = FieldSpec::prime(p);
    return {truncated_polynomial_algebra(f, static_cast<int>(p)), unit_vector(f, p, p - 1)};
  }
  static const std::regex grp("([a-z0-9]+)-group-([a-z0-9]+)");
  if (std::regex_match(name, m, grp)) {
    const FieldSpec f = parse_field_token(m[1]);
    const FiniteGroup g = catalog_group(m[2]);
    return {group_algebra(g, f), group_form(g, f)};
  }
  static const std::regex fun("([a-z0-9]+)-functions-([a-z0-9]+)");
  if (std::regex_match(name, m, fun)) {
    const FieldSpec f = parse_field_token(m[1]);
    const FiniteGroup g = catalog_group(m[2]);
    std::vector<Index> all;
    for (int a = 0; a < g.order(); ++a) all.push_back(a);
    return {function_algebra(g, f), make_unit(f, g.order(), all)};
  }
  static const std::regex dbl("d-([a-z0-9]+)-char(\\d+)");
  if (std::regex_match(name, m, dbl)) {
    const FiniteGroup g = catalog_group(m[1]);
    const long long p = std::stoll(m[2]);
    const FieldSpec f = p == 0 ? default_char0_field(g) : FieldSpec::prime(p);
    return {double_algebra(g, f), double_form(g, f)};
  }
  throw CatalogGap("no catalog algebra named '" + name + "'");
}

std::vector<std::string> catalog_algebra_names() {
  return {"q-one",        "q-dual-numbers", "f2-dual-numbers", "m2-q",          "q-group-z2",
          "cyc3-group-z3", "q-group-s3",    "f2-group-z2",     "f3-group-z3",   "fp-z2z2",      "fp-truncated-2",
          "fp-truncated-3", "fp-truncated-5", "f2-functions-z2", "q-functions-s3", "d-z2-char0",  "d-z3-char0",
          "d-z2-char2",    "d-z3-char3",    "d-s3-char0"};
}

std::vector<std::string> catalog_frobenius_names() { return catalog_algebra_names(); }

}  // namespace vl
