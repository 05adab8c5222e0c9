#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vl/algebra.hpp"
#include "vl/group.hpp"

namespace vl {

// Standard algebras. Basis conventions:
//   group algebra      e_g at index g
//   function algebra   delta_g at index g
//   truncated k[t]/(t^m)  t^i at index i
//   matrix algebra     E_ab at index a*n + b
//   double D(G)        delta_g (x) x at index g*|G| + x
AlgebraPtr group_algebra(const FiniteGroup& g, const FieldSpec& f);
AlgebraPtr function_algebra(const FiniteGroup& g, const FieldSpec& f);
AlgebraPtr truncated_polynomial_algebra(const FieldSpec& f, int m);
AlgebraPtr matrix_algebra(const FieldSpec& f, int n);
AlgebraPtr double_algebra(const FiniteGroup& g, const FieldSpec& f);
inline Index double_index(const FiniteGroup& g, int delta, int x) { return delta * g.order() + x; }

// Default char-0 field for D(G): Q when the exponent is at most 2, else Q(zeta_exp).
FieldSpec default_char0_field(const FiniteGroup& g);

FiniteGroup catalog_group(const std::string& name);
std::vector<std::string> catalog_group_names();

struct CatalogAlgebra {
  AlgebraPtr algebra;
  std::optional<Vector> form;  // symmetric Frobenius form, when known
};

// Names: q-dual-numbers, f2-dual-numbers, m2-q, fp-z2z2, fp-truncated-<p>,
// <field>-group-<G>, <field>-functions-<G>, d-<G>-char<p>, d-<G>-char0.
// <field> is q, f<p> or cyc<n>.
CatalogAlgebra catalog_algebra(const std::string& name);
std::vector<std::string> catalog_algebra_names();
// Entries of catalog_algebra_names() that carry a Frobenius form.
std::vector<std::string> catalog_frobenius_names();

}  // namespace vl
