#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "vl/algebra.hpp"
#include "vl/doubles.hpp"
#include "vl/fusion.hpp"
#include "vl/group.hpp"
#include "vl/hopf.hpp"

namespace vl {

// Text formats, one record per line, '#' starts a comment.
//
//   algebra <field> <dim>
//   [product] i j k value       e_i e_j contains value * e_k
//   unit v_0 ... v_{n-1}
//   form v_0 ... v_{n-1}        optional symmetric Frobenius form
//
// Hopf files continue with
//   coproduct i j k value       Delta(e_i) contains value * e_j (x) e_k
//   counit v_0 ... v_{n-1}
//   antipode                    then n rows; column j is S(e_j)
//   R i j value                 optional, coefficient of e_i (x) e_j
//   ribbon v_0 ... v_{n-1}      optional
//
//   group <n>                   then n rows of the table, identity 0
//   smatrix <field> <n>         then n rows; optional "labels ..." and "twist ..."
//   irrep <class> <dim> <cyc-n> then "generators g_1 ... g_k" and k matrices of dim rows

struct AlgebraFile {
  AlgebraPtr algebra;
  std::optional<Vector> form;
};

struct HopfFile {
  AlgebraPtr algebra;
  std::optional<Vector> form;
  std::optional<HopfAlgebra> hopf;
  std::optional<Tensor> r;
  std::optional<Vector> ribbon;
};

AlgebraFile parse_algebra(std::istream& in, const std::string& source = "<input>");
HopfFile parse_hopf(std::istream& in, const std::string& source = "<input>");
FiniteGroup parse_group(std::istream& in, const std::string& source = "<input>", std::string name = {});
ModularData parse_smatrix(std::istream& in, const std::string& source = "<input>");
// Matrix entries are read in target; the declared cyclotomic order must be 1
// or match target.
IrrepCatalog parse_irreps(std::istream& in, const FieldSpec& target, const std::string& source = "<input>");

std::string write_algebra(const StructureAlgebra& a, const std::optional<Vector>& form = std::nullopt);
std::string write_hopf(const HopfAlgebra& h, const Tensor* r = nullptr, const Vector* ribbon = nullptr);
std::string write_smatrix(const ModularData& md);

// A path to an existing file is read; anything else is a catalog name.
FiniteGroup resolve_group(const std::string& name_or_path);
AlgebraFile resolve_algebra(const std::string& name_or_path);
HopfFile load_hopf(const std::string& path);
ModularData load_smatrix(const std::string& path);
IrrepCatalog load_irreps(const std::string& path, const FieldSpec& target);

}  // namespace vl
