#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vl/algebra.hpp"

namespace vl {

constexpr int kDefaultDegreeBound = 4;

// Hochschild p-cochain: table column t holds the value on the basis tuple
// (i_1..i_p) with t = i_1 n^(p-1) + ... + i_p. Degree 0 has one column.
class Cochain {
 public:
  Cochain(AlgebraPtr algebra, int degree, Matrix table);

  static Cochain zero(const AlgebraPtr& a, int degree);
  static Cochain element(const AlgebraPtr& a, const Vector& z);
  static Cochain identity(const AlgebraPtr& a);
  static Cochain from_function(const AlgebraPtr& a, int degree,
                               const std::function<Vector(const std::vector<Index>&)>& fn);
  // Degree-1 cochain from its values on the basis.
  static Cochain linear_map(const AlgebraPtr& a, const Matrix& m);

  const AlgebraPtr& algebra() const { return algebra_; }
  int degree() const { return degree_; }
  const Matrix& table() const { return table_; }
  Vector at(const std::vector<Index>& tuple) const;
  // Coordinates in C^p = Hom(A^(x)p, A), index k + n*t.
  Vector coordinates() const;
  static Cochain from_coordinates(const AlgebraPtr& a, int degree, const Vector& v);

  bool is_zero() const { return is_zero_matrix(table_); }
  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  Cochain operator-() const;
  Cochain operator*(const FieldElement& c) const;
  bool operator==(const Cochain& o) const;
  bool operator!=(const Cochain& o) const { return !(*this == o); }

 private:
  AlgebraPtr algebra_;
  int degree_;
  Matrix table_;
};

Cochain cochain_differential(const Cochain& a, int bound = kDefaultDegreeBound);
Cochain cup(const Cochain& a, const Cochain& b, int bound = kDefaultDegreeBound);
// Inserts b into slot i (0-based) of a.
Cochain circle_i(const Cochain& a, const Cochain& b, int i, int bound = kDefaultDegreeBound);
// sum_i (-1)^((q-1)i) a o_i b
Cochain circle(const Cochain& a, const Cochain& b, int bound = kDefaultDegreeBound);
// [a,b] = -(-1)^((p-1)(q-1)) a o b + b o a
Cochain gerstenhaber_bracket(const Cochain& a, const Cochain& b, int bound = kDefaultDegreeBound);
// h(a (x) b) = sum_i (-1)^(i + (p-1-i)q) a o_i b
Cochain homotopy_h(const Cochain& a, const Cochain& b, int bound = kDefaultDegreeBound);

// Hochschild p-chain: coordinates of A^(x)(p+1), index big-endian in (a_0..a_p).
class Chain {
 public:
  Chain(AlgebraPtr algebra, int degree, Vector coords);
  const AlgebraPtr& algebra() const { return algebra_; }
  int degree() const { return degree_; }
  const Vector& coordinates() const { return coords_; }

 private:
  AlgebraPtr algebra_;
  int degree_;
  Vector coords_;
};

Chain chain_boundary(const Chain& c);

// Matrices of d: C^p -> C^(p+1) and b: C_p -> C_(p-1) in the coordinates above.
Matrix cochain_differential_matrix(const AlgebraPtr& a, int p, int bound = kDefaultDegreeBound);
Matrix chain_boundary_matrix(const AlgebraPtr& a, int p);

struct CohomologyGroup {
  int degree = 0;
  Index dimension = 0;
  Matrix cycles;          // kernel basis
  Matrix boundaries;      // image basis
  Matrix representatives;  // cycles completing a basis of the boundaries
  bool is_cycle(const Vector& v) const;
  bool is_boundary(const Vector& v) const;
  // cycle whose class is nonzero
  bool nonzero_class(const Vector& v) const { return is_cycle(v) && !is_boundary(v); }
};

CohomologyGroup cohomology(const AlgebraPtr& a, int p, int bound = kDefaultDegreeBound);
CohomologyGroup homology(const AlgebraPtr& a, int p, int bound = kDefaultDegreeBound);

// Random-sample check, for all 0 <= p, q <= max_degree, of
//   h(dx, y) + (-1)^p h(x, dy) + d h(x, y) = (-1)^(pq) y cup x - x cup y
// and of the sign ledger sum_i (-1)^(i + (p-1-i)q) x o_i y = (-1)^(pq+q) x o y.
// Cochains have entries in {-3..3}, drawn from a fixed-seed generator.
struct HomotopyReport {
  bool pass = true;
  std::size_t samples_checked = 0;
  std::vector<std::string> lines;
  std::optional<std::pair<int, int>> witness;  // (p, q) of the first failure
};
HomotopyReport homotopy_check(const AlgebraPtr& a, int max_degree, int samples, std::uint32_t seed = 1);

}  // namespace vl
