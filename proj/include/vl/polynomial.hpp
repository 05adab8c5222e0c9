#pragma once

#include <utility>
#include <vector>

#include "vl/field.hpp"

namespace vl {

// Univariate polynomial, coefficient of t^k at index k, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(FieldSpec f, std::vector<FieldElement> coeffs);
  static Polynomial constant(const FieldSpec& f, const FieldElement& c);
  static Polynomial monomial(const FieldSpec& f, int degree);
  // t - a
  static Polynomial linear(const FieldSpec& f, const FieldElement& a);

  const FieldSpec& field() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<FieldElement>& coefficients() const { return c_; }
  FieldElement coefficient(int k) const;
  FieldElement leading() const;
  Polynomial monic() const;
  Polynomial derivative() const;
  FieldElement operator()(const FieldElement& x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  FieldSpec f_;
  std::vector<FieldElement> c_;
  void trim();
};

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial gcd(const Polynomial& a, const Polynomial& b);  // monic
// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
struct ExtendedGcd {
  Polynomial g, s, t;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

struct Root {
  FieldElement value;
  int multiplicity = 1;
};

// All roots of p lying in its field, with multiplicities. Exact over Q and
// F_p; over Q(zeta_n) candidates come from a numerical eigenvalue solve and
// every reported root is checked exactly. The third member of the result is
// the degree not accounted for by the reported roots.
struct RootSet {
  std::vector<Root> roots;
  int unresolved_degree = 0;
};
RootSet roots_in_field(const Polynomial& p);

}  // namespace vl
