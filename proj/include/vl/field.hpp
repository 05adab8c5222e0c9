#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace vl {

enum class FieldKind { rationals, prime, cyclotomic };

// Q, F_p or Q(zeta_n). Q(zeta_1) and Q(zeta_2) are stored as plain Q.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals();
  static FieldSpec prime(std::int64_t p);
  static FieldSpec cyclotomic(std::int64_t n);
  // "q", "fp:<p>", "cyc:<n>"
  static FieldSpec parse(std::string_view text);

  FieldKind kind() const { return kind_; }
  // p for F_p, n for Q(zeta_n), 1 for Q.
  std::int64_t modulus() const { return modulus_; }
  std::int64_t characteristic() const { return kind_ == FieldKind::prime ? modulus_ : 0; }
  // Degree over the prime field.
  int degree() const;
  // Whether the field contains a primitive d-th root of unity.
  bool has_root_of_unity(std::int64_t d) const;
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldKind kind_ = FieldKind::rationals;
  std::int64_t modulus_ = 1;
};

std::int64_t euler_phi(std::int64_t n);
bool is_prime(std::int64_t n);

// An exact scalar. Elements built from a bare integer (Eigen writes Scalar(0)
// and Scalar(1) internally) stay untyped until they meet a typed element.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(int v) : small_(v) {}  // NOLINT: implicit on purpose, Eigen needs it
  FieldElement(long v) : small_(v) {}  // NOLINT

  static FieldElement zero(const FieldSpec& f) { return from_int(f, 0); }
  static FieldElement one(const FieldSpec& f) { return from_int(f, 1); }
  static FieldElement from_int(const FieldSpec& f, std::int64_t v);
  static FieldElement from_rational(const FieldSpec& f, const mpq_class& q);
  // Power-basis coefficients of a cyclotomic number (reduced on the way in).
  static FieldElement from_coefficients(const FieldSpec& f, const std::vector<mpq_class>& c);
  // zeta_n for Q(zeta_n); throws for other fields.
  static FieldElement zeta(const FieldSpec& f);
  // A fixed primitive d-th root of unity, or Unsupported if the field has none.
  static FieldElement root_of_unity(const FieldSpec& f, std::int64_t d);
  static FieldElement parse(const FieldSpec& f, std::string_view text);

  bool typed() const { return tag_ != Tag::untyped; }
  FieldSpec field() const;
  // Lifts an untyped value into f; typed values must already live in f.
  FieldElement in(const FieldSpec& f) const;

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::int64_t e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }
  FieldElement& operator/=(const FieldElement& b) { return *this = *this / b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  // Galois automorphism zeta -> zeta^k (k coprime to n); identity on Q and F_p.
  FieldElement galois(std::int64_t k) const;
  // Complex conjugation (zeta -> zeta^-1).
  FieldElement conj() const { return galois(-1); }
  // Numerical value under zeta_n = exp(2 pi i / n). Char 0 only.
  std::complex<double> to_complex() const;
  // The value as a rational number if it is one (char 0).
  std::optional<mpq_class> as_rational() const;
  // For F_p elements: the residue in [0, p).
  std::int64_t residue() const;
  // Power-basis coefficients (size 1 for Q).
  std::vector<mpq_class> coefficients() const;

  std::string to_string() const;

 private:
  enum class Tag : std::uint8_t { untyped, rational, prime, cyclotomic };

  Tag tag_ = Tag::untyped;
  std::int64_t modulus_ = 0;
  std::int64_t small_ = 0;     // untyped value or F_p residue
  std::optional<mpq_class> q_;  // rational value; empty for other tags so copies stay cheap
  std::vector<mpq_class> c_;   // cyclotomic coefficients

  static FieldElement promote(const FieldElement& a, const FieldElement& like);
  friend struct FieldOps;
};

bool is_zero(const FieldElement& x);
std::ostream& operator<<(std::ostream& os, const FieldElement& x);

using Matrix = Eigen::Matrix<FieldElement, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<FieldElement, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

Matrix zero_matrix(const FieldSpec& f, Index rows, Index cols);
Matrix identity_matrix(const FieldSpec& f, Index n);
Vector zero_vector(const FieldSpec& f, Index n);
Vector unit_vector(const FieldSpec& f, Index n, Index i);

}  // namespace vl

namespace Eigen {
template <>
struct NumTraits<vl::FieldElement> : GenericNumTraits<vl::FieldElement> {
  using Real = vl::FieldElement;
  using NonInteger = vl::FieldElement;
  using Literal = vl::FieldElement;
  using Nested = vl::FieldElement;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};
}  // namespace Eigen
