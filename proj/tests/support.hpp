#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "vl/field.hpp"

namespace vl::test {

inline FieldElement num(const FieldSpec& f, const std::string& s) { return FieldElement::parse(f, s); }

inline Matrix mat(const FieldSpec& f, std::initializer_list<std::initializer_list<const char*>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  Matrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (const char* x : row) m(i, j++) = FieldElement::parse(f, x);
    ++i;
  }
  return m;
}

inline Vector vec(const FieldSpec& f, std::initializer_list<const char*> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const char* x : xs) v(i++) = FieldElement::parse(f, x);
  return v;
}

// Small random field elements; about a third of them zero so ranks vary.
inline FieldElement random_element(const FieldSpec& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(-3, 3);
  if (rng() % 3 == 0) return FieldElement::zero(f);
  if (f.kind() == FieldKind::cyclotomic) {
    std::vector<mpq_class> c(static_cast<std::size_t>(f.degree()));
    for (auto& x : c) x = pick(rng);
    return FieldElement::from_coefficients(f, c);
  }
  if (f.kind() == FieldKind::rationals) {
    std::uniform_int_distribution<int> den(1, 3);
    return FieldElement::from_rational(f, mpq_class(pick(rng), den(rng)));
  }
  return FieldElement::from_int(f, pick(rng));
}

inline Matrix random_matrix(const FieldSpec& f, Index r, Index c, std::mt19937& rng) {
  Matrix m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = random_element(f, rng);
  return m;
}

inline Vector random_vector(const FieldSpec& f, Index n, std::mt19937& rng) { return random_matrix(f, n, 1, rng); }

inline Index power_of(Index n, int e) {
  Index r = 1;
  for (int k = 0; k < e; ++k) r *= n;
  return r;
}

}  // namespace vl::test
