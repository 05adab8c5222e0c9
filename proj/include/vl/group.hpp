#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vl/field.hpp"

namespace vl {

// Finite group given by its multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<int>> table, std::string name = {});

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup klein();
  static FiniteGroup symmetric3();
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  int order() const { return n_; }
  const std::string& name() const { return name_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  // x g x^-1
  int conj(int x, int g) const { return mul(mul(x, g), inv(x)); }
  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
  int power(int g, long long e) const;
  int element_order(int g) const;
  int exponent() const;
  bool is_abelian() const;

  // Classes sorted by smallest element; each class sorted.
  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
  int class_of(int g) const { return class_of_[static_cast<std::size_t>(g)]; }
  std::vector<int> centralizer(int g) const;
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  int n_;
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

// A subgroup given by its sorted element list, with a small generating set.
struct Subgroup {
  std::vector<int> elements;
  std::vector<int> generators;
  int position(int g) const;  // index in elements, -1 if absent
  bool is_abelian(const FiniteGroup& g) const;
};
Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements);

// Representation of a subgroup: one matrix per element of Subgroup::elements.
struct GroupRepresentation {
  std::vector<Matrix> matrices;
  Index dim() const { return matrices.empty() ? 0 : matrices.front().rows(); }
  FieldElement character(std::size_t pos) const;
};

// Extends generator images to the whole subgroup; returns nullopt if they do
// not define a homomorphism.
std::optional<GroupRepresentation> extend_from_generators(const FiniteGroup& g, const Subgroup& h,
                                                          const std::vector<Matrix>& generator_images);

}  // namespace vl
