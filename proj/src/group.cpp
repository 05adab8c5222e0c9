#include "vl/group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <optional>

#include "vl/error.hpp"

namespace vl {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::string name)
    : n_(static_cast<int>(table.size())), name_(std::move(name)), table_(std::move(table)) {
  if (n_ < 1) throw InvalidStructure("group table is empty");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n_) throw InvalidStructure("group table is not square");
    for (int x : row)
      if (x < 0 || x >= n_) throw InvalidStructure("group table entry out of range");
  }
  for (int a = 0; a < n_; ++a)
    if (mul(0, a) != a || mul(a, 0) != a) throw InvalidStructure("element 0 is not the identity");
  inverse_.assign(static_cast<std::size_t>(n_), -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) inverse_[static_cast<std::size_t>(a)] = b;
    if (inverse_[static_cast<std::size_t>(a)] < 0)
      throw InvalidStructure("element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw InvalidStructure("group table is not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                                 "," + std::to_string(c) + ")");
  class_of_.assign(static_cast<std::size_t>(n_), -1);
  for (int g = 0; g < n_; ++g) {
    if (class_of_[static_cast<std::size_t>(g)] >= 0) continue;
    std::vector<int> cls;
    for (int x = 0; x < n_; ++x) cls.push_back(conj(x, g));
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (int y : cls) class_of_[static_cast<std::size_t>(y)] = static_cast<int>(classes_.size());
    classes_.push_back(std::move(cls));
  }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({{0}}, "z1"); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw InvalidStructure("cyclic group order must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return FiniteGroup(std::move(t), "z" + std::to_string(n));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order() * b.order();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          a.mul(x / b.order(), y / b.order()) * b.order() + b.mul(x % b.order(), y % b.order());
  return FiniteGroup(std::move(t), a.name() + b.name());
}

FiniteGroup FiniteGroup::klein() {
  FiniteGroup g = direct_product(cyclic(2), cyclic(2));
  g.name_ = "z2z2";
  return g;
}

FiniteGroup FiniteGroup::symmetric3() {
  // Permutations of {0,1,2}: id, two 3-cycles, three transpositions.
  const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
  auto index = [&](const std::array<int, 3>& p) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i)] = perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = index(c);
    }
  return FiniteGroup(std::move(t), "s3");
}

int FiniteGroup::power(int g, long long e) const {
  const int ord = element_order(g);
  e %= ord;
  if (e < 0) e += ord;
  int r = 0;
  for (long long k = 0; k < e; ++k) r = mul(r, g);
  return r;
}

int FiniteGroup::element_order(int g) const {
  int x = g, k = 1;
  while (x != 0) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int g = 0; g < n_; ++g) e = std::lcm(e, element_order(g));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (!commute(a, b)) return false;
  return true;
}

std::vector<int> FiniteGroup::centralizer(int g) const {
  std::vector<int> c;
  for (int x = 0; x < n_; ++x)
    if (commute(x, g)) c.push_back(x);
  return c;
}

int Subgroup::position(int g) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), g);
  return (it != elements.end() && *it == g) ? static_cast<int>(it - elements.begin()) : -1;
}

bool Subgroup::is_abelian(const FiniteGroup& g) const {
  for (int a : elements)
    for (int b : elements)
      if (!g.commute(a, b)) return false;
  return true;
}

namespace {
std::vector<int> closure(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int s : gens) {
      const int y = g.mul(x, s);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (seen[static_cast<std::size_t>(x)]) out.push_back(x);
  return out;
}
}  // namespace

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  Subgroup h;
  h.elements = elements;
  // Greedy generators, preferring elements of large order.
  std::vector<int> candidates = elements;
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
  std::vector<int> span{0};
  for (int c : candidates) {
    if (span.size() == elements.size()) break;
    if (std::binary_search(span.begin(), span.end(), c)) continue;
    h.generators.push_back(c);
    span = closure(g, h.generators);
  }
  if (span != elements) throw InvalidStructure("element list is not a subgroup");
  return h;
}

FieldElement GroupRepresentation::character(std::size_t pos) const { return matrices[pos].trace(); }

std::optional<GroupRepresentation> extend_from_generators(const FiniteGroup& g, const Subgroup& h,
                                                          const std::vector<Matrix>& images) {
  if (images.size() != h.generators.size()) throw DimensionMismatch("one image per generator is required");
  const std::size_t n = h.elements.size();
  if (images.empty()) {
    // trivial subgroup: the 1-dim trivial representation is the only extension of "no data"
    return std::nullopt;
  }
  const FieldSpec f = images.front()(0, 0).field();
  const Index d = images.front().rows();
  std::vector<std::optional<Matrix>> img(n);
  img[static_cast<std::size_t>(h.position(0))] = identity_matrix(f, d);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    const Matrix& mx = *img[static_cast<std::size_t>(h.position(x))];
    for (std::size_t s = 0; s < h.generators.size(); ++s) {
      const int y = g.mul(x, h.generators[s]);
      const Matrix my = mx * images[s];
      auto& slot = img[static_cast<std::size_t>(h.position(y))];
      if (!slot) {
        slot = my;
        queue.push_back(y);
      } else if (*slot != my) {
        return std::nullopt;
      }
    }
  }
  GroupRepresentation rep;
  for (auto& m : img) rep.matrices.push_back(std::move(*m));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const int ab = g.mul(h.elements[a], h.elements[b]);
      if (Matrix(rep.matrices[a] * rep.matrices[b]) != rep.matrices[static_cast<std::size_t>(h.position(ab))])
        return std::nullopt;
    }
  return rep;
}

}  // namespace vl
