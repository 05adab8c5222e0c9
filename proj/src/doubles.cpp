#include "vl/doubles.hpp"

#include <algorithm>
#include <set>

#include "vl/catalog.hpp"
#include "vl/error.hpp"

namespace vl {

HopfAlgebra group_algebra_hopf(const FiniteGroup& g, const FieldSpec& f) {
  const int n = g.order();
  std::vector<HopfAlgebra::CoproductTerm> delta;
  Vector eps(n);
  Matrix s = zero_matrix(f, n, n);
  for (int x = 0; x < n; ++x) {
    delta.push_back({x, x, x, FieldElement::one(f)});
    eps(x) = FieldElement::one(f);
    s(g.inv(x), x) = FieldElement::one(f);
  }
  return HopfAlgebra(group_algebra(g, f), delta, eps, s, f.to_string() + "[" + g.name() + "]");
}

HopfAlgebra function_algebra_hopf(const FiniteGroup& g, const FieldSpec& f) {
  const int n = g.order();
  std::vector<HopfAlgebra::CoproductTerm> delta;
  Vector eps = zero_vector(f, n);
  Matrix s = zero_matrix(f, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) delta.push_back({g.mul(a, b), a, b, FieldElement::one(f)});
  eps(0) = FieldElement::one(f);
  for (int x = 0; x < n; ++x) s(g.inv(x), x) = FieldElement::one(f);
  return HopfAlgebra(function_algebra(g, f), delta, eps, s, f.to_string() + "^" + g.name());
}

DrinfeldDouble drinfeld_double(const FiniteGroup& g, const FieldSpec& f) {
  const int n = g.order();
  const Index dim = static_cast<Index>(n) * n;
  const FieldElement one = FieldElement::one(f);
  std::vector<HopfAlgebra::CoproductTerm> delta;
  Vector eps = zero_vector(f, dim);
  Matrix s = zero_matrix(f, dim, dim);
  for (int d = 0; d < n; ++d)
    for (int x = 0; x < n; ++x) {
      const Index i = double_index(g, d, x);
      for (int a = 0; a < n; ++a)
        delta.push_back({i, double_index(g, a, x), double_index(g, g.mul(g.inv(a), d), x), one});
      if (d == 0) eps(i) = one;
      const int xi = g.inv(x);
      s(double_index(g, g.conj(xi, g.inv(d)), xi), i) = one;
    }
  HopfAlgebra h(double_algebra(g, f), delta, eps, s, "D(" + g.name() + ")");

  Tensor r(f, dim, 2);
  for (int d = 0; d < n; ++d)
    for (int k = 0; k < n; ++k) r.add({double_index(g, d, 0), double_index(g, k, d)}, one);
  Vector v = zero_vector(f, dim);
  for (int d = 0; d < n; ++d) v(double_index(g, d, g.inv(d))) = one;
  QuasiTriangular qt(h, std::move(r), std::move(v));
  return DrinfeldDouble{g, std::move(h), std::move(qt)};
}

// ---- commuting pairs ----

std::vector<CommutingPairOrbit> pbun_orbits(const FiniteGroup& g) {
  const int n = g.order();
  std::set<CommutingPair> seen;
  std::vector<CommutingPairOrbit> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!g.commute(a, b) || seen.count({a, b})) continue;
      std::set<CommutingPair> orbit;
      for (int x = 0; x < n; ++x) orbit.insert({g.conj(x, a), g.conj(x, b)});
      CommutingPairOrbit o;
      o.members.assign(orbit.begin(), orbit.end());
      o.representative = o.members.front();
      seen.insert(orbit.begin(), orbit.end());
      out.push_back(std::move(o));
    }
  return out;
}

std::size_t orbit_index(const std::vector<CommutingPairOrbit>& orbits, const CommutingPair& p) {
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (std::binary_search(orbits[i].members.begin(), orbits[i].members.end(), p)) return i;
  throw InvalidStructure("pair (" + std::to_string(p.first) + "," + std::to_string(p.second) +
                         ") lies in no commuting-pair orbit");
}

SL2Z sl2z_multiply(const SL2Z& a, const SL2Z& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

CommutingPair sl2z_act(const FiniteGroup& g, const SL2Z& m, const CommutingPair& p) {
  if (m[0] * m[3] - m[1] * m[2] != 1) throw InvalidStructure("SL(2,Z) element must have determinant 1");
  const auto [a, b] = p;
  if (!g.commute(a, b)) throw InvalidStructure("sl2z_act needs a commuting pair");
  // M^-1 = {d, -b, -c, a}; e_j -> a^(M^-1)_{1j} b^(M^-1)_{2j}
  const long long i11 = m[3], i12 = -m[1], i21 = -m[2], i22 = m[0];
  return {g.mul(g.power(a, i11), g.power(b, i21)), g.mul(g.power(a, i12), g.power(b, i22))};
}

std::vector<std::size_t> sl2z_action(const FiniteGroup& g, const std::vector<CommutingPairOrbit>& orbits,
                                     const SL2Z& m) {
  std::vector<std::size_t> out;
  for (const auto& o : orbits) out.push_back(orbit_index(orbits, sl2z_act(g, m, o.representative)));
  return out;
}

Vector orbit_indicator(const FiniteGroup& g, const FieldSpec& f, const CommutingPairOrbit& o) {
  Vector v = zero_vector(f, static_cast<Index>(g.order()) * g.order());
  for (const auto& [a, b] : o.members) v(double_index(g, b, a)) = FieldElement::one(f);
  return v;
}

Matrix bundle_permutation_matrix(const FiniteGroup& g, const FieldSpec& f,
                                 const std::vector<CommutingPairOrbit>& orbits, const SL2Z& m) {
  const auto perm = sl2z_action(g, orbits, m);
  const Index k = static_cast<Index>(orbits.size());
  Matrix p = zero_matrix(f, k, k);
  for (Index o = 0; o < k; ++o) p(static_cast<Index>(perm[static_cast<std::size_t>(o)]), o) = FieldElement::one(f);
  return p;
}

// ---- simples ----

namespace {

std::vector<GroupRepresentation> one_dimensional(const FiniteGroup& g, const Subgroup& c, const FieldSpec& f) {
  std::vector<std::vector<FieldElement>> choices;
  for (int gen : c.generators) {
    const int o = g.element_order(gen);
    if (!f.has_root_of_unity(o))
      throw NonSplit("field " + f.to_string() + " lacks a primitive " + std::to_string(o) + "-th root of unity");
    const FieldElement z = FieldElement::root_of_unity(f, o);
    std::vector<FieldElement> powers;
    for (int e = 0; e < o; ++e) powers.push_back(z.pow(e));
    choices.push_back(std::move(powers));
  }
  std::vector<GroupRepresentation> out;
  std::vector<std::size_t> pos(choices.size(), 0);
  for (;;) {
    std::vector<Matrix> images;
    for (std::size_t k = 0; k < choices.size(); ++k) {
      Matrix m(1, 1);
      m(0, 0) = choices[k][pos[k]];
      images.push_back(std::move(m));
    }
    if (images.empty()) {
      GroupRepresentation triv;
      triv.matrices.assign(c.elements.size(), identity_matrix(f, 1));
      out.push_back(std::move(triv));
      return out;
    }
    if (auto rep = extend_from_generators(g, c, images)) out.push_back(std::move(*rep));
    std::size_t k = choices.size();
    while (k > 0 && ++pos[k - 1] == choices[k - 1].size()) pos[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

// The reflection representation of a nonabelian group of order 6.
std::optional<GroupRepresentation> order_six_irrep(const FiniteGroup& g, const Subgroup& c, const FieldSpec& f) {
  int r = -1, s = -1;
  for (int x : c.elements) {
    if (r < 0 && g.element_order(x) == 3) r = x;
    if (s < 0 && g.element_order(x) == 2) s = x;
  }
  if (r < 0 || s < 0) return std::nullopt;
  Subgroup h{c.elements, {r, s}};
  Matrix mr(2, 2), ms(2, 2);
  mr << FieldElement::zero(f), FieldElement::from_int(f, -1), FieldElement::one(f), FieldElement::from_int(f, -1);
  ms << FieldElement::zero(f), FieldElement::one(f), FieldElement::one(f), FieldElement::zero(f);
  return extend_from_generators(g, h, {mr, ms});
}

}  // namespace

std::vector<GroupRepresentation> centralizer_irreps(const FiniteGroup& g, int conjugacy_class, const FieldSpec& f,
                                                    const IrrepCatalog& extra) {
  if (f.characteristic() != 0) throw Unsupported("simple D(G)-modules are built only in characteristic 0");
  const int rep = g.conjugacy_classes()[static_cast<std::size_t>(conjugacy_class)].front();
  const Subgroup c = make_subgroup(g, g.centralizer(rep));
  auto irreps = one_dimensional(g, c, f);
  if (!c.is_abelian(g) && c.elements.size() == 6)
    if (auto two = order_six_irrep(g, c, f)) irreps.push_back(std::move(*two));
  if (auto it = extra.find(conjugacy_class); it != extra.end()) {
    for (const auto& data : it->second) {
      Subgroup h{c.elements, data.generators};
      for (int x : data.generators)
        if (h.position(x) < 0) throw InvalidStructure("irrep generator is not in the centralizer");
      std::vector<Matrix> images;
      for (const auto& m : data.images) {
        Matrix t = m;
        for (Index i = 0; i < t.rows(); ++i)
          for (Index j = 0; j < t.cols(); ++j) t(i, j) = t(i, j).in(f);
        images.push_back(std::move(t));
      }
      auto r = extend_from_generators(g, h, images);
      if (!r) throw InvalidStructure("catalog irrep for class " + std::to_string(conjugacy_class) +
                                     " is not a homomorphism");
      irreps.push_back(std::move(*r));
    }
  }
  Index total = 0;
  for (const auto& r : irreps) total += r.dim() * r.dim();
  if (total != static_cast<Index>(c.elements.size())) {
    std::string elems;
    for (int x : c.elements) elems += (elems.empty() ? "" : ",") + std::to_string(x);
    throw CatalogGap("centralizer {" + elems + "} of class " + std::to_string(conjugacy_class) + " in " + g.name() +
                     ": known irreps give sum of squares " + std::to_string(total) + " instead of " +
                     std::to_string(c.elements.size()));
  }
  return irreps;
}

std::vector<DoubleSimple> simple_modules_char0(const FiniteGroup& g, const AlgebraPtr& double_alg,
                                               const IrrepCatalog& extra) {
  const FieldSpec& f = double_alg->field();
  const int n = g.order();
  if (double_alg->dim() != static_cast<Index>(n) * n) throw DimensionMismatch("algebra is not D(G) for this group");
  std::vector<DoubleSimple> out;
  const auto& classes = g.conjugacy_classes();
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const auto& cls = classes[ci];
    const int gc = cls.front();
    const Subgroup c = make_subgroup(g, g.centralizer(gc));
    // t_i g_c t_i^-1 = cls[i]
    std::vector<int> t;
    for (int k : cls)
      for (int x = 0; x < n; ++x)
        if (g.conj(x, gc) == k) {
          t.push_back(x);
          break;
        }
    const auto slot = [&](int k) {
      return static_cast<Index>(std::lower_bound(cls.begin(), cls.end(), k) - cls.begin());
    };
    const auto irreps = centralizer_irreps(g, static_cast<int>(ci), f, extra);
    const Index m = static_cast<Index>(cls.size());
    for (std::size_t ri = 0; ri < irreps.size(); ++ri) {
      const auto& rho = irreps[ri];
      const Index d = rho.dim();
      std::vector<Matrix> act;
      for (int h = 0; h < n; ++h)
        for (int x = 0; x < n; ++x) {
          Matrix a = zero_matrix(f, m * d, m * d);
          for (Index i = 0; i < m; ++i) {
            const int xt = g.mul(x, t[static_cast<std::size_t>(i)]);
            const int deg = g.conj(xt, gc);
            if (deg != h) continue;
            const Index j = slot(deg);
            const int cel = g.mul(g.inv(t[static_cast<std::size_t>(j)]), xt);
            a.block(j * d, i * d, d, d) = rho.matrices[static_cast<std::size_t>(c.position(cel))];
          }
          act.push_back(std::move(a));
        }
      out.push_back(DoubleSimple{
          AlgebraModule(double_alg, std::move(act), "X(" + std::to_string(ci) + "," + std::to_string(ri) + ")"),
          static_cast<int>(ci), ri, d});
    }
  }
  return out;
}

ModularSMatrix smatrix_modular(const DrinfeldDouble& d, const IrrepCatalog& extra) {
  const auto& h = d.hopf;
  const FieldSpec& f = h.field();
  ModularSMatrix out;
  out.simples = simple_modules_char0(d.group, h.algebra(), extra);
  out.orbits = pbun_orbits(d.group);
  if (out.simples.size() != out.orbits.size())
    throw InvalidStructure("simple count " + std::to_string(out.simples.size()) + " differs from orbit count " +
                           std::to_string(out.orbits.size()));
  const Matrix op = s_transform(h, d.braiding.r()).on_dual;
  const Index k = static_cast<Index>(out.simples.size());
  out.characters = Matrix(h.dim(), k);
  for (Index i = 0; i < k; ++i)
    out.characters.col(i) = internal_character(h, out.simples[static_cast<std::size_t>(i)].module);
  Matrix ind(h.dim(), k);
  for (Index i = 0; i < k; ++i) ind.col(i) = orbit_indicator(d.group, f, out.orbits[static_cast<std::size_t>(i)]);
  auto s = solve_many(out.characters, Matrix(op * out.characters));
  auto b = solve_many(ind, Matrix(op * ind));
  if (!s || !b) throw InvalidStructure("S-transformation leaves the span of the characters");
  out.s = std::move(*s);
  out.bundle = std::move(*b);
  return out;
}

}  // namespace vl
