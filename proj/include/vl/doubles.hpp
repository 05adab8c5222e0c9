#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "vl/group.hpp"
#include "vl/hopf.hpp"

namespace vl {

HopfAlgebra group_algebra_hopf(const FiniteGroup& g, const FieldSpec& f);
HopfAlgebra function_algebra_hopf(const FiniteGroup& g, const FieldSpec& f);

struct DrinfeldDouble {
  FiniteGroup group;
  HopfAlgebra hopf;
  QuasiTriangular braiding;  // R = sum_g (delta_g (x) 1) (x) (1 (x) g), ribbon sum_g delta_g (x) g^-1
};
// Basis delta_g (x) x at index g*|G| + x.
DrinfeldDouble drinfeld_double(const FiniteGroup& g, const FieldSpec& f);

// A commuting pair (a,b) is the homomorphism Z^2 -> G sending e1 -> a, e2 -> b.
// It indexes the covector dual to delta_b (x) a.
using CommutingPair = std::pair<int, int>;

struct CommutingPairOrbit {
  CommutingPair representative;  // smallest member
  std::vector<CommutingPair> members;
  std::size_t size() const { return members.size(); }
};
// Orbits under simultaneous conjugation, sorted by representative.
std::vector<CommutingPairOrbit> pbun_orbits(const FiniteGroup& g);
std::size_t orbit_index(const std::vector<CommutingPairOrbit>& orbits, const CommutingPair& p);

using SL2Z = std::array<long long, 4>;  // row-major {a, b, c, d}
constexpr SL2Z kSL2ZIdentity{1, 0, 0, 1};
constexpr SL2Z kSL2ZS{0, -1, 1, 0};
constexpr SL2Z kSL2ZT{1, 1, 0, 1};
SL2Z sl2z_multiply(const SL2Z& a, const SL2Z& b);

// M acts by precomposition with M^-1; S: (a,b) -> (b^-1, a), T: (a,b) -> (a, a^-1 b).
CommutingPair sl2z_act(const FiniteGroup& g, const SL2Z& m, const CommutingPair& p);
// Orbit permutation: result[o] = index of M.o.
std::vector<std::size_t> sl2z_action(const FiniteGroup& g, const std::vector<CommutingPairOrbit>& orbits,
                                     const SL2Z& m);

// Indicator of an orbit as a covector on D(G).
Vector orbit_indicator(const FiniteGroup& g, const FieldSpec& f, const CommutingPairOrbit& o);

// User-supplied centralizer irreps, keyed by conjugacy class index. Generators
// are group elements; images are matrices over the module field.
struct IrrepData {
  std::vector<int> generators;
  std::vector<Matrix> images;
};
using IrrepCatalog = std::map<int, std::vector<IrrepData>>;

struct DoubleSimple {
  AlgebraModule module;
  int conjugacy_class;
  std::size_t irrep;  // index within the centralizer's irrep list
  Index irrep_dim;
};
// One simple per (class, centralizer irrep), induced from the centralizer.
std::vector<DoubleSimple> simple_modules_char0(const FiniteGroup& g, const AlgebraPtr& double_alg,
                                               const IrrepCatalog& extra = {});
// Irreps of the centralizer of a class representative: 1-dim ones found by
// search, the 2-dim irrep of a nonabelian group of order 6, then catalog entries.
std::vector<GroupRepresentation> centralizer_irreps(const FiniteGroup& g, int conjugacy_class, const FieldSpec& f,
                                                    const IrrepCatalog& extra = {});

struct ModularSMatrix {
  std::vector<DoubleSimple> simples;
  Matrix characters;  // column i = ch(X_i)
  Matrix s;           // S ch_j = sum_i s(i,j) ch_i
  Matrix bundle;      // the same operator on orbit indicators
  std::vector<CommutingPairOrbit> orbits;
};
ModularSMatrix smatrix_modular(const DrinfeldDouble& d, const IrrepCatalog& extra = {});

// Permutation matrix of sl2z_action(S) on orbit indicators.
Matrix bundle_permutation_matrix(const FiniteGroup& g, const FieldSpec& f,
                                 const std::vector<CommutingPairOrbit>& orbits, const SL2Z& m);

}  // namespace vl
