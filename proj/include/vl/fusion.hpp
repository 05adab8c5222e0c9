#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vl/doubles.hpp"
#include "vl/frobenius.hpp"
#include "vl/hochschild.hpp"
#include "vl/hopf.hpp"

namespace vl {

// Simple labels with the unit at index 0, S-matrix, optional twists.
struct ModularData {
  std::vector<std::string> labels;
  Matrix s;
  std::optional<Vector> t;
  std::size_t size() const { return labels.size(); }
  // S square and invertible, no zero in row 0.
  void validate() const;
};

// S from the S-transformation in the internal-character basis; T from the
// ribbon element acting on each simple.
struct DoubleModularData {
  ModularData data;
  std::vector<DoubleSimple> simples;
};
DoubleModularData modular_data(const DrinfeldDouble& d, const IrrepCatalog& extra = {});

// Exact N_ij^l = sum_p S_ip S_jp (S^-1)_pl / S_0p; may be non-integral.
struct VerlindeTensor {
  std::size_t n = 0;
  std::vector<FieldElement> data;
  const FieldElement& operator()(std::size_t i, std::size_t j, std::size_t l) const { return data[(i * n + j) * n + l]; }
  // nullopt unless every entry is a non-negative integer
  std::optional<FusionTensor> to_fusion() const;
};
VerlindeTensor verlinde_coefficients(const ModularData& md);

// Direct-sum multiplicities (semisimple) or Jordan-Hoelder multiplicities.
FusionTensor fusion_oracle(const HopfAlgebra& h, const std::vector<AlgebraModule>& simples, bool semisimple);

struct FusionReport {
  std::string check;
  bool pass = true;
  std::vector<std::string> lines;
  std::optional<std::array<std::size_t, 3>> witness;
  void fail(std::size_t i, std::size_t j, std::size_t l, const std::string& why);
  std::string to_text() const;
};

FusionReport verlinde_check(const ModularData& md, const FusionTensor& oracle);

// S-conjugated fusion product e_p * e_q = delta_pq S_0p^-1 e_p, and the star
// product of primitive idempotents on HH0 with kappa_p = 1/lambda(e_p); the
// two must agree on d_p = S_0p/S_00 = kappa_0/kappa_p = dim X_p.
FusionReport diagonalization_check(const ModularData& md, const FusionTensor& fusion, const FrobeniusAlgebra& f,
                                   const std::vector<AlgebraModule>& simples);

// s_i' s_j s_i'' = sum_l M_ij^l s_l mod [A,A] for the Frobenius coproduct of
// the cointegral, s_i a representative of the SL(2,Z) image of [pi_i] in HH0
// and M read off from the tops of P_i (x) P_j.
struct K0Report {
  FusionReport report;
  FusionTensor m;
  BlockCertificate blocks;
};
K0Report k0_check(const DrinfeldDouble& d, const SL2Z& identification = kSL2ZS);

// alpha(t) = 1, beta(t) = t on F_p[Z_p] = F_p[t]/(t^p), t = g - 1.
struct BracketWitness {
  Cochain alpha, beta, bracket;
  bool nonzero_class = false;
  bool equals_minus_alpha = false;
  bool alpha_alpha_zero = false;
  FusionReport report;
};
BracketWitness bracket_witness(int p);

}  // namespace vl
