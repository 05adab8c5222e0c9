#include "vl/fusion.hpp"

#include <sstream>

#include "vl/catalog.hpp"
#include "vl/error.hpp"

namespace vl {

void ModularData::validate() const {
  const Index n = static_cast<Index>(labels.size());
  if (n == 0) throw InvalidStructure("modular data needs at least the unit object");
  if (s.rows() != n || s.cols() != n)
    throw DimensionMismatch("S-matrix is " + std::to_string(s.rows()) + "x" + std::to_string(s.cols()) + " for " +
                            std::to_string(n) + " labels");
  if (t && t->size() != n) throw DimensionMismatch("T has the wrong length");
  for (Index p = 0; p < n; ++p)
    if (s(0, p).is_zero()) throw InvalidStructure("S(0," + std::to_string(p) + ") is zero");
  if (rank(s) != n) throw SingularMatrix("S-matrix has rank " + std::to_string(rank(s)) + " of " + std::to_string(n));
}

DoubleModularData modular_data(const DrinfeldDouble& d, const IrrepCatalog& extra) {
  auto m = smatrix_modular(d, extra);
  DoubleModularData out;
  out.data.s = m.s;
  const Vector& v = *d.braiding.ribbon();
  Vector t(static_cast<Index>(m.simples.size()));
  for (std::size_t i = 0; i < m.simples.size(); ++i) {
    const auto& x = m.simples[i];
    out.data.labels.push_back("X" + std::to_string(x.conjugacy_class) + "." + std::to_string(x.irrep));
    const Matrix a = x.module.act(v);
    if (a != Matrix(identity_matrix(d.hopf.field(), a.rows()) * a(0, 0)))
      throw InvalidStructure("ribbon element is not scalar on " + out.data.labels.back());
    t(static_cast<Index>(i)) = a(0, 0);
  }
  out.data.t = std::move(t);
  out.simples = std::move(m.simples);
  return out;
}

std::optional<FusionTensor> VerlindeTensor::to_fusion() const {
  FusionTensor f(n);
  for (std::size_t k = 0; k < data.size(); ++k) {
    const auto& x = data[k];
    if (x.field().kind() == FieldKind::prime) {
      f.data[k] = x.residue();
      continue;
    }
    const auto q = x.as_rational();
    if (!q || q->get_den() != 1 || *q < 0 || !q->get_num().fits_slong_p()) return std::nullopt;
    f.data[k] = q->get_num().get_si();
  }
  return f;
}

VerlindeTensor verlinde_coefficients(const ModularData& md) {
  md.validate();
  const Index n = static_cast<Index>(md.size());
  const auto sinv = inverse(md.s);
  if (!sinv) throw SingularMatrix("S-matrix is singular");
  std::vector<FieldElement> inv0;
  for (Index p = 0; p < n; ++p) inv0.push_back(md.s(0, p).inverse());
  VerlindeTensor v;
  v.n = md.size();
  v.data.reserve(static_cast<std::size_t>(n * n * n));
  const FieldSpec f = detail::typed_sample(md.s).field();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      std::vector<FieldElement> w;
      for (Index p = 0; p < n; ++p) w.push_back(md.s(i, p) * md.s(j, p) * inv0[static_cast<std::size_t>(p)]);
      for (Index l = 0; l < n; ++l) {
        FieldElement acc = FieldElement::zero(f);
        for (Index p = 0; p < n; ++p) acc += w[static_cast<std::size_t>(p)] * (*sinv)(p, l);
        v.data.push_back(acc);
      }
    }
  return v;
}

FusionTensor fusion_oracle(const HopfAlgebra& h, const std::vector<AlgebraModule>& simples, bool semisimple) {
  return fusion_multiplicities(h, simples, semisimple);
}

void FusionReport::fail(std::size_t i, std::size_t j, std::size_t l, const std::string& why) {
  if (pass) witness = std::array<std::size_t, 3>{i, j, l};
  pass = false;
  lines.push_back("FAIL (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) + "): " + why);
}

std::string FusionReport::to_text() const {
  std::ostringstream os;
  for (const auto& l : lines) os << l << "\n";
  if (witness) os << "witness " << (*witness)[0] << " " << (*witness)[1] << " " << (*witness)[2] << "\n";
  os << "RESULT " << check << " " << (pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

FusionReport verlinde_check(const ModularData& md, const FusionTensor& oracle) {
  FusionReport r;
  r.check = "verlinde";
  const auto v = verlinde_coefficients(md);
  if (oracle.n != v.n) throw DimensionMismatch("oracle has " + std::to_string(oracle.n) + " simples, S has " +
                                               std::to_string(v.n));
  const FieldSpec f = detail::typed_sample(md.s).field();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < v.n; ++i)
    for (std::size_t j = 0; j < v.n; ++j)
      for (std::size_t l = 0; l < v.n; ++l) {
        ++checked;
        const FieldElement want = FieldElement::from_int(f, oracle(i, j, l));
        if (v(i, j, l) != want)
          r.fail(i, j, l, "Verlinde gives " + v(i, j, l).to_string() + ", oracle " + std::to_string(oracle(i, j, l)));
      }
  if (!v.to_fusion()) r.lines.push_back("Verlinde output is not a non-negative integer tensor");
  r.lines.insert(r.lines.begin(), "triples checked: " + std::to_string(checked));
  return r;
}

FusionReport diagonalization_check(const ModularData& md, const FusionTensor& fusion, const FrobeniusAlgebra& fa,
                                   const std::vector<AlgebraModule>& simples) {
  md.validate();
  FusionReport r;
  r.check = "diagonalize";
  const std::size_t n = md.size();
  const Index ni = static_cast<Index>(n);
  if (fusion.n != n || simples.size() != n) throw DimensionMismatch("fusion, simples and S disagree in size");
  const Matrix& s = md.s;
  const Matrix sinv = *inverse(s);
  const FieldSpec f = detail::typed_sample(s).field();

  // (a) C_pq^r = sum S^-1_pi S^-1_qj N_ij^l S_lr
  std::vector<Matrix> ns(n, zero_matrix(f, ni, ni));  // ns[i](j, r) = sum_l N_ij^l S_lr
  for (std::size_t i = 0; i < n; ++i)
    for (Index j = 0; j < ni; ++j)
      for (Index l = 0; l < ni; ++l) {
        const long long m = fusion(i, static_cast<std::size_t>(j), static_cast<std::size_t>(l));
        if (m != 0) ns[i].row(j) += s.row(l) * FieldElement::from_int(f, m);
      }
  for (Index p = 0; p < ni; ++p)
    for (Index q = 0; q < ni; ++q) {
      Vector c = zero_vector(f, ni);
      for (Index i = 0; i < ni; ++i) {
        if (sinv(p, i).is_zero()) continue;
        c += Vector((sinv.row(q) * ns[static_cast<std::size_t>(i)]).transpose()) * sinv(p, i);
      }
      for (Index rr = 0; rr < ni; ++rr) {
        const FieldElement want = (p == q && q == rr) ? s(0, p).inverse() : FieldElement::zero(f);
        if (c(rr) != want)
          r.fail(static_cast<std::size_t>(p), static_cast<std::size_t>(q), static_cast<std::size_t>(rr),
                 "S-conjugated fusion coefficient " + c(rr).to_string() + ", expected " + want.to_string());
      }
    }

  // (b) star product of primitive idempotents on HH0
  const auto& A = fa.alg();
  const auto prims = primitive_idempotents(A);
  const HH0 hh = hh0(A);
  std::vector<Vector> e;
  for (std::size_t p = 0; p < n; ++p) {
    bool found = false;
    for (const auto& pi : prims)
      if (!is_zero_matrix(simples[p].act(pi))) {
        e.push_back(pi);
        found = true;
        break;
      }
    if (!found) throw InvalidStructure("no primitive idempotent acts on simple " + std::to_string(p));
  }
  std::vector<FieldElement> kappa(n, FieldElement::zero(f));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Vector z = hh.quotient.projection * star(fa, e[p], e[q]);
      if (p != q) {
        if (!is_zero_matrix(z)) r.fail(p, q, p, "star product of distinct idempotents is nonzero in HH0");
        continue;
      }
      const Vector base = hh.quotient.projection * e[p];
      const auto k = solve(Matrix(base), z);
      if (!k) {
        r.fail(p, p, p, "star square of the idempotent is not a multiple of it in HH0");
        continue;
      }
      kappa[p] = (*k)(0);
      if (kappa[p] * fa.lambda(e[p]) != FieldElement::one(f))
        r.fail(p, p, p, "kappa * lambda(e) = " + (kappa[p] * fa.lambda(e[p])).to_string());
    }
  r.lines.push_back("normalization S_00 = " + s(0, 0).to_string());
  for (std::size_t p = 0; p < n; ++p) {
    const FieldElement d_s = s(0, static_cast<Index>(p)) / s(0, 0);
    std::string line = "d_" + std::to_string(p) + " = " + d_s.to_string();
    if (!kappa[p].is_zero()) {
      const FieldElement d_k = kappa[0] / kappa[p];
      line += ", kappa ratio " + d_k.to_string();
      if (d_k != d_s) r.fail(p, p, p, "kappa ratio " + d_k.to_string() + " differs from S_0p/S_00 " + d_s.to_string());
    }
    if (d_s != FieldElement::from_int(f, simples[p].dim()))
      r.fail(p, p, p, "S_0p/S_00 = " + d_s.to_string() + " but dim X_p = " + std::to_string(simples[p].dim()));
    r.lines.push_back(line);
  }
  return r;
}

K0Report k0_check(const DrinfeldDouble& d, const SL2Z& identification) {
  const auto& h = d.hopf;
  const AlgebraPtr& A = h.algebra();
  const FieldSpec& f = h.field();
  const FrobeniusAlgebra fa(A, cointegral(h));
  const auto idem = basic_idempotents(*A);
  const auto simples = simple_modules(A);
  const std::size_t n = idem.size();
  K0Report out{FusionReport{}, FusionTensor(n), certify_block_diagonal(fa)};
  auto& r = out.report;
  r.check = "k0";

  std::vector<AlgebraModule> proj;
  for (std::size_t i = 0; i < n; ++i) proj.push_back(projective_cover(A, idem[i], "P" + std::to_string(i)));
  std::vector<Index> end_dims;
  for (const auto& l : simples) end_dims.push_back(hom_space(l, l).dimension);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const AlgebraModule pp = tensor_product(h, proj[i], proj[j]);
      Index total = 0;
      for (std::size_t l = 0; l < n; ++l) {
        const Index top = hom_space(pp, simples[l]).dimension;
        if (top % end_dims[l] != 0) throw NonSplit("top multiplicity not divisible by the endomorphism dimension");
        out.m(i, j, l) = top / end_dims[l];
        total += out.m(i, j, l) * proj[l].dim();
      }
      if (total != pp.dim())
        throw NonSplit("P" + std::to_string(i) + " (x) P" + std::to_string(j) + " has dimension " +
                       std::to_string(pp.dim()) + " but its top predicts " + std::to_string(total));
    }

  const auto orbits = pbun_orbits(d.group);
  const auto perm = sl2z_action(d.group, orbits, identification);
  std::vector<Vector> srep;
  for (std::size_t i = 0; i < n; ++i) {
    Vector v = A->zero();
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      const FieldElement c = orbit_indicator(d.group, f, orbits[o]).dot(idem[i]);
      if (c.is_zero()) continue;
      const auto [a, b] = orbits[perm[o]].representative;
      v(double_index(d.group, b, a)) += c;
    }
    srep.push_back(std::move(v));
  }
  const HH0 hh = hh0(*A);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector diff = star(fa, srep[i], srep[j]);
      for (std::size_t l = 0; l < n; ++l)
        if (out.m(i, j, l) != 0) diff -= srep[l] * FieldElement::from_int(f, out.m(i, j, l));
      const Vector z = hh.quotient.projection * diff;
      for (Index k = 0; k < z.size(); ++k)
        if (!z(k).is_zero()) {
          r.fail(i, j, static_cast<std::size_t>(k), "s_i' s_j s_i'' - sum M s_l is nonzero in HH0");
          break;
        }
    }
  r.lines.insert(r.lines.begin(), "projectives: " + std::to_string(n) + ", blocks: " +
                                      std::to_string(out.blocks.block_count));
  if (!out.blocks.pass) {
    r.pass = false;
    if (!r.witness) r.witness = std::array<std::size_t, 3>{0, 0, 0};
    r.lines.push_back("block diagonality certificate failed: " + out.blocks.detail);
  }
  return out;
}

BracketWitness bracket_witness(int p) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("bracket_witness needs a prime p");
  const FieldSpec f = FieldSpec::prime(p);
  const AlgebraPtr a = group_algebra(FiniteGroup::cyclic(p), f);
  // on g^k: alpha = k g^(k-1), beta = k g^(k-1)(g - 1)
  Matrix ma = zero_matrix(f, p, p), mb = zero_matrix(f, p, p);
  for (int k = 1; k < p; ++k) {
    const FieldElement c = FieldElement::from_int(f, k);
    ma(k - 1, k) = c;
    mb(k, k) += c;
    mb(k - 1, k) -= c;
  }
  BracketWitness w{Cochain::linear_map(a, ma), Cochain::linear_map(a, mb), Cochain::zero(a, 1), false, false, false, {}};
  w.bracket = gerstenhaber_bracket(w.alpha, w.beta);
  const auto h1 = cohomology(a, 1);
  w.nonzero_class = h1.nonzero_class(w.bracket.coordinates());
  w.equals_minus_alpha = w.bracket == -w.alpha;
  w.alpha_alpha_zero = gerstenhaber_bracket(w.alpha, w.alpha).is_zero();
  auto& r = w.report;
  r.check = "bracket";
  r.lines.push_back("A = F" + std::to_string(p) + "[Z" + std::to_string(p) + "], dim HH^1 = " +
                    std::to_string(h1.dimension));
  r.lines.push_back(std::string("alpha, beta cocycles: ") +
                    (h1.is_cycle(w.alpha.coordinates()) && h1.is_cycle(w.beta.coordinates()) ? "yes" : "no"));
  r.lines.push_back(std::string("[alpha,beta] = -alpha: ") + (w.equals_minus_alpha ? "yes" : "no"));
  r.lines.push_back(std::string("[alpha,beta] nonzero in HH^1: ") + (w.nonzero_class ? "yes" : "no"));
  r.lines.push_back(std::string("[alpha,alpha] = 0: ") + (w.alpha_alpha_zero ? "yes" : "no"));
  if (!w.equals_minus_alpha) r.fail(1, 1, 0, "bracket differs from -alpha");
  if (!w.nonzero_class) r.fail(1, 1, 1, "bracket class vanishes");
  if (!w.alpha_alpha_zero) r.fail(1, 1, 2, "[alpha,alpha] is nonzero");
  return w;
}

}  // namespace vl
