#include "vl/polynomial.hpp"

#include <cmath>
#include <set>

#include <Eigen/Eigenvalues>

#include "vl/error.hpp"

namespace vl {

Polynomial::Polynomial(FieldSpec f, std::vector<FieldElement> coeffs) : f_(f), c_(std::move(coeffs)) {
  for (auto& x : c_) x = x.in(f_);
  trim();
}

Polynomial Polynomial::constant(const FieldSpec& f, const FieldElement& c) { return Polynomial(f, {c}); }

Polynomial Polynomial::monomial(const FieldSpec& f, int degree) {
  std::vector<FieldElement> c(static_cast<std::size_t>(degree) + 1, FieldElement::zero(f));
  c.back() = FieldElement::one(f);
  return Polynomial(f, std::move(c));
}

Polynomial Polynomial::linear(const FieldSpec& f, const FieldElement& a) {
  return Polynomial(f, {-a.in(f), FieldElement::one(f)});
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return FieldElement::zero(f_);
  return c_[static_cast<std::size_t>(k)];
}

FieldElement Polynomial::leading() const { return is_zero() ? FieldElement::zero(f_) : c_.back(); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const FieldElement inv = c_.back().inverse();
  std::vector<FieldElement> c = c_;
  for (auto& x : c) x = x * inv;
  return Polynomial(f_, std::move(c));
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return Polynomial(f_, {});
  std::vector<FieldElement> c;
  for (int k = 1; k <= degree(); ++k) c.push_back(FieldElement::from_int(f_, k) * c_[static_cast<std::size_t>(k)]);
  return Polynomial(f_, std::move(c));
}

FieldElement Polynomial::operator()(const FieldElement& x) const {
  FieldElement acc = FieldElement::zero(f_);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  std::vector<FieldElement> c(n, FieldElement::zero(a.f_));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] = c[k] + a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] = c[k] + b.c_[k];
  return Polynomial(a.f_, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  std::vector<FieldElement> c(n, FieldElement::zero(a.f_));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] = c[k] + a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] = c[k] - b.c_[k];
  return Polynomial(a.f_, std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.f_, {});
  std::vector<FieldElement> c(a.c_.size() + b.c_.size() - 1, FieldElement::zero(a.f_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
  }
  return Polynomial(a.f_, std::move(c));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const FieldElement& x = c_[static_cast<std::size_t>(k)];
    if (x.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + x.to_string() + ")";
    if (k > 0) out += "*t^" + std::to_string(k);
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const FieldSpec& f = a.field();
  std::vector<FieldElement> r = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(f, {}), a};
  std::vector<FieldElement> q(static_cast<std::size_t>(a.degree() - db + 1), FieldElement::zero(f));
  const FieldElement inv = b.leading().inverse();
  for (int k = a.degree(); k >= db; --k) {
    const FieldElement c = r[static_cast<std::size_t>(k)] * inv;
    q[static_cast<std::size_t>(k - db)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(k - db + j)] = r[static_cast<std::size_t>(k - db + j)] - c * b.coefficient(j);
  }
  return {Polynomial(f, std::move(q)), Polynomial(f, std::move(r))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  const FieldSpec& f = a.field();
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(f, FieldElement::one(f)), s1(f, {});
  Polynomial t0(f, {}), t1 = Polynomial::constant(f, FieldElement::one(f));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1;
    Polynomial t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Polynomial lc = Polynomial::constant(f, r0.leading().inverse());
  return {r0 * lc, s0 * lc, t0 * lc};
}

namespace {

// Best rational approximation with denominator <= max_den, if it is within tol.
std::optional<mpq_class> rationalize(double x, double tol = 1e-8, long max_den = 10'000'000) {
  if (!std::isfinite(x)) return std::nullopt;
  const bool neg = x < 0;
  double v = std::fabs(x);
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double rem = v;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(rem);
    const mpz_class ai(a);
    mpz_class h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double approx = h1.get_d() / k1.get_d();
    if (std::fabs(approx - v) <= tol * std::max(1.0, v)) {
      mpq_class q(h1, k1);
      q.canonicalize();
      return neg ? mpq_class(-q) : q;
    }
    const double frac = rem - a;
    if (frac < 1e-15) break;
    rem = 1.0 / frac;
  }
  return std::nullopt;
}

std::vector<FieldElement> recognize(const FieldSpec& f, std::complex<double> z) {
  std::vector<FieldElement> out;
  if (f.kind() == FieldKind::rationals) {
    if (std::fabs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z))) return out;
    if (auto q = rationalize(z.real())) out.push_back(FieldElement::from_rational(f, *q));
    return out;
  }
  const std::int64_t n = f.modulus();
  const double theta = 2.0 * M_PI / static_cast<double>(n);
  if (f.degree() == 2) {
    const double b = z.imag() / std::sin(theta);
    const double a = z.real() - b * std::cos(theta);
    auto qa = rationalize(a), qb = rationalize(b);
    if (qa && qb) out.push_back(FieldElement::from_coefficients(f, {*qa, *qb}));
    return out;
  }
  // Higher degree: look for rational multiples of powers of zeta.
  const FieldElement zeta = FieldElement::zeta(f);
  for (std::int64_t k = 0; k < n; ++k) {
    const std::complex<double> w = z * std::polar(1.0, -theta * static_cast<double>(k));
    if (std::fabs(w.imag()) > 1e-7 * std::max(1.0, std::abs(w))) continue;
    if (auto q = rationalize(w.real())) out.push_back(FieldElement::from_rational(f, *q) * zeta.pow(k));
  }
  return out;
}

}  // namespace

RootSet roots_in_field(const Polynomial& p) {
  RootSet result;
  if (p.degree() <= 0) return result;
  const FieldSpec& f = p.field();
  const Polynomial sq = divmod(p, gcd(p, p.derivative())).first.monic();

  std::vector<FieldElement> found;
  auto consider = [&](const FieldElement& x) {
    if (!sq(x).is_zero()) return;
    for (const auto& y : found)
      if (y == x) return;
    found.push_back(x);
  };

  if (f.kind() == FieldKind::prime) {
    if (f.modulus() > 100'000) throw Unsupported("root finding over F_p is brute force; p is too large");
    for (std::int64_t r = 0; r < f.modulus() && static_cast<int>(found.size()) < sq.degree(); ++r)
      consider(FieldElement::from_int(f, r));
  } else {
    const int d = sq.degree();
    if (d == 1) {
      consider(-sq.coefficient(0));
    } else {
      Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
      for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
      for (int i = 0; i < d; ++i) companion(i, d - 1) = -sq.coefficient(i).to_complex();
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
      if (solver.info() != Eigen::Success) throw Unsupported("numerical eigenvalue solve failed during root finding");
      for (int i = 0; i < d; ++i)
        for (const auto& x : recognize(f, solver.eigenvalues()(i))) consider(x);
    }
  }

  Polynomial rest = p.monic();
  for (const auto& x : found) {
    const Polynomial lin = Polynomial::linear(f, x);
    int mult = 0;
    for (;;) {
      auto [q, r] = divmod(rest, lin);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    result.roots.push_back({x, mult});
  }
  result.unresolved_degree = rest.degree();
  return result;
}

}  // namespace vl
