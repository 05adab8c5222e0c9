#include "vl/field.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>
#include <numbers>
#include <ostream>
#include <sstream>

#include "vl/error.hpp"

namespace vl {

namespace {

// x^k reduced modulo the n-th cyclotomic polynomial, for k < 2*phi - 1.
struct CyclotomicData {
  std::int64_t n = 1;
  int phi = 1;
  std::vector<std::int64_t> poly;                  // Phi_n, low degree first, monic
  std::vector<std::vector<std::int64_t>> reduce;  // reduce[k] has length phi
};

std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division by a monic integer polynomial.
std::vector<std::int64_t> poly_div_exact(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const std::int64_t c = a[k];
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  return q;
}

std::vector<std::int64_t> cyclotomic_poly(std::int64_t n) {
  std::vector<std::int64_t> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  std::vector<std::int64_t> den{1};
  for (std::int64_t d = 1; d < n; ++d)
    if (n % d == 0) den = poly_mul(den, cyclotomic_poly(d));
  return poly_div_exact(num, den);
}

const CyclotomicData& cyclotomic_data(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, std::unique_ptr<CyclotomicData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    auto d = std::make_unique<CyclotomicData>();
    d->n = n;
    d->poly = cyclotomic_poly(n);
    d->phi = static_cast<int>(d->poly.size()) - 1;
    const int phi = d->phi;
    d->reduce.assign(static_cast<std::size_t>(2 * phi), std::vector<std::int64_t>(static_cast<std::size_t>(phi), 0));
    for (int k = 0; k < phi; ++k) d->reduce[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = 1;
    // x^phi = -sum_{j<phi} poly[j] x^j, then shift upwards.
    for (int k = phi; k < 2 * phi; ++k) {
      const auto& prev = d->reduce[static_cast<std::size_t>(k - 1)];
      auto& cur = d->reduce[static_cast<std::size_t>(k)];
      const std::int64_t top = prev[static_cast<std::size_t>(phi - 1)];
      for (int j = phi - 1; j >= 1; --j) cur[static_cast<std::size_t>(j)] = prev[static_cast<std::size_t>(j - 1)];
      cur[0] = 0;
      for (int j = 0; j < phi; ++j) cur[static_cast<std::size_t>(j)] -= top * d->poly[static_cast<std::size_t>(j)];
    }
    slot = std::move(d);
  }
  return *slot;
}

std::int64_t mod_norm(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = mod_norm(a, p);
  while (nr != 0) {
    const std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw std::domain_error("division by zero in F_" + std::to_string(p));
  return mod_norm(t, p);
}

std::int64_t rational_to_residue(const mpq_class& q, std::int64_t p) {
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw std::domain_error("denominator vanishes in F_" + std::to_string(p));
  return mod_mul(mod_norm(num.get_si(), p), mod_inv(den.get_si(), p), p);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in untyped scalar");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in untyped scalar");
  return r;
}

}  // namespace

// ---------------------------------------------------------------- FieldSpec

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

FieldSpec FieldSpec::rationals() { return FieldSpec{}; }

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (!is_prime(p)) throw InvalidStructure("F_p needs a prime p, got " + std::to_string(p));
  if (p > (std::int64_t{1} << 31)) throw Unsupported("prime fields are limited to p < 2^31");
  FieldSpec f;
  f.kind_ = FieldKind::prime;
  f.modulus_ = p;
  return f;
}

FieldSpec FieldSpec::cyclotomic(std::int64_t n) {
  if (n < 1) throw InvalidStructure("cyclotomic field needs n >= 1, got " + std::to_string(n));
  if (n <= 2) return rationals();
  if (n > 720) throw Unsupported("cyclotomic fields are limited to n <= 720");
  FieldSpec f;
  f.kind_ = FieldKind::cyclotomic;
  f.modulus_ = n;
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  auto number = [&](std::string_view s) -> std::int64_t {
    if (s.empty()) throw ParseError("bad field spec '" + std::string(text) + "'");
    std::int64_t v = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw ParseError("bad field spec '" + std::string(text) + "'");
      v = v * 10 + (ch - '0');
      if (v > 1'000'000'000) throw ParseError("field parameter too large in '" + std::string(text) + "'");
    }
    return v;
  };
  if (text == "q" || text == "Q") return rationals();
  if (text.starts_with("fp:")) return prime(number(text.substr(3)));
  if (text.starts_with("cyc:")) return cyclotomic(number(text.substr(4)));
  throw ParseError("unknown field spec '" + std::string(text) + "' (expected q, fp:<p> or cyc:<n>)");
}

int FieldSpec::degree() const {
  return kind_ == FieldKind::cyclotomic ? static_cast<int>(euler_phi(modulus_)) : 1;
}

bool FieldSpec::has_root_of_unity(std::int64_t d) const {
  if (d < 1) return false;
  switch (kind_) {
    case FieldKind::rationals:
      return d <= 2;
    case FieldKind::prime:
      return (modulus_ - 1) % d == 0;
    case FieldKind::cyclotomic:
      return modulus_ % d == 0 || (modulus_ % 2 == 1 && (2 * modulus_) % d == 0);
  }
  return false;
}

std::string FieldSpec::to_string() const {
  switch (kind_) {
    case FieldKind::rationals:
      return "q";
    case FieldKind::prime:
      return "fp:" + std::to_string(modulus_);
    case FieldKind::cyclotomic:
      return "cyc:" + std::to_string(modulus_);
  }
  return "?";
}

// ------------------------------------------------------------- FieldElement

struct FieldOps {
  static FieldElement make_rational(mpq_class q) {
    FieldElement r;
    r.tag_ = FieldElement::Tag::rational;
    r.modulus_ = 1;
    r.q_ = std::move(q);
    r.q_->canonicalize();
    return r;
  }
  static FieldElement make_prime(std::int64_t p, std::int64_t v) {
    FieldElement r;
    r.tag_ = FieldElement::Tag::prime;
    r.modulus_ = p;
    r.small_ = mod_norm(v, p);
    return r;
  }
  static FieldElement make_cyclotomic(std::int64_t n, std::vector<mpq_class> c) {
    FieldElement r;
    r.tag_ = FieldElement::Tag::cyclotomic;
    r.modulus_ = n;
    r.c_ = std::move(c);
    for (auto& x : r.c_) x.canonicalize();
    return r;
  }

  static void same_field(const FieldElement& a, const FieldElement& b) {
    if (a.tag_ != b.tag_ || a.modulus_ != b.modulus_)
      throw DimensionMismatch("scalars from different fields: " + a.field().to_string() + " vs " +
                              b.field().to_string());
  }

  static std::vector<mpq_class> cyc_mul(std::int64_t n, const std::vector<mpq_class>& a,
                                        const std::vector<mpq_class>& b) {
    const auto& d = cyclotomic_data(n);
    const std::size_t phi = static_cast<std::size_t>(d.phi);
    std::vector<mpq_class> full(2 * phi - 1);
    for (std::size_t i = 0; i < phi; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < phi; ++j)
        if (b[j] != 0) full[i + j] += a[i] * b[j];
    }
    std::vector<mpq_class> r(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(phi));
    for (std::size_t k = phi; k < full.size(); ++k) {
      if (full[k] == 0) continue;
      const auto& red = d.reduce[k];
      for (std::size_t j = 0; j < phi; ++j)
        if (red[j] != 0) r[j] += full[k] * red[j];
    }
    return r;
  }

  static std::vector<mpq_class> cyc_inverse(std::int64_t n, const std::vector<mpq_class>& a) {
    // Solve (multiplication by a) x = 1 by Gauss-Jordan over Q.
    const std::size_t phi = a.size();
    std::vector<std::vector<mpq_class>> m(phi, std::vector<mpq_class>(phi + 1));
    for (std::size_t j = 0; j < phi; ++j) {
      std::vector<mpq_class> basis(phi);
      basis[j] = 1;
      const auto col = cyc_mul(n, a, basis);
      for (std::size_t i = 0; i < phi; ++i) m[i][j] = col[i];
    }
    m[0][phi] = 1;
    for (std::size_t c = 0; c < phi; ++c) {
      std::size_t piv = c;
      while (piv < phi && m[piv][c] == 0) ++piv;
      if (piv == phi) throw std::domain_error("division by zero in Q(zeta_" + std::to_string(n) + ")");
      std::swap(m[piv], m[c]);
      const mpq_class inv = 1 / m[c][c];
      for (auto& x : m[c]) x *= inv;
      for (std::size_t r = 0; r < phi; ++r) {
        if (r == c || m[r][c] == 0) continue;
        const mpq_class f = m[r][c];
        for (std::size_t k = c; k <= phi; ++k) m[r][k] -= f * m[c][k];
      }
    }
    std::vector<mpq_class> x(phi);
    for (std::size_t i = 0; i < phi; ++i) x[i] = m[i][phi];
    return x;
  }
};

FieldElement FieldElement::from_int(const FieldSpec& f, std::int64_t v) {
  switch (f.kind()) {
    case FieldKind::rationals:
      return FieldOps::make_rational(mpq_class(static_cast<long>(v)));
    case FieldKind::prime:
      return FieldOps::make_prime(f.modulus(), v);
    case FieldKind::cyclotomic: {
      std::vector<mpq_class> c(static_cast<std::size_t>(f.degree()));
      c[0] = static_cast<long>(v);
      return FieldOps::make_cyclotomic(f.modulus(), std::move(c));
    }
  }
  return {};
}

FieldElement FieldElement::from_rational(const FieldSpec& f, const mpq_class& q) {
  switch (f.kind()) {
    case FieldKind::rationals:
      return FieldOps::make_rational(q);
    case FieldKind::prime:
      return FieldOps::make_prime(f.modulus(), rational_to_residue(q, f.modulus()));
    case FieldKind::cyclotomic: {
      std::vector<mpq_class> c(static_cast<std::size_t>(f.degree()));
      c[0] = q;
      return FieldOps::make_cyclotomic(f.modulus(), std::move(c));
    }
  }
  return {};
}

FieldElement FieldElement::from_coefficients(const FieldSpec& f, const std::vector<mpq_class>& c) {
  if (f.kind() != FieldKind::cyclotomic) {
    if (c.empty()) return zero(f);
    for (std::size_t k = 1; k < c.size(); ++k)
      if (c[k] != 0) throw InvalidStructure("power-basis coefficients beyond degree 0 in " + f.to_string());
    return from_rational(f, c[0]);
  }
  const auto& d = cyclotomic_data(f.modulus());
  const std::size_t phi = static_cast<std::size_t>(d.phi);
  std::vector<mpq_class> r(phi);
  // reduce x^k for arbitrary k using x^n = 1 and then the reduction table
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const std::size_t e = k % static_cast<std::size_t>(f.modulus());
    if (e < phi) {
      r[e] += c[k];
    } else {
      std::vector<mpq_class> mono(phi);
      mono[0] = 1;
      std::vector<mpq_class> x(phi);
      x[1] = 1;
      for (std::size_t t = 0; t < e; ++t) mono = FieldOps::cyc_mul(f.modulus(), mono, x);
      for (std::size_t j = 0; j < phi; ++j) r[j] += c[k] * mono[j];
    }
  }
  return FieldOps::make_cyclotomic(f.modulus(), std::move(r));
}

FieldElement FieldElement::zeta(const FieldSpec& f) {
  if (f.kind() != FieldKind::cyclotomic) {
    if (f.kind() == FieldKind::rationals) return one(f);
    throw Unsupported("zeta is only defined for cyclotomic fields");
  }
  std::vector<mpq_class> c(static_cast<std::size_t>(f.degree()));
  c[1] = 1;
  return FieldOps::make_cyclotomic(f.modulus(), std::move(c));
}

namespace {
std::int64_t multiplicative_order(const FieldElement& x, std::int64_t bound) {
  FieldElement y = x;
  for (std::int64_t k = 1; k <= bound; ++k) {
    if (y.is_one()) return k;
    y = y * x;
  }
  return 0;
}
}  // namespace

FieldElement FieldElement::root_of_unity(const FieldSpec& f, std::int64_t d) {
  if (!f.has_root_of_unity(d))
    throw Unsupported("field " + f.to_string() + " has no primitive " + std::to_string(d) + "-th root of unity");
  if (d == 1) return one(f);
  switch (f.kind()) {
    case FieldKind::rationals:
      return from_int(f, -1);
    case FieldKind::prime: {
      for (std::int64_t g = 2; g < f.modulus(); ++g) {
        const FieldElement x = from_int(f, g);
        if (multiplicative_order(x, d) == d) return x;
      }
      break;
    }
    case FieldKind::cyclotomic: {
      const std::int64_t n = f.modulus();
      const FieldElement z = zeta(f);
      if (n % d == 0) return z.pow(n / d);
      // n odd, d | 2n: -zeta^k has order d for a suitable k.
      for (std::int64_t k = 0; k < n; ++k) {
        const FieldElement x = -z.pow(k);
        if (multiplicative_order(x, d) == d) return x;
      }
      break;
    }
  }
  throw Unsupported("no primitive " + std::to_string(d) + "-th root of unity found in " + f.to_string());
}

FieldSpec FieldElement::field() const {
  switch (tag_) {
    case Tag::untyped:
    case Tag::rational:
      return FieldSpec::rationals();
    case Tag::prime:
      return FieldSpec::prime(modulus_);
    case Tag::cyclotomic:
      return FieldSpec::cyclotomic(modulus_);
  }
  return {};
}

FieldElement FieldElement::in(const FieldSpec& f) const {
  if (tag_ == Tag::untyped) return from_int(f, small_);
  if (!(field() == f))
    throw DimensionMismatch("scalar from " + field().to_string() + " used in " + f.to_string());
  return *this;
}

FieldElement FieldElement::promote(const FieldElement& a, const FieldElement& like) {
  if (a.tag_ != Tag::untyped || like.tag_ == Tag::untyped) return a;
  return from_int(like.field(), a.small_);
}

bool FieldElement::is_zero() const {
  switch (tag_) {
    case Tag::untyped:
    case Tag::prime:
      return small_ == 0;
    case Tag::rational:
      return (*q_) == 0;
    case Tag::cyclotomic:
      for (const auto& x : c_)
        if (x != 0) return false;
      return true;
  }
  return false;
}

bool FieldElement::is_one() const {
  switch (tag_) {
    case Tag::untyped:
    case Tag::prime:
      return small_ == 1;
    case Tag::rational:
      return (*q_) == 1;
    case Tag::cyclotomic:
      if (c_[0] != 1) return false;
      for (std::size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return false;
      return true;
  }
  return false;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  switch (tag_) {
    case Tag::untyped:
      r.small_ = checked_mul(small_, -1);
      break;
    case Tag::prime:
      r.small_ = mod_norm(-small_, modulus_);
      break;
    case Tag::rational:
      r.q_ = -(*q_);
      break;
    case Tag::cyclotomic:
      for (auto& x : r.c_) x = -x;
      break;
  }
  return r;
}

FieldElement operator+(const FieldElement& a0, const FieldElement& b0) {
  const FieldElement a = FieldElement::promote(a0, b0);
  const FieldElement& b = b0.typed() ? b0 : FieldElement::promote(b0, a);
  using Tag = FieldElement::Tag;
  if (a.tag_ == Tag::untyped) return FieldElement(static_cast<long>(checked_add(a.small_, b.small_)));
  FieldOps::same_field(a, b);
  switch (a.tag_) {
    case Tag::prime:
      return FieldOps::make_prime(a.modulus_, a.small_ + b.small_);
    case Tag::rational:
      return FieldOps::make_rational((*a.q_) + (*b.q_));
    case Tag::cyclotomic: {
      std::vector<mpq_class> c(a.c_.size());
      for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.c_[k] + b.c_[k];
      return FieldOps::make_cyclotomic(a.modulus_, std::move(c));
    }
    default:
      break;
  }
  return {};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a0, const FieldElement& b0) {
  const FieldElement a = FieldElement::promote(a0, b0);
  const FieldElement& b = b0.typed() ? b0 : FieldElement::promote(b0, a);
  using Tag = FieldElement::Tag;
  if (a.tag_ == Tag::untyped) return FieldElement(static_cast<long>(checked_mul(a.small_, b.small_)));
  FieldOps::same_field(a, b);
  switch (a.tag_) {
    case Tag::prime:
      return FieldOps::make_prime(a.modulus_, mod_mul(a.small_, b.small_, a.modulus_));
    case Tag::rational:
      return FieldOps::make_rational((*a.q_) * (*b.q_));
    case Tag::cyclotomic:
      if (a.is_zero() || b.is_zero()) return FieldElement::zero(a.field());
      return FieldOps::make_cyclotomic(a.modulus_, FieldOps::cyc_mul(a.modulus_, a.c_, b.c_));
    default:
      break;
  }
  return {};
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  switch (tag_) {
    case Tag::untyped:
      if (small_ == 1 || small_ == -1) return *this;
      return FieldOps::make_rational(mpq_class(1, static_cast<unsigned long>(std::abs(small_))) *
                                     (small_ < 0 ? -1 : 1));
    case Tag::prime:
      return FieldOps::make_prime(modulus_, mod_inv(small_, modulus_));
    case Tag::rational:
      return FieldOps::make_rational(1 / (*q_));
    case Tag::cyclotomic:
      return FieldOps::make_cyclotomic(modulus_, FieldOps::cyc_inverse(modulus_, c_));
  }
  return {};
}

FieldElement operator/(const FieldElement& a0, const FieldElement& b0) {
  const FieldElement a = FieldElement::promote(a0, b0);
  const FieldElement b = FieldElement::promote(b0, a);
  if (!a.typed() && !b.typed()) {
    if (b.small_ == 0) throw std::domain_error("division by zero");
    if (a.small_ % b.small_ != 0) throw Unsupported("inexact division of untyped integers");
    return FieldElement(static_cast<long>(a.small_ / b.small_));
  }
  return a * b.inverse();
}

bool operator==(const FieldElement& a0, const FieldElement& b0) {
  const FieldElement a = FieldElement::promote(a0, b0);
  const FieldElement b = FieldElement::promote(b0, a);
  using Tag = FieldElement::Tag;
  if (a.tag_ != b.tag_ || a.modulus_ != b.modulus_) return false;
  switch (a.tag_) {
    case Tag::untyped:
    case Tag::prime:
      return a.small_ == b.small_;
    case Tag::rational:
      return (*a.q_) == (*b.q_);
    case Tag::cyclotomic:
      return a.c_ == b.c_;
  }
  return false;
}

FieldElement FieldElement::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement base = *this;
  FieldElement r = typed() ? one(field()) : FieldElement(1);
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

FieldElement FieldElement::galois(std::int64_t k) const {
  if (tag_ != Tag::cyclotomic) return *this;
  const std::int64_t n = modulus_;
  const std::int64_t kk = mod_norm(k, n);
  if (std::gcd(kk, n) != 1) throw InvalidStructure("Galois exponent must be coprime to n");
  std::vector<mpq_class> full(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < c_.size(); ++j)
    full[static_cast<std::size_t>((static_cast<std::int64_t>(j) * kk) % n)] += c_[j];
  return from_coefficients(field(), full);
}

std::complex<double> FieldElement::to_complex() const {
  switch (tag_) {
    case Tag::untyped:
      return {static_cast<double>(small_), 0.0};
    case Tag::rational:
      return {(*q_).get_d(), 0.0};
    case Tag::prime:
      throw Unsupported("no complex embedding in positive characteristic");
    case Tag::cyclotomic: {
      std::complex<double> r = 0.0;
      for (std::size_t k = 0; k < c_.size(); ++k) {
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(modulus_);
        r += c_[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
      }
      return r;
    }
  }
  return {};
}

std::optional<mpq_class> FieldElement::as_rational() const {
  switch (tag_) {
    case Tag::untyped:
      return mpq_class(static_cast<long>(small_));
    case Tag::rational:
      return (*q_);
    case Tag::prime:
      return std::nullopt;
    case Tag::cyclotomic:
      for (std::size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return std::nullopt;
      return c_[0];
  }
  return std::nullopt;
}

std::int64_t FieldElement::residue() const {
  if (tag_ == Tag::prime) return small_;
  throw Unsupported("residue() needs a prime-field element");
}

std::vector<mpq_class> FieldElement::coefficients() const {
  switch (tag_) {
    case Tag::untyped:
      return {mpq_class(static_cast<long>(small_))};
    case Tag::rational:
      return {(*q_)};
    case Tag::prime:
      return {mpq_class(static_cast<long>(small_))};
    case Tag::cyclotomic:
      return c_;
  }
  return {};
}

std::string FieldElement::to_string() const {
  switch (tag_) {
    case Tag::untyped:
    case Tag::prime:
      return std::to_string(small_);
    case Tag::rational:
      return (*q_).get_str();
    case Tag::cyclotomic: {
      std::string out;
      for (std::size_t k = 0; k < c_.size(); ++k) {
        const mpq_class& c = c_[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        const mpq_class mag = neg ? mpq_class(-c) : c;
        if (out.empty()) {
          if (neg) out += "-";
        } else {
          out += neg ? " - " : " + ";
        }
        std::string mono;
        if (k == 1) mono = "z";
        if (k > 1) mono = "z^" + std::to_string(k);
        if (mono.empty()) {
          out += mag.get_str();
        } else if (mag == 1) {
          out += mono;
        } else {
          out += mag.get_str() + "*" + mono;
        }
      }
      return out.empty() ? "0" : out;
    }
  }
  return "?";
}

// ------------------------------------------------------------------ parsing

namespace {

class ScalarParser {
 public:
  ScalarParser(const FieldSpec& f, std::string_view s) : f_(f), s_(s) {}

  FieldElement run() {
    skip();
    FieldElement v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  const FieldSpec& f_;
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad scalar '" + std::string(s_) + "' for field " + f_.to_string() + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool eat(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }
  FieldElement expr() {
    FieldElement acc = FieldElement::zero(f_);
    bool first = true;
    for (;;) {
      bool neg = false;
      if (eat('-')) {
        neg = true;
      } else if (!eat('+') && !first) {
        break;
      }
      FieldElement t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return acc;
  }
  FieldElement term() {
    FieldElement v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        FieldElement d = factor();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }
  FieldElement factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    FieldElement base;
    if (s_[pos_] == 'z') {
      ++pos_;
      if (f_.kind() != FieldKind::cyclotomic) fail("'z' needs a cyclotomic field");
      base = FieldElement::zeta(f_);
    } else if (s_[pos_] == '(') {
      ++pos_;
      base = expr();
      if (!eat(')')) fail("missing ')'");
    } else {
      const mpz_class n = integer();
      base = FieldElement::from_rational(f_, mpq_class(n));
    }
    if (eat('^')) {
      bool neg = eat('-');
      const mpz_class e = integer();
      if (!e.fits_slong_p()) fail("exponent too large");
      base = base.pow(neg ? -e.get_si() : e.get_si());
    }
    return base;
  }
};

}  // namespace

FieldElement FieldElement::parse(const FieldSpec& f, std::string_view text) {
  // Coefficient tuple "(c0,c1,...)" in the power basis.
  if (text.size() >= 2 && text.front() == '(' && text.find(',') != std::string_view::npos) {
    if (text.back() != ')') throw ParseError("bad coefficient tuple '" + std::string(text) + "'");
    std::vector<mpq_class> coeffs;
    std::string_view body = text.substr(1, text.size() - 2);
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t comma = body.find(',', start);
      if (comma == std::string_view::npos) comma = body.size();
      const FieldElement c = ScalarParser(FieldSpec::rationals(), body.substr(start, comma - start)).run();
      coeffs.push_back(*c.as_rational());
      start = comma + 1;
    }
    if (f.kind() == FieldKind::cyclotomic && static_cast<int>(coeffs.size()) != f.degree())
      throw ParseError("coefficient tuple '" + std::string(text) + "' needs " + std::to_string(f.degree()) +
                       " entries for " + f.to_string());
    return from_coefficients(f, coeffs);
  }
  try {
    return ScalarParser(f, text).run();
  } catch (const std::domain_error& e) {
    throw ParseError("bad scalar '" + std::string(text) + "': " + e.what());
  }
}

bool is_zero(const FieldElement& x) { return x.is_zero(); }

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

Matrix zero_matrix(const FieldSpec& f, Index rows, Index cols) {
  return Matrix::Constant(rows, cols, FieldElement::zero(f));
}

Matrix identity_matrix(const FieldSpec& f, Index n) {
  Matrix m = zero_matrix(f, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = FieldElement::one(f);
  return m;
}

Vector zero_vector(const FieldSpec& f, Index n) { return Vector::Constant(n, FieldElement::zero(f)); }

Vector unit_vector(const FieldSpec& f, Index n, Index i) {
  Vector v = zero_vector(f, n);
  v(i) = FieldElement::one(f);
  return v;
}

}  // namespace vl
