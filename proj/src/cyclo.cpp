#include "equideg/cyclo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "equideg/error.hpp"
#include "equideg/matrix.hpp"

namespace equideg::cyclo {

namespace {

std::atomic<int> g_max_order{120};

// Q[x] helpers for extended Euclid against the cyclotomic modulus.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

void poly_divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

void check_order(int n) {
  if (n <= 0) throw DomainError("cyclotomic order must be positive");
  if (n > g_max_order.load()) {
    throw DomainError("cyclotomic order " + std::to_string(n) + " exceeds the configured maximum " +
                      std::to_string(g_max_order.load()));
  }
}

// Reduces an arbitrary-length coefficient vector at order n: fold with
// zeta^n = 1, then take the remainder modulo Phi_n.
std::vector<Rational> reduce(int n, std::vector<Rational> c) {
  if (static_cast<int>(c.size()) > n) {
    for (std::size_t i = static_cast<std::size_t>(n); i < c.size(); ++i) c[i % n] += c[i];
    c.resize(static_cast<std::size_t>(n));
  }
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = c.size(); i-- > deg;) {
    if (sgn(c[i]) == 0) continue;
    Rational f = c[i];
    for (std::size_t j = 0; j <= deg; ++j) c[i - deg + j] -= f * Rational(phi[j]);
  }
  c.resize(deg, Rational(0));
  return c;
}

}  // namespace

int gcd_int(int a, int b) {
  a = std::abs(a);
  b = std::abs(b);
  while (b != 0) {
    int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int lcm_int(int a, int b) { return a / gcd_int(a, b) * b; }

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<int> units_mod(int n) {
  std::vector<int> u;
  if (n == 1) return {0};
  for (int a = 1; a < n; ++a)
    if (gcd_int(a, n) == 1) u.push_back(a);
  return u;
}

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Integer>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}: multiply the numerator factors,
  // then divide exactly by the denominator factors.
  std::vector<Integer> p{1};
  for (int d : divisors(n)) {
    if (mobius(n / d) != 1) continue;
    std::vector<Integer> q(p.size() + static_cast<std::size_t>(d), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + static_cast<std::size_t>(d)] += p[i];
      q[i] -= p[i];
    }
    p = std::move(q);
  }
  for (int d : divisors(n)) {
    if (mobius(n / d) != -1) continue;
    // Divide by x^d - 1 from the top: q_i = p_{i+d} + q_{i+d}.
    const std::size_t ud = static_cast<std::size_t>(d);
    std::vector<Integer> q(p.size() - ud, 0);
    for (std::size_t i = q.size(); i-- > 0;) q[i] = p[i + ud] + (i + ud < q.size() ? q[i + ud] : Integer(0));
    p = std::move(q);
  }
  return cache.emplace(n, std::move(p)).first->second;
}

int max_order() { return g_max_order.load(); }

void set_max_order(int n) {
  if (n <= 0) throw DomainError("max order must be positive");
  g_max_order.store(n);
}

CyclotomicNumber::CyclotomicNumber() : order_(1), coeffs_{Rational(0)} {}

CyclotomicNumber::CyclotomicNumber(long value) : order_(1), coeffs_{Rational(value)} {}

CyclotomicNumber::CyclotomicNumber(Rational value) : order_(1), coeffs_{std::move(value)} {
  coeffs_[0].canonicalize();
}

CyclotomicNumber::CyclotomicNumber(int order, std::vector<Rational> coeffs, bool reduced) : order_(order) {
  check_order(order);
  coeffs_ = reduced ? std::move(coeffs) : reduce(order, std::move(coeffs));
}

CyclotomicNumber CyclotomicNumber::zeta(int n, long power) {
  check_order(n);
  long e = power % n;
  if (e < 0) e += n;
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1, Rational(0));
  c[static_cast<std::size_t>(e)] = 1;
  return CyclotomicNumber(n, std::move(c), false);
}

CyclotomicNumber CyclotomicNumber::from_coeffs(int order, std::vector<Rational> coeffs) {
  for (auto& c : coeffs) c.canonicalize();
  return CyclotomicNumber(order, std::move(coeffs), false);
}

bool CyclotomicNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

bool CyclotomicNumber::is_one() const { return is_rational() && coeffs_[0] == 1; }

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw DomainError("value " + to_string() + " is not rational");
  return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::lifted(int m) const {
  if (m == order_) return *this;
  if (m % order_ != 0) throw InternalError("lift to an order that is not a multiple");
  check_order(m);
  const int step = m / order_;
  std::vector<Rational> c(static_cast<std::size_t>(m), Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j * static_cast<std::size_t>(step)] = coeffs_[j];
  return CyclotomicNumber(m, std::move(c), false);
}

CyclotomicNumber CyclotomicNumber::minimal() const {
  if (is_rational()) return CyclotomicNumber(coeffs_[0]);
  for (int d : divisors(order_)) {
    if (d == order_) break;
    // Fixed by every sigma_u with u = 1 mod d exactly when the value lies in Q(zeta_d).
    bool fixed = true;
    for (int u : units_mod(order_)) {
      if (u % d != 1 % d) continue;
      if (!(galois_apply(*this, u) == *this)) {
        fixed = false;
        break;
      }
    }
    if (!fixed) continue;
    const int step = order_ / d;
    const std::size_t phi_d = static_cast<std::size_t>(euler_phi(d));
    linalg::Matrix<Rational> basis(coeffs_.size(), phi_d);
    for (std::size_t j = 0; j < phi_d; ++j) {
      auto col = zeta(order_, static_cast<long>(j) * step).coeffs_;
      for (std::size_t i = 0; i < col.size(); ++i) basis(i, j) = col[i];
    }
    auto sol = linalg::solve(basis, coeffs_);
    if (!sol) throw InternalError("minimal(): subfield membership inconsistent");
    return CyclotomicNumber(d, std::move(*sol), true);
  }
  return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  if (o.order_ == 1) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  if (order_ != o.order_) {
    const int m = lcm_int(order_, o.order_);
    *this = lifted(m);
    return *this += o.lifted(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) { return *this += -o; }

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  if (o.order_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (order_ == 1) {
    Rational s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (order_ != o.order_) {
    const int m = lcm_int(order_, o.order_);
    *this = lifted(m);
    return *this *= o.lifted(m);
  }
  std::vector<Rational> prod(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = reduce(order_, std::move(prod));
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& o) { return *this *= o.inverse(); }

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(zeta_" + std::to_string(order_) + ")");
  if (order_ == 1) return CyclotomicNumber(Rational(1) / coeffs_[0]);
  // Extended Euclid: find s with s * a = 1 mod Phi_n.
  QPoly phi;
  for (const auto& c : cyclotomic_polynomial(order_)) phi.emplace_back(c);
  QPoly r0 = phi, r1 = coeffs_;
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    QPoly q, r;
    poly_divmod(r0, r1, q, r);
    QPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant because Phi_n is irreducible.
  if (r0.size() != 1) throw InternalError("inverse: gcd with cyclotomic polynomial is not constant");
  for (auto& c : s0) c /= r0[0];
  return CyclotomicNumber(order_, std::move(s0), false);
}

CyclotomicNumber CyclotomicNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicNumber result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::complex<double> CyclotomicNumber::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / order_;
    z += coeffs_[j].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "zeta(" << order_ << ")";
    if (j > 1) out << "^" << j;
  }
  if (first) out << "0";
  return out.str();
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const int m = lcm_int(a.order_, b.order_);
  return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

int compare(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order() == 1 && b.order() == 1) {
    int c = cmp(a.coeffs()[0], b.coeffs()[0]);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  CyclotomicNumber ma = a.minimal(), mb = b.minimal();
  if (ma.order() != mb.order()) return ma.order() < mb.order() ? -1 : 1;
  for (std::size_t i = 0; i < ma.coeffs().size(); ++i) {
    int c = cmp(ma.coeffs()[i], mb.coeffs()[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

CyclotomicNumber galois_apply(const CyclotomicNumber& a, int sigma, int n) {
  if (n == 0) n = a.order();
  if (n % a.order() != 0) throw DomainError("galois_apply: value does not live in Q(zeta_" + std::to_string(n) + ")");
  int s = sigma % n;
  if (s < 0) s += n;
  if (gcd_int(s, n) != 1 && n != 1) {
    throw DomainError("galois_apply: " + std::to_string(sigma) + " is not a unit modulo " + std::to_string(n));
  }
  if (a.is_rational()) return a;
  CyclotomicNumber x = a.lifted(n);
  std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t j = 0; j < x.coeffs().size(); ++j)
    c[(j * static_cast<std::size_t>(s)) % static_cast<std::size_t>(n)] += x.coeffs()[j];
  return CyclotomicNumber::from_coeffs(n, std::move(c));
}

CyclotomicNumber conj(const CyclotomicNumber& a) { return galois_apply(a, a.order() - 1); }

// ---------------------------------------------------------------------------
// SubfieldSpec

SubfieldSpec SubfieldSpec::rationals(int n) { return SubfieldSpec(n, units_mod(n)); }

SubfieldSpec SubfieldSpec::full(int n) { return SubfieldSpec(n, {n == 1 ? 0 : 1}); }

SubfieldSpec SubfieldSpec::cyclotomic(int n, int m) {
  if (m % 2 == 1 && n % m != 0 && n % (2 * m) == 0) m *= 2;
  if (m % 2 == 0 && m % 4 != 0 && n % m != 0 && n % (m / 2) == 0) m /= 2;
  if (n % m != 0) {
    throw DomainError("Q(zeta_" + std::to_string(m) + ") is not a subfield of Q(zeta_" + std::to_string(n) + ")");
  }
  std::vector<int> fixing;
  for (int u : units_mod(n))
    if (u % m == 1 % m) fixing.push_back(u);
  return SubfieldSpec(n, std::move(fixing));
}

SubfieldSpec SubfieldSpec::from_fixing_subgroup(int n, std::vector<int> fixing) {
  std::sort(fixing.begin(), fixing.end());
  fixing.erase(std::unique(fixing.begin(), fixing.end()), fixing.end());
  for (int& u : fixing) {
    u = ((u % n) + n) % n;
    if (n > 1 && gcd_int(u, n) != 1) throw DomainError("fixing subgroup contains a non-unit " + std::to_string(u));
  }
  std::sort(fixing.begin(), fixing.end());
  const int one = n == 1 ? 0 : 1;
  if (!std::binary_search(fixing.begin(), fixing.end(), one)) throw DomainError("fixing subgroup lacks the identity");
  for (int a : fixing)
    for (int b : fixing)
      if (!std::binary_search(fixing.begin(), fixing.end(), static_cast<int>((1LL * a * b) % n))) {
        throw DomainError("fixing set is not closed under multiplication");
      }
  return SubfieldSpec(n, std::move(fixing));
}

SubfieldSpec SubfieldSpec::generated_by(int n, std::span<const CyclotomicNumber> values) {
  std::vector<int> fixing;
  for (int u : units_mod(n)) {
    bool fixes_all = true;
    for (const auto& v : values) {
      if (n % v.order() != 0) {
        auto m = v.minimal();
        if (n % m.order() != 0) throw DomainError("value " + v.to_string() + " is outside Q(zeta_" + std::to_string(n) + ")");
      }
      if (!(galois_apply(v.minimal(), u, n) == v)) {
        fixes_all = false;
        break;
      }
    }
    if (fixes_all) fixing.push_back(u);
  }
  return SubfieldSpec(n, std::move(fixing));
}

int SubfieldSpec::degree() const { return euler_phi(ambient_order_) / static_cast<int>(fixing_.size()); }

bool SubfieldSpec::contains(const CyclotomicNumber& a) const {
  CyclotomicNumber m = a.minimal();
  if (ambient_order_ % m.order() != 0) return false;
  for (int u : fixing_)
    if (!(galois_apply(m, u, ambient_order_) == a)) return false;
  return true;
}

bool SubfieldSpec::is_subfield_of(const SubfieldSpec& other) const {
  if (ambient_order_ != other.ambient_order_) {
    const int m = lcm_int(ambient_order_, other.ambient_order_);
    return lifted(m).is_subfield_of(other.lifted(m));
  }
  return std::includes(fixing_.begin(), fixing_.end(), other.fixing_.begin(), other.fixing_.end());
}

SubfieldSpec SubfieldSpec::lifted(int m) const {
  if (m == ambient_order_) return *this;
  if (m % ambient_order_ != 0) throw InternalError("subfield lift to a non-multiple order");
  std::vector<int> fixing;
  for (int u : units_mod(m))
    if (std::binary_search(fixing_.begin(), fixing_.end(), ambient_order_ == 1 ? 0 : u % ambient_order_)) {
      fixing.push_back(u);
    }
  return SubfieldSpec(m, std::move(fixing));
}

SubfieldSpec SubfieldSpec::compositum(const SubfieldSpec& other) const {
  if (ambient_order_ != other.ambient_order_) {
    const int m = lcm_int(ambient_order_, other.ambient_order_);
    return lifted(m).compositum(other.lifted(m));
  }
  std::vector<int> both;
  std::set_intersection(fixing_.begin(), fixing_.end(), other.fixing_.begin(), other.fixing_.end(),
                        std::back_inserter(both));
  return SubfieldSpec(ambient_order_, std::move(both));
}

int SubfieldSpec::relative_degree(const SubfieldSpec& sub) const {
  if (!sub.is_subfield_of(*this)) throw DomainError("relative degree of non-nested fields");
  return degree() / sub.degree();
}

std::vector<int> SubfieldSpec::relative_galois(const SubfieldSpec& sub) const {
  if (sub.ambient_order_ != ambient_order_) {
    const int m = lcm_int(ambient_order_, sub.ambient_order_);
    return lifted(m).relative_galois(sub.lifted(m));
  }
  if (!sub.is_subfield_of(*this)) throw DomainError("field " + sub.to_string() + " is not a subfield of " + to_string());
  // Coset representatives of fix(sub) / fix(this).
  const int n = ambient_order_;
  std::vector<int> reps;
  std::vector<int> covered;
  for (int u : sub.fixing_) {
    if (std::find(covered.begin(), covered.end(), u) != covered.end()) continue;
    reps.push_back(u);
    for (int h : fixing_) covered.push_back(static_cast<int>((1LL * u * h) % (n == 1 ? 1 : n)));
  }
  return reps;
}

std::string SubfieldSpec::to_string() const {
  std::ostringstream out;
  out << "Fix<";
  for (std::size_t i = 0; i < fixing_.size(); ++i) out << (i ? "," : "") << fixing_[i];
  out << "> in Q(zeta_" << ambient_order_ << ")";
  return out.str();
}

CyclotomicNumber field_trace(const CyclotomicNumber& a, const SubfieldSpec& from, const SubfieldSpec& to) {
  if (!to.is_subfield_of(from)) throw DomainError("field_trace: target is not a subfield of the source");
  const int n = lcm_int(from.ambient_order(), to.ambient_order());
  SubfieldSpec f = from.lifted(n), t = to.lifted(n);
  if (!f.contains(a)) throw DomainError("field_trace: " + a.to_string() + " is not in the source field");
  CyclotomicNumber sum;
  for (int u : f.relative_galois(t)) sum += galois_apply(a.minimal(), u, n);
  return sum;
}

}  // namespace equideg::cyclo
