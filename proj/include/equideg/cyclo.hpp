#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// Every value carries its order N and a coefficient vector of length phi(N)
// on the power basis 1, zeta_N, ..., zeta_N^{phi(N)-1}, reduced modulo the
// N-th cyclotomic polynomial. Binary operations lift both operands to the
// lcm of their orders. Subfields of a fixed ambient Q(zeta_N) are described
// by the subgroup of (Z/N)^x that fixes them.

#include <gmpxx.h>

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace equideg::cyclo {

using Rational = mpq_class;
using Integer = mpz_class;

int euler_phi(int n);
int gcd_int(int a, int b);
int lcm_int(int a, int b);

/// Coefficients (low to high) of the n-th cyclotomic polynomial. Monic, degree phi(n).
const std::vector<Integer>& cyclotomic_polynomial(int n);

/// Largest cyclotomic order any operation may produce. Default 120.
int max_order();
void set_max_order(int n);

/// The units of Z/N in increasing order.
std::vector<int> units_mod(int n);

class CyclotomicNumber {
 public:
  CyclotomicNumber();
  CyclotomicNumber(long value);  // NOLINT: implicit from integers is intended
  explicit CyclotomicNumber(Rational value);

  /// zeta_n^power.
  static CyclotomicNumber zeta(int n, long power = 1);
  /// sum_j coeffs[j] zeta_order^j with arbitrary length; reduced on construction.
  static CyclotomicNumber from_coeffs(int order, std::vector<Rational> coeffs);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws DomainError if the value is not rational.
  Rational rational_value() const;

  /// The same value written at order m (m must be a multiple of order()).
  CyclotomicNumber lifted(int m) const;
  /// The same value written at the smallest order whose field contains it.
  CyclotomicNumber minimal() const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator/=(const CyclotomicNumber& o);

  /// Throws DomainError on zero.
  CyclotomicNumber inverse() const;
  CyclotomicNumber pow(long e) const;

  /// Image under the embedding zeta_N -> exp(2 pi i / N).
  std::complex<double> to_complex() const;
  /// Human-readable form such as "1/2 - 3*zeta(5)^2".
  std::string to_string() const;

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

 private:
  CyclotomicNumber(int order, std::vector<Rational> coeffs, bool reduced);
  int order_ = 1;
  std::vector<Rational> coeffs_;
};

using Cyc = CyclotomicNumber;

inline CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
inline CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
inline CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
inline CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
inline bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

/// Deterministic total order: by minimal order, then lexicographically by coefficients.
int compare(const CyclotomicNumber& a, const CyclotomicNumber& b);

struct CycLess {
  bool operator()(const CyclotomicNumber& a, const CyclotomicNumber& b) const { return compare(a, b) < 0; }
};

/// The automorphism zeta_n -> zeta_n^sigma, applied after lifting `a` to order n.
/// With n = 0 the value's own order is used.
CyclotomicNumber galois_apply(const CyclotomicNumber& a, int sigma, int n = 0);

/// Complex conjugation.
CyclotomicNumber conj(const CyclotomicNumber& a);

/// A subfield L of an ambient Q(zeta_N), stored as the subgroup of (Z/N)^x fixing L.
class SubfieldSpec {
 public:
  /// Q inside Q(zeta_n).
  static SubfieldSpec rationals(int n);
  /// Q(zeta_n) itself.
  static SubfieldSpec full(int n);
  /// Q(zeta_m) inside Q(zeta_n); m must divide n (or 2m divide n for odd m).
  static SubfieldSpec cyclotomic(int n, int m);
  /// Validates that `fixing` is a subgroup of (Z/n)^x.
  static SubfieldSpec from_fixing_subgroup(int n, std::vector<int> fixing);
  /// Smallest subfield of Q(zeta_n) containing all the given values.
  static SubfieldSpec generated_by(int n, std::span<const CyclotomicNumber> values);

  int ambient_order() const { return ambient_order_; }
  const std::vector<int>& fixing_subgroup() const { return fixing_; }

  /// [L : Q].
  int degree() const;
  bool contains(const CyclotomicNumber& a) const;
  /// this is contained in `other`.
  bool is_subfield_of(const SubfieldSpec& other) const;
  /// The same field described inside Q(zeta_m), m a multiple of ambient_order().
  SubfieldSpec lifted(int m) const;
  /// Smallest field containing both.
  SubfieldSpec compositum(const SubfieldSpec& other) const;
  /// [this : sub]; sub must be a subfield of this.
  int relative_degree(const SubfieldSpec& sub) const;
  /// Galois exponents (units mod N) representing Gal(this / sub).
  std::vector<int> relative_galois(const SubfieldSpec& sub) const;

  std::string to_string() const;
  friend bool operator==(const SubfieldSpec& a, const SubfieldSpec& b) = default;

 private:
  SubfieldSpec(int n, std::vector<int> fixing) : ambient_order_(n), fixing_(std::move(fixing)) {}
  int ambient_order_ = 1;
  std::vector<int> fixing_;
};

/// Tr_{from/to}(a) = sum over Gal(from/to) of sigma(a).
CyclotomicNumber field_trace(const CyclotomicNumber& a, const SubfieldSpec& from, const SubfieldSpec& to);

}  // namespace equideg::cyclo
