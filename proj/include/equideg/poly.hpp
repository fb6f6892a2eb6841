#pragma once

// Multivariate polynomials with cyclotomic coefficients.
//
// Terms are kept sorted by degrevlex, leading term first, with no zero
// coefficients. Variables are positional; names only matter for parsing and
// printing.
//
// Grammar accepted by parse():
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'|'/'] factor)*      juxtaposition multiplies; '/' needs a constant divisor
//   factor := atom ['^' integer]
//   atom   := integer | name | 'zeta(' integer ')' | '(' expr ')'

#include <string>
#include <vector>

#include "equideg/cyclo.hpp"
#include "equideg/matrix.hpp"

namespace equideg::poly {

using cyclo::Cyc;
using Exponent = std::vector<int>;

/// > 0 when a is larger than b in degrevlex.
int degrevlex_compare(const Exponent& a, const Exponent& b);

struct Term {
  Exponent exp;
  Cyc coeff;
};

class MultiPoly {
 public:
  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(std::size_t nvars, const Cyc& c);
  static MultiPoly variable(std::size_t nvars, std::size_t i);
  static MultiPoly monomial(Exponent exp, const Cyc& c);
  /// Sums duplicate exponents and drops zeros.
  static MultiPoly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term& leading() const { return terms_.front(); }
  int total_degree() const;
  bool is_homogeneous() const;
  Cyc coefficient(const Exponent& e) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Cyc& c, const MultiPoly& a);
  MultiPoly pow(int e) const;
  /// Multiplies by the monomial x^e with coefficient c.
  MultiPoly mul_term(const Exponent& e, const Cyc& c) const;
  /// Divides every coefficient by the leading one.
  MultiPoly monic() const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  Cyc evaluate(const std::vector<Cyc>& x) const;
  /// Substitutes polynomials for the variables.
  MultiPoly compose(const std::vector<MultiPoly>& subs) const;
  /// f(M x) for a square matrix M.
  MultiPoly linear_substitute(const linalg::Matrix<Cyc>& m) const;
  /// Sets variable j to 1 and drops it.
  MultiPoly dehomogenize(std::size_t j) const;
  MultiPoly derivative(std::size_t i) const;
  /// lcm of coefficient orders.
  int coefficient_order() const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Default variable names x0..x{n-1}.
std::vector<std::string> default_names(std::size_t n);

/// Throws InputError with the position of the first problem.
MultiPoly parse(const std::string& text, const std::vector<std::string>& names);

}  // namespace equideg::poly
