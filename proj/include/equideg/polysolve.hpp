#pragma once

// Zero-dimensional polynomial systems: reduced Groebner bases (degrevlex),
// quotient algebras with their multiplication operators, and exact zeros with
// multiplicities read off from joint generalized eigenspaces.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "equideg/groups.hpp"
#include "equideg/matrix.hpp"
#include "equideg/poly.hpp"

namespace equideg::polysolve {

using cyclo::Cyc;
using CycMatrix = linalg::Matrix<Cyc>;
using poly::Exponent;
using poly::MultiPoly;

/// Fully reduced remainder of f modulo the polynomials in g.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& g);

/// Reduced Groebner basis: monic, sorted by increasing leading monomial. {} for the zero ideal.
std::vector<MultiPoly> buchberger(std::vector<MultiPoly> gens);

class QuotientAlgebra {
 public:
  /// Throws HypothesisViolation("zeros not isolated") when the ideal is not zero-dimensional.
  static QuotientAlgebra from_groebner(std::vector<MultiPoly> gb, std::size_t nvars);
  static QuotientAlgebra build(const std::vector<MultiPoly>& gens, std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<MultiPoly>& groebner() const { return gb_; }
  /// Standard monomials, increasing.
  const std::vector<Exponent>& basis() const { return basis_; }
  /// Multiplication by variable i; column j holds the coordinates of x_i * basis[j].
  const CycMatrix& mul_operator(std::size_t i) const { return ops_[i]; }
  std::vector<Cyc> coordinates(const MultiPoly& f) const;
  /// Multiplication by f.
  CycMatrix operator_of(const MultiPoly& f) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<MultiPoly> gb_;
  std::vector<Exponent> basis_;
  std::vector<CycMatrix> ops_;
};

using UPoly = std::vector<Cyc>;  // coefficients low to high

/// Roots in Q(zeta_n) of a univariate polynomial. Tries the candidates first, then
/// numerical roots of all Galois conjugates recognized as exact cyclotomic numbers.
/// `residual` receives the monic squarefree factor whose roots were not found.
std::vector<Cyc> roots_in_field(const UPoly& p, int n, const std::vector<Cyc>& candidates, UPoly& residual);

struct AffineZero {
  std::vector<Cyc> coords;
  std::size_t multiplicity = 0;
  CycMatrix local_basis;  // dim x multiplicity, columns span the joint generalized eigenspace
};

struct AffineSolution {
  std::vector<AffineZero> zeros;
  /// Univariate factors (in the variable named by the index) left unresolved.
  std::vector<std::pair<std::size_t, UPoly>> residual;
  bool complete() const { return residual.empty(); }
};

AffineSolution find_affine_zeros(const QuotientAlgebra& q, int n, const std::vector<std::vector<Cyc>>& hints);

struct ZeroDatum {
  groups::ProjPoint point;
  std::size_t chart = 0;
  std::vector<Cyc> affine;
  std::size_t multiplicity = 0;
  cyclo::SubfieldSpec residue_field = cyclo::SubfieldSpec::rationals(1);
  CycMatrix local_basis;
};

struct ChartData {
  std::size_t chart = 0;
  std::vector<MultiPoly> system;  // dehomogenized generators
  bool has_canonical_zeros = false;  // some zero has this as its first nonzero coordinate
  std::optional<QuotientAlgebra> algebra;  // built only when has_canonical_zeros
  AffineSolution solution;
};

struct ZeroLocus {
  int field_order = 1;
  std::vector<ChartData> charts;
  std::vector<ZeroDatum> zeros;  // each point once, from its first nonzero coordinate's chart; sorted
  std::size_t total_multiplicity() const;
  const ChartData& chart(std::size_t j) const { return charts.at(j); }
};

/// Zeros of n homogeneous polynomials in n+1 variables with coefficients in Q(zeta_field_order).
/// Throws HypothesisViolation when zeros are not isolated and UnresolvedLocus when some
/// zeros could not be found exactly (the message lists the residual factors).
ZeroLocus find_zeros(const std::vector<MultiPoly>& sections, int field_order,
                     const std::vector<groups::ProjPoint>& hints = {});

/// Exact Jacobian test at a zero of a square affine system; throws DomainError if x is not a zero.
bool jacobian_is_invertible(const std::vector<MultiPoly>& system, const std::vector<Cyc>& x);
/// Same at a projective zero, using the chart of its first nonzero coordinate.
bool jacobian_is_invertible(const std::vector<MultiPoly>& sections, const groups::ProjPoint& x);

std::string upoly_to_string(const UPoly& p, const std::string& var);

}  // namespace equideg::polysolve
