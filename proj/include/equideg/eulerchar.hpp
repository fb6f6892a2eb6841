#pragma once

// Equivariant Euler characteristics of line bundles on P^1 and the derived
// self-intersection class of an equivariantly parametrized plane conic.

#include <vector>

#include "equideg/chars.hpp"
#include "equideg/groups.hpp"
#include "equideg/poly.hpp"

namespace equideg::eulerchar {

using chars::ClassFunction;
using chars::TablePtr;
using chars::VirtualCharacter;
using cyclo::Cyc;
using groups::CycMatrix;
using poly::MultiPoly;

/// A genuine 2-dimensional representation V with P(V) = P^1.
class TwoDimRep {
 public:
  /// Extends generator matrices along words; throws InputError unless they define a representation.
  TwoDimRep(groups::GroupPtr group, const std::vector<CycMatrix>& generator_matrices);
  static TwoDimRep from_elements(groups::GroupPtr group, std::vector<CycMatrix> matrices);

  const groups::GroupPtr& group() const { return group_; }
  const CycMatrix& matrix(int g) const { return matrices_[static_cast<std::size_t>(g)]; }
  /// Traces, one per conjugacy class.
  ClassFunction character() const;

 private:
  TwoDimRep() = default;
  void verify() const;
  groups::GroupPtr group_;
  std::vector<CycMatrix> matrices_;
};

/// chi(P^1, O(d)) as a virtual representation: H^0 - H^1.
VirtualCharacter chi_P1(const TwoDimRep& v, int d, const TablePtr& table);

/// The same from monomial bases of H^0 and of Cech H^1, element by element.
VirtualCharacter chi_P1_cech_oracle(const TwoDimRep& v, int d, const TablePtr& table);

struct EquivariantConic {
  groups::ProjectiveAction ambient;
  MultiPoly form;                         // in x, y, z
  std::vector<MultiPoly> parametrization;  // three binary forms of degree 2 in s, t
  TwoDimRep induced;
};

/// Scalars attached to each group element by a conic.
struct ConicCharacters {
  std::vector<Cyc> parametrization;  // M_g P(u) = lambda_g P(A_g u)
  std::vector<Cyc> form;             // q(M_g x) = mu_g q(x)
};

/// Throws HypothesisViolation when the conic is not G-stable, DomainError when the
/// parametrization misses it or is not equivariant.
ConicCharacters verify_conic(const EquivariantConic& c);

/// [O_C] - [N^dual] pushed to a point: chi(O_{P^1}) - theta chi(O_{P^1}(-4)), where
/// theta_g = lambda_g^2 / mu_g is the character of the conormal twist.
VirtualCharacter conic_self_intersection(const EquivariantConic& c, const TablePtr& table);

}  // namespace equideg::eulerchar
