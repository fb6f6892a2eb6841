#pragma once

// Local equivariant degrees in K-theory: the class of the local algebra at an
// isolated zero, as a representation of the point's stabilizer.

#include <vector>

#include "equideg/chars.hpp"
#include "equideg/groups.hpp"
#include "equideg/polysolve.hpp"

namespace equideg::localdeg {

using chars::ClassFunction;
using chars::VirtualCharacter;
using cyclo::Cyc;

struct LocalDegree {
  groups::ProjPoint point;
  groups::Subgroup stabilizer;
  cyclo::SubfieldSpec residue_field;
  VirtualCharacter local_character;  // over the table of stabilizer.as_group()
};

struct DerivedPointDatum {
  long h_minus_one_dim = 0;
  VirtualCharacter classical_class;
};

/// Matrix of g on the local algebra at the zero, in the basis zd.local_basis.
/// g acts on functions by precomposition with its (dehomogenized) action; g must fix the point.
polysolve::CycMatrix local_action(const polysolve::ZeroDatum& zd, const polysolve::ChartData& chart,
                                  const groups::ProjectiveAction& action, int g);

/// Trace of every element of stab on the local algebra, indexed like stab.members().
std::vector<Cyc> local_traces(const polysolve::ZeroDatum& zd, const polysolve::ChartData& chart,
                              const groups::ProjectiveAction& action, const groups::Subgroup& stab);

LocalDegree local_degree(const polysolve::ZeroDatum& zd, const polysolve::ChartData& chart,
                         const groups::ProjectiveAction& action, const groups::Subgroup& stab,
                         const chars::TablePtr& stab_table);

/// Pushforward of a derived point: the classical class when H^-1 vanishes, zero otherwise.
VirtualCharacter derived_point_pushforward(const DerivedPointDatum& d);

}  // namespace equideg::localdeg
