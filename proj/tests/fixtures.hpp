#pragma once

// Group actions of the worked examples, shared by several test binaries.

#include <memory>
#include <string>
#include <vector>

#include "equideg/eulerchar.hpp"
#include "equideg/groups.hpp"
#include "equideg/poly.hpp"

namespace equideg::testing {

using groups::Cyc;
using groups::CycMatrix;

inline Cyc omega() { return Cyc::zeta(3); }

inline CycMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Cyc>> r;
  for (const auto& row : rows) {
    std::vector<Cyc> c;
    for (long v : row) c.emplace_back(v);
    r.push_back(std::move(c));
  }
  return CycMatrix::from_rows(r);
}

inline groups::ProjPoint point(const std::vector<Cyc>& c) { return groups::ProjPoint(c); }

inline groups::GroupPtr cyclic_group(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = (i + 1) % n;
  return std::make_shared<groups::FiniteGroup>(groups::FiniteGroup::from_permutations({p}));
}

inline groups::GroupPtr perm_group(const std::vector<std::string>& cycles, int degree) {
  std::vector<std::vector<int>> perms;
  for (const auto& c : cycles) perms.push_back(groups::parse_cycles(c, degree));
  return std::make_shared<groups::FiniteGroup>(groups::FiniteGroup::from_permutations(perms));
}

// [x:y:z] -> [-y:x:z].
inline groups::ProjectiveAction z4_action() {
  return groups::ProjectiveAction(cyclic_group(4), 2, {int_matrix({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}})});
}

// [x:y:z] -> [z:x:y].
inline groups::ProjectiveAction z3_action() {
  return groups::ProjectiveAction(cyclic_group(3), 2, {int_matrix({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})});
}

inline groups::GroupPtr a4_group() { return perm_group({"(1 2 3)", "(1 2)(3 4)"}, 4); }

// A4 permuting the points (1,2,3), (1,2,-1), (1,-2,-1), (-3,-2,-1) of P^2.
inline groups::ProjectiveAction a4_action() {
  return groups::ProjectiveAction(a4_group(), 2,
                                  {int_matrix({{1, 0, 0}, {1, -1, 1}, {1, -1, 0}}),
                                   int_matrix({{-1, 1, 0}, {0, 1, 0}, {0, 1, -1}})});
}

inline std::vector<groups::ProjPoint> a4_points() {
  return {point({1, 2, 3}), point({1, 2, -1}), point({1, -2, -1}), point({-3, -2, -1})};
}

inline CycMatrix cyc_matrix(const std::vector<std::vector<Cyc>>& rows) { return CycMatrix::from_rows(rows); }

inline std::vector<poly::MultiPoly> binary_forms(const std::vector<std::string>& texts) {
  std::vector<poly::MultiPoly> out;
  for (const auto& t : texts) out.push_back(poly::parse(t, {"s", "t"}));
  return out;
}

// x^2+y^2+z^2 under the cyclic coordinate permutation, with a parametrization
// that is strictly equivariant for diag(w^2, w) on (s, t).
inline eulerchar::EquivariantConic c3_conic() {
  auto action = z3_action();
  const Cyc w = omega();
  eulerchar::TwoDimRep v(action.group(), {cyc_matrix({{w * w, 0}, {0, w}})});
  return {action, poly::parse("x^2 + y^2 + z^2", {"x", "y", "z"}),
          binary_forms({"(2s t + s^2 - 2t^2)/3", "(2s t + zeta(3)^2 s^2 - 2zeta(3) t^2)/3",
                        "(2s t + zeta(3) s^2 - 2zeta(3)^2 t^2)/3"}),
          v};
}

// x^2+y^2-z^2 with P = (s^2-t^2, 2st, s^2+t^2) under [x:y:z] -> [y:-x:z];
// on (s, t) the rotation lifts to (1+i)/2 [[1,1],[-1,1]].
inline eulerchar::EquivariantConic c4_conic() {
  auto g = cyclic_group(4);
  groups::ProjectiveAction action(g, 2, {int_matrix({{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}})});
  const Cyc h = (Cyc(1) + Cyc::zeta(4)) / Cyc(2);
  eulerchar::TwoDimRep v(g, {cyc_matrix({{h, h}, {-h, h}})});
  return {action, poly::parse("x^2 + y^2 - z^2", {"x", "y", "z"}),
          binary_forms({"s^2 - t^2", "2s t", "s^2 + t^2"}), v};
}

}  // namespace equideg::testing
