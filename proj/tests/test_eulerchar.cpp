#include <doctest.h>

#include <random>

#include "equideg/error.hpp"
#include "equideg/eulerchar.hpp"
#include "fixtures.hpp"

using namespace equideg;
using namespace equideg::eulerchar;
using equideg::testing::cyc_matrix;
using equideg::testing::cyclic_group;
using equideg::testing::omega;

namespace {

ClassFunction values_of(std::initializer_list<long> v) {
  ClassFunction f;
  for (long x : v) f.emplace_back(x);
  return f;
}

struct RepCase {
  TwoDimRep rep;
  TablePtr table;
};

// Rotation by 2 pi / n on R^2, over Q(zeta_lcm(n, 4)).
CycMatrix rotation(int n) {
  const Cyc z = Cyc::zeta(n), zi = Cyc::zeta(n, -1), i = Cyc::zeta(4);
  const Cyc c = (z + zi) / Cyc(2), s = (z - zi) / (Cyc(2) * i);
  return cyc_matrix({{c, -s}, {s, c}});
}

std::vector<RepCase> representations() {
  std::vector<RepCase> out;
  std::mt19937_64 rng(41);
  for (int n = 2; n <= 6; ++n) {
    auto g = cyclic_group(n);
    auto t = chars::CharacterTable::compute(g);
    std::uniform_int_distribution<int> k(0, n - 1);
    out.push_back({TwoDimRep(g, {cyc_matrix({{Cyc::zeta(n, k(rng)), 0}, {0, Cyc::zeta(n, k(rng))}})}), t});
    out.push_back({TwoDimRep(g, {rotation(n)}), t});
  }
  // S3 on the plane x1 + x2 + x3 = 0, basis e1 - e2, e2 - e3.
  auto s3 = equideg::testing::perm_group({"(1 2 3)", "(1 2)"}, 3);
  out.push_back({TwoDimRep(s3, {equideg::testing::int_matrix({{0, -1}, {1, -1}}),
                                equideg::testing::int_matrix({{-1, 1}, {0, 1}})}),
                 chars::CharacterTable::compute(s3)});
  auto c3 = equideg::testing::c3_conic();
  out.push_back({c3.induced, chars::CharacterTable::compute(c3.induced.group())});
  auto c4 = equideg::testing::c4_conic();
  out.push_back({c4.induced, chars::CharacterTable::compute(c4.induced.group())});
  return out;
}

}  // namespace

TEST_CASE("chi on P^1 agrees with the Cech computation") {
  auto reps = representations();
  CHECK(reps.size() >= 10);
  for (const auto& rc : reps) {
    for (int d = -8; d <= 8; ++d) {
      auto chi = chi_P1(rc.rep, d, rc.table);
      CHECK(chi == chi_P1_cech_oracle(rc.rep, d, rc.table));
      CHECK(chi.dimension() == d + 1);
    }
    CHECK(chi_P1(rc.rep, 0, rc.table) == VirtualCharacter::trivial(rc.table));
    CHECK(chi_P1(rc.rep, -1, rc.table).is_zero());
    // H^1(O(-2)) is the single monomial 1/(st): minus the determinant.
    ClassFunction det;
    for (const auto& cls : rc.rep.group()->classes())
      det.push_back(-linalg::determinant(rc.rep.matrix(cls.representative)));
    CHECK(chi_P1_cech_oracle(rc.rep, -2, rc.table) == chars::decompose(det, rc.table));
  }
}

TEST_CASE("trivial representation") {
  auto g = cyclic_group(3);
  auto t = chars::CharacterTable::compute(g);
  TwoDimRep v(g, {CycMatrix::identity(2)});
  for (int d = -6; d <= 6; ++d) CHECK(chi_P1(v, d, t) == (d + 1) * VirtualCharacter::trivial(t));
}

TEST_CASE("the C3 line: H^0(O(2)) and chi(O(-4))") {
  auto c = equideg::testing::c3_conic();
  auto t = chars::CharacterTable::compute(c.induced.group());
  auto sum = chars::decompose(values_of({3, 0, 0}), t);  // 1 + chi + chi^2
  CHECK(sum == VirtualCharacter::regular(t));
  CHECK(chi_P1_cech_oracle(c.induced, 2, t) == sum);
  CHECK(chi_P1(c.induced, -4, t) == -sum);
  CHECK(chi_P1(c.induced, 0, t) - chi_P1(c.induced, -4, t) == chars::decompose(values_of({4, 1, 1}), t));
}

TEST_CASE("conic self-intersection") {
  SUBCASE("C3 conic gives 1 + rho") {
    auto c = equideg::testing::c3_conic();
    auto t = chars::CharacterTable::compute(c.induced.group());
    auto ch = verify_conic(c);
    for (std::size_t h = 0; h < 3; ++h) {
      CHECK(ch.parametrization[h] == Cyc(1));
      CHECK(ch.form[h] == Cyc(1));
    }
    CHECK(conic_self_intersection(c, t) == chars::decompose(values_of({4, 1, 1}), t));
  }
  SUBCASE("C4 conic") {
    auto c = equideg::testing::c4_conic();
    auto t = chars::CharacterTable::compute(c.induced.group());
    auto ch = verify_conic(c);
    const int gen = c.ambient.group()->generators()[0];
    CHECK(ch.parametrization[static_cast<std::size_t>(gen)] * c.ambient.matrix(gen)(0, 1) == -Cyc::zeta(4));
    auto r = conic_self_intersection(c, t);
    CHECK(r.dimension() == 4);
    // 2 + chi + chi^3 takes the values 4, 2, 0, 2 along the powers of the generator.
    ClassFunction expected;
    for (const auto& cls : c.ambient.group()->classes()) {
      int k = 0;
      while (c.ambient.group()->pow(gen, k) != cls.representative) ++k;
      expected.emplace_back(k % 2 ? 2L : (k == 0 ? 4L : 0L));
    }
    CHECK(r == chars::decompose(expected, t));
  }
  SUBCASE("trivial group: Bezout number four") {
    auto g = equideg::testing::cyclic_group(1);
    groups::ProjectiveAction action(g, 2, std::vector<CycMatrix>(g->generators().size(), CycMatrix::identity(3)));
    TwoDimRep v(g, std::vector<CycMatrix>(g->generators().size(), CycMatrix::identity(2)));
    EquivariantConic c{action, poly::parse("x^2 + y^2 - z^2", {"x", "y", "z"}),
                       equideg::testing::binary_forms({"s^2 - t^2", "2s t", "s^2 + t^2"}), v};
    auto t = chars::CharacterTable::compute(g);
    CHECK(conic_self_intersection(c, t) == 4 * VirtualCharacter::trivial(t));
  }
}

TEST_CASE("invalid conic data is rejected") {
  auto action = equideg::testing::z3_action();
  const Cyc w = omega();
  TwoDimRep v(action.group(), {cyc_matrix({{w * w, 0}, {0, w}})});
  // x^2+y^2-z^2 is not stable under cyclic permutation of coordinates.
  EquivariantConic literal{action, poly::parse("x^2 + y^2 - z^2", {"x", "y", "z"}),
                           equideg::testing::binary_forms({"s^2 - t^2", "2s t", "s^2 + t^2"}), v};
  CHECK_THROWS_AS(verify_conic(literal), HypothesisViolation);
  // [s:t] -> [s+t:t-s] has order 4 up to scalars, not 3.
  CHECK_THROWS_AS(TwoDimRep(action.group(), {equideg::testing::int_matrix({{1, 1}, {-1, 1}})}), InputError);
  auto c = equideg::testing::c3_conic();
  c.parametrization[0] = poly::parse("s^2", {"s", "t"});
  CHECK_THROWS_AS(verify_conic(c), DomainError);
  auto d = equideg::testing::c3_conic();
  std::swap(d.parametrization[1], d.parametrization[2]);
  CHECK_THROWS_AS(verify_conic(d), DomainError);
}
