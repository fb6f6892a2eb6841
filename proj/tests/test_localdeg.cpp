#include <doctest.h>

#include <random>

#include "equideg/error.hpp"
#include "equideg/localdeg.hpp"
#include "fixtures.hpp"

using namespace equideg;
using namespace equideg::localdeg;
using polysolve::MultiPoly;
using equideg::testing::omega;
using equideg::testing::point;

namespace {

const std::vector<std::string> xyz = {"x", "y", "z"};

std::vector<MultiPoly> parse_all(const std::vector<std::string>& texts) {
  std::vector<MultiPoly> out;
  for (const auto& t : texts) out.push_back(poly::parse(t, xyz));
  return out;
}

const polysolve::ZeroDatum& zero_at(const polysolve::ZeroLocus& l, const groups::ProjPoint& p) {
  for (const auto& z : l.zeros)
    if (z.point == p) return z;
  throw std::runtime_error("no such zero");
}

// Trace of g on the cotangent space m/m^2 of the local ring at a point whose local
// algebra has square-zero maximal ideal: linear forms modulo the differentials of the
// system, pulled back along the dehomogenized action.
Cyc cotangent_trace(const std::vector<MultiPoly>& sections, const polysolve::ZeroDatum& zd,
                    const groups::CycMatrix& m) {
  const std::size_t j = zd.chart, n = zd.affine.size();
  std::vector<MultiPoly> sys;
  for (const auto& s : sections) sys.push_back(s.dehomogenize(j));
  std::vector<std::vector<Cyc>> rows;
  for (const auto& f : sys) {
    std::vector<Cyc> r;
    for (std::size_t v = 0; v < n; ++v) r.push_back(f.derivative(v).evaluate(zd.affine));
    rows.push_back(r);
  }
  // Annihilated directions: the span of the differentials, complemented by the kernel of its transpose.
  auto d = groups::CycMatrix::from_rows(rows);
  auto span = linalg::rref(d);
  // Jacobian of Z_r = L_r / L_j at the point.
  std::vector<Cyc> full = zd.affine;
  full.insert(full.begin() + static_cast<std::ptrdiff_t>(j), Cyc(1));
  auto lin = [&](std::size_t r) {
    Cyc v;
    for (std::size_t k = 0; k < full.size(); ++k) v += m(r, k) * full[k];
    return v;
  };
  const Cyc lj = lin(j);
  groups::CycMatrix jac(n, n);
  for (std::size_t r = 0, a = 0; r < full.size(); ++r) {
    if (r == j) continue;
    for (std::size_t k = 0, b = 0; k < full.size(); ++k) {
      if (k == j) continue;
      jac(a, b) = (m(r, k) * lj - lin(r) * m(j, k)) / (lj * lj);
      ++b;
    }
    ++a;
  }
  // Pullback of the differential dy_a is the row a of jac. Work in the quotient by span.
  std::vector<std::size_t> free;
  std::vector<bool> pivot(n, false);
  for (auto p : span.pivots) pivot[p] = true;
  for (std::size_t v = 0; v < n; ++v)
    if (!pivot[v]) free.push_back(v);
  // Reduce a covector modulo the span: eliminate pivot coordinates.
  auto reduce = [&](std::vector<Cyc> w) {
    for (std::size_t r = 0; r < span.pivots.size(); ++r) {
      Cyc c = w[span.pivots[r]];
      if (c.is_zero()) continue;
      for (std::size_t v = 0; v < n; ++v) w[v] -= c * span.reduced(r, v);
    }
    return w;
  };
  Cyc tr;
  for (std::size_t f : free) tr += reduce(jac.row(f))[f];
  return tr;
}

}  // namespace

TEST_CASE("Z3 example: local degrees 1 + chi and 1 + chi^2") {
  auto sections = parse_all({"x^2 + y^2 + z^2", "x*y + x*z + y*z"});
  auto action = equideg::testing::z3_action();
  auto locus = polysolve::find_zeros(sections, 3);
  auto g = action.group();
  auto stab = groups::Subgroup::whole(g);
  auto table = chars::CharacterTable::compute(stab.as_group());
  const Cyc w = omega();
  const int gen = g->generators()[0];
  for (int which = 1; which <= 2; ++which) {
    auto p = which == 1 ? point({1, w, w * w}) : point({1, w * w, w});
    const auto& zd = zero_at(locus, p);
    REQUIRE(zd.multiplicity == 2);
    auto traces = local_traces(zd, locus.chart(zd.chart), action, stab);
    for (std::size_t i = 0; i < stab.size(); ++i) {
      int h = stab.members()[i];
      CHECK(traces[i] == Cyc(1) + cotangent_trace(sections, zd, action.matrix(h)));
    }
    // At p1 the generator acts on the cotangent line by omega, at p2 by omega^2.
    CHECK(traces[static_cast<std::size_t>(stab.local_index(gen))] == Cyc(1) + w.pow(which));
    auto ld = local_degree(zd, locus.chart(zd.chart), action, stab, table);
    CHECK(ld.local_character.dimension() == 2);
    CHECK(ld.residue_field.degree() == 2);
    auto values = ld.local_character.values();
    for (std::size_t c = 0; c < values.size(); ++c) {
      int rep = stab.as_group()->classes()[c].representative;
      CHECK(values[c] == traces[static_cast<std::size_t>(rep)]);
    }
  }
}

TEST_CASE("simple zeros give the trivial character of the stabilizer") {
  auto action = equideg::testing::a4_action();
  auto sections = parse_all({"x^2 - y^2 + z^2 - 2x*z", "x^2 - y^2/2 + z^2 - x*y - y*z"});
  auto locus = polysolve::find_zeros(sections, 1);
  for (const auto& zd : locus.zeros) {
    CHECK(polysolve::jacobian_is_invertible(sections, zd.point));
    auto orbit = groups::orbit_and_stabilizer(action, zd.point);
    auto stab = orbit.stabilizer.conjugated(groups::transporter(action, orbit.representative, zd.point));
    CHECK(stab.size() == 3);
    auto table = chars::CharacterTable::compute(stab.as_group());
    auto ld = local_degree(zd, locus.chart(zd.chart), action, stab, table);
    CHECK(ld.local_character == VirtualCharacter::trivial(table));
  }
}

TEST_CASE("conjugacy covariance across an orbit") {
  auto action = equideg::testing::a4_action();
  auto g = action.group();
  auto sections = parse_all({"x^2 - y^2 + z^2 - 2x*z", "x^2 - y^2/2 + z^2 - x*y - y*z"});
  auto locus = polysolve::find_zeros(sections, 1);
  auto orbit = groups::orbit_and_stabilizer(action, locus.zeros[0].point);
  const auto& base = zero_at(locus, orbit.representative);
  auto tr = local_traces(base, locus.chart(base.chart), action, orbit.stabilizer);
  for (int h = 0; h < static_cast<int>(g->size()); ++h) {
    auto moved = action.apply(h, base.point);
    const auto& zd = zero_at(locus, moved);
    auto conj = orbit.stabilizer.conjugated(h);
    auto tr2 = local_traces(zd, locus.chart(zd.chart), action, conj);
    for (std::size_t i = 0; i < orbit.stabilizer.size(); ++i) {
      int s = orbit.stabilizer.members()[i];
      CHECK(tr2[static_cast<std::size_t>(conj.local_index(g->conjugate(s, h)))] == tr[i]);
    }
  }
}

TEST_CASE("a fixed point of multiplicity four carries the regular representation") {
  // C[x,y]/(xy, x^2+y^2) has basis 1, x, y, x^2; the rotation acts with traces 4, 0, 0, 0.
  auto action = equideg::testing::z4_action();
  auto sections = parse_all({"x*y", "x^2 + y^2"});
  auto locus = polysolve::find_zeros(sections, 1);
  REQUIRE(locus.zeros.size() == 1);
  const auto& zd = locus.zeros[0];
  CHECK(zd.multiplicity == 4);
  auto stab = groups::Subgroup::whole(action.group());
  auto table = chars::CharacterTable::compute(stab.as_group());
  auto traces = local_traces(zd, locus.chart(zd.chart), action, stab);
  for (std::size_t i = 0; i < traces.size(); ++i) CHECK(traces[i] == Cyc(stab.members()[i] == 0 ? 4 : 0));
  CHECK(local_degree(zd, locus.chart(zd.chart), action, stab, table).local_character ==
        VirtualCharacter::regular(table));
}

TEST_CASE("elements moving the point are rejected") {
  auto action = equideg::testing::z4_action();
  auto sections = parse_all({"x^2 + y^2 - z^2", "x*y"});
  auto locus = polysolve::find_zeros(sections, 1);
  CHECK_THROWS_AS(local_action(locus.zeros[0], locus.chart(locus.zeros[0].chart), action, 1), DomainError);
}

TEST_CASE("derived point pushforward") {
  auto table = chars::CharacterTable::compute(equideg::testing::a4_group());
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> c(-4, 4);
  for (int t = 0; t < 20; ++t) {
    std::vector<long> coeffs(table->size());
    for (auto& x : coeffs) x = c(rng);
    VirtualCharacter chi(table, coeffs);
    CHECK(derived_point_pushforward({0, chi}) == chi);
    for (long h = 1; h <= 3; ++h) CHECK(derived_point_pushforward({h, chi}).is_zero());
  }
  auto one = VirtualCharacter::trivial(table);
  CHECK(derived_point_pushforward({0, one}) == one);
  CHECK_THROWS_AS(derived_point_pushforward({-1, one}), InputError);
}
