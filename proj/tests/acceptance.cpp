// Acceptance run: one PASS/FAIL line per criterion.
// usage: acceptance <path to equideg> <spec dir>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "equideg/error.hpp"
#include "equideg/pipeline.hpp"
#include "fixtures.hpp"

using namespace equideg;
using namespace equideg::pipeline;
using CycMatrix = linalg::Matrix<Cyc>;

namespace {

std::string cli;
std::string spec_dir;

struct Run {
  int status = -1;
  std::string out;
  double seconds = 0;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = "'" + cli + "' " + args + " 2>/dev/null";
  auto start = std::chrono::steady_clock::now();
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string spec(const std::string& name) { return spec_dir + "/" + name; }

ProblemSpec load(const std::string& name) { return problem_from_json(load_json_file(spec(name))); }

std::vector<long> coeffs_of(const Run& r) {
  auto j = json::parse(r.out);
  return j["value"]["coeffs"].get<std::vector<long>>();
}

// Values along g^0, g^1, ... for the first generator of a cyclic group.
std::vector<Cyc> along_generator(const VirtualCharacter& chi) {
  const auto& g = *chi.table()->group();
  const int gen = g.generators()[0];
  auto values = chi.values();
  std::vector<Cyc> out;
  for (int k = 0; k < g.order_of(gen); ++k)
    out.push_back(values[static_cast<std::size_t>(g.class_of(g.pow(gen, k)))]);
  return out;
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << " s";
  return o.str();
}

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
  if (!ok) ++failures;
}

void note(const std::string& label, bool ok, const std::string& detail) {
  std::cout << "  " << label << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
}

// Runs a check, turning exceptions into a failure with the message.
bool guarded(const std::function<bool(std::string&)>& f, std::string& detail) {
  try {
    return f(detail);
  } catch (const std::exception& e) {
    detail += std::string(detail.empty() ? "" : "; ") + "exception: " + e.what();
    return false;
  }
}

bool criterion1(std::string& d) {
  auto r = run_cli("compute '" + spec("z4.json") + "'");
  if (r.status != 0) return d = "exit status " + std::to_string(r.status), false;
  auto c = coeffs_of(r);
  auto a = equivariant_euler_number(load("z4.json"));
  d = json(c).dump() + ", " + fmt_seconds(r.seconds);
  return c == std::vector<long>{1, 1, 1, 1} && a.value == VirtualCharacter::regular(a.table) && r.seconds < 10;
}

bool criterion2(std::string& d) {
  auto r = run_cli("compute '" + spec("a4.json") + "'");
  if (r.status != 0) return d = "exit status " + std::to_string(r.status), false;
  auto c = coeffs_of(r);
  auto a = equivariant_euler_number(load("a4.json"));
  // W: the 3-dimensional irreducible, the permutation character on the four points minus 1.
  d = json(c).dump() + " = " + a.value.to_string() + ", " + fmt_seconds(r.seconds);
  return c == std::vector<long>{1, 0, 0, 1} && a.table->degree(3) == 3 && r.seconds < 30;
}

bool criterion3(std::string& d) {
  auto r = run_cli("compute '" + spec("z3.json") + "'");
  if (r.status != 0) return d = "exit status " + std::to_string(r.status), false;
  auto c = coeffs_of(r);
  auto a = equivariant_euler_number(load("z3.json"));
  const Cyc w = Cyc::zeta(3);
  bool table_ok = a.orbits.size() == 2;
  std::vector<Cyc> seen;
  for (const auto& o : a.orbits) {
    table_ok = table_ok && o.multiplicity == 2 && o.orbit_size == 1 && o.stabilizer.size() == 3;
    auto v = along_generator(o.local_degree.local_character);
    table_ok = table_ok && v[0] == Cyc(2);
    seen.push_back(v[1]);
  }
  table_ok = table_ok && seen.size() == 2 &&
             ((seen[0] == Cyc(1) + w && seen[1] == Cyc(1) + w * w) ||
              (seen[1] == Cyc(1) + w && seen[0] == Cyc(1) + w * w));
  auto v = along_generator(a.value);
  d = json(c).dump() + " = " + a.value.to_string() + ", fixed points of multiplicity 2 with 1+chi and 1+chi^2: " +
      (table_ok ? "yes" : "no") + ", " + fmt_seconds(r.seconds);
  return v == std::vector<Cyc>{4, 1, 1} && table_ok && r.seconds < 30;
}

bool criterion4(std::string& d) {
  auto r = run_cli("selfint '" + spec("z3_selfint_literal.json") + "'");
  if (r.status != 0) {
    d = "selfint on the stated conic exited with status " + std::to_string(r.status);
    try {
      selfint_from_json(load_json_file(spec("z3_selfint_literal.json")));
    } catch (const Error& e) {
      d += " (" + std::string(e.what()) + ")";
    }
    return false;
  }
  auto s = self_intersection(selfint_from_json(load_json_file(spec("z3_selfint_literal.json"))));
  auto a = equivariant_euler_number(load("z3.json"));
  d = s.value.to_string();
  return same_class(s.value, a.value);
}

void criterion4_supplement() {
  std::string d;
  bool ok = guarded(
      [](std::string& d) {
        auto r = run_cli("selfint '" + spec("z3_selfint.json") + "'");
        if (r.status != 0) return d = "exit status " + std::to_string(r.status), false;
        auto s = self_intersection(selfint_from_json(load_json_file(spec("z3_selfint.json"))));
        auto a = equivariant_euler_number(load("z3.json"));
        d = "invariant C3 conic x^2+y^2+z^2: " + s.value.to_string() + ", equal to criterion 3: " +
            (same_class(s.value, a.value) ? "yes" : "no");
        return coeffs_of(r) == std::vector<long>{2, 1, 1} && same_class(s.value, a.value);
      },
      d);
  note("criterion 4 supplement (C3 conic)", ok, d);
  d.clear();
  ok = guarded(
      [](std::string& d) {
        auto s = self_intersection(selfint_from_json(load_json_file(spec("c4_selfint.json"))));
        auto a = equivariant_euler_number(load("c4_pair.json"));
        d = "stated conic under C4: " + s.value.to_string() + ", transverse pair: " + a.value.to_string();
        return same_class(s.value, a.value);
      },
      d);
  note("criterion 4 supplement (C4 conic)", ok, d);
  d.clear();
  ok = guarded(
      [](std::string& d) {
        auto r = section_independence_check(load("z4.json"), load("z4_alt.json"));
        d = "z4 against an alternative section pair: " + r.second.value.to_string();
        return r.equal;
      },
      d);
  note("criterion 4 supplement (section independence)", ok, d);
}

bool criterion5(std::string& d) {
  using chars::CharacterTable;
  using groups::Subgroup;
  auto c4g = testing::cyclic_group(4);
  auto c4 = CharacterTable::compute(c4g);
  auto e = Subgroup::trivial(c4g);
  bool ind_e = chars::induce(e, VirtualCharacter::trivial(CharacterTable::compute(e.as_group())), c4) ==
               VirtualCharacter::regular(c4);

  auto a4g = testing::a4_group();
  auto a4 = CharacterTable::compute(a4g);
  auto a3 = Subgroup::generated_by(a4g, {a4g->generators()[0]});
  bool ind_a3 = chars::induce(a3, VirtualCharacter::trivial(CharacterTable::compute(a3.as_group())), a4).coeffs() ==
                std::vector<long>{1, 0, 0, 1};

  bool ind_g = true;
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> c(-3, 3);
  std::vector<groups::GroupPtr> grps = {c4g, testing::cyclic_group(6), testing::perm_group({"(1 2)", "(1 2 3)"}, 3),
                                        a4g};
  for (const auto& g : grps) {
    auto tg = CharacterTable::compute(g);
    auto whole = Subgroup::whole(g);
    auto tw = CharacterTable::compute(whole.as_group());
    std::vector<long> v(tw->size());
    for (auto& x : v) x = c(rng);
    ind_g = ind_g && chars::induce(whole, VirtualCharacter(tw, v), tg).coeffs() == v;
  }

  int frob = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto& g = grps[static_cast<std::size_t>(trial) % grps.size()];
    auto tg = CharacterTable::compute(g);
    std::uniform_int_distribution<int> el(0, static_cast<int>(g->size()) - 1);
    auto h = Subgroup::generated_by(g, {el(rng), el(rng)});
    auto th = CharacterTable::compute(h.as_group());
    std::vector<long> pc(th->size()), cc(tg->size());
    for (auto& x : pc) x = c(rng);
    for (auto& x : cc) x = c(rng);
    VirtualCharacter psi(th, pc), chi(tg, cc);
    Cyc lhs = tg->inner_product(chars::induce(h, psi, tg).values(), chi.values());
    Cyc rhs = th->inner_product(psi.values(), chars::restrict(h, chi, th).values());
    frob += lhs == rhs;
  }
  d = std::string("Ind_e^C4(1)=regular ") + (ind_e ? "yes" : "no") + ", Ind_A3^A4(1)=1+W " + (ind_a3 ? "yes" : "no") +
      ", Ind_G^G=id " + (ind_g ? "yes" : "no") + ", Frobenius reciprocity " + std::to_string(frob) + "/50";
  return ind_e && ind_a3 && ind_g && frob == 50;
}

bool criterion6(std::string& d) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<long> c(-4, 4);
  std::vector<groups::GroupPtr> grps = {testing::cyclic_group(3), testing::cyclic_group(4), testing::a4_group(),
                                        testing::perm_group({"(1 2)", "(1 2 3)"}, 3)};
  int good = 0;
  for (int trial = 0; trial < 20; ++trial) {
    auto t = chars::CharacterTable::compute(grps[static_cast<std::size_t>(trial) % grps.size()]);
    std::vector<long> v(t->size());
    for (auto& x : v) x = c(rng);
    VirtualCharacter chi(t, v);
    bool ok = localdeg::derived_point_pushforward({0, chi}) == chi;
    for (long h = 1; h <= 4; ++h) ok = ok && localdeg::derived_point_pushforward({h, chi}).is_zero();
    good += ok;
  }
  d = std::to_string(good) + "/20 classes";
  return good == 20;
}

CycMatrix rotation(int n) {
  const Cyc z = Cyc::zeta(n), zi = Cyc::zeta(n, -1), i = Cyc::zeta(4);
  const Cyc c = (z + zi) / Cyc(2), s = (z - zi) / (Cyc(2) * i);
  return testing::cyc_matrix({{c, -s}, {s, c}});
}

bool chi_oracle(std::string& d) {
  std::vector<eulerchar::TwoDimRep> reps;
  for (int n = 2; n <= 6; ++n) {
    auto g = testing::cyclic_group(n);
    reps.emplace_back(g, std::vector<CycMatrix>{testing::cyc_matrix({{Cyc::zeta(n), 0}, {0, Cyc::zeta(n, n > 2 ? 2 : 1)}})});
    reps.emplace_back(g, std::vector<CycMatrix>{rotation(n)});
  }
  auto s3 = testing::perm_group({"(1 2 3)", "(1 2)"}, 3);
  reps.emplace_back(s3, std::vector<CycMatrix>{testing::int_matrix({{0, -1}, {1, -1}}), testing::int_matrix({{-1, 1}, {0, 1}})});
  reps.push_back(testing::c3_conic().induced);
  reps.push_back(testing::c4_conic().induced);
  int good = 0;
  for (const auto& rep : reps) {
    auto t = chars::CharacterTable::compute(rep.group());
    bool ok = true;
    for (int deg = -8; deg <= 8; ++deg)
      ok = ok && eulerchar::chi_P1(rep, deg, t) == eulerchar::chi_P1_cech_oracle(rep, deg, t);
    good += ok;
  }
  d += "chi_P1 = Cech on " + std::to_string(good) + "/" + std::to_string(reps.size()) + " representations";
  return good == static_cast<int>(reps.size()) && reps.size() >= 10;
}

struct LocusAudit {
  int algebras = 0, commuting = 0, zeros = 0, jacobian_agree = 0;
};

void audit_locus(const polysolve::ZeroLocus& locus, const std::vector<poly::MultiPoly>& sections, LocusAudit& a) {
  for (const auto& ch : locus.charts) {
    if (!ch.algebra) continue;
    ++a.algebras;
    bool ok = true;
    const auto& q = *ch.algebra;
    for (std::size_t i = 0; i < q.nvars(); ++i)
      for (std::size_t j = i + 1; j < q.nvars(); ++j)
        ok = ok && q.mul_operator(i) * q.mul_operator(j) == q.mul_operator(j) * q.mul_operator(i);
    a.commuting += ok;
  }
  for (const auto& z : locus.zeros) {
    ++a.zeros;
    a.jacobian_agree += (z.multiplicity == 1) == polysolve::jacobian_is_invertible(sections, z.point);
  }
}

std::vector<std::string> random_invariant_pair(int n, const std::vector<std::vector<long>>& m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::vector<std::vector<Cyc>> rows;
  for (const auto& r : m) rows.emplace_back(r.begin(), r.end());
  auto gen = CycMatrix::from_rows(rows);
  std::vector<std::string> out;
  for (int s = 0; s < 2; ++s) {
    std::vector<Cyc> lin = {Cyc(coef(rng)), Cyc(coef(rng)), Cyc(coef(rng))};
    poly::MultiPoly l(3);
    for (std::size_t i = 0; i < 3; ++i) l += lin[i] * poly::MultiPoly::variable(3, i);
    poly::MultiPoly prod = poly::MultiPoly::constant(3, Cyc(1));
    CycMatrix g = CycMatrix::identity(3);
    for (int k = 0; k < n; ++k) {
      prod = prod * l.linear_substitute(g);
      g = g * gen;
    }
    out.push_back(prod.to_string({"x", "y", "z"}));
  }
  return out;
}

bool criterion7(std::string& d) {
  bool ok = chi_oracle(d);

  LocusAudit audit;
  for (const char* name : {"z4.json", "z4_alt.json", "z4_stable.json", "a4.json", "z3.json", "c4_pair.json"}) {
    auto s = load(name);
    auto a = equivariant_euler_number(s);
    audit_locus(polysolve::find_zeros(s.sections, a.field_order, s.hints), s.sections, audit);
  }

  struct Case {
    int n;
    std::vector<std::vector<long>> m;
  };
  std::vector<Case> cases = {{2, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}},
                             {3, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}},
                             {4, {{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}}};
  std::mt19937_64 rng(7);
  int systems = 0, bezout = 0;
  for (const auto& c : cases) {
    int here = 0;
    for (int attempt = 0; attempt < 60 && here < 7; ++attempt) {
      json mat = json::array();
      for (const auto& row : c.m) mat.push_back(row);
      json j = {{"ambientDim", 2}, {"group", {{"cyclic", c.n}}}, {"actionMatrices", {{"generators", json::array({mat})}}},
                {"bundleDegrees", {c.n, c.n}}, {"sections", random_invariant_pair(c.n, c.m, rng)}};
      try {
        auto s = problem_from_json(j);
        auto a = equivariant_euler_number(s);
        long sum = 0;
        for (const auto& o : a.orbits) sum += static_cast<long>(o.orbit_size * o.multiplicity) * o.residue_degree;
        bezout += sum == static_cast<long>(c.n) * c.n && a.value.dimension() == sum;
        audit_locus(polysolve::find_zeros(s.sections, a.field_order), s.sections, audit);
        ++systems;
        ++here;
      } catch (const HypothesisViolation&) {
        // a shared component: not a zero-dimensional system
      } catch (const InputError&) {
      }
    }
  }
  d += "; operators commute on " + std::to_string(audit.commuting) + "/" + std::to_string(audit.algebras) +
       " algebras; Bezout sum on " + std::to_string(bezout) + "/" + std::to_string(systems) +
       " random systems; multiplicity 1 iff invertible Jacobian on " + std::to_string(audit.jacobian_agree) + "/" +
       std::to_string(audit.zeros) + " zeros";
  ok = ok && audit.commuting == audit.algebras && systems >= 20 && bezout == systems &&
       audit.jacobian_agree == audit.zeros;

  std::vector<groups::GroupPtr> grps;
  for (int n = 1; n <= 6; ++n) grps.push_back(testing::cyclic_group(n));
  grps.push_back(testing::perm_group({"(1 2 3)", "(1 2)"}, 3));
  grps.push_back(testing::a4_group());
  grps.push_back(testing::perm_group({"(1 2 3 4 5)", "(1 2)(3 4)"}, 5));
  grps.push_back(testing::perm_group({"(1 2 3 4)", "(1 3)"}, 4));
  int orth = 0;
  for (const auto& g : grps) {
    auto t = chars::CharacterTable::compute(g);
    bool good = true;
    for (std::size_t i = 0; i < t->size(); ++i)
      for (std::size_t j = 0; j < t->size(); ++j)
        good = good && t->inner_product(t->irreducible(i), t->irreducible(j)) == Cyc(i == j ? 1 : 0);
    const auto& cls = g->classes();
    for (std::size_t a = 0; a < cls.size(); ++a)
      for (std::size_t b = 0; b < cls.size(); ++b) {
        Cyc s(0);
        for (std::size_t i = 0; i < t->size(); ++i) s += t->irreducible(i)[a] * cyclo::conj(t->irreducible(i)[b]);
        const long centralizer = static_cast<long>(g->size() / cls[a].size());
        good = good && s == Cyc(a == b ? centralizer : 0);
      }
    orth += good;
  }
  d += "; table orthogonality on " + std::to_string(orth) + "/" + std::to_string(grps.size()) + " groups";
  return ok && orth == static_cast<int>(grps.size());
}

bool criterion8(std::string& d) {
  int same = 0, total = 0;
  auto twice = [&](const std::string& args) {
    auto a = run_cli(args), b = run_cli(args);
    ++total;
    same += a.status == b.status && a.out == b.out && !a.out.empty();
  };
  for (const char* name : {"z4.json", "z4_alt.json", "z4_stable.json", "a4.json", "z3.json", "c4_pair.json"})
    twice("compute '" + spec(name) + "'");
  for (const char* name : {"z3_selfint.json", "c4_selfint.json"}) twice("selfint '" + spec(name) + "'");
  twice("independence '" + spec("z4.json") + "' '" + spec("z4_alt.json") + "'");
  for (const char* name : {"c4.json", "a4.json", "s3.json", "a5.json"}) twice("chartable '" + spec("groups/") + name + "'");
  d = std::to_string(same) + "/" + std::to_string(total) + " outputs byte-identical across runs";
  return same == total;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <equideg executable> <spec dir>\n";
    return 1;
  }
  cli = argv[1];
  spec_dir = argv[2];
  const std::vector<std::function<bool(std::string&)>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                                   criterion5, criterion6, criterion7, criterion8};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string d;
    bool ok = guarded(criteria[i], d);
    report(static_cast<int>(i + 1), ok, d);
    if (i == 3) criterion4_supplement();
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
