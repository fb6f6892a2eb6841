#include "equideg/pipeline.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "equideg/cyclo_json.hpp"
#include "equideg/error.hpp"

namespace equideg::pipeline {

using groups::CycMatrix;
using groups::ProjPoint;
using groups::Subgroup;
using poly::MultiPoly;

// --- input -------------------------------------------------------------------------

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get_as(const json& j, const char* key) {
  try {
    return require(j, key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("field \"") + key + "\" has the wrong type");
  }
}

CycMatrix matrix_from_json(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw InputError("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  CycMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw InputError("matrix row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = scalar_from_json(j[i][k]);
  }
  return m;
}

std::vector<CycMatrix> matrices_from_json(const json& j, std::size_t n) {
  const json& gens = j.is_object() ? require(j, "generators") : j;
  if (!gens.is_array()) throw InputError("matrices must be a list");
  std::vector<CycMatrix> out;
  for (const auto& m : gens) out.push_back(matrix_from_json(m, n));
  return out;
}

std::vector<std::string> variable_names(const json& j, std::size_t n) {
  if (j.contains("variables")) {
    auto v = get_as<std::vector<std::string>>(j, "variables");
    if (v.size() != n) throw InputError("expected " + std::to_string(n) + " variable names");
    return v;
  }
  if (n == 3) return {"x", "y", "z"};
  return poly::default_names(n);
}

cyclo::SubfieldSpec base_field_from_json(const json& j, int order) {
  if (!j.contains("baseField")) return cyclo::SubfieldSpec::rationals(order);
  const json& b = j.at("baseField");
  if (b.is_string() && b.get<std::string>() == "Q") return cyclo::SubfieldSpec::rationals(order);
  if (b.is_object() && b.contains("cyclotomic")) {
    int m = get_as<int>(b, "cyclotomic");
    if (m <= 0) throw InputError("base field order must be positive");
    int n = cyclo::lcm_int(order, m);
    return cyclo::SubfieldSpec::cyclotomic(n, m);
  }
  if (b.is_object() && b.contains("fixingSubgroup")) return cyclo::subfield_from_json(b);
  throw InputError("baseField must be \"Q\", {\"cyclotomic\": m} or a fixing subgroup");
}

}  // namespace

Cyc scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Cyc(j.get<long>());
  if (j.is_string()) {
    MultiPoly p = poly::parse(j.get<std::string>(), {});
    if (p.is_zero()) return Cyc();
    return p.leading().coeff;
  }
  if (j.is_object()) return cyclo::cyclotomic_from_json(j);
  throw InputError("scalar must be an integer, a string or a cyclotomic object");
}

groups::GroupPtr group_from_json(const json& j, const std::vector<CycMatrix>& action_generators) {
  if (!j.is_object()) throw InputError("group must be an object");
  if (j.contains("cyclic")) {
    int n = get_as<int>(j, "cyclic");
    if (n < 1) throw InputError("cyclic group order must be positive");
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = (i + 1) % n;
    return std::make_shared<groups::FiniteGroup>(groups::FiniteGroup::from_permutations({p}));
  }
  if (j.contains("permutations")) {
    int degree = j.contains("degree") ? get_as<int>(j, "degree") : 0;
    std::vector<std::vector<int>> perms;
    for (const auto& c : get_as<std::vector<std::string>>(j, "permutations"))
      perms.push_back(groups::parse_cycles(c, degree));
    std::size_t len = 0;
    for (const auto& p : perms) len = std::max(len, p.size());
    for (auto& p : perms)
      for (std::size_t i = p.size(); i < len; ++i) p.push_back(static_cast<int>(i));
    return std::make_shared<groups::FiniteGroup>(groups::FiniteGroup::from_permutations(perms));
  }
  if (j.contains("fromAction") && j.at("fromAction").get<bool>()) {
    if (action_generators.empty()) throw InputError("fromAction needs action matrices");
    return groups::group_from_matrices(action_generators).group;
  }
  throw InputError("group must give \"cyclic\", \"permutations\" or \"fromAction\"");
}

std::vector<ProjPoint> points_from_json(const json& j, std::size_t dim) {
  if (!j.is_array()) throw InputError("points must be a list");
  std::vector<ProjPoint> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != dim + 1) throw InputError("point needs " + std::to_string(dim + 1) + " coordinates");
    std::vector<Cyc> c;
    for (const auto& x : p) c.push_back(scalar_from_json(x));
    out.emplace_back(std::move(c));
  }
  return out;
}

ProblemSpec problem_from_json(const json& j) {
  ProblemSpec s;
  s.name = j.contains("name") ? get_as<std::string>(j, "name") : "";
  s.ambient_dim = get_as<std::size_t>(j, "ambientDim");
  if (s.ambient_dim == 0) throw InputError("ambientDim must be positive");
  s.cyclotomic_order = j.contains("cyclotomicOrder") ? get_as<int>(j, "cyclotomicOrder") : 1;
  if (s.cyclotomic_order <= 0) throw InputError("cyclotomicOrder must be positive");
  auto gens = matrices_from_json(require(j, "actionMatrices"), s.ambient_dim + 1);
  s.group = group_from_json(require(j, "group"), gens);
  s.action = std::make_shared<groups::ProjectiveAction>(s.group, s.ambient_dim, gens);
  s.variables = variable_names(j, s.ambient_dim + 1);
  for (const auto& t : get_as<std::vector<std::string>>(j, "sections")) s.sections.push_back(poly::parse(t, s.variables));
  s.bundle_degrees = get_as<std::vector<int>>(j, "bundleDegrees");
  if (s.bundle_degrees.size() != s.sections.size())
    throw InputError("bundleDegrees and sections have different lengths");
  for (std::size_t i = 0; i < s.sections.size(); ++i) {
    const auto& f = s.sections[i];
    if (f.is_zero() || !f.is_homogeneous() || f.total_degree() != s.bundle_degrees[i])
      throw InputError("section " + std::to_string(i + 1) + " is not homogeneous of degree " +
                       std::to_string(s.bundle_degrees[i]));
  }
  if (j.contains("hints")) s.hints = points_from_json(j.at("hints"), s.ambient_dim);
  s.allow_stable_ideal = j.contains("allowStableIdeal") && get_as<bool>(j, "allowStableIdeal");
  s.base_field = base_field_from_json(j, s.cyclotomic_order);
  s.cyclotomic_order = cyclo::lcm_int(s.cyclotomic_order, s.base_field.ambient_order());
  return s;
}

SelfIntSpec selfint_from_json(const json& j) {
  SelfIntSpec s;
  s.name = j.contains("name") ? get_as<std::string>(j, "name") : "";
  s.cyclotomic_order = j.contains("cyclotomicOrder") ? get_as<int>(j, "cyclotomicOrder") : 1;
  auto gens = matrices_from_json(require(j, "actionMatrices"), 3);
  s.group = group_from_json(require(j, "group"), gens);
  groups::ProjectiveAction action(s.group, 2, gens);
  auto names = variable_names(j, 3);
  MultiPoly form = poly::parse(get_as<std::string>(j, "conic"), names);
  if (form.is_zero() || !form.is_homogeneous() || form.total_degree() != 2)
    throw InputError("the conic must be a nonzero quadratic form");
  for (int g = 0; g < static_cast<int>(s.group->size()); ++g) {
    MultiPoly moved = form.linear_substitute(action.matrix(g));
    if (!(moved == (moved.coefficient(form.leading().exp) / form.leading().coeff) * form))
      throw HypothesisViolation("the conic " + form.to_string(names) + " is not G-stable: element " +
                                s.group->labels()[static_cast<std::size_t>(g)] + " sends it to " + moved.to_string(names));
  }
  std::vector<MultiPoly> param;
  for (const auto& t : get_as<std::vector<std::string>>(j, "parametrization")) param.push_back(poly::parse(t, {"s", "t"}));
  eulerchar::TwoDimRep induced(s.group, matrices_from_json(require(j, "inducedMatrices"), 2));
  s.conic = eulerchar::EquivariantConic{action, form, param, induced};
  return s;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

// --- invariance -----------------------------------------------------------------------

InvarianceReport invariance_report(const ProblemSpec& spec, const TablePtr& table) {
  const auto& g = *spec.group;
  const auto n = static_cast<int>(g.size());
  InvarianceReport r;
  r.semi_invariant = true;
  for (const auto& s : spec.sections) {
    SectionCharacter sc;
    sc.semi_invariant = true;
    const auto& lead = s.leading();
    for (int h = 0; h < n && sc.semi_invariant; ++h) {
      MultiPoly moved = s.linear_substitute(spec.action->matrix(h));
      Cyc lambda = moved.coefficient(lead.exp) / lead.coeff;
      if (moved == lambda * s) sc.scalars.push_back(lambda.minimal());
      else sc.semi_invariant = false;
    }
    if (!sc.semi_invariant) {
      sc.scalars.clear();
      r.semi_invariant = false;
    } else {
      sc.is_character = true;
      for (int a = 0; a < n && sc.is_character; ++a)
        for (int b = 0; b < n && sc.is_character; ++b)
          if (!(sc.scalars[static_cast<std::size_t>(g.mul(a, b))] ==
                sc.scalars[static_cast<std::size_t>(a)] * sc.scalars[static_cast<std::size_t>(b)]))
            sc.is_character = false;
      if (sc.is_character) {
        chars::ClassFunction f;
        for (const auto& cls : g.classes()) f.push_back(sc.scalars[static_cast<std::size_t>(cls.representative)]);
        sc.character = chars::decompose(f, table);
      }
    }
    r.sections.push_back(std::move(sc));
  }
  auto gb = polysolve::buchberger(spec.sections);
  r.ideal_stable = true;
  for (int k : g.generators())
    for (const auto& s : spec.sections)
      if (!polysolve::normal_form(s.linear_substitute(spec.action->matrix(k)), gb).is_zero()) r.ideal_stable = false;
  return r;
}

InvarianceReport check_invariance(const ProblemSpec& spec, const TablePtr& table) {
  auto r = invariance_report(spec, table);
  if (r.semi_invariant) return r;
  std::string which;
  for (std::size_t i = 0; i < r.sections.size(); ++i)
    if (!r.sections[i].semi_invariant) which += (which.empty() ? "" : ", ") + std::to_string(i + 1);
  if (r.ideal_stable && spec.allow_stable_ideal) return r;
  throw HypothesisViolation("sections not semi-invariant (section " + which + "); the ideal they generate is " +
                            (r.ideal_stable ? "G-stable, so allowStableIdeal may be set to proceed"
                                            : "not G-stable either"));
}

// --- the Euler number -----------------------------------------------------------------

namespace {

ProjPoint galois_conjugate(const ProjPoint& p, int sigma, int n) {
  std::vector<Cyc> c;
  for (const auto& x : p.coords()) c.push_back(cyclo::galois_apply(x, sigma, n).minimal());
  return ProjPoint(std::move(c));
}

const polysolve::ZeroDatum& zero_at(const polysolve::ZeroLocus& l, const ProjPoint& p) {
  for (const auto& z : l.zeros)
    if (z.point == p) return z;
  throw InternalError("point " + p.to_string() + " is not in the zero locus");
}

int coefficient_order(const CycMatrix& m) {
  int o = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) o = cyclo::lcm_int(o, m(i, k).minimal().order());
  return o;
}

bool defined_over(const cyclo::SubfieldSpec& k, const Cyc& x) { return k.contains(x); }

struct TableCache {
  std::map<std::vector<int>, TablePtr> tables;
  TablePtr get(const Subgroup& h) {
    auto it = tables.find(h.members());
    if (it != tables.end() && it->second->group() == h.as_group()) return it->second;
    auto t = chars::CharacterTable::compute(h.as_group());
    tables[h.members()] = t;
    return t;
  }
};

}  // namespace

EquivariantAnswer equivariant_euler_number(const ProblemSpec& spec) {
  if (spec.sections.size() != spec.ambient_dim)
    throw HypothesisViolation("the number of sections (" + std::to_string(spec.sections.size()) +
                              ") must equal the dimension of P^" + std::to_string(spec.ambient_dim));
  auto table = chars::CharacterTable::compute(spec.group);
  EquivariantAnswer ans{table, 1, VirtualCharacter::zero(table), {}, {}};
  ans.certificates.invariance = check_invariance(spec, ans.table);

  int n = spec.cyclotomic_order;
  for (const auto& s : spec.sections) n = cyclo::lcm_int(n, s.coefficient_order());
  for (int g = 0; g < static_cast<int>(spec.group->size()); ++g) n = cyclo::lcm_int(n, coefficient_order(spec.action->matrix(g)));
  const cyclo::SubfieldSpec k = spec.base_field.lifted(cyclo::lcm_int(n, spec.base_field.ambient_order()));
  n = k.ambient_order();
  for (const auto& s : spec.sections)
    for (const auto& t : s.terms())
      if (!defined_over(k, t.coeff)) throw InputError("section coefficient " + t.coeff.to_string() + " is not in the base field");
  for (int g : spec.group->generators()) {
    const CycMatrix m = groups::normalize_projective(spec.action->matrix(g));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!defined_over(k, m(i, c))) throw InputError("action matrix entry " + m(i, c).to_string() + " is not in the base field");
  }

  auto locus = polysolve::find_zeros(spec.sections, n, spec.hints);
  n = locus.field_order;
  const cyclo::SubfieldSpec kn = k.lifted(n);
  ans.field_order = n;
  const auto galois = cyclo::SubfieldSpec::full(n).relative_galois(kn);
  const auto& g = *spec.group;
  const auto& action = *spec.action;

  std::set<ProjPoint> remaining;
  for (const auto& z : locus.zeros) remaining.insert(z.point);
  TableCache cache;
  bool transfer_ok = true;
  while (!remaining.empty()) {
    const ProjPoint p = *remaining.begin();
    std::set<ProjPoint> galois_orbit;
    for (int s : galois) galois_orbit.insert(galois_conjugate(p, s, n));
    std::set<ProjPoint> cls;
    for (const auto& q : galois_orbit)
      for (int h = 0; h < static_cast<int>(g.size()); ++h) cls.insert(action.apply(h, q));
    for (const auto& q : cls)
      if (!remaining.erase(q)) throw InternalError("zero locus is not stable under the group and Galois action");

    std::vector<int> stab_members, point_stab;
    for (int h = 0; h < static_cast<int>(g.size()); ++h) {
      ProjPoint hp = action.apply(h, p);
      if (galois_orbit.count(hp)) stab_members.push_back(h);
      if (hp == p) point_stab.push_back(h);
    }
    Subgroup gx(spec.group, stab_members), gp(spec.group, point_stab);
    const auto& zd = zero_at(locus, p);
    const cyclo::SubfieldSpec kx = zd.residue_field.lifted(n).compositum(kn);
    const int residue_degree = kx.relative_degree(kn);
    if (static_cast<std::size_t>(residue_degree) != galois_orbit.size())
      throw InternalError("Galois orbit size differs from the residue degree");

    auto gp_table = cache.get(gp);
    auto ld = localdeg::local_degree(zd, locus.chart(zd.chart), action, gp, gp_table);
    ld.residue_field = kx;

    // k-linear character of G_x on the local algebra of the closed point.
    auto gx_table = cache.get(gx);
    std::vector<Cyc> traces(gx.size());
    for (const auto& q : galois_orbit) {
      const auto& zq = zero_at(locus, q);
      for (std::size_t i = 0; i < gx.size(); ++i) {
        int h = gx.members()[i];
        if (action.apply(h, q) == q) traces[i] += localdeg::local_action(zq, locus.chart(zq.chart), action, h).trace();
      }
    }
    chars::ClassFunction kvalues;
    for (const auto& c : gx.as_group()->classes()) kvalues.push_back(traces[static_cast<std::size_t>(c.representative)].minimal());
    VirtualCharacter field_transfer = chars::decompose(kvalues, gx_table);
    if (gx == gp) {
      auto traced = chars::field_restrict_scalars(ld.local_character, kx, kn);
      if (!same_class(traced, field_transfer)) transfer_ok = false;
    }
    VirtualCharacter transferred = chars::induce(gx, field_transfer, ans.table);
    const std::size_t orbit_size = g.size() / gx.size();
    if (transferred.dimension() != static_cast<long>(orbit_size * static_cast<std::size_t>(residue_degree) * zd.multiplicity))
      throw InternalError("transferred class has the wrong dimension");
    ans.value += transferred;
    ans.orbits.push_back(OrbitContribution{p, std::vector<ProjPoint>(cls.begin(), cls.end()), orbit_size, gx, gp, kx,
                                           residue_degree, zd.multiplicity, ld, field_transfer, transferred});
  }
  ans.certificates.transfer_check = transfer_ok;

  long bezout = 1;
  for (int d : spec.bundle_degrees) bezout *= d;
  ans.certificates.bezout_number = bezout;
  ans.certificates.bezout_sum = ans.value.dimension() == bezout;

  // Geometric recomputation: every geometric orbit induced from its point stabilizer.
  std::vector<ProjPoint> pts;
  for (const auto& z : locus.zeros) pts.push_back(z.point);
  VirtualCharacter geometric = VirtualCharacter::zero(ans.table);
  for (const auto& o : groups::partition_into_orbits(action, pts)) {
    const auto& zd = zero_at(locus, o.representative);
    auto ld = localdeg::local_degree(zd, locus.chart(zd.chart), action, o.stabilizer, cache.get(o.stabilizer));
    geometric += chars::induce(o.stabilizer, ld.local_character, ans.table);
  }
  ans.certificates.geometric_check = geometric == ans.value;
  if (!ans.certificates.geometric_check || !transfer_ok)
    throw InternalError("closed-point and geometric orbit sums disagree: " + ans.value.to_string() + " vs " +
                        geometric.to_string() + (transfer_ok ? "" : " (field trace mismatch)"));
  return ans;
}

SelfIntAnswer self_intersection(const SelfIntSpec& spec) {
  if (!spec.conic) throw InputError("self-intersection spec has no conic");
  auto table = chars::CharacterTable::compute(spec.group);
  auto characters = eulerchar::verify_conic(*spec.conic);
  return {table, eulerchar::conic_self_intersection(*spec.conic, table), characters};
}

bool same_group(const groups::FiniteGroup& a, const groups::FiniteGroup& b) {
  if (a.size() != b.size() || a.generators() != b.generators()) return false;
  const auto n = static_cast<int>(a.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (a.mul(x, y) != b.mul(x, y)) return false;
  return true;
}

bool same_class(const VirtualCharacter& a, const VirtualCharacter& b) {
  return same_group(*a.table()->group(), *b.table()->group()) && a.table()->labels() == b.table()->labels() &&
         a.table()->irreducibles() == b.table()->irreducibles() && a.coeffs() == b.coeffs();
}

IndependenceResult section_independence_check(const ProblemSpec& a, const ProblemSpec& b) {
  if (a.ambient_dim != b.ambient_dim || a.bundle_degrees != b.bundle_degrees)
    throw InputError("section independence needs the same ambient space and bundle degrees");
  if (!same_group(*a.group, *b.group)) throw InputError("section independence needs the same group");
  for (int g = 0; g < static_cast<int>(a.group->size()); ++g)
    if (!(groups::normalize_projective(a.action->matrix(g)) == groups::normalize_projective(b.action->matrix(g))))
      throw InputError("section independence needs the same action");
  if (!(a.base_field.lifted(cyclo::lcm_int(a.base_field.ambient_order(), b.base_field.ambient_order())) ==
        b.base_field.lifted(cyclo::lcm_int(a.base_field.ambient_order(), b.base_field.ambient_order()))))
    throw InputError("section independence needs the same base field");
  IndependenceResult r{false, equivariant_euler_number(a), equivariant_euler_number(b)};
  r.equal = same_class(r.first.value, r.second.value);
  return r;
}

// --- output ---------------------------------------------------------------------------

namespace {

json subgroup_json(const Subgroup& h) {
  json e = json::array();
  for (int m : h.members()) e.push_back(h.parent()->labels()[static_cast<std::size_t>(m)]);
  return {{"order", h.size()}, {"elements", e}};
}

json point_json(const ProjPoint& p) {
  json c = json::array();
  for (const auto& x : p.coords()) c.push_back(x.to_string());
  return c;
}

json class_function_json(const chars::ClassFunction& f) {
  json v = json::array();
  for (const auto& x : f) v.push_back(x.minimal().to_string());
  return v;
}

}  // namespace

json character_json(const VirtualCharacter& chi) {
  return {{"coeffs", chi.coeffs()}, {"labels", chi.table()->labels()}, {"string", chi.to_string()},
          {"dimension", chi.dimension()}};
}

json invariance_json(const InvarianceReport& report) {
  json sections = json::array();
  for (const auto& s : report.sections) {
    json e = {{"semiInvariant", s.semi_invariant}};
    if (s.semi_invariant) {
      e["scalars"] = class_function_json(s.scalars);
      e["isCharacter"] = s.is_character;
      if (s.character) e["character"] = character_json(*s.character);
    }
    sections.push_back(e);
  }
  return {{"semiInvariant", report.semi_invariant}, {"idealStable", report.ideal_stable}, {"sections", sections}};
}

json answer_json(const ProblemSpec& spec, const EquivariantAnswer& answer) {
  json orbits = json::array();
  for (const auto& o : answer.orbits) {
    json pts = json::array();
    for (const auto& p : o.points) pts.push_back(point_json(p));
    orbits.push_back({{"representative", point_json(o.representative)},
                      {"points", pts},
                      {"orbitSize", o.orbit_size},
                      {"stabilizer", subgroup_json(o.stabilizer)},
                      {"pointStabilizer", subgroup_json(o.point_stabilizer)},
                      {"residueField", cyclo::to_json(o.residue_field)},
                      {"residueDegree", o.residue_degree},
                      {"multiplicity", o.multiplicity},
                      {"localDegree", character_json(o.local_degree.local_character)},
                      {"fieldTransfer", character_json(o.field_transfer)},
                      {"transferred", character_json(o.transferred)}});
  }
  const auto& c = answer.certificates;
  return {{"name", spec.name},
          {"group", {{"order", spec.group->size()}, {"classes", answer.table->size()}}},
          {"baseField", cyclo::to_json(spec.base_field)},
          {"fieldOrder", answer.field_order},
          {"value", character_json(answer.value)},
          {"orbits", orbits},
          {"certificates",
           {{"bezoutSum", c.bezout_sum},
            {"bezoutNumber", c.bezout_number},
            {"invariance", c.invariance.semi_invariant},
            {"idealStable", c.invariance.ideal_stable},
            {"sectionCharacters", invariance_json(c.invariance)["sections"]},
            {"geometricCheck", c.geometric_check},
            {"transferCheck", c.transfer_check}}}};
}

json selfint_json(const SelfIntSpec& spec, const SelfIntAnswer& answer) {
  return {{"name", spec.name},
          {"group", {{"order", spec.group->size()}, {"classes", answer.table->size()}}},
          {"value", character_json(answer.value)},
          {"characters",
           {{"parametrization", class_function_json(answer.characters.parametrization)},
            {"form", class_function_json(answer.characters.form)}}}};
}

json table_json(const chars::CharacterTable& table) {
  const auto& g = *table.group();
  json classes = json::array();
  for (const auto& c : g.classes())
    classes.push_back({{"representative", g.labels()[static_cast<std::size_t>(c.representative)]},
                       {"size", c.size()},
                       {"order", g.order_of(c.representative)}});
  json rows = json::array();
  for (std::size_t i = 0; i < table.size(); ++i)
    rows.push_back({{"label", table.labels()[i]},
                    {"degree", table.degree(i)},
                    {"indicator", chars::frobenius_schur(table, i)},
                    {"values", class_function_json(table.irreducible(i))}});
  return {{"order", g.size()}, {"classes", classes}, {"characters", rows}};
}

json independence_json(const IndependenceResult& r) {
  return {{"equal", r.equal},
          {"first", character_json(r.first.value)},
          {"second", character_json(r.second.value)}};
}

std::string local_to_global_report(const ProblemSpec& spec, const EquivariantAnswer& answer) {
  std::ostringstream out;
  out << "Euler number of " << (spec.name.empty() ? "the spec" : spec.name) << " in R(G), |G| = "
      << spec.group->size() << "\n";
  for (const auto& o : answer.orbits) {
    out << "orbit of " << o.representative.to_string() << ": " << o.orbit_size << " closed point(s), |G_x| = "
        << o.stabilizer.size() << ", [k(x):k] = " << o.residue_degree << ", multiplicity " << o.multiplicity << "\n";
    out << "  local degree over G_p (|G_p| = " << o.point_stabilizer.size()
        << "): " << o.local_degree.local_character.to_string() << "\n";
    out << "  field transfer over G_x: " << o.field_transfer.to_string() << "\n";
    out << "  induced to G: " << o.transferred.to_string() << "\n";
  }
  VirtualCharacter sum = VirtualCharacter::zero(answer.table);
  for (const auto& o : answer.orbits) sum += o.transferred;
  out << "sum of transfers: " << sum.to_string() << "\n";
  out << "Euler number:     " << answer.value.to_string() << (sum == answer.value ? "  (equal)" : "  (MISMATCH)") << "\n";
  out << "dimension " << answer.value.dimension() << ", Bezout number " << answer.certificates.bezout_number << "\n";
  return out.str();
}

}  // namespace equideg::pipeline
