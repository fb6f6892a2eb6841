#pragma once

// End-to-end equivariant Euler numbers on P^n: spec loading, invariance,
// zero locus, orbits of closed points, local degrees, transfers, reports.

#include <json.hpp>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "equideg/chars.hpp"
#include "equideg/eulerchar.hpp"
#include "equideg/groups.hpp"
#include "equideg/localdeg.hpp"
#include "equideg/polysolve.hpp"

namespace equideg::pipeline {

using chars::TablePtr;
using chars::VirtualCharacter;
using cyclo::Cyc;
using json = nlohmann::ordered_json;

struct ProblemSpec {
  std::string name;
  std::size_t ambient_dim = 0;
  int cyclotomic_order = 1;
  cyclo::SubfieldSpec base_field = cyclo::SubfieldSpec::rationals(1);
  groups::GroupPtr group;
  std::shared_ptr<const groups::ProjectiveAction> action;
  std::vector<int> bundle_degrees;
  std::vector<std::string> variables;
  std::vector<poly::MultiPoly> sections;
  std::vector<groups::ProjPoint> hints;
  bool allow_stable_ideal = false;
};

struct SelfIntSpec {
  std::string name;
  int cyclotomic_order = 1;
  groups::GroupPtr group;
  std::optional<eulerchar::EquivariantConic> conic;
};

/// Parses a scalar: integer, polynomial-grammar constant string ("(1+zeta(4))/2"), or cyclotomic JSON object.
Cyc scalar_from_json(const json& j);
groups::GroupPtr group_from_json(const json& j, const std::vector<groups::CycMatrix>& action_generators);
ProblemSpec problem_from_json(const json& j);
SelfIntSpec selfint_from_json(const json& j);
std::vector<groups::ProjPoint> points_from_json(const json& j, std::size_t dim);
json load_json_file(const std::string& path);

struct SectionCharacter {
  bool semi_invariant = false;
  std::vector<Cyc> scalars;  // g . s = scalars[g] s, per element; empty unless semi-invariant
  bool is_character = false;
  std::optional<VirtualCharacter> character;
};

struct InvarianceReport {
  std::vector<SectionCharacter> sections;
  bool semi_invariant = false;
  bool ideal_stable = false;
};

/// Never throws on failure; records what holds.
InvarianceReport invariance_report(const ProblemSpec& spec, const TablePtr& table);
/// Throws HypothesisViolation("sections not semi-invariant ...") unless every section is
/// semi-invariant, or the ideal is G-stable and the spec allows stable ideals.
InvarianceReport check_invariance(const ProblemSpec& spec, const TablePtr& table);

struct OrbitContribution {
  groups::ProjPoint representative;
  std::vector<groups::ProjPoint> points;  // geometric points of the orbit of closed points
  std::size_t orbit_size = 0;             // closed points in the G-orbit
  groups::Subgroup stabilizer;            // of the closed point
  groups::Subgroup point_stabilizer;      // of the geometric representative
  cyclo::SubfieldSpec residue_field;      // k(x) inside Q(zeta_N)
  int residue_degree = 1;                 // [k(x) : k]
  std::size_t multiplicity = 0;
  localdeg::LocalDegree local_degree;     // over point_stabilizer, values in k(x)
  VirtualCharacter field_transfer;        // Tr_{k(x)/k}, over stabilizer
  VirtualCharacter transferred;           // Ind to G
};

struct Certificates {
  bool bezout_sum = false;
  long bezout_number = 0;
  InvarianceReport invariance;
  bool geometric_check = false;  // orbit sum recomputed over geometric points
  bool transfer_check = false;   // field trace path agrees with the closed-point character
};

struct EquivariantAnswer {
  TablePtr table;
  int field_order = 1;
  VirtualCharacter value;
  std::vector<OrbitContribution> orbits;
  Certificates certificates;
};

EquivariantAnswer equivariant_euler_number(const ProblemSpec& spec);

struct SelfIntAnswer {
  TablePtr table;
  VirtualCharacter value;
  eulerchar::ConicCharacters characters;
};

SelfIntAnswer self_intersection(const SelfIntSpec& spec);

/// Same group (as multiplication tables with the same generators).
bool same_group(const groups::FiniteGroup& a, const groups::FiniteGroup& b);
/// Equal classes over structurally identical groups.
bool same_class(const VirtualCharacter& a, const VirtualCharacter& b);

struct IndependenceResult {
  bool equal = false;
  EquivariantAnswer first;
  EquivariantAnswer second;
};

/// Throws InputError unless both specs share group, action, dimension and bundle degrees.
IndependenceResult section_independence_check(const ProblemSpec& a, const ProblemSpec& b);

json character_json(const VirtualCharacter& chi);
json answer_json(const ProblemSpec& spec, const EquivariantAnswer& answer);
json selfint_json(const SelfIntSpec& spec, const SelfIntAnswer& answer);
json table_json(const chars::CharacterTable& table);
json invariance_json(const InvarianceReport& report);
json independence_json(const IndependenceResult& r);

/// Human-readable local-to-global identity: each orbit's local character, field trace,
/// induction, and the sum compared with the Euler number.
std::string local_to_global_report(const ProblemSpec& spec, const EquivariantAnswer& answer);

}  // namespace equideg::pipeline
