#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "equideg/error.hpp"
#include "equideg/pipeline.hpp"

using namespace equideg;
namespace pl = equideg::pipeline;

namespace {

void emit(const pl::json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw InputError("cannot write " + out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Euler numbers and intersection numbers in R(G) for finite groups acting on P^n"};
  app.require_subcommand(1);

  std::string spec_path, hints_path, out_path, other_path;
  bool report = false;

  auto* compute = app.add_subcommand("compute", "Equivariant Euler number of a section spec");
  compute->add_option("spec", spec_path, "spec JSON")->required()->check(CLI::ExistingFile);
  compute->add_option("--hints", hints_path, "JSON list of candidate points")->check(CLI::ExistingFile);
  compute->add_option("--json", out_path, "write the result here instead of stdout");
  compute->add_flag("--report", report, "print the local-to-global table to stderr");

  auto* selfint = app.add_subcommand("selfint", "Derived self-intersection class of an equivariant conic");
  selfint->add_option("spec", spec_path, "conic spec JSON")->required()->check(CLI::ExistingFile);
  selfint->add_option("--json", out_path, "write the result here instead of stdout");

  auto* chartable = app.add_subcommand("chartable", "Character table of a group");
  chartable->add_option("group", spec_path, "group JSON")->required()->check(CLI::ExistingFile);
  chartable->add_option("--json", out_path, "write the result here instead of stdout");

  auto* check = app.add_subcommand("check", "Invariance of the sections only");
  check->add_option("spec", spec_path, "spec JSON")->required()->check(CLI::ExistingFile);

  auto* indep = app.add_subcommand("independence", "Compare the Euler numbers of two section specs");
  indep->add_option("first", spec_path, "spec JSON")->required()->check(CLI::ExistingFile);
  indep->add_option("second", other_path, "spec JSON")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) {
      auto spec = pl::problem_from_json(pl::load_json_file(spec_path));
      if (!hints_path.empty()) {
        auto extra = pl::points_from_json(pl::load_json_file(hints_path), spec.ambient_dim);
        spec.hints.insert(spec.hints.end(), extra.begin(), extra.end());
      }
      auto answer = pl::equivariant_euler_number(spec);
      if (report) std::cerr << pl::local_to_global_report(spec, answer);
      emit(pl::answer_json(spec, answer), out_path);
    } else if (*selfint) {
      auto spec = pl::selfint_from_json(pl::load_json_file(spec_path));
      emit(pl::selfint_json(spec, pl::self_intersection(spec)), out_path);
    } else if (*chartable) {
      auto j = pl::load_json_file(spec_path);
      auto group = pl::group_from_json(j.contains("group") ? j.at("group") : j, {});
      emit(pl::table_json(*chars::CharacterTable::compute(group)), out_path);
    } else if (*check) {
      auto spec = pl::problem_from_json(pl::load_json_file(spec_path));
      auto table = chars::CharacterTable::compute(spec.group);
      auto r = pl::invariance_report(spec, table);
      emit(pl::invariance_json(r), "");
      if (!r.semi_invariant && !(r.ideal_stable && spec.allow_stable_ideal)) return 2;
    } else if (*indep) {
      auto a = pl::problem_from_json(pl::load_json_file(spec_path));
      auto b = pl::problem_from_json(pl::load_json_file(other_path));
      auto r = pl::section_independence_check(a, b);
      emit(pl::independence_json(r), "");
      return r.equal ? 0 : 1;
    }
  } catch (const HypothesisViolation& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return 2;
  } catch (const UnresolvedLocus& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
