#include "equideg/cyclo_json.hpp"

#include "equideg/error.hpp"

namespace equideg::cyclo {

nlohmann::ordered_json to_json(const CyclotomicNumber& x) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
  return {{"order", x.order()}, {"coeffs", coeffs}};
}

CyclotomicNumber cyclotomic_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) {
    throw InputError("cyclotomic number must be an object with \"order\" and \"coeffs\"");
  }
  const int order = j.at("order").get<int>();
  if (order <= 0) throw InputError("cyclotomic order must be positive");
  const auto& cs = j.at("coeffs");
  if (!cs.is_array() || static_cast<int>(cs.size()) != euler_phi(order)) {
    throw InputError("expected phi(" + std::to_string(order) + ") = " + std::to_string(euler_phi(order)) +
                     " coefficients");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : cs) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
      throw InputError("coefficient must be a [\"num\", \"den\"] pair of decimal strings");
    }
    Integer num, den;
    if (num.set_str(c[0].get<std::string>(), 10) != 0 || den.set_str(c[1].get<std::string>(), 10) != 0) {
      throw InputError("malformed decimal integer in coefficient");
    }
    if (sgn(den) <= 0) throw InputError("coefficient denominator must be positive");
    Rational q(num, den);
    if (q.get_den() != den) throw InputError("coefficient is not in lowest terms");
    coeffs.push_back(q);
  }
  auto x = CyclotomicNumber::from_coeffs(order, coeffs);
  if (x.coeffs() != coeffs) throw InputError("coefficients are not reduced modulo the cyclotomic polynomial");
  return x;
}

nlohmann::ordered_json to_json(const SubfieldSpec& f) {
  return {{"ambientOrder", f.ambient_order()}, {"fixingSubgroup", f.fixing_subgroup()}};
}

SubfieldSpec subfield_from_json(const nlohmann::ordered_json& j) {
  return SubfieldSpec::from_fixing_subgroup(j.at("ambientOrder").get<int>(),
                                            j.at("fixingSubgroup").get<std::vector<int>>());
}

}  // namespace equideg::cyclo
