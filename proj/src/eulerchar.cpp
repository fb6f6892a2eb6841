#include "equideg/eulerchar.hpp"

#include "equideg/error.hpp"

namespace equideg::eulerchar {

TwoDimRep::TwoDimRep(groups::GroupPtr group, const std::vector<CycMatrix>& generator_matrices)
    : group_(std::move(group)) {
  const auto& gens = group_->generators();
  if (generator_matrices.size() != gens.size())
    throw InputError("expected " + std::to_string(gens.size()) + " matrices for the 2-dimensional representation");
  for (const auto& m : generator_matrices)
    if (m.rows() != 2 || m.cols() != 2) throw InputError("representation matrices must be 2x2");
  matrices_.assign(group_->size(), CycMatrix::identity(2));
  for (int g : group_->word_order()) {
    if (g == 0) continue;
    matrices_[static_cast<std::size_t>(g)] =
        generator_matrices[static_cast<std::size_t>(group_->word_generator(g))] *
        matrices_[static_cast<std::size_t>(group_->word_predecessor(g))];
  }
  verify();
}

TwoDimRep TwoDimRep::from_elements(groups::GroupPtr group, std::vector<CycMatrix> matrices) {
  if (matrices.size() != group->size()) throw InputError("one matrix per group element expected");
  TwoDimRep v;
  v.group_ = std::move(group);
  v.matrices_ = std::move(matrices);
  v.verify();
  return v;
}

void TwoDimRep::verify() const {
  const auto n = static_cast<int>(group_->size());
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (!(matrix(g) * matrix(h) == matrix(group_->mul(g, h))))
        throw InputError("the 2x2 matrices do not define a representation of the group");
}

ClassFunction TwoDimRep::character() const {
  ClassFunction f;
  for (const auto& c : group_->classes()) f.push_back(matrix(c.representative).trace().minimal());
  return f;
}

namespace {

VirtualCharacter power(const VirtualCharacter& a, int e) {
  VirtualCharacter base = e < 0 ? chars::dual(a) : a;
  VirtualCharacter r = VirtualCharacter::trivial(a.table());
  for (int i = 0; i < std::abs(e); ++i) r = chars::tensor(r, base);
  return r;
}

// Eigenvalues of a finite-order 2x2 matrix.
std::pair<Cyc, Cyc> eigenvalues(const CycMatrix& a, int order) {
  auto cp = linalg::charpoly(a);
  for (int k = 0; k < order; ++k) {
    Cyc z = Cyc::zeta(order, k);
    if ((cp[0] + z * (cp[1] + z)).is_zero()) return {z, (a.trace() - z).minimal()};
  }
  throw InternalError("eigenvalue of a finite-order matrix is not a root of unity");
}

}  // namespace

VirtualCharacter chi_P1(const TwoDimRep& v, int d, const TablePtr& table) {
  VirtualCharacter dual = chars::dual(chars::decompose(v.character(), table));
  if (d >= 0) return chars::sym_power(dual, d);
  if (d == -1) return VirtualCharacter::zero(table);
  return -chars::tensor(power(chars::ext_power(dual, 2), d + 1), chars::sym_power(dual, -d - 2));
}

VirtualCharacter chi_P1_cech_oracle(const TwoDimRep& v, int d, const TablePtr& table) {
  const auto& g = *v.group();
  ClassFunction values;
  for (const auto& cls : g.classes()) {
    const CycMatrix& a = v.matrix(cls.representative);
    Cyc tr;
    if (d >= 0) {
      // g acts on functions by f -> f o A^-1.
      const CycMatrix b = linalg::inverse(a);
      const MultiPoly s = MultiPoly::monomial({1, 0}, b(0, 0)) + MultiPoly::monomial({0, 1}, b(0, 1));
      const MultiPoly t = MultiPoly::monomial({1, 0}, b(1, 0)) + MultiPoly::monomial({0, 1}, b(1, 1));
      for (int i = 0; i <= d; ++i) tr += (s.pow(i) * t.pow(d - i)).coefficient({i, d - i});
    } else if (d <= -2) {
      // In coordinates diagonalizing A, s'^-i t'^-j (i, j >= 1) spans Cech H^1 and is an eigenvector.
      auto [l1, l2] = eigenvalues(a, g.order_of(cls.representative));
      for (int i = 1; i < -d; ++i) tr -= l1.pow(i) * l2.pow(-d - i);
    }
    values.push_back(tr.minimal());
  }
  return chars::decompose(values, table);
}

ConicCharacters verify_conic(const EquivariantConic& c) {
  const auto& g = *c.ambient.group();
  if (c.ambient.dim() != 2) throw InputError("the conic must lie in P^2");
  if (c.induced.group() != c.ambient.group()) throw InputError("ambient and induced actions use different groups");
  if (c.form.nvars() != 3 || !c.form.is_homogeneous() || c.form.total_degree() != 2)
    throw InputError("the conic must be a nonzero quadratic form in x, y, z");
  if (c.parametrization.size() != 3) throw InputError("the parametrization needs three forms");
  for (const auto& p : c.parametrization)
    if (p.nvars() != 2 || !(p.is_zero() || (p.is_homogeneous() && p.total_degree() == 2)))
      throw InputError("parametrization forms must be binary quadratic forms in s, t");
  if (!c.form.compose(c.parametrization).is_zero())
    throw DomainError("the parametrization does not land on the conic");

  ConicCharacters out;
  const auto n = static_cast<int>(g.size());
  for (int h = 0; h < n; ++h) {
    const CycMatrix& m = c.ambient.matrix(h);
    MultiPoly moved = c.form.linear_substitute(m);
    const auto& lead = c.form.leading();
    Cyc mu = moved.coefficient(lead.exp) / lead.coeff;
    if (!(moved == mu * c.form))
      throw HypothesisViolation("the conic is not stable under the group: element " + std::to_string(h) + " sends " +
                        c.form.to_string({"x", "y", "z"}) + " to " + moved.to_string({"x", "y", "z"}));
    out.form.push_back(mu.minimal());

    std::optional<Cyc> lambda;
    for (std::size_t r = 0; r < 3; ++r) {
      MultiPoly lhs(2);
      for (std::size_t k = 0; k < 3; ++k) lhs += m(r, k) * c.parametrization[k];
      MultiPoly rhs = c.parametrization[r].linear_substitute(c.induced.matrix(h));
      if (rhs.is_zero() != lhs.is_zero()) throw DomainError("the parametrization is not equivariant");
      if (rhs.is_zero()) continue;
      if (!lambda) lambda = lhs.coefficient(rhs.leading().exp) / rhs.leading().coeff;
      if (!(lhs == *lambda * rhs))
        throw DomainError("the parametrization is not equivariant for element " + std::to_string(h));
    }
    if (!lambda) throw DomainError("the parametrization is identically zero");
    out.parametrization.push_back(lambda->minimal());
  }
  return out;
}

VirtualCharacter conic_self_intersection(const EquivariantConic& c, const TablePtr& table) {
  auto chars_ = verify_conic(c);
  ClassFunction theta;
  for (const auto& cls : c.ambient.group()->classes()) {
    const auto r = static_cast<std::size_t>(cls.representative);
    theta.push_back((chars_.parametrization[r] * chars_.parametrization[r] / chars_.form[r]).minimal());
  }
  VirtualCharacter twist = chars::decompose(theta, table);
  return chi_P1(c.induced, 0, table) - chars::tensor(twist, chi_P1(c.induced, -4, table));
}

}  // namespace equideg::eulerchar
