#include "equideg/localdeg.hpp"

#include <map>

#include "equideg/error.hpp"

namespace equideg::localdeg {

using polysolve::CycMatrix;

namespace {

struct LocalFrame {
  std::vector<CycMatrix> ops;  // multiplication by the affine variables on A_p
  std::vector<Cyc> unit;       // the idempotent e_p in local coordinates
};

LocalFrame local_frame(const polysolve::ZeroDatum& zd, const polysolve::ChartData& chart) {
  if (!chart.algebra) throw InternalError("chart has no quotient algebra");
  const auto& q = *chart.algebra;
  const std::size_t d = q.dim();
  const std::size_t m = zd.local_basis.cols();
  CycMatrix all(d, d);
  std::size_t col = 0, offset = d;
  for (const auto& z : chart.solution.zeros) {
    if (z.coords == zd.affine) offset = col;
    for (std::size_t j = 0; j < z.local_basis.cols(); ++j, ++col)
      for (std::size_t i = 0; i < d; ++i) all(i, col) = z.local_basis(i, j);
  }
  if (col != d || offset == d) throw InternalError("local subspaces do not decompose the chart algebra");
  std::vector<Cyc> one(d);
  one[0] = Cyc(1);  // the standard monomial 1 comes first
  auto c = linalg::solve(all, one);
  if (!c) throw InternalError("local subspaces are dependent");
  LocalFrame f;
  f.unit.assign(c->begin() + static_cast<std::ptrdiff_t>(offset),
                c->begin() + static_cast<std::ptrdiff_t>(offset + m));
  for (std::size_t v = 0; v < q.nvars(); ++v)
    f.ops.push_back(linalg::solve_matrix(zd.local_basis, q.mul_operator(v) * zd.local_basis));
  return f;
}

CycMatrix monomial_operator(const std::vector<CycMatrix>& z, const polysolve::Exponent& e,
                            std::map<polysolve::Exponent, CycMatrix>& cache) {
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  std::size_t v = 0;
  while (v < e.size() && e[v] == 0) ++v;
  CycMatrix r;
  if (v == e.size()) {
    r = CycMatrix::identity(z.empty() ? 0 : z[0].rows());
  } else {
    polysolve::Exponent smaller = e;
    --smaller[v];
    r = z[v] * monomial_operator(z, smaller, cache);
  }
  cache.emplace(e, r);
  return r;
}

}  // namespace

CycMatrix local_action(const polysolve::ZeroDatum& zd, const polysolve::ChartData& chart,
                       const groups::ProjectiveAction& action, int g) {
  if (!(action.apply(g, zd.point) == zd.point)) throw DomainError("group element does not fix the point");
  const LocalFrame f = local_frame(zd, chart);
  const std::size_t m = zd.local_basis.cols();
  const std::size_t j = zd.chart;
  const CycMatrix& mat = action.matrix(g);
  const std::size_t nproj = mat.rows();
  // Operator of the affine linear form row r of the matrix on A_p.
  auto form = [&](std::size_t r) {
    CycMatrix out(m, m);
    for (std::size_t k = 0, v = 0; k < nproj; ++k) {
      const CycMatrix id = CycMatrix::identity(m);
      const CycMatrix& op = k == j ? id : f.ops[v];
      if (!mat(r, k).is_zero()) out = out + mat(r, k) * op;
      if (k != j) ++v;
    }
    return out;
  };
  const CycMatrix denom_inv = linalg::inverse(form(j));
  std::vector<CycMatrix> z;
  for (std::size_t r = 0; r < nproj; ++r)
    if (r != j) z.push_back(form(r) * denom_inv);

  std::map<polysolve::Exponent, CycMatrix> cache;
  const auto& q = *chart.algebra;
  auto pull = [&](const std::vector<Cyc>& coeffs) {
    std::vector<Cyc> out(m);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k].is_zero()) continue;
      auto img = monomial_operator(z, q.basis()[k], cache) * f.unit;
      for (std::size_t i = 0; i < m; ++i) out[i] += coeffs[k] * img[i];
    }
    return out;
  };
  for (const auto& gen : q.groebner()) {
    std::vector<Cyc> out(m);
    for (const auto& t : gen.terms()) {
      auto img = monomial_operator(z, t.exp, cache) * f.unit;
      for (std::size_t i = 0; i < m; ++i) out[i] += t.coeff * img[i];
    }
    for (const auto& x : out)
      if (!x.is_zero()) throw InternalError("the action does not preserve the local ideal");
  }
  CycMatrix a(m, m);
  for (std::size_t c = 0; c < m; ++c) {
    auto col = pull(zd.local_basis.column(c));
    for (std::size_t i = 0; i < m; ++i) a(i, c) = col[i];
  }
  return a;
}

std::vector<Cyc> local_traces(const polysolve::ZeroDatum& zd, const polysolve::ChartData& chart,
                              const groups::ProjectiveAction& action, const groups::Subgroup& stab) {
  std::vector<Cyc> t;
  for (int g : stab.members()) t.push_back(local_action(zd, chart, action, g).trace().minimal());
  return t;
}

LocalDegree local_degree(const polysolve::ZeroDatum& zd, const polysolve::ChartData& chart,
                         const groups::ProjectiveAction& action, const groups::Subgroup& stab,
                         const chars::TablePtr& stab_table) {
  if (stab_table->group() != stab.as_group()) throw InternalError("table does not belong to the stabilizer");
  const auto traces = local_traces(zd, chart, action, stab);
  ClassFunction values;
  for (const auto& cls : stab.as_group()->classes())
    values.push_back(traces[static_cast<std::size_t>(cls.representative)]);
  VirtualCharacter chi = chars::decompose(values, stab_table);
  if (chi.dimension() != static_cast<long>(zd.multiplicity))
    throw InternalError("local character dimension differs from the multiplicity");
  return LocalDegree{zd.point, stab, zd.residue_field, chi};
}

VirtualCharacter derived_point_pushforward(const DerivedPointDatum& d) {
  if (d.h_minus_one_dim < 0) throw InputError("negative H^-1 dimension");
  return d.h_minus_one_dim == 0 ? d.classical_class : VirtualCharacter::zero(d.classical_class.table());
}

}  // namespace equideg::localdeg
