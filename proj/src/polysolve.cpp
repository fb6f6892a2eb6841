#include "equideg/polysolve.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <set>

#include "equideg/error.hpp"

namespace equideg::polysolve {

namespace {

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent exp_lcm(const Exponent& a, const Exponent& b) {
  Exponent e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return e;
}

Exponent exp_sub(const Exponent& a, const Exponent& b) {
  Exponent e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] - b[i];
  return e;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  Exponent l = exp_lcm(f.leading().exp, g.leading().exp);
  return f.mul_term(exp_sub(l, f.leading().exp), f.leading().coeff.inverse()) -
         g.mul_term(exp_sub(l, g.leading().exp), g.leading().coeff.inverse());
}

}  // namespace

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& g) {
  MultiPoly rest = f;
  std::vector<poly::Term> remainder;
  while (!rest.is_zero()) {
    const poly::Term lt = rest.leading();
    const MultiPoly* divisor = nullptr;
    for (const auto& h : g)
      if (!h.is_zero() && divides(h.leading().exp, lt.exp)) {
        divisor = &h;
        break;
      }
    if (divisor) {
      rest -= divisor->mul_term(exp_sub(lt.exp, divisor->leading().exp), lt.coeff / divisor->leading().coeff);
    } else {
      remainder.push_back(lt);
      rest -= MultiPoly::monomial(lt.exp, lt.coeff);
    }
  }
  return MultiPoly::from_terms(f.nvars(), std::move(remainder));
}

std::vector<MultiPoly> buchberger(std::vector<MultiPoly> gens) {
  std::vector<MultiPoly> basis;
  for (auto& f : gens)
    if (!f.is_zero()) basis.push_back(f.monic());
  if (basis.empty()) return {};
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    // Normal selection: smallest lcm of leading monomials first.
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      return poly::degrevlex_compare(exp_lcm(basis[a.first].leading().exp, basis[a.second].leading().exp),
                                     exp_lcm(basis[b.first].leading().exp, basis[b.second].leading().exp)) < 0;
    });
    auto [i, j] = *best;
    pairs.erase(best);
    if (coprime(basis[i].leading().exp, basis[j].leading().exp)) continue;
    MultiPoly r = normal_form(s_polynomial(basis[i], basis[j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    if (basis.back().is_constant()) return {MultiPoly::constant(basis.back().nvars(), Cyc(1))};
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }
  // Minimalize, then interreduce.
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !divides(basis[j].leading().exp, basis[i].leading().exp)) continue;
      redundant = basis[j].leading().exp != basis[i].leading().exp || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<MultiPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const poly::Term lt = minimal[i].leading();
    MultiPoly tail = minimal[i] - MultiPoly::monomial(lt.exp, lt.coeff);
    reduced.push_back((MultiPoly::monomial(lt.exp, lt.coeff) + normal_form(tail, others)).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return poly::degrevlex_compare(a.leading().exp, b.leading().exp) < 0;
  });
  return reduced;
}

// --- quotient algebra ------------------------------------------------------------

QuotientAlgebra QuotientAlgebra::from_groebner(std::vector<MultiPoly> gb, std::size_t nvars) {
  QuotientAlgebra q;
  q.nvars_ = nvars;
  q.gb_ = std::move(gb);
  const bool unit = !q.gb_.empty() && q.gb_[0].is_constant();
  std::vector<int> bound(nvars, -1);
  if (!unit) {
    for (const auto& g : q.gb_) {
      const Exponent& e = g.leading().exp;
      std::size_t nz = 0, var = 0;
      for (std::size_t i = 0; i < nvars; ++i)
        if (e[i]) {
          ++nz;
          var = i;
        }
      if (nz == 1 && (bound[var] < 0 || e[var] < bound[var])) bound[var] = e[var];
    }
    for (std::size_t i = 0; i < nvars; ++i)
      if (bound[i] < 0) throw HypothesisViolation("zeros not isolated: the ideal is not zero-dimensional");
    // Enumerate exponents below the pure-power bounds that no leading monomial divides.
    Exponent e(nvars, 0);
    while (true) {
      bool standard = true;
      for (const auto& g : q.gb_)
        if (divides(g.leading().exp, e)) {
          standard = false;
          break;
        }
      if (standard) q.basis_.push_back(e);
      std::size_t i = 0;
      while (i < nvars && ++e[i] >= bound[i]) e[i++] = 0;
      if (i == nvars) break;
    }
    std::sort(q.basis_.begin(), q.basis_.end(),
              [](const Exponent& a, const Exponent& b) { return poly::degrevlex_compare(a, b) < 0; });
  }
  const std::size_t d = q.basis_.size();
  for (std::size_t v = 0; v < nvars; ++v) {
    CycMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      Exponent e = q.basis_[j];
      ++e[v];
      auto c = q.coordinates(MultiPoly::monomial(e, Cyc(1)));
      for (std::size_t i = 0; i < d; ++i) m(i, j) = c[i];
    }
    q.ops_.push_back(std::move(m));
  }
  return q;
}

QuotientAlgebra QuotientAlgebra::build(const std::vector<MultiPoly>& gens, std::size_t nvars) {
  return from_groebner(buchberger(gens), nvars);
}

std::vector<Cyc> QuotientAlgebra::coordinates(const MultiPoly& f) const {
  MultiPoly r = normal_form(f, gb_);
  std::vector<Cyc> c(basis_.size());
  for (const auto& t : r.terms()) {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), t.exp,
                               [](const Exponent& a, const Exponent& b) { return poly::degrevlex_compare(a, b) < 0; });
    if (it == basis_.end() || *it != t.exp) throw InternalError("normal form has a non-standard monomial");
    c[static_cast<std::size_t>(it - basis_.begin())] = t.coeff;
  }
  return c;
}

CycMatrix QuotientAlgebra::operator_of(const MultiPoly& f) const {
  const std::size_t d = basis_.size();
  CycMatrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    auto c = coordinates(f * MultiPoly::monomial(basis_[j], Cyc(1)));
    for (std::size_t i = 0; i < d; ++i) m(i, j) = c[i];
  }
  return m;
}

// --- univariate helpers ------------------------------------------------------------

namespace {

void utrim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly umonic(UPoly p) {
  utrim(p);
  if (p.empty()) return p;
  Cyc inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

void udivmod(UPoly a, const UPoly& b, UPoly& q, UPoly& r) {
  utrim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Cyc());
  const Cyc lead_inv = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    Cyc f = a.back() * lead_inv;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    utrim(a);
  }
  utrim(q);
  r = std::move(a);
}

UPoly ugcd(UPoly a, UPoly b) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly q, r;
    udivmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(a);
}

UPoly uderivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Cyc(static_cast<long>(i)) * p[i]);
  utrim(d);
  return d;
}

Cyc ueval(const UPoly& p, const Cyc& x) {
  Cyc v;
  for (std::size_t k = p.size(); k-- > 0;) v = v * x + p[k];
  return v;
}

UPoly squarefree(const UPoly& p) {
  UPoly g = ugcd(p, uderivative(p));
  UPoly q, r;
  udivmod(p, g, q, r);
  return umonic(q);
}

UPoly deflate(const UPoly& p, const Cyc& root) {
  UPoly q, r;
  udivmod(p, UPoly{-root, Cyc(1)}, q, r);
  if (!r.empty()) throw InternalError("deflation by a non-root");
  return q;
}

using cld = std::complex<long double>;

std::vector<cld> numeric_roots(const std::vector<std::complex<double>>& monic) {
  const std::size_t d = monic.size() - 1;
  if (d == 0) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 1; i < d; ++i) companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < d; ++i) companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d - 1)) = -monic[i];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<cld> roots;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    cld z(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    for (int it = 0; it < 8; ++it) {
      cld v = 0, dv = 0;
      for (std::size_t k = monic.size(); k-- > 0;) {
        dv = dv * z + v;
        v = v * z + cld(monic[k].real(), monic[k].imag());
      }
      if (std::abs(dv) == 0) break;
      z -= v / dv;
    }
    roots.push_back(z);
  }
  return roots;
}

// Best rational approximation with bounded denominator, if within tolerance.
std::optional<cyclo::Rational> recognize_rational(long double x, long max_den = 1000000) {
  if (!std::isfinite(static_cast<double>(x)) || std::fabs(static_cast<double>(x)) > 1e12) return std::nullopt;
  long double a = std::floor(x), frac = x - a;
  mpz_class p0 = 1, q0 = 0, p1 = mpz_class(static_cast<long>(a)), q1 = 1;
  for (int it = 0; it < 40; ++it) {
    long double err = std::fabs(static_cast<long double>(p1.get_d()) / static_cast<long double>(q1.get_d()) - x);
    if (err < 1e-9L * (1 + std::fabs(x))) {
      cyclo::Rational r(p1, q1);
      r.canonicalize();
      return r;
    }
    if (frac < 1e-15L) break;
    long double inv = 1 / frac;
    long double ai = std::floor(inv);
    frac = inv - ai;
    mpz_class an(static_cast<long>(ai));
    mpz_class p2 = an * p1 + p0, q2 = an * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  return std::nullopt;
}

// Searches for roots of the squarefree monic q in Q(zeta_n) numerically.
std::vector<Cyc> numeric_field_roots(const UPoly& q, int n) {
  const std::size_t deg = q.size() - 1;
  const std::vector<int> units = cyclo::units_mod(n);
  const int phi = static_cast<int>(units.size());
  std::vector<int> reps;  // one embedding per complex-conjugate pair
  for (int s : units)
    if (n <= 2 || 2 * s < n) reps.push_back(s);
  std::vector<std::vector<cld>> roots;
  for (int s : reps) {
    std::vector<std::complex<double>> c;
    for (const auto& a : q) c.push_back(cyclo::galois_apply(a.minimal(), s, n).to_complex());
    roots.push_back(numeric_roots(c));
  }
  const long double pi = std::acos(-1.0L);
  // Real linear system: Re/Im of sum_k c_k zeta^(s k) for each representative s.
  Eigen::MatrixXd a(phi, phi);
  for (std::size_t r = 0; r < reps.size(); ++r)
    for (int k = 0; k < phi; ++k) {
      long double ang = 2 * pi * static_cast<long double>((static_cast<long>(reps[r]) * k) % n) / n;
      a(static_cast<Eigen::Index>(2 * r), k) = static_cast<double>(std::cos(ang));
      if (n > 2) a(static_cast<Eigen::Index>(2 * r + 1), k) = static_cast<double>(std::sin(ang));
    }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);

  std::vector<Cyc> found;
  std::size_t combos = 1;
  for (std::size_t r = 1; r < reps.size(); ++r) {
    combos *= deg;
    if (combos > 200000) return found;
  }
  for (const auto& first : roots[0]) {
    for (std::size_t combo = 0; combo < combos; ++combo) {
      Eigen::VectorXd b(phi);
      std::size_t code = combo;
      for (std::size_t r = 0; r < reps.size(); ++r) {
        cld z = r == 0 ? first : roots[r][code % deg];
        if (r > 0) code /= deg;
        b(static_cast<Eigen::Index>(2 * r)) = static_cast<double>(z.real());
        if (n > 2) b(static_cast<Eigen::Index>(2 * r + 1)) = static_cast<double>(z.imag());
      }
      Eigen::VectorXd c = lu.solve(b);
      std::vector<cyclo::Rational> coeffs;
      bool ok = true;
      for (int k = 0; k < phi && ok; ++k) {
        auto r = recognize_rational(c(k));
        if (!r) ok = false;
        else coeffs.push_back(*r);
      }
      if (!ok) continue;
      Cyc alpha = Cyc::from_coeffs(n, coeffs);
      if (ueval(q, alpha).is_zero() &&
          std::none_of(found.begin(), found.end(), [&](const Cyc& x) { return x == alpha; })) {
        found.push_back(alpha);
        break;
      }
    }
    if (found.size() == deg) break;
  }
  return found;
}

}  // namespace

std::vector<Cyc> roots_in_field(const UPoly& p, int n, const std::vector<Cyc>& candidates, UPoly& residual) {
  UPoly q = squarefree(p);
  std::vector<Cyc> roots;
  auto take = [&](const Cyc& x) {
    if (q.size() <= 1 || !ueval(q, x).is_zero()) return;
    roots.push_back(x.minimal());
    q = deflate(q, x);
  };
  for (const auto& c : candidates) take(c);
  // Linear factors directly.
  while (q.size() == 2) take(-q[0] / q[1]);
  if (q.size() > 2)
    for (const auto& x : numeric_field_roots(q, n)) take(x);
  while (q.size() == 2) take(-q[0] / q[1]);
  residual = q.size() > 1 ? q : UPoly{};
  std::sort(roots.begin(), roots.end(), cyclo::CycLess());
  return roots;
}

std::string upoly_to_string(const UPoly& p, const std::string& var) {
  std::vector<poly::Term> terms;
  for (std::size_t k = 0; k < p.size(); ++k) terms.push_back({Exponent{static_cast<int>(k)}, p[k]});
  return MultiPoly::from_terms(1, std::move(terms)).to_string({var});
}

// --- zeros ------------------------------------------------------------------------

namespace {

struct Node {
  CycMatrix basis;  // column echelon, identity at pivot rows
  std::vector<std::size_t> pivots;
  std::vector<Cyc> coords;
};

CycMatrix column_echelon(const CycMatrix& b, std::vector<std::size_t>& pivots) {
  auto e = linalg::rref(b.transpose());
  pivots = e.pivots;
  CycMatrix out(b.rows(), e.pivots.size());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < e.pivots.size(); ++j) out(i, j) = e.reduced(j, i);
  return out;
}

CycMatrix restrict_operator(const CycMatrix& op, const Node& node) {
  CycMatrix ab = op * node.basis;
  const std::size_t d = node.basis.cols();
  CycMatrix c(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c(i, j) = ab(node.pivots[i], j);
  if (!(node.basis * c == ab)) throw InternalError("subspace is not invariant under a multiplication operator");
  return c;
}

}  // namespace

AffineSolution find_affine_zeros(const QuotientAlgebra& q, int n, const std::vector<std::vector<Cyc>>& hints) {
  AffineSolution sol;
  const std::size_t d = q.dim();
  if (d == 0) return sol;
  std::vector<Node> level;
  {
    Node root;
    root.basis = column_echelon(CycMatrix::identity(d), root.pivots);
    level.push_back(std::move(root));
  }
  for (std::size_t v = 0; v < q.nvars(); ++v) {
    std::vector<Cyc> cands;
    for (const auto& h : hints) cands.push_back(h[v]);
    std::vector<Node> next;
    for (const auto& node : level) {
      CycMatrix r = restrict_operator(q.mul_operator(v), node);
      const std::size_t m = r.rows();
      UPoly cp = linalg::charpoly(r);
      UPoly residual;
      auto roots = roots_in_field(cp, n, cands, residual);
      std::size_t covered = 0;
      for (const auto& lam : roots) {
        CycMatrix shifted = r - lam * CycMatrix::identity(m);
        CycMatrix power = shifted;
        for (std::size_t k = 1; k < m; ++k) power = power * shifted;
        CycMatrix ker = linalg::kernel(power);
        covered += ker.cols();
        Node child;
        child.basis = column_echelon(node.basis * ker, child.pivots);
        child.coords = node.coords;
        child.coords.push_back(lam);
        next.push_back(std::move(child));
      }
      if (covered != m) {
        if (residual.empty()) throw InternalError("eigenspaces do not cover the subspace");
        sol.residual.emplace_back(v, residual);
      }
    }
    level = std::move(next);
  }
  for (auto& node : level) {
    AffineZero z;
    z.coords = node.coords;
    z.multiplicity = node.basis.cols();
    z.local_basis = std::move(node.basis);
    sol.zeros.push_back(std::move(z));
  }
  for (const auto& z : sol.zeros)
    for (const auto& g : q.groebner())
      if (!g.evaluate(z.coords).is_zero()) throw InternalError("computed zero does not satisfy the system");
  return sol;
}

std::size_t ZeroLocus::total_multiplicity() const {
  std::size_t s = 0;
  for (const auto& z : zeros) s += z.multiplicity;
  return s;
}

ZeroLocus find_zeros(const std::vector<MultiPoly>& sections, int field_order,
                     const std::vector<groups::ProjPoint>& hints) {
  if (sections.empty()) throw InputError("no sections given");
  const std::size_t nv = sections[0].nvars();
  if (sections.size() + 1 != nv)
    throw InputError("expected " + std::to_string(nv - 1) + " sections in " + std::to_string(nv) + " variables");
  int order = field_order;
  for (const auto& s : sections) {
    if (s.nvars() != nv) throw InputError("sections live in different polynomial rings");
    if (!s.is_homogeneous() || s.is_zero()) throw InputError("section is not a nonzero homogeneous polynomial");
    order = cyclo::lcm_int(order, s.coefficient_order());
  }
  for (const auto& h : hints)
    for (const auto& c : h.coords()) order = cyclo::lcm_int(order, c.minimal().order());
  if (order > cyclo::max_order()) throw DomainError("working cyclotomic order exceeds the configured maximum");

  ZeroLocus locus;
  locus.field_order = order;
  std::set<groups::ProjPoint> seen;
  std::string unresolved;
  for (std::size_t j = 0; j < nv; ++j) {
    ChartData cd;
    cd.chart = j;
    for (const auto& s : sections) cd.system.push_back(s.dehomogenize(j));
    // Points whose first nonzero coordinate is j: earlier coordinates vanish.
    std::vector<MultiPoly> restricted = cd.system;
    for (std::size_t i = 0; i < j; ++i) restricted.push_back(MultiPoly::variable(nv - 1, i));
    auto gb = buchberger(restricted);
    cd.has_canonical_zeros = !(gb.size() == 1 && gb[0].is_constant());
    if (cd.has_canonical_zeros) {
      cd.algebra = QuotientAlgebra::build(cd.system, nv - 1);
      std::vector<std::vector<Cyc>> affine_hints;
      for (const auto& h : hints) {
        if (h.dim() + 1 != nv) throw InputError("hint point has the wrong dimension");
        if (h.coords()[j].is_zero()) continue;
        std::vector<Cyc> a;
        Cyc inv = h.coords()[j].inverse();
        for (std::size_t i = 0; i < nv; ++i)
          if (i != j) a.push_back(h.coords()[i] * inv);
        affine_hints.push_back(std::move(a));
      }
      cd.solution = find_affine_zeros(*cd.algebra, order, affine_hints);
      auto names = poly::default_names(nv);
      names.erase(names.begin() + static_cast<std::ptrdiff_t>(j));
      for (const auto& [v, r] : cd.solution.residual)
        unresolved += "\n  chart x" + std::to_string(j) + ": " + upoly_to_string(r, names[v]);
      for (const auto& z : cd.solution.zeros) {
        std::vector<Cyc> coords = z.coords;
        coords.insert(coords.begin() + static_cast<std::ptrdiff_t>(j), Cyc(1));
        groups::ProjPoint p(coords);
        if (p.chart() != j || seen.count(p)) continue;
        seen.insert(p);
        locus.zeros.push_back(ZeroDatum{p, j, z.coords, z.multiplicity, p.residue_field(order), z.local_basis});
      }
    }
    locus.charts.push_back(std::move(cd));
  }
  if (!unresolved.empty())
    throw UnresolvedLocus("unresolved locus: some zeros are not in Q(zeta_" + std::to_string(order) +
                          ") or were not recognized; supply point hints. Residual factors:" + unresolved);
  std::sort(locus.zeros.begin(), locus.zeros.end(),
            [](const ZeroDatum& a, const ZeroDatum& b) { return a.point < b.point; });
  return locus;
}

bool jacobian_is_invertible(const std::vector<MultiPoly>& system, const std::vector<Cyc>& x) {
  const std::size_t n = x.size();
  if (system.size() != n) throw InputError("Jacobian test needs a square system");
  for (const auto& f : system)
    if (!f.evaluate(x).is_zero()) throw DomainError("point is not a zero of the system");
  CycMatrix j(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) j(k, i) = system[k].derivative(i).evaluate(x);
  return !linalg::determinant(j).is_zero();
}

bool jacobian_is_invertible(const std::vector<MultiPoly>& sections, const groups::ProjPoint& x) {
  const std::size_t c = x.chart();
  std::vector<MultiPoly> sys;
  for (const auto& s : sections) sys.push_back(s.dehomogenize(c));
  std::vector<Cyc> a;
  for (std::size_t i = 0; i < x.coords().size(); ++i)
    if (i != c) a.push_back(x.coords()[i]);
  return jacobian_is_invertible(sys, a);
}

}  // namespace equideg::polysolve
