#include "equideg/groups.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "equideg/error.hpp"

namespace equideg::groups {

namespace {

struct PermLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const { return a < b; }
};

struct MatrixLess {
  bool operator()(const CycMatrix& a, const CycMatrix& b) const {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        int c = cyclo::compare(a(i, j), b(i, j));
        if (c != 0) return c < 0;
      }
    return false;
  }
};

}  // namespace

// Breadth-first closure of a generating set under left multiplication.
struct ClosureBuilder {
  template <class E, class Less, class Mul>
  static FiniteGroup close(const std::vector<E>& gens, const E& identity, Mul mul, std::size_t bound,
                           std::vector<E>& elements) {
    std::map<E, int, Less> index;
    elements.assign(1, identity);
    index.emplace(identity, 0);
    FiniteGroup g;
    g.word_gen_.assign(1, -1);
    g.word_pred_.assign(1, -1);
    std::vector<std::vector<int>> left(gens.size());
    for (std::size_t x = 0; x < elements.size(); ++x) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        E y = mul(gens[k], elements[x]);
        auto it = index.find(y);
        int yi;
        if (it == index.end()) {
          if (elements.size() >= bound)
            throw DomainError("group closure exceeds the configured bound of " + std::to_string(bound) + " elements");
          yi = static_cast<int>(elements.size());
          index.emplace(y, yi);
          elements.push_back(std::move(y));
          g.word_gen_.push_back(static_cast<int>(k));
          g.word_pred_.push_back(static_cast<int>(x));
        } else {
          yi = it->second;
        }
        left[k].push_back(yi);
      }
    }
    const std::size_t n = elements.size();
    g.n_ = n;
    g.table_.assign(n * n, 0);
    for (std::size_t h = 0; h < n; ++h) g.table_[h] = static_cast<int>(h);
    for (std::size_t x = 1; x < n; ++x) {
      const auto row_pred = static_cast<std::size_t>(g.word_pred_[x]);
      const auto& lk = left[static_cast<std::size_t>(g.word_gen_[x])];
      for (std::size_t h = 0; h < n; ++h)
        g.table_[x * n + h] = lk[static_cast<std::size_t>(g.table_[row_pred * n + h])];
    }
    g.generators_.clear();
    for (std::size_t k = 0; k < gens.size(); ++k) g.generators_.push_back(left[k][0]);
    g.word_order_.resize(n);
    std::iota(g.word_order_.begin(), g.word_order_.end(), 0);
    g.finish();
    return g;
  }
};

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& perms, std::size_t bound) {
  std::size_t degree = 0;
  for (const auto& p : perms) degree = std::max(degree, p.size());
  std::vector<std::vector<int>> gens;
  for (const auto& p : perms) {
    std::vector<int> q(degree);
    std::vector<bool> seen(degree, false);
    for (std::size_t i = 0; i < degree; ++i) {
      int v = i < p.size() ? p[i] : static_cast<int>(i);
      if (v < 0 || static_cast<std::size_t>(v) >= degree || seen[static_cast<std::size_t>(v)])
        throw InputError("not a permutation: " + cycle_string(p));
      seen[static_cast<std::size_t>(v)] = true;
      q[i] = v;
    }
    gens.push_back(std::move(q));
  }
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
    return c;
  };
  std::vector<std::vector<int>> elements;
  FiniteGroup g = ClosureBuilder::close<std::vector<int>, PermLess>(gens, id, compose, bound, elements);
  std::vector<std::string> labels;
  for (const auto& e : elements) labels.push_back(cycle_string(e));
  g.labels_ = std::move(labels);
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::vector<int> generators) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("empty multiplication table");
  for (const auto& row : table) {
    if (row.size() != n) throw InputError("multiplication table is not square");
    std::vector<bool> seen(n, false);
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)])
        throw InputError("multiplication table row is not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (table[0][i] != static_cast<int>(i) || table[i][0] != static_cast<int>(i))
      throw InputError("element 0 is not the identity");
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const std::size_t trials = std::min<std::size_t>(n * n * n, 4096);
  for (std::size_t t = 0; t < trials; ++t) {
    std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    if (table[static_cast<std::size_t>(table[a][b])][c] != table[a][static_cast<std::size_t>(table[b][c])])
      throw InputError("multiplication table is not associative");
  }
  for (int s : generators)
    if (s < 0 || static_cast<std::size_t>(s) >= n) throw InputError("generator index out of range");

  FiniteGroup g;
  g.n_ = n;
  g.table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.table_[i * n + j] = table[i][j];
  g.generators_ = std::move(generators);
  g.word_gen_.assign(n, -1);
  g.word_pred_.assign(n, -1);
  g.word_order_.assign(1, 0);
  std::vector<bool> reached(n, false);
  reached[0] = true;
  for (std::size_t q = 0; q < g.word_order_.size(); ++q) {
    int x = g.word_order_[q];
    for (std::size_t k = 0; k < g.generators_.size(); ++k) {
      int y = g.mul(g.generators_[k], x);
      if (!reached[static_cast<std::size_t>(y)]) {
        reached[static_cast<std::size_t>(y)] = true;
        g.word_gen_[static_cast<std::size_t>(y)] = static_cast<int>(k);
        g.word_pred_[static_cast<std::size_t>(y)] = x;
        g.word_order_.push_back(y);
      }
    }
  }
  if (g.word_order_.size() != n) throw InputError("generators do not generate the whole table");
  g.finish();
  return g;
}

void FiniteGroup::finish() {
  const std::size_t n = n_;
  inverse_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a * n + b] == 0) {
        inverse_[a] = static_cast<int>(b);
        break;
      }
  for (std::size_t a = 0; a < n; ++a)
    if (inverse_[a] < 0 || table_[static_cast<std::size_t>(inverse_[a]) * n + a] != 0)
      throw InputError("element without a two-sided inverse");
  orders_.assign(n, 1);
  exponent_ = 1;
  for (std::size_t a = 0; a < n; ++a) {
    int x = static_cast<int>(a), k = 1;
    while (x != 0) {
      x = mul(x, static_cast<int>(a));
      ++k;
    }
    orders_[a] = k;
    exponent_ = std::lcm(exponent_, k);
  }

  class_index_.assign(n, -1);
  classes_.clear();
  for (std::size_t a = 0; a < n; ++a) {
    if (class_index_[a] >= 0) continue;
    ConjugacyClass cls;
    cls.representative = static_cast<int>(a);
    const int id = static_cast<int>(classes_.size());
    class_index_[a] = id;
    cls.members.push_back(static_cast<int>(a));
    for (std::size_t q = 0; q < cls.members.size(); ++q)
      for (int s : generators_) {
        int y = conjugate(cls.members[q], s);
        if (class_index_[static_cast<std::size_t>(y)] < 0) {
          class_index_[static_cast<std::size_t>(y)] = id;
          cls.members.push_back(y);
        }
      }
    std::sort(cls.members.begin(), cls.members.end());
    classes_.push_back(std::move(cls));
  }
}

int FiniteGroup::pow(int a, long e) const {
  const long m = order_of(a);
  e %= m;
  if (e < 0) e += m;
  int r = 0;
  for (long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (int a : generators_)
    for (int b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::power_class(int cls, long e) const {
  return class_of(pow(classes_[static_cast<std::size_t>(cls)].representative, e));
}

void FiniteGroup::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_) throw InputError("label count does not match group order");
  labels_ = std::move(labels);
}

std::vector<int> parse_cycles(const std::string& text, int degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int top = degree;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("bad cycle notation: " + text);
    ++i;
    std::vector<int> cyc;
    skip();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw InputError("bad cycle notation: " + text);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      if (v < 1) throw InputError("cycle points are 1-based: " + text);
      cyc.push_back(v - 1);
      top = std::max(top, v);
      skip();
    }
    if (i >= text.size()) throw InputError("unterminated cycle: " + text);
    ++i;
    cycles.push_back(std::move(cyc));
    skip();
  }
  std::vector<int> p(static_cast<std::size_t>(top));
  std::iota(p.begin(), p.end(), 0);
  std::vector<bool> used(p.size(), false);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) {
      auto from = static_cast<std::size_t>(c[k]);
      if (used[from]) throw InputError("cycles are not disjoint: " + text);
      used[from] = true;
      p[from] = c[(k + 1) % c.size()];
    }
  return p;
}

std::string cycle_string(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j] && j < perm.size()) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      if (perm[j] < 0 || static_cast<std::size_t>(perm[j]) >= perm.size()) break;
      j = static_cast<std::size_t>(perm[j]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// --- Subgroup -------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<int> members) : parent_(std::move(parent)), members_(std::move(members)) {
  const auto& g = *parent_;
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_[0] != 0) throw DomainError("subgroup does not contain the identity");
  for (int m : members_)
    if (m < 0 || static_cast<std::size_t>(m) >= g.size()) throw DomainError("subgroup member out of range");
  if (g.size() % members_.size() != 0) throw DomainError("subgroup order does not divide the group order");
  const std::size_t h = members_.size();
  std::vector<std::vector<int>> table(h, std::vector<int>(h));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      int k = local_index(g.mul(members_[i], members_[j]));
      if (k < 0) throw DomainError("subset is not closed under multiplication");
      table[i][j] = k;
    }
  // Greedy generating set.
  std::vector<int> gens;
  std::vector<bool> in(h, false);
  in[0] = true;
  std::vector<int> span{0};
  for (std::size_t i = 1; i < h; ++i) {
    if (in[i]) continue;
    gens.push_back(static_cast<int>(i));
    in[i] = true;
    span.push_back(static_cast<int>(i));
    for (std::size_t q = 0; q < span.size(); ++q)
      for (int s : gens) {
        int y = table[static_cast<std::size_t>(s)][static_cast<std::size_t>(span[q])];
        if (!in[static_cast<std::size_t>(y)]) {
          in[static_cast<std::size_t>(y)] = true;
          span.push_back(y);
        }
      }
  }
  auto sub = std::make_shared<FiniteGroup>(FiniteGroup::from_table(std::move(table), std::move(gens)));
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (int m : members_) labels.push_back(g.labels()[static_cast<std::size_t>(m)]);
    sub->set_labels(std::move(labels));
  }
  as_group_ = std::move(sub);
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<int> all(parent->size());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) { return Subgroup(std::move(parent), {0}); }

Subgroup Subgroup::generated_by(GroupPtr parent, const std::vector<int>& elements) {
  const auto& g = *parent;
  std::vector<bool> in(g.size(), false);
  std::vector<int> span{0};
  in[0] = true;
  for (std::size_t q = 0; q < span.size(); ++q)
    for (int s : elements) {
      int y = g.mul(s, span[q]);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        span.push_back(y);
      }
    }
  return Subgroup(std::move(parent), std::move(span));
}

bool Subgroup::contains(int g) const { return std::binary_search(members_.begin(), members_.end(), g); }

int Subgroup::local_index(int g) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), g);
  if (it == members_.end() || *it != g) return -1;
  return static_cast<int>(it - members_.begin());
}

Subgroup Subgroup::conjugated(int t) const {
  std::vector<int> m;
  for (int x : members_) m.push_back(parent_->conjugate(x, t));
  return Subgroup(parent_, std::move(m));
}

// --- points and actions ----------------------------------------------------

ProjPoint::ProjPoint(std::vector<Cyc> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InputError("point with no coordinates");
  std::size_t j = 0;
  while (j < coords_.size() && coords_[j].is_zero()) ++j;
  if (j == coords_.size()) throw InputError("all coordinates of a projective point are zero");
  Cyc s = coords_[j].inverse();
  for (auto& c : coords_) c = (c * s).minimal();
}

std::size_t ProjPoint::chart() const {
  std::size_t j = 0;
  while (coords_[j].is_zero()) ++j;
  return j;
}

cyclo::SubfieldSpec ProjPoint::residue_field(int n) const {
  return cyclo::SubfieldSpec::generated_by(n, coords_);
}

std::string ProjPoint::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += " : ";
    s += coords_[i].to_string();
  }
  return s + "]";
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
  for (std::size_t i = 0; i < std::min(a.coords_.size(), b.coords_.size()); ++i) {
    int c = cyclo::compare(a.coords_[i], b.coords_[i]);
    if (c != 0) return c < 0;
  }
  return a.coords_.size() < b.coords_.size();
}

CycMatrix normalize_projective(const CycMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) {
        Cyc s = m(i, j).inverse();
        CycMatrix out(m.rows(), m.cols());
        for (std::size_t a = 0; a < m.rows(); ++a)
          for (std::size_t b = 0; b < m.cols(); ++b) out(a, b) = (m(a, b) * s).minimal();
        return out;
      }
  throw DomainError("zero matrix has no projective class");
}

namespace {

// lambda with a = lambda * b, if any.
std::optional<Cyc> proportionality(const CycMatrix& a, const CycMatrix& b) {
  std::optional<Cyc> lambda;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (b(i, j).is_zero()) {
        if (!a(i, j).is_zero()) return std::nullopt;
        continue;
      }
      if (!lambda) lambda = a(i, j) / b(i, j);
      else if (a(i, j) != *lambda * b(i, j)) return std::nullopt;
    }
  if (!lambda || lambda->is_zero()) return std::nullopt;
  return lambda;
}

std::string element_name(const FiniteGroup& g, int e) {
  if (!g.labels().empty()) return g.labels()[static_cast<std::size_t>(e)];
  return "#" + std::to_string(e);
}

}  // namespace

ProjectiveAction::ProjectiveAction(GroupPtr group, std::size_t dim, const std::vector<CycMatrix>& generator_matrices)
    : group_(std::move(group)), dim_(dim) {
  const auto& g = *group_;
  if (generator_matrices.size() != g.generators().size())
    throw InputError("expected one action matrix per generator (" + std::to_string(g.generators().size()) +
                     "), got " + std::to_string(generator_matrices.size()));
  for (const auto& m : generator_matrices) {
    if (m.rows() != dim_ + 1 || m.cols() != dim_ + 1) throw InputError("action matrices must all be square of one size");
    if (linalg::determinant(m).is_zero()) throw InputError("action matrix is singular");
  }
  matrices_.assign(g.size(), CycMatrix::identity(dim_ + 1));
  for (int x : g.word_order()) {
    if (x == 0) continue;
    matrices_[static_cast<std::size_t>(x)] =
        generator_matrices[static_cast<std::size_t>(g.word_generator(x))] *
        matrices_[static_cast<std::size_t>(g.word_predecessor(x))];
  }
  // M(s) M(h) ~ M(sh) for generators s and all h implies the condition for all pairs by induction on word length.
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    const int s = g.generators()[k];
    if (!proportionality(generator_matrices[k], matrices_[static_cast<std::size_t>(s)]))
      throw InputError("action matrix of generator " + element_name(g, s) + " is inconsistent with the group");
    for (std::size_t h = 0; h < g.size(); ++h) {
      CycMatrix lhs = generator_matrices[k] * matrices_[h];
      if (!proportionality(lhs, matrices_[static_cast<std::size_t>(g.mul(s, static_cast<int>(h)))]))
        throw InputError("action matrices do not define a projective action (relation fails at generator " +
                         element_name(g, s) + ")");
    }
  }
}

Cyc ProjectiveAction::cocycle(int g, int h) const {
  auto l = proportionality(matrix(g) * matrix(h), matrix(group_->mul(g, h)));
  if (!l) throw InternalError("projective cocycle condition fails");
  return *l;
}

ProjPoint ProjectiveAction::apply(int g, const ProjPoint& x) const {
  if (x.dim() != dim_) throw InputError("point dimension does not match the action");
  return ProjPoint(matrix(g) * x.coords());
}

bool ProjectiveAction::fixes(int g, const ProjPoint& x) const { return apply(g, x) == x; }

MatrixGroup group_from_matrices(const std::vector<CycMatrix>& generators, std::size_t bound) {
  if (generators.empty()) throw InputError("matrix group needs at least one generator");
  const std::size_t n = generators[0].rows();
  std::vector<CycMatrix> gens;
  for (const auto& m : generators) {
    if (m.rows() != n || m.cols() != n) throw InputError("generator matrices must all be square of one size");
    if (linalg::determinant(m).is_zero()) throw InputError("generator matrix is singular");
    gens.push_back(normalize_projective(m));
  }
  auto mul = [](const CycMatrix& a, const CycMatrix& b) { return normalize_projective(a * b); };
  MatrixGroup out;
  auto g = ClosureBuilder::close<CycMatrix, MatrixLess>(gens, normalize_projective(CycMatrix::identity(n)), mul,
                                                        bound, out.matrices);
  out.group = std::make_shared<FiniteGroup>(std::move(g));
  return out;
}

Orbit orbit_and_stabilizer(const ProjectiveAction& action, const ProjPoint& x) {
  const auto& g = *action.group();
  std::set<ProjPoint> orbit;
  for (std::size_t e = 0; e < g.size(); ++e) orbit.insert(action.apply(static_cast<int>(e), x));
  const ProjPoint& rep = *orbit.begin();
  std::vector<int> stab;
  for (std::size_t e = 0; e < g.size(); ++e)
    if (action.fixes(static_cast<int>(e), rep)) stab.push_back(static_cast<int>(e));
  if (orbit.size() * stab.size() != g.size()) throw InternalError("orbit-stabilizer count mismatch");
  return Orbit{rep, std::vector<ProjPoint>(orbit.begin(), orbit.end()), Subgroup(action.group(), std::move(stab))};
}

std::vector<Orbit> partition_into_orbits(const ProjectiveAction& action, const std::vector<ProjPoint>& pts) {
  const auto& g = *action.group();
  std::set<ProjPoint> all(pts.begin(), pts.end());
  for (const auto& x : all)
    for (int s : g.generators()) {
      ProjPoint y = action.apply(s, x);
      if (!all.count(y))
        throw InputError("point set is not G-stable: " + element_name(g, s) + " maps " + x.to_string() + " to " +
                         y.to_string());
    }
  std::vector<Orbit> out;
  std::set<ProjPoint> covered;
  for (const auto& x : all) {
    if (covered.count(x)) continue;
    Orbit o = orbit_and_stabilizer(action, x);
    for (const auto& p : o.points) covered.insert(p);
    out.push_back(std::move(o));
  }
  return out;
}

int transporter(const ProjectiveAction& action, const ProjPoint& x, const ProjPoint& y) {
  for (std::size_t e = 0; e < action.group()->size(); ++e)
    if (action.apply(static_cast<int>(e), x) == y) return static_cast<int>(e);
  return -1;
}

}  // namespace equideg::groups
