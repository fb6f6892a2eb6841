#include "equideg/chars.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "equideg/error.hpp"
#include "equideg/matrix.hpp"

namespace equideg::chars {

namespace {

// Integers modulo the prime of the current Dixon run.
thread_local long g_modulus = 2;

long mod_reduce(long long v) {
  long r = static_cast<long>(v % g_modulus);
  return r < 0 ? r + g_modulus : r;
}

long mod_pow(long b, long e) {
  long long r = 1, x = mod_reduce(b);
  while (e > 0) {
    if (e & 1) r = r * x % g_modulus;
    x = x * x % g_modulus;
    e >>= 1;
  }
  return static_cast<long>(r);
}

struct ModP {
  long v = 0;
  ModP() = default;
  ModP(long long x) : v(mod_reduce(x)) {}  // NOLINT
  ModP operator-() const { return ModP(-static_cast<long long>(v)); }
  ModP& operator+=(ModP o) { return *this = ModP(static_cast<long long>(v) + o.v); }
  ModP& operator-=(ModP o) { return *this = ModP(static_cast<long long>(v) - o.v); }
  ModP& operator*=(ModP o) { return *this = ModP(static_cast<long long>(v) * o.v); }
  ModP& operator/=(ModP o) {
    if (o.v == 0) throw InternalError("division by zero modulo p");
    return *this *= ModP(mod_pow(o.v, g_modulus - 2));
  }
  friend ModP operator+(ModP a, ModP b) { return a += b; }
  friend ModP operator-(ModP a, ModP b) { return a -= b; }
  friend ModP operator*(ModP a, ModP b) { return a *= b; }
  friend ModP operator/(ModP a, ModP b) { return a /= b; }
  friend bool operator==(ModP a, ModP b) { return a.v == b.v; }
};

}  // namespace
}  // namespace equideg::chars

namespace equideg::linalg {
template <>
struct FieldTraits<chars::ModP> {
  static bool is_zero(const chars::ModP& x) { return x.v == 0; }
  static chars::ModP zero() { return chars::ModP(0); }
  static chars::ModP one() { return chars::ModP(1); }
};
}  // namespace equideg::linalg

namespace equideg::chars {

namespace {

using MatP = linalg::Matrix<ModP>;

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Element of multiplicative order exactly e modulo the prime p (e | p - 1).
long primitive_root_of_unity(long p, long e) {
  std::vector<long> factors;
  long m = e;
  for (long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  for (long g = 2; g < p; ++g) {
    long z = mod_pow(g, (p - 1) / e);
    bool ok = true;
    for (long q : factors) ok &= mod_pow(z, e / q) != 1;
    if (ok) return z;
  }
  if (e == 1) return 1;
  throw InternalError("no primitive root of unity modulo p");
}

// Basis (columns) of a subspace brought to reduced column echelon form; returns pivot rows.
std::vector<std::size_t> echelon_columns(MatP& basis) {
  auto e = linalg::rref(basis.transpose());
  basis = e.reduced.transpose();
  MatP trimmed(basis.rows(), e.pivots.size());
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t j = 0; j < e.pivots.size(); ++j) trimmed(i, j) = basis(i, j);
  basis = std::move(trimmed);
  return e.pivots;
}

// Splits common eigenspaces of commuting matrices until every piece is a line.
std::vector<std::vector<ModP>> common_eigenvectors(const std::vector<MatP>& ops, std::size_t r) {
  std::vector<MatP> pieces{MatP::identity(r)};
  for (const auto& a : ops) {
    std::vector<MatP> next;
    for (auto& b : pieces) {
      if (b.cols() == 1) {
        next.push_back(b);
        continue;
      }
      auto piv = echelon_columns(b);
      const std::size_t d = b.cols();
      MatP ab = a * b;
      MatP c(d, d);  // a restricted to span(b), in the basis b
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) c(i, j) = ab(piv[i], j);
      auto cp = linalg::charpoly(c);
      std::size_t found = 0;
      for (long lam = 0; lam < g_modulus && found < d; ++lam) {
        ModP val(0);
        for (std::size_t k = cp.size(); k-- > 0;) val = val * ModP(lam) + cp[k];
        if (val.v != 0) continue;
        MatP shifted = c - ModP(lam) * MatP::identity(d);
        MatP ker = linalg::kernel(shifted);
        found += ker.cols();
        next.push_back(b * ker);
      }
      if (found != d) throw InternalError("class algebra does not split modulo p");
    }
    pieces = std::move(next);
  }
  std::vector<std::vector<ModP>> out;
  for (const auto& b : pieces) {
    if (b.cols() != 1) return {};
    out.push_back(b.column(0));
  }
  return out;
}

std::string letters(std::size_t k) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + k % 26));
    k /= 26;
  } while (k-- > 0);
  return s;
}

struct Lifted {
  ClassFunction values;
  std::vector<std::vector<long>> multiplicities;  // per class, eigenvalue exponent counts
  long degree;
};

}  // namespace

TablePtr CharacterTable::compute(GroupPtr group) {
  const auto& g = *group;
  const std::size_t r = g.classes().size();
  const long order = static_cast<long>(g.size());
  const long e = g.exponent();
  if (e > cyclo::max_order())
    throw DomainError("group exponent " + std::to_string(e) + " exceeds the configured cyclotomic order bound");

  // c[i][j][k] = #{x in C_i : x^-1 g_k in C_j}.
  std::vector<std::vector<std::vector<long>>> c(r, std::vector<std::vector<long>>(r, std::vector<long>(r, 0)));
  for (std::size_t k = 0; k < r; ++k) {
    const int gk = g.classes()[k].representative;
    for (std::size_t i = 0; i < r; ++i)
      for (int x : g.classes()[i].members) ++c[i][static_cast<std::size_t>(g.class_of(g.mul(g.inv(x), gk)))][k];
  }
  std::vector<long> h(r);
  std::vector<std::size_t> inv_class(r);
  for (std::size_t i = 0; i < r; ++i) {
    h[i] = static_cast<long>(g.classes()[i].size());
    inv_class[i] = static_cast<std::size_t>(g.class_of(g.inv(g.classes()[i].representative)));
  }

  const long lower = 2 * static_cast<long>(std::ceil(std::sqrt(static_cast<double>(order)))) + 1;
  long p = e + 1;
  while (p < lower) p += e;
  for (int attempt = 0; attempt < 40; ++attempt, p += e) {
    while (!is_prime(p)) p += e;
    g_modulus = p;

    std::vector<MatP> ops;
    for (std::size_t i = 1; i < r; ++i) {
      MatP a(r, r);
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) a(j, k) = ModP(c[i][j][k]);
      ops.push_back(std::move(a));
    }
    auto vecs = common_eigenvectors(ops, r);
    if (vecs.size() != r) continue;

    const long z = primitive_root_of_unity(p, e);
    const ModP inv_e = ModP(1) / ModP(e);
    std::vector<Lifted> lifted;
    bool ok = true;
    for (auto& w : vecs) {
      if (w[0].v == 0) {
        ok = false;
        break;
      }
      ModP s = ModP(1) / w[0];
      for (auto& x : w) x *= s;
      ModP denom(0);
      for (std::size_t j = 0; j < r; ++j) denom += w[j] * w[inv_class[j]] / ModP(h[j]);
      if (denom.v == 0) {
        ok = false;
        break;
      }
      ModP d2 = ModP(order) / denom;
      long d = 0;
      for (long t = 1; t * t <= order; ++t)
        if (ModP(t * t) == d2) d = t;
      if (d == 0) {
        ok = false;
        break;
      }
      std::vector<ModP> theta(r);
      for (std::size_t j = 0; j < r; ++j) theta[j] = ModP(d) * w[j] / ModP(h[j]);

      Lifted L;
      L.degree = d;
      for (std::size_t j = 0; j < r && ok; ++j) {
        std::vector<long> m(static_cast<std::size_t>(e));
        long total = 0;
        for (long k = 0; k < e; ++k) {
          ModP acc(0);
          for (long l = 0; l < e; ++l)
            acc += theta[static_cast<std::size_t>(g.power_class(static_cast<int>(j), l))] *
                   ModP(mod_pow(z, ((e - k) * l) % e));
          acc *= inv_e;
          if (acc.v > d) ok = false;
          m[static_cast<std::size_t>(k)] = acc.v;
          total += acc.v;
        }
        if (total != d) ok = false;
        Cyc val;
        for (long k = 0; k < e; ++k)
          if (m[static_cast<std::size_t>(k)] != 0) val += Cyc(m[static_cast<std::size_t>(k)]) * Cyc::zeta(static_cast<int>(e), k);
        L.values.push_back(val);
        L.multiplicities.push_back(std::move(m));
      }
      if (!ok) break;
      lifted.push_back(std::move(L));
    }
    if (!ok) continue;

    std::sort(lifted.begin(), lifted.end(), [](const Lifted& a, const Lifted& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      return a.multiplicities > b.multiplicities;
    });

    auto table = std::shared_ptr<CharacterTable>(new CharacterTable());
    table->group_ = group;
    table->value_order_ = static_cast<int>(e);
    table->prime_ = p;
    std::map<long, std::size_t> seen;
    for (auto& L : lifted) {
      table->labels_.push_back(std::to_string(L.degree) + letters(seen[L.degree]++));
      table->irreducibles_.push_back(std::move(L.values));
    }
    // Exact orthogonality certifies the lift.
    bool orthonormal = true;
    for (std::size_t a = 0; a < r && orthonormal; ++a)
      for (std::size_t b = a; b < r && orthonormal; ++b)
        orthonormal = table->inner_product(table->irreducibles_[a], table->irreducibles_[b]) == Cyc(a == b ? 1 : 0);
    if (!orthonormal) continue;
    return table;
  }
  throw InternalError("character table: modular lift failed for every prime tried");
}

long CharacterTable::degree(std::size_t i) const { return irreducibles_[i][0].rational_value().get_num().get_si(); }

Cyc CharacterTable::inner_product(const ClassFunction& a, const ClassFunction& b) const {
  const auto& g = *group_;
  if (a.size() != g.classes().size() || b.size() != g.classes().size())
    throw InternalError("class function length does not match the class count");
  Cyc sum;
  for (std::size_t j = 0; j < a.size(); ++j) sum += Cyc(static_cast<long>(g.classes()[j].size())) * a[j] * conj(b[j]);
  return sum / Cyc(static_cast<long>(g.size()));
}

int CharacterTable::inverse_class(int cls) const {
  const auto& g = *group_;
  return g.class_of(g.inv(g.classes()[static_cast<std::size_t>(cls)].representative));
}

Cyc evaluate(const CharacterTable& t, const ClassFunction& f, int g) {
  return f[static_cast<std::size_t>(t.group()->class_of(g))];
}

// --- virtual characters --------------------------------------------------------

VirtualCharacter::VirtualCharacter(TablePtr table, std::vector<long> coeffs)
    : table_(std::move(table)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != table_->size()) throw InternalError("coefficient count does not match the character table");
}

VirtualCharacter VirtualCharacter::zero(TablePtr table) {
  const std::size_t n = table->size();
  return VirtualCharacter(std::move(table), std::vector<long>(n, 0));
}

VirtualCharacter VirtualCharacter::trivial(TablePtr table) { return irreducible(std::move(table), 0); }

VirtualCharacter VirtualCharacter::irreducible(TablePtr table, std::size_t i) {
  auto v = zero(std::move(table));
  v.coeffs_.at(i) = 1;
  return v;
}

VirtualCharacter VirtualCharacter::regular(TablePtr table) {
  auto v = zero(table);
  for (std::size_t i = 0; i < table->size(); ++i) v.coeffs_[i] = table->degree(i);
  return v;
}

ClassFunction VirtualCharacter::values() const {
  ClassFunction f(table_->group()->classes().size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < f.size(); ++j) f[j] += Cyc(coeffs_[i]) * table_->irreducible(i)[j];
  }
  return f;
}

long VirtualCharacter::dimension() const {
  long d = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) d += coeffs_[i] * table_->degree(i);
  return d;
}

bool VirtualCharacter::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](long c) { return c == 0; });
}

std::string VirtualCharacter::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    long c = coeffs_[i];
    if (c == 0) continue;
    if (s.empty()) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    if (std::labs(c) != 1) s += std::to_string(std::labs(c)) + "*";
    s += table_->labels()[i];
  }
  return s.empty() ? "0" : s;
}

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& o) {
  if (table_ != o.table_) throw InternalError("adding characters of different groups");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

VirtualCharacter& VirtualCharacter::operator-=(const VirtualCharacter& o) {
  if (table_ != o.table_) throw InternalError("subtracting characters of different groups");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

VirtualCharacter operator*(long k, VirtualCharacter a) {
  for (auto& c : a.coeffs_) c *= k;
  return a;
}

VirtualCharacter decompose(const ClassFunction& f, const TablePtr& table) {
  std::vector<long> coeffs;
  for (std::size_t i = 0; i < table->size(); ++i) {
    Cyc ip = table->inner_product(f, table->irreducible(i));
    if (!ip.is_rational() || ip.rational_value().get_den() != 1 || !ip.rational_value().get_num().fits_slong_p())
      throw DomainError("not a virtual character: inner product with " + table->labels()[i] + " is " + ip.to_string());
    coeffs.push_back(ip.rational_value().get_num().get_si());
  }
  VirtualCharacter v(table, std::move(coeffs));
  if (v.values() != f) throw DomainError("not a virtual character: not a class function of this group");
  return v;
}

VirtualCharacter induce(const groups::Subgroup& h, const VirtualCharacter& chi, const TablePtr& g_table) {
  if (chi.table()->group() != h.as_group()) throw DomainError("induce: character is not on the given subgroup");
  if (g_table->group() != h.parent()) throw DomainError("induce: target table is not the subgroup's parent");
  const auto& g = *h.parent();
  const auto& hg = *h.as_group();
  const ClassFunction psi = chi.values();
  ClassFunction f;
  for (const auto& cls : g.classes()) {
    Cyc sum;
    for (int t = 0; t < static_cast<int>(g.size()); ++t) {
      int local = h.local_index(g.conjugate(cls.representative, t));
      if (local >= 0) sum += psi[static_cast<std::size_t>(hg.class_of(local))];
    }
    f.push_back(sum / Cyc(static_cast<long>(h.size())));
  }
  return decompose(f, g_table);
}

VirtualCharacter restrict(const groups::Subgroup& h, const VirtualCharacter& chi, const TablePtr& h_table) {
  if (chi.table()->group() != h.parent()) throw DomainError("restrict: character is not on the subgroup's parent");
  if (h_table->group() != h.as_group()) throw DomainError("restrict: target table is not the subgroup's");
  const auto& g = *h.parent();
  const ClassFunction f = chi.values();
  ClassFunction r;
  for (const auto& cls : h.as_group()->classes())
    r.push_back(f[static_cast<std::size_t>(g.class_of(h.members()[static_cast<std::size_t>(cls.representative)]))]);
  return decompose(r, h_table);
}

VirtualCharacter tensor(const VirtualCharacter& a, const VirtualCharacter& b) {
  if (a.table() != b.table()) throw InternalError("tensor of characters of different groups");
  ClassFunction fa = a.values(), fb = b.values();
  for (std::size_t j = 0; j < fa.size(); ++j) fa[j] *= fb[j];
  return decompose(fa, a.table());
}

VirtualCharacter dual(const VirtualCharacter& a) {
  ClassFunction f = a.values(), d(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) d[j] = f[static_cast<std::size_t>(a.table()->inverse_class(static_cast<int>(j)))];
  return decompose(d, a.table());
}

namespace {

// Power sums p_j(c) = chi(g_c^j) for j = 1..d.
std::vector<ClassFunction> power_sums(const VirtualCharacter& a, int d) {
  const auto& g = *a.table()->group();
  const ClassFunction f = a.values();
  std::vector<ClassFunction> p(static_cast<std::size_t>(d) + 1, ClassFunction(f.size()));
  for (int j = 1; j <= d; ++j)
    for (std::size_t c = 0; c < f.size(); ++c)
      p[static_cast<std::size_t>(j)][c] = f[static_cast<std::size_t>(g.power_class(static_cast<int>(c), j))];
  return p;
}

VirtualCharacter newton(const VirtualCharacter& a, int d, bool alternating) {
  if (d < 0) throw DomainError("symmetric and exterior powers need d >= 0");
  const std::size_t r = a.table()->group()->classes().size();
  auto p = power_sums(a, d);
  std::vector<ClassFunction> hh(static_cast<std::size_t>(d) + 1, ClassFunction(r));
  for (auto& v : hh[0]) v = Cyc(1);
  for (int k = 1; k <= d; ++k)
    for (std::size_t c = 0; c < r; ++c) {
      Cyc s;
      for (int j = 1; j <= k; ++j) {
        Cyc term = p[static_cast<std::size_t>(j)][c] * hh[static_cast<std::size_t>(k - j)][c];
        if (alternating && j % 2 == 0) s -= term;
        else s += term;
      }
      hh[static_cast<std::size_t>(k)][c] = s / Cyc(k);
    }
  return decompose(hh[static_cast<std::size_t>(d)], a.table());
}

}  // namespace

VirtualCharacter sym_power(const VirtualCharacter& a, int d) { return newton(a, d, false); }

VirtualCharacter ext_power(const VirtualCharacter& a, int d) { return newton(a, d, true); }

ClassFunction field_trace_values(const ClassFunction& f, const cyclo::SubfieldSpec& from,
                                 const cyclo::SubfieldSpec& to) {
  int n = cyclo::lcm_int(from.ambient_order(), to.ambient_order());
  for (const auto& v : f) n = cyclo::lcm_int(n, v.minimal().order());
  auto lf = from.lifted(n), lt = to.lifted(n);
  ClassFunction out;
  for (const auto& v : f) out.push_back(cyclo::field_trace(v, lf, lt));
  return out;
}

VirtualCharacter field_restrict_scalars(const VirtualCharacter& chi, const cyclo::SubfieldSpec& from,
                                        const cyclo::SubfieldSpec& to) {
  return decompose(field_trace_values(chi.values(), from, to), chi.table());
}

VirtualCharacter field_restrict_scalars(const ClassFunction& f, const TablePtr& table,
                                        const cyclo::SubfieldSpec& from, const cyclo::SubfieldSpec& to) {
  return decompose(field_trace_values(f, from, to), table);
}

int frobenius_schur(const CharacterTable& t, std::size_t i) {
  const auto& g = *t.group();
  Cyc s;
  for (std::size_t c = 0; c < g.classes().size(); ++c)
    s += Cyc(static_cast<long>(g.classes()[c].size())) *
         t.irreducible(i)[static_cast<std::size_t>(g.power_class(static_cast<int>(c), 2))];
  s /= Cyc(static_cast<long>(g.size()));
  return static_cast<int>(s.rational_value().get_num().get_si());
}

}  // namespace equideg::chars
