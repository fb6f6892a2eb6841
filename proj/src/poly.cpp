#include "equideg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "equideg/error.hpp"

namespace equideg::poly {

int degrevlex_compare(const Exponent& a, const Exponent& b) {
  const int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

namespace {

struct DescendingOrder {
  bool operator()(const Exponent& a, const Exponent& b) const { return degrevlex_compare(a, b) > 0; }
};

using TermMap = std::map<Exponent, Cyc, DescendingOrder>;

}  // namespace

MultiPoly MultiPoly::constant(std::size_t nvars, const Cyc& c) {
  MultiPoly p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Exponent(nvars, 0), c});
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
  Exponent e(nvars, 0);
  e.at(i) = 1;
  return monomial(std::move(e), Cyc(1));
}

MultiPoly MultiPoly::monomial(Exponent exp, const Cyc& c) {
  MultiPoly p(exp.size());
  if (!c.is_zero()) p.terms_.push_back({std::move(exp), c});
  return p;
}

MultiPoly MultiPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  TermMap m;
  for (auto& t : terms) {
    if (t.exp.size() != nvars) throw InternalError("exponent length does not match the variable count");
    auto [it, inserted] = m.emplace(std::move(t.exp), t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  MultiPoly p(nvars);
  for (auto& [e, c] : m)
    if (!c.is_zero()) p.terms_.push_back({e, c});
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && std::all_of(terms_[0].exp.begin(), terms_[0].exp.end(),
                                                             [](int e) { return e == 0; }));
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return std::accumulate(terms_[0].exp.begin(), terms_[0].exp.end(), 0);
}

bool MultiPoly::is_homogeneous() const {
  const int d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return std::accumulate(t.exp.begin(), t.exp.end(), 0) == d; });
}

Cyc MultiPoly::coefficient(const Exponent& e) const {
  for (const auto& t : terms_)
    if (t.exp == e) return t.coeff;
  return Cyc();
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : degrevlex_compare(a[i].exp, b[j].exp);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].exp, subtract ? -b[j].coeff : b[j].coeff});
      ++j;
    } else {
      Cyc s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].exp, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw InternalError("adding polynomials in different rings");
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw InternalError("subtracting polynomials in different rings");
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw InternalError("multiplying polynomials in different rings");
  TermMap m;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      Exponent e(a.nvars_);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = s.exp[i] + t.exp[i];
      Cyc c = s.coeff * t.coeff;
      auto [it, inserted] = m.emplace(std::move(e), c);
      if (!inserted) it->second += c;
    }
  MultiPoly p(a.nvars_);
  for (auto& [e, c] : m)
    if (!c.is_zero()) p.terms_.push_back({e, c});
  return p;
}

MultiPoly operator*(const Cyc& c, const MultiPoly& a) {
  if (c.is_zero()) return MultiPoly(a.nvars_);
  MultiPoly p = a;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw DomainError("negative power of a polynomial");
  MultiPoly r = constant(nvars_, Cyc(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

MultiPoly MultiPoly::mul_term(const Exponent& e, const Cyc& c) const {
  MultiPoly p(nvars_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponent x = t.exp;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += e[i];
    p.terms_.push_back({std::move(x), t.coeff * c});
  }
  return p;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  return terms_[0].coeff.inverse() * *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Cyc MultiPoly::evaluate(const std::vector<Cyc>& x) const {
  if (x.size() != nvars_) throw InternalError("evaluation point has the wrong length");
  Cyc sum;
  for (const auto& t : terms_) {
    Cyc m = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.exp[i]) m *= x[i].pow(t.exp[i]);
    sum += m;
  }
  return sum;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& subs) const {
  if (subs.size() != nvars_) throw InternalError("substitution has the wrong length");
  const std::size_t m = subs.empty() ? 0 : subs[0].nvars();
  MultiPoly out(m);
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  for (const auto& t : terms_) {
    MultiPoly term = constant(m, t.coeff);
    for (std::size_t i = 0; i < nvars_; ++i) {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(m, Cyc(1)));
      while (static_cast<int>(pw.size()) <= t.exp[i]) pw.push_back(pw.back() * subs[i]);
      if (t.exp[i]) term = term * pw[static_cast<std::size_t>(t.exp[i])];
    }
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::linear_substitute(const linalg::Matrix<Cyc>& m) const {
  if (m.rows() != nvars_ || m.cols() != nvars_) throw InternalError("substitution matrix has the wrong size");
  std::vector<MultiPoly> subs;
  for (std::size_t i = 0; i < nvars_; ++i) {
    MultiPoly row(nvars_);
    for (std::size_t j = 0; j < nvars_; ++j) row += m(i, j) * variable(nvars_, j);
    subs.push_back(std::move(row));
  }
  return compose(subs);
}

MultiPoly MultiPoly::dehomogenize(std::size_t j) const {
  std::vector<Term> t;
  for (const auto& term : terms_) {
    Exponent e;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (i != j) e.push_back(term.exp[i]);
    t.push_back({std::move(e), term.coeff});
  }
  return from_terms(nvars_ - 1, std::move(t));
}

MultiPoly MultiPoly::derivative(std::size_t i) const {
  std::vector<Term> t;
  for (const auto& term : terms_) {
    if (term.exp[i] == 0) continue;
    Exponent e = term.exp;
    --e[i];
    t.push_back({std::move(e), Cyc(term.exp[i]) * term.coeff});
  }
  return from_terms(nvars_, std::move(t));
}

int MultiPoly::coefficient_order() const {
  int n = 1;
  for (const auto& t : terms_) n = cyclo::lcm_int(n, t.coeff.minimal().order());
  return n;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.exp[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (t.exp[i] > 1) mono += "^" + std::to_string(t.exp[i]);
    }
    std::string cs = t.coeff.to_string();
    const bool compound = cs.find_first_of("+-", 1) != std::string::npos;
    bool negative = false;
    if (compound) {
      cs = "(" + cs + ")";
    } else if (cs[0] == '-') {
      negative = true;
      cs.erase(0, 1);
    }
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    if (mono.empty()) out += cs;
    else if (cs == "1") out += mono;
    else out += cs + "*" + mono;
  }
  return out;
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& names) : s_(text), names_(names) {}

  MultiPoly run() {
    MultiPoly p = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial \"" + s_ + "\" at position " + std::to_string(i_) + ": " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool starts_atom() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }
  std::string integer_text() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected an integer");
    return s_.substr(start, i_ - start);
  }
  long small_integer() {
    std::string t = integer_text();
    if (t.size() > 9) fail("integer too large here");
    return std::stol(t);
  }

  MultiPoly expr() {
    MultiPoly acc(names_.size());
    bool first = true;
    while (true) {
      bool neg = false;
      if (peek('+') || peek('-')) {
        neg = s_[i_] == '-';
        ++i_;
      } else if (!first) {
        break;
      }
      MultiPoly t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
      if (!(peek('+') || peek('-'))) break;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (true) {
      if (peek('*')) {
        ++i_;
        acc = acc * factor();
      } else if (peek('/')) {
        ++i_;
        MultiPoly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = d.terms()[0].coeff.inverse() * acc;
      } else if (starts_atom()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly a = atom();
    if (peek('^')) {
      ++i_;
      long e = small_integer();
      if (e > 1000) fail("exponent too large");
      a = a.pow(static_cast<int>(e));
    }
    return a;
  }

  MultiPoly atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const std::size_t n = names_.size();
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      MultiPoly p = expr();
      if (!peek(')')) fail("expected ')'");
      ++i_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class z(integer_text());
      return MultiPoly::constant(n, Cyc(cyclo::Rational(z)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string name = s_.substr(start, i_ - start);
      if (name == "zeta") {
        if (!peek('(')) fail("expected '(' after zeta");
        ++i_;
        long order = small_integer();
        if (!peek(')')) fail("expected ')'");
        ++i_;
        if (order < 1) fail("zeta order must be positive");
        return MultiPoly::constant(n, Cyc::zeta(static_cast<int>(order)));
      }
      for (std::size_t v = 0; v < n; ++v)
        if (names_[v] == name) return MultiPoly::variable(n, v);
      i_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const std::vector<std::string>& names_;
  std::size_t i_ = 0;
};

}  // namespace

MultiPoly parse(const std::string& text, const std::vector<std::string>& names) { return Parser(text, names).run(); }

}  // namespace equideg::poly
