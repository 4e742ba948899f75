#include "fungen/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace fg::poly {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("VarSet: empty variable name");
    if (!seen.insert(n).second)
      throw std::invalid_argument("VarSet: duplicate variable '" + n + "'");
  }
}

std::optional<std::size_t> VarSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VarSet::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::out_of_range("VarSet: unknown variable '" + std::string(name) +
                          "'");
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(a.exp.begin(), a.exp.end(),
                                      b.exp.begin(), b.exp.end());
}

Poly Poly::constant(VarSet vars, double c) {
  Poly p(std::move(vars));
  if (std::abs(c) >= kCoeffEps)
    p.terms_.emplace(Monomial(p.vars_.size()), c);
  return p;
}

Poly Poly::variable(const VarSet& vars, std::string_view name) {
  Monomial m(vars.size());
  m.exp[vars.index(name)] = 1;
  return term(vars, std::move(m), 1.0);
}

Poly Poly::term(const VarSet& vars, Monomial m, double c) {
  if (m.exp.size() != vars.size())
    throw std::invalid_argument("Poly::term: exponent length mismatch");
  Poly p(vars);
  if (std::abs(c) >= kCoeffEps) p.terms_.emplace(std::move(m), c);
  return p;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.total_degree();
}

int Poly::degree_in(std::string_view name) const {
  const std::size_t i = vars_.index(name);
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, int(m.exp[i]));
  return d;
}

double Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0.0 : it->second;
}

double Poly::constant_term() const { return coeff(Monomial(vars_.size())); }

double Poly::max_abs_coeff() const {
  double m = 0;
  for (const auto& [_, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

void Poly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < kCoeffEps)
      it = terms_.erase(it);
    else
      ++it;
  }
}

void Poly::add_term(const Monomial& m, double c) {
  if (m.exp.size() != vars_.size())
    throw std::invalid_argument("Poly::add_term: exponent length mismatch");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kCoeffEps) terms_.erase(it);
}

namespace {
void require_same_vars(const Poly& a, const Poly& b, const char* op) {
  if (a.vars() != b.vars())
    throw std::invalid_argument(std::string("Poly: VarSet mismatch in ") + op);
}
}  // namespace

Poly Poly::operator+(const Poly& o) const {
  require_same_vars(*this, o, "add");
  Poly r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_vars(*this, o, "add");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly Poly::operator-(const Poly& o) const {
  require_same_vars(*this, o, "sub");
  Poly r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_vars(*this, o, "sub");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  require_same_vars(*this, o, "mul");
  Poly r(vars_);
  const std::size_t n = vars_.size();
  Monomial prod(n);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (std::size_t i = 0; i < n; ++i)
        prod.exp[i] = std::uint16_t(ma.exp[i] + mb.exp[i]);
      r.add_term(prod, ca * cb);
    }
  }
  return r;
}

Poly Poly::operator*(double s) const {
  Poly r(vars_);
  for (const auto& [m, c] : terms_) {
    const double cs = c * s;
    if (std::abs(cs) >= kCoeffEps) r.terms_.emplace(m, cs);
  }
  return r;
}

Poly Poly::operator+(double c) const {
  Poly r(*this);
  r.add_term(Monomial(vars_.size()), c);
  return r;
}

Poly Poly::operator-(double c) const { return *this + (-c); }

Poly Poly::differentiate(std::string_view name) const {
  const std::size_t i = vars_.index(name);
  Poly r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m.exp[i] == 0) continue;
    Monomial d = m;
    const double k = d.exp[i];
    d.exp[i] -= 1;
    r.add_term(d, c * k);
  }
  return r;
}

double Poly::evaluate(std::span<const double> point) const {
  if (point.size() != vars_.size())
    throw std::invalid_argument("Poly::evaluate: point dimension mismatch");
  double acc = 0;
  for (const auto& [m, c] : terms_) {
    double t = c;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
      double b = point[i];
      unsigned e = m.exp[i];
      while (e) {  // square-and-multiply
        if (e & 1) t *= b;
        b *= b;
        e >>= 1;
      }
    }
    acc += t;
  }
  return acc;
}

Poly Poly::lifted_to(const VarSet& to) const {
  std::vector<std::size_t> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) map[i] = to.index(vars_.name(i));
  Poly r(to);
  for (const auto& [m, c] : terms_) {
    Monomial lm(to.size());
    for (std::size_t i = 0; i < m.exp.size(); ++i) lm.exp[map[i]] += m.exp[i];
    r.add_term(lm, c);
  }
  return r;
}

Poly substitute(const Poly& p, const Poly::SubstMap& bindings) {
  const VarSet& vars = p.vars();
  // Result varset: unbound variables in original order, then any new
  // variables introduced by Poly bindings in their own order.
  std::vector<std::string> out_names;
  for (const auto& n : vars.names())
    if (!bindings.count(n)) out_names.push_back(n);
  for (const auto& [name, b] : bindings) {
    if (!vars.contains(name))
      throw std::invalid_argument("substitute: '" + name +
                                  "' is not a variable of the polynomial");
    if (const Poly* bp = std::get_if<Poly>(&b)) {
      for (const auto& bn : bp->vars().names())
        if (std::find(out_names.begin(), out_names.end(), bn) ==
            out_names.end())
          out_names.push_back(bn);
    }
  }
  VarSet out(out_names);

  // Per-variable replacement polys over the result varset.
  std::vector<Poly> repl(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = bindings.find(vars.name(i));
    if (it == bindings.end()) {
      repl[i] = Poly::variable(out, vars.name(i));
    } else if (const double* c = std::get_if<double>(&it->second)) {
      repl[i] = Poly::constant(out, *c);
    } else {
      repl[i] = std::get<Poly>(it->second).lifted_to(out);
    }
  }

  // Memoized powers.
  std::vector<std::vector<Poly>> pow(vars.size());
  auto power = [&](std::size_t i, unsigned e) -> const Poly& {
    auto& cache = pow[i];
    if (cache.empty()) cache.push_back(Poly::constant(out, 1.0));
    while (cache.size() <= e) cache.push_back(cache.back() * repl[i]);
    return cache[e];
  };

  Poly r(out);
  for (const auto& [m, c] : p.terms()) {
    Poly t = Poly::constant(out, c);
    for (std::size_t i = 0; i < m.exp.size(); ++i)
      if (m.exp[i]) t = t * power(i, m.exp[i]);
    r += t;
  }
  return r;
}

void write_poly(std::ostream& os, const Poly& p) {
  const auto& names = p.vars().names();
  for (std::size_t i = 0; i < names.size(); ++i)
    os << (i ? " " : "") << names[i];
  os << "\n";
  char buf[32];
  for (const auto& [m, c] : p.terms()) {
    std::snprintf(buf, sizeof buf, "%.17g", c);
    os << buf;
    for (auto e : m.exp) os << " " << e;
    os << "\n";
  }
  os << ".\n";
}

Poly read_poly(std::istream& is) {
  std::string line;
  if (!std::getline(is, line))
    throw std::runtime_error("read_poly: missing header line");
  std::vector<std::string> names;
  {
    std::istringstream hs(line);
    std::string n;
    while (hs >> n) names.push_back(n);
  }
  Poly p((VarSet(names)));
  while (std::getline(is, line)) {
    if (line == "." || line.empty()) break;
    std::istringstream ls(line);
    double c;
    if (!(ls >> c)) throw std::runtime_error("read_poly: bad coefficient");
    Monomial m(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
      int e;
      if (!(ls >> e) || e < 0)
        throw std::runtime_error("read_poly: bad exponent");
      m.exp[i] = std::uint16_t(e);
    }
    p.add_term(m, c);
  }
  return p;
}

}  // namespace fg::poly
