#pragma once

// Sparse multivariate polynomials with exact-coefficient arithmetic over a
// named, ordered variable set. This is the currency every other module
// trades in: dynamics fields, certificate functions, feedback laws and
// S-procedure multipliers are all Poly values.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fg::poly {

class VarSet {
 public:
  VarSet() = default;
  // Throws std::invalid_argument on duplicate names. Order is significant:
  // it defines exponent-vector indexing and evaluation-point layout.
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  // Throws std::out_of_range when the variable is unknown.
  std::size_t index(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  bool operator==(const VarSet& other) const { return names_ == other.names_; }
  bool operator!=(const VarSet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> names_;
};

struct Monomial {
  std::vector<std::uint16_t> exp;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp(nvars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> e) : exp(std::move(e)) {}

  int total_degree() const;
  bool is_constant() const { return total_degree() == 0; }

  bool operator==(const Monomial& o) const { return exp == o.exp; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
};

// Graded lexicographic order: lower total degree first, ties broken
// lexicographically on the exponent vector. Deterministic across runs; the
// Gram bases in sosc rely on it.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
 public:
  using TermMap = std::map<Monomial, double, GrlexLess>;

  Poly() = default;
  explicit Poly(VarSet vars) : vars_(std::move(vars)) {}

  static Poly zero(VarSet vars) { return Poly(std::move(vars)); }
  static Poly constant(VarSet vars, double c);
  static Poly variable(const VarSet& vars, std::string_view name);
  static Poly term(const VarSet& vars, Monomial m, double c);

  const VarSet& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  int degree() const;  // -1 for the zero polynomial
  int degree_in(std::string_view name) const;
  double coeff(const Monomial& m) const;
  double constant_term() const;
  double max_abs_coeff() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(double s) const;
  Poly operator+(double c) const;
  Poly operator-(double c) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  bool operator==(const Poly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }

  Poly differentiate(std::string_view name) const;

  // One binding per substituted variable; a Poly binding must be over the
  // substitution's result VarSet. Unbound variables must exist in the result
  // VarSet by name. See substitute() below.
  using Binding = std::variant<double, Poly>;
  using SubstMap = std::map<std::string, Binding>;

  double evaluate(std::span<const double> point) const;

  // Renames the variable axes: result has varset `to`, all variables of this
  // poly must exist in `to`.
  Poly lifted_to(const VarSet& to) const;

  // Direct term insertion used by builders; keeps canonical form.
  void add_term(const Monomial& m, double c);

 private:
  friend Poly substitute(const Poly& p, const Poly::SubstMap& bindings);
  VarSet vars_;
  TermMap terms_;
  void prune();
};

inline Poly operator*(double s, const Poly& p) { return p * s; }

// Exact composition. The result VarSet is the ordered union of the unbound
// variables of `p` and the variables of any Poly bindings.
Poly substitute(const Poly& p, const Poly::SubstMap& bindings);

// Text form: header line with variable names (empty line allowed for a
// nullary poly), one `coeff exp1 ... expk` line per term, terminated by a
// single "." line. Coefficients use %.17g and round-trip exactly.
void write_poly(std::ostream& os, const Poly& p);
Poly read_poly(std::istream& is);

// Coefficients with magnitude below this are dropped when canonicalizing
// after arithmetic, preventing zero-litter from float cancellation.
inline constexpr double kCoeffEps = 1e-14;

}  // namespace fg::poly
