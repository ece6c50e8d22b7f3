#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dehnkit {

using Integer = mpz_class;
using Exponents = std::vector<std::int64_t>;

/// Integer Laurent polynomial in a fixed number of commuting variables.
///
/// Terms are kept in a sorted map from exponent vector to coefficient and zero
/// coefficients are never stored, so the zero polynomial has no terms and
/// structural equality is mathematical equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t num_vars) : num_vars_(num_vars) {}

  static LaurentPoly constant(std::size_t num_vars, const Integer& c);
  static LaurentPoly monomial(Exponents exps, const Integer& c = 1);
  /// t_var^power in a ring of num_vars variables.
  static LaurentPoly variable(std::size_t num_vars, std::size_t var, std::int64_t power = 1);

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// True for +1 or -1 times a monomial.
  bool is_unit() const;
  Integer coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  /// Inverse of a monomial unit; throws for anything else.
  LaurentPoly monomial_inverse() const;

  /// Collapse every variable onto a single variable t.
  LaurentPoly collapse() const;
  /// Evaluate a one-variable polynomial at t = -1.
  Integer eval_minus_one() const;
  /// Evaluate with every variable at 1.
  Integer eval_at_one() const;

  /// Lowest and highest total degree of a one-variable polynomial.
  std::int64_t min_degree() const;
  std::int64_t max_degree() const;

  /// Human-readable form, highest exponents first: "t^2 - t + 1" or
  /// "t1*t2^-1 - 1". Variable names default to t (one variable) or t1..tk.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::size_t num_vars_ = 1;
  std::map<Exponents, Integer> terms_;
};

// One-variable helpers used by the Alexander polynomial machinery.
namespace univariate {

/// Exact division a / b in Z[t^{+-1}]; throws std::domain_error if b does not divide a.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);
/// Gcd in Z[t^{+-1}], normalized as in normalize().
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
/// Representative of the class of p modulo units +-t^k: lowest exponent 0,
/// positive leading coefficient. Zero maps to zero.
LaurentPoly normalize(const LaurentPoly& p);
/// Parse "t^2 - 3t + 1" style text (one variable named t).
LaurentPoly parse(const std::string& text);

}  // namespace univariate

}  // namespace dehnkit
