#include "dehnkit/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace dehnkit {

LaurentPoly LaurentPoly::constant(std::size_t num_vars, const Integer& c) {
  LaurentPoly p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Exponents exps, const Integer& c) {
  LaurentPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t num_vars, std::size_t var, std::int64_t power) {
  if (var >= num_vars) throw std::out_of_range("LaurentPoly::variable: index out of range");
  Exponents e(num_vars, 0);
  e[var] = power;
  return monomial(std::move(e));
}

bool LaurentPoly::is_unit() const {
  if (terms_.size() != 1) return false;
  const Integer& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

Integer LaurentPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const Integer& c) {
  if (e.size() != num_vars_) throw std::invalid_argument("LaurentPoly: exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.num_vars_ != num_vars_) throw std::invalid_argument("LaurentPoly: ring mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.num_vars_ != num_vars_) throw std::invalid_argument("LaurentPoly: ring mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.num_vars_ != b.num_vars_) throw std::invalid_argument("LaurentPoly: ring mismatch");
  LaurentPoly r(a.num_vars_);
  Exponents e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
  if (!is_unit()) throw std::domain_error("LaurentPoly: only +-monomials are invertible");
  const auto& [e, c] = *terms_.begin();
  Exponents inv(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
  return monomial(std::move(inv), c);
}

LaurentPoly LaurentPoly::collapse() const {
  LaurentPoly r(1);
  for (const auto& [e, c] : terms_) {
    std::int64_t d = 0;
    for (auto x : e) d += x;
    r.add_term({d}, c);
  }
  return r;
}

Integer LaurentPoly::eval_minus_one() const {
  if (num_vars_ != 1) throw std::invalid_argument("eval_minus_one: expected one variable");
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += (e[0] % 2 == 0) ? c : Integer(-c);
  return s;
}

Integer LaurentPoly::eval_at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::int64_t LaurentPoly::min_degree() const {
  if (num_vars_ != 1 || is_zero()) throw std::domain_error("min_degree: need nonzero one-variable polynomial");
  return terms_.begin()->first[0];
}

std::int64_t LaurentPoly::max_degree() const {
  if (num_vars_ != 1 || is_zero()) throw std::domain_error("max_degree: need nonzero one-variable polynomial");
  return terms_.rbegin()->first[0];
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  auto var_name = [&](std::size_t i) -> std::string {
    if (i < names.size()) return names[i];
    return num_vars_ == 1 ? "t" : "t" + std::to_string(i + 1);
  };
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    bool constant_term = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || constant_term) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << var_name(i);
      if (e[i] != 1) out << "^" << e[i];
      wrote = true;
    }
  }
  return out.str();
}

namespace univariate {
namespace {

// Dense coefficients c[0..d] of t^offset * (c0 + c1 t + ...).
struct Dense {
  std::int64_t offset = 0;
  std::vector<Integer> c;
};

Dense to_dense(const LaurentPoly& p) {
  Dense d;
  if (p.is_zero()) return d;
  d.offset = p.min_degree();
  d.c.assign(static_cast<std::size_t>(p.max_degree() - d.offset + 1), Integer(0));
  for (const auto& [e, c] : p.terms()) d.c[static_cast<std::size_t>(e[0] - d.offset)] = c;
  return d;
}

LaurentPoly from_dense(const std::vector<Integer>& c, std::int64_t offset) {
  LaurentPoly p(1);
  for (std::size_t i = 0; i < c.size(); ++i) p.add_term({offset + static_cast<std::int64_t>(i)}, c[i]);
  return p;
}

void trim(std::vector<Integer>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Integer content(const std::vector<Integer>& c) {
  Integer g = 0;
  for (const auto& x : c) g = ::gcd(g, x);
  return g;
}

// Pseudo-remainder of a by b (deg a >= deg b).
std::vector<Integer> pseudo_rem(std::vector<Integer> a, const std::vector<Integer>& b) {
  const Integer& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    Integer la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

std::vector<Integer> primitive(std::vector<Integer> c) {
  Integer g = content(c);
  if (g != 0 && g != 1)
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return c;
}

}  // namespace

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
  if (a.is_zero()) return LaurentPoly(1);
  Dense da = to_dense(a), db = to_dense(b);
  if (da.c.size() < db.c.size()) throw std::domain_error("divide_exact: not divisible");
  std::vector<Integer> rem = da.c;
  std::vector<Integer> q(da.c.size() - db.c.size() + 1, Integer(0));
  const Integer& lead = db.c.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Integer& top = rem[k + db.c.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw std::domain_error("divide_exact: not divisible");
    Integer f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    q[k] = f;
    for (std::size_t i = 0; i < db.c.size(); ++i) rem[k + i] -= f * db.c[i];
  }
  for (const auto& x : rem)
    if (x != 0) throw std::domain_error("divide_exact: not divisible");
  return from_dense(q, da.offset - db.offset);
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  std::vector<Integer> x = to_dense(a).c, y = to_dense(b).c;
  Integer g_content = ::gcd(content(x), content(y));
  x = primitive(x);
  y = primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    auto r = pseudo_rem(x, y);
    x = std::move(y);
    y = r.empty() ? r : primitive(r);
  }
  for (auto& v : x) v *= g_content;
  return normalize(from_dense(x, 0));
}

LaurentPoly normalize(const LaurentPoly& p) {
  if (p.is_zero()) return LaurentPoly(1);
  if (p.num_vars() != 1) throw std::invalid_argument("normalize: expected one variable");
  Dense d = to_dense(p);
  if (d.c.back() < 0)
    for (auto& x : d.c) x = -x;
  return from_dense(d.c, 0);
}

LaurentPoly parse(const std::string& text) {
  LaurentPoly p(1);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&](std::string& digits) {
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
  };
  skip();
  if (i == text.size()) throw std::invalid_argument("parse: empty polynomial");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw std::invalid_argument("parse: expected + or - at position " + std::to_string(i));
    }
    first = false;
    std::string digits;
    read_int(digits);
    Integer coeff = digits.empty() ? Integer(1) : Integer(digits);
    std::int64_t exp = 0;
    skip();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip();
    }
    if (i < text.size() && text[i] == 't') {
      ++i;
      exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        bool neg = false;
        if (i < text.size() && text[i] == '-') {
          neg = true;
          ++i;
        }
        std::string e;
        read_int(e);
        if (e.empty()) throw std::invalid_argument("parse: missing exponent at position " + std::to_string(i));
        exp = std::stoll(e) * (neg ? -1 : 1);
      }
    } else if (digits.empty()) {
      throw std::invalid_argument("parse: expected term at position " + std::to_string(i));
    }
    p.add_term({exp}, coeff * sign);
  }
  return p;
}

}  // namespace univariate
}  // namespace dehnkit
