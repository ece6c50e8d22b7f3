#include "dehnkit/free_group.hpp"

#include <sstream>
#include <stdexcept>

namespace dehnkit {

FreeWord& FreeWord::append(const FreeWord& w) {
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
  return *this;
}

FreeWord FreeWord::concat(const FreeWord& w) const {
  FreeWord r = *this;
  return r.append(w);
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return FreeWord(std::move(out));
}

bool FreeWord::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i].gen == letters_[i - 1].gen && letters_[i].exp == -letters_[i - 1].exp) return false;
  return true;
}

std::vector<std::int64_t> FreeWord::exponent_sums(std::size_t num_gens) const {
  std::vector<std::int64_t> sums(num_gens, 0);
  for (const auto& l : letters_) {
    if (l.gen.value >= num_gens) throw std::out_of_range("exponent_sums: generator out of range");
    sums[l.gen.value] += l.exp;
  }
  return sums;
}

FreeWord FreeWord::without(GenId g) const {
  std::vector<Letter> out;
  for (const auto& l : letters_)
    if (l.gen != g) out.push_back(l);
  return FreeWord(std::move(out));
}

std::string FreeWord::to_string(std::span<const std::string> names) const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out << ' ';
    const auto& l = letters_[i];
    if (l.gen.value < names.size())
      out << names[l.gen.value];
    else
      out << 'x' << l.gen.value;
    if (l.exp != 1) out << '^' << l.exp;
  }
  return out.str();
}

FreeWord reduce(const FreeWord& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return FreeWord(std::move(stack));
}

FreeWord cyclically_reduce(const FreeWord& w) {
  const auto& ls = reduce(w).letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return FreeWord(std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(lo),
                                      ls.begin() + static_cast<std::ptrdiff_t>(hi)));
}

bool is_cyclic_permutation(const FreeWord& a, const FreeWord& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n == 0) return true;
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = a.letters()[i] == b.letters()[(i + shift) % n];
    if (ok) return true;
  }
  return false;
}

GroupRingElement GroupRingElement::of(const FreeWord& w, const Integer& c) {
  GroupRingElement e;
  e.add(w, c);
  return e;
}

void GroupRingElement::add(const FreeWord& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(reduce(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add(wa.concat(wb), ca * cb);
  return r;
}

std::string GroupRingElement::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Integer mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (w.empty()) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << '*';
      out << (w.size() > 1 && mag != 1 ? "(" : "") << w.to_string(names) << (w.size() > 1 && mag != 1 ? ")" : "");
    }
  }
  return out.str();
}

GroupRingElement fox_derivative(const FreeWord& w, GenId g) {
  GroupRingElement d;
  FreeWord prefix;
  for (const auto& l : w.letters()) {
    if (l.gen == g) {
      if (l.exp == 1) {
        d.add(prefix, 1);
      } else {
        FreeWord p = prefix;
        p.push_back(l);
        d.add(p, -1);
      }
    }
    prefix.push_back(l);
  }
  return d;
}

GroupRingElement derivative_of_relator(const FreeWord& r, std::span<const GenId> gens) {
  GroupRingElement total;
  for (GenId g : gens) total += fox_derivative(r, g) * GroupRingElement::of(FreeWord::generator(g));
  return total;
}

Specialization::Specialization(std::vector<LaurentPoly> images) : images_(std::move(images)) {
  bool have_vars = false;
  inverses_.reserve(images_.size());
  for (const auto& im : images_) {
    if (im.is_zero()) {
      inverses_.emplace_back();
      continue;
    }
    if (!have_vars) {
      num_vars_ = im.num_vars();
      have_vars = true;
    } else if (im.num_vars() != num_vars_) {
      throw std::invalid_argument("Specialization: images live in different rings");
    }
    inverses_.push_back(im.monomial_inverse());
  }
}

const LaurentPoly& Specialization::image(GenId g) const {
  if (!covers(g)) throw std::out_of_range("specialize: generator " + std::to_string(g.value) + " has no image");
  return images_[g.value];
}

LaurentPoly Specialization::apply(const FreeWord& w) const {
  LaurentPoly p = LaurentPoly::constant(num_vars_, 1);
  for (const auto& l : w.letters()) {
    image(l.gen);
    p *= (l.exp == 1 ? images_[l.gen.value] : inverses_[l.gen.value]);
  }
  return p;
}

LaurentPoly Specialization::apply(const GroupRingElement& e) const {
  LaurentPoly p(num_vars_);
  for (const auto& [w, c] : e.terms()) p += apply(w) * LaurentPoly::constant(num_vars_, c);
  return p;
}

LaurentPoly Specialization::fox(const FreeWord& w, GenId g) const {
  LaurentPoly d(num_vars_);
  LaurentPoly prefix = LaurentPoly::constant(num_vars_, 1);
  for (const auto& l : w.letters()) {
    image(l.gen);
    const LaurentPoly& step = l.exp == 1 ? images_[l.gen.value] : inverses_[l.gen.value];
    if (l.gen == g) {
      if (l.exp == 1)
        d += prefix;
      else
        d -= prefix * step;
    }
    prefix *= step;
  }
  return d;
}

std::vector<LaurentPoly> Specialization::fox_row(const FreeWord& w, std::size_t num_gens) const {
  std::vector<LaurentPoly> row(num_gens, LaurentPoly(num_vars_));
  LaurentPoly prefix = LaurentPoly::constant(num_vars_, 1);
  for (const auto& l : w.letters()) {
    if (l.gen.value >= num_gens) throw std::out_of_range("fox_row: generator out of range");
    image(l.gen);
    const LaurentPoly& step = l.exp == 1 ? images_[l.gen.value] : inverses_[l.gen.value];
    if (l.exp == 1)
      row[l.gen.value] += prefix;
    else
      row[l.gen.value] -= prefix * step;
    prefix *= step;
  }
  return row;
}

Specialization Specialization::collapsed() const {
  std::vector<LaurentPoly> out;
  out.reserve(images_.size());
  for (const auto& im : images_) out.push_back(im.is_zero() ? LaurentPoly(1) : im.collapse());
  return Specialization(std::move(out));
}

}  // namespace dehnkit
