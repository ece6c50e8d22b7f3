#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dehnkit/laurent.hpp"

namespace dehnkit {

/// Index of a generator inside a presentation's generator table.
struct GenId {
  std::uint32_t value = 0;
  auto operator<=>(const GenId&) const = default;
};

struct Letter {
  GenId gen;
  int exp = 1;  // +1 or -1
  auto operator<=>(const Letter&) const = default;
  Letter inverse() const { return {gen, -exp}; }
};

/// A word in the free group, kept exactly as spelled. Use reduce() for the
/// freely reduced representative.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  static FreeWord generator(GenId g, int exp = 1) { return FreeWord({{g, exp}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push_back(Letter l) { letters_.push_back(l); }
  /// Concatenation without reduction.
  FreeWord& append(const FreeWord& w);
  FreeWord concat(const FreeWord& w) const;
  /// Formal inverse: reversed, each exponent negated.
  FreeWord inverse() const;
  bool is_reduced() const;
  /// Exponent sum of each generator (abelianization), indexed by GenId.
  std::vector<std::int64_t> exponent_sums(std::size_t num_gens) const;
  /// Copy with every occurrence of g removed (used to impose g = 1).
  FreeWord without(GenId g) const;

  /// "U1 U3^-1 S0"; the empty word renders as "1".
  std::string to_string(std::span<const std::string> names) const;

  auto operator<=>(const FreeWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Free reduction (cancel adjacent g g^-1 pairs) by a single stack pass.
FreeWord reduce(const FreeWord& w);

/// Cyclic reduction of a reduced word.
FreeWord cyclically_reduce(const FreeWord& w);

/// True if a is a cyclic rotation of b (letter for letter, as spelled).
bool is_cyclic_permutation(const FreeWord& a, const FreeWord& b);

/// Element of the integral group ring Z[F]: finite sum of reduced words with
/// nonzero integer coefficients.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  static GroupRingElement one() { return of(FreeWord{}); }
  static GroupRingElement of(const FreeWord& w, const Integer& c = 1);

  const std::map<FreeWord, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const FreeWord& w, const Integer& c);

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  /// "1 - U1 S0 U1^-1" style rendering, terms in word order.
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::map<FreeWord, Integer> terms_;
};

/// Fox partial derivative d(w)/d(g) of the word as spelled: each occurrence of
/// g contributes its prefix (exponent +1) or minus prefix*g^-1 (exponent -1).
GroupRingElement fox_derivative(const FreeWord& w, GenId g);

/// The "derivative" of a relator: sum over generators of (dr/dx_j) x_j.
GroupRingElement derivative_of_relator(const FreeWord& r, std::span<const GenId> gens);

/// Ring homomorphism Z[F] -> Laurent ring determined by images of generators.
/// Every image must be a +-monomial. Throws if a generator has no image.
class Specialization {
 public:
  Specialization() = default;
  explicit Specialization(std::vector<LaurentPoly> images);

  std::size_t num_vars() const { return num_vars_; }
  const LaurentPoly& image(GenId g) const;
  bool covers(GenId g) const { return g.value < images_.size() && !images_[g.value].is_zero(); }

  LaurentPoly apply(const FreeWord& w) const;
  LaurentPoly apply(const GroupRingElement& e) const;
  /// Specialized Fox derivative computed with a running prefix product, without
  /// materializing the group ring element. Agrees with apply(fox_derivative(w, g)).
  LaurentPoly fox(const FreeWord& w, GenId g) const;
  /// All partial derivatives of one word at once, indexed by GenId.
  std::vector<LaurentPoly> fox_row(const FreeWord& w, std::size_t num_gens) const;

  /// Compose with t_i -> t for every variable.
  Specialization collapsed() const;

 private:
  std::size_t num_vars_ = 1;
  std::vector<LaurentPoly> images_;
  std::vector<LaurentPoly> inverses_;
};

}  // namespace dehnkit
