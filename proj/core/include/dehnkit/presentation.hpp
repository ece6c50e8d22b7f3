#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dehnkit/checkerboard.hpp"
#include "dehnkit/free_group.hpp"

namespace dehnkit {

struct Generator {
  std::string name;
  std::string tag;   // "region U3", "arc 2", ...
  int source = -1;   // region id or arc id
};

struct Relator {
  FreeWord word;
  std::string tag;
  int source = -1;
};

/// Finite presentation. Relators are kept as constructed (unreduced).
struct Presentation {
  std::vector<Generator> generators;
  std::vector<Relator> relators;

  std::size_t num_generators() const { return generators.size(); }
  std::size_t num_relators() const { return relators.size(); }
  std::vector<std::string> names() const;
  std::optional<GenId> find(const std::string& name) const;
  std::vector<FreeWord> reduced_relators() const;
  /// Throws std::logic_error if some relator uses an undeclared generator.
  void validate() const;

  /// "< U1, U2, S0 | U1 U2^-1 S0 ..., ... >"
  std::string to_text() const;
  /// GAP input defining the finitely presented group G.
  std::string to_gap() const;
};

/// Formal fraction num/den of unshaded region ids.
struct Fraction {
  int num = 0;
  int den = 0;
  bool operator==(const Fraction&) const = default;
};

/// Fractions read along a based loop. Words built from it use region ids as
/// generator ids.
struct FractionSequence {
  int base = 0;
  std::vector<Step> steps;
  std::vector<Fraction> entries;
  bool odd() const { return entries.size() % 2 == 1; }
};

/// Fraction recorded when passing through a crossing: numerator is the
/// unshaded region on the left for weight +1, on the right for weight -1.
Fraction step_fraction(const Shading& s, const Step& st);

/// Validates that `steps` is a closed walk based at `base`.
FractionSequence fraction_sequence(const Shading& s, int base, std::vector<Step> steps);

/// Zig-zag return value: a_L b_{L-1}^-1 ... S^{(-1)^L} ... b_L.
FreeWord return_value(const FractionSequence& seq);
/// Return value recomputed by solving each crossing's Dehn relator in turn.
FreeWord return_value_by_rewriting(const Shading& s, const std::vector<Step>& steps, int base);
/// W * base^-1.
FreeWord boundary_relator(const FractionSequence& seq);
/// Relator of the same loop traversed backwards, rebuilt from the spelling of r.
FreeWord reverse_relator(const FreeWord& r);
/// r* is a cyclic permutation of r (odd loops) or of r^-1 (even loops).
bool reverse_relator_consistent(const FreeWord& r, const FreeWord& r_star, bool odd);

FractionSequence reversed(const FractionSequence& seq);

/// Steps around a face with the face on the left; empty for circle faces.
std::vector<Step> face_loop(const Face& f);

/// Rotate a cyclic loop to its preferred start and attach the tree path
/// from the component base. `vertex` names the lone vertex of an empty loop.
std::vector<Step> based_loop(const Shading& s, const CheckerboardGraph& g, std::vector<Step> loop, int vertex);

/// Loop of one boundary curve of a hole, based at its Gamma component.
struct BoundaryLoop {
  int face = -1;
  int lambda = 0;
  FractionSequence seq;
  FreeWord relator;  // region-id letters
};

/// All boundary loops of a bounded unshaded region: the inner face first,
/// then the outer faces of pieces nested in it, ordered by component.
struct HoleRelator {
  int region = 0;
  std::vector<BoundaryLoop> loops;
  FreeWord word;  // concatenated relator in region-id letters
};

std::vector<HoleRelator> hole_relators(const LinkDiagram& d, const Shading& s, const CheckerboardGraph& g);

/// Loop around the unbounded face of a non-split diagram.
BoundaryLoop outer_loop(const LinkDiagram& d, const Shading& s, const CheckerboardGraph& g);

/// One generator per region, one relator per crossing, plus U0.
Presentation dehn_presentation(const LinkDiagram& d, const Shading& s, const CheckerboardGraph& g);

/// Generators U1..Un, S1..S_{beta-1}, S0 and one boundary relator per bounded
/// unshaded region, U0 deleted.
Presentation theorem_main_presentation(const LinkDiagram& d, const Shading& s, const CheckerboardGraph& g);
/// Position of each region in theorem_main_presentation, or -1 (U0, non-base shaded).
std::vector<int> main_generator_of_region(const Shading& s, const CheckerboardGraph& g);

/// Arc generators and one conjugation relator per crossing.
Presentation wirtinger_presentation(const LinkDiagram& d);
/// Arc id of every edge, arcs numbered by smallest edge.
std::vector<int> wirtinger_arcs(const LinkDiagram& d, int* num_arcs = nullptr);

}  // namespace dehnkit
