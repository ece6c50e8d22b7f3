#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dehnkit/laurent.hpp"
#include "dehnkit/pd.hpp"

namespace dehnkit {

/// Corner k of a crossing lies between slots k and k+1.
struct Corner {
  int crossing = 0;
  int k = 0;
  auto operator<=>(const Corner&) const = default;
};

/// A face of one piece of the diagram, viewed on the sphere.
struct Face {
  int id = 0;
  int piece = 0;
  std::vector<Corner> corners;  // counterclockwise walk order
  std::vector<int> edges;       // boundary edges, sorted
  bool is_unbounded = false;    // outer face of its piece
  int circle_side = -1;         // 0 = inside, 1 = outside of a lone circle
};

enum class Shade { unshaded, shaded };

/// A complementary region of the whole diagram in the plane: the union of
/// faces glued together by nesting (the outer faces of all root pieces form U0).
struct Region {
  int id = 0;
  Shade shade = Shade::unshaded;
  std::string name;          // U0..Un for unshaded; V1..Vs for shaded
  std::vector<int> faces;
  int main_face = -1;        // the face that is not the outer face of a nested piece
  int min_edge = 0;
  int sign = 0;              // +1 / -1 for consistently labelled shaded regions
  LaurentPoly alpha;         // abelian image, a monomial in t_1..t_mu
};

struct ShadeOptions {
  std::optional<int> outer_face;  // override the unbounded face of the piece containing it
};

/// Faces of every piece. Bounded faces are walked counterclockwise; the outer
/// face choice is recorded separately by shade().
std::vector<Face> faces(const LinkDiagram& d);

/// Checkerboard shading of a diagram together with the region structure.
///
/// Regions are ordered U0, U1..Un (by smallest incident edge label), then the
/// shaded regions (same order).
class Shading {
 public:
  Shading(const LinkDiagram& d, std::vector<Face> faces, const ShadeOptions& opts = {});

  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Region>& regions() const { return regions_; }
  int num_regions() const { return static_cast<int>(regions_.size()); }
  int n() const { return n_; }
  int num_shaded() const { return num_regions() - n_ - 1; }
  bool is_shaded(int region) const { return regions_[region].shade == Shade::shaded; }

  int region_of_face(int face) const { return region_of_face_[face]; }
  int face_at(Corner c) const { return face_of_dart_[position(c.crossing, c.k)]; }
  int region_at(Corner c) const { return region_of_face_[face_at(c)]; }
  int outer_face(int piece) const { return outer_face_[piece]; }
  /// Regions on either side of an oriented edge.
  int left_region(int edge) const { return left_region_[edge]; }
  int right_region(int edge) const { return right_region_[edge]; }

  int eta(int crossing) const { return eta_[crossing]; }
  int num_crossings() const { return static_cast<int>(eta_.size()); }
  bool special() const { return special_; }
  /// First shaded region whose arcs disagree on the side, or -1.
  int inconsistent_region() const { return inconsistent_region_; }
  /// Piece nesting parent (-1 for roots).
  int parent_piece(int piece) const { return parent_piece_[piece]; }
  std::size_t num_vars() const { return num_vars_; }

 private:
  void choose_outer_faces(const LinkDiagram& d, const ShadeOptions& opts);
  void colour(const LinkDiagram& d);
  void build_regions(const LinkDiagram& d);
  void compute_alpha(const LinkDiagram& d);

  std::vector<Face> faces_;
  std::vector<int> face_of_dart_;
  std::vector<int> outer_face_;
  std::vector<int> parent_piece_;
  std::vector<Shade> face_shade_;
  std::vector<int> region_of_face_;
  std::vector<Region> regions_;
  std::vector<int> left_region_, right_region_;
  std::vector<int> eta_;
  int n_ = 0;
  bool special_ = true;
  int inconsistent_region_ = -1;
  std::size_t num_vars_ = 1;
};

Shading shade(const LinkDiagram& d, const ShadeOptions& opts = {});

/// +1 when the shaded corners are 1 and 3, -1 when they are 0 and 2.
inline int goeritz_index(const Shading& s, int crossing) { return s.eta(crossing); }

inline bool is_split(const LinkDiagram& d) { return d.num_pieces() > 1; }
inline bool is_special(const Shading& s) { return s.special(); }

/// Abelian image of every region generator, indexed by region id.
std::vector<LaurentPoly> alpha_map(const Shading& s);

}  // namespace dehnkit
