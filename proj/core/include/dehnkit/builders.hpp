#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dehnkit/pd.hpp"

namespace dehnkit {

/// Connected plane multigraph stored as a rotation system. Dart 2e and 2e+1
/// are the two ends of edge e; rot[v] lists the darts leaving v counterclockwise.
class PlaneGraph {
 public:
  /// Two vertices joined by `multiplicity` parallel edges.
  static PlaneGraph multi_edge(int multiplicity);

  int num_vertices() const { return static_cast<int>(rot_.size()); }
  int num_edges() const { return static_cast<int>(origin_.size() / 2); }
  const std::vector<std::vector<int>>& rotation() const { return rot_; }
  int origin(int dart) const { return origin_[dart]; }
  static int twin(int dart) { return dart ^ 1; }
  int next_ccw(int dart) const;
  int prev_ccw(int dart) const;

  /// Faces as dart cycles; each dart's face is on its left.
  std::vector<std::vector<int>> faces() const;

  /// Insert an edge across the face of darts `out_a` and `out_b`, at the
  /// corners where they leave their origins. Returns the new edge.
  int add_chord(int out_a, int out_b);
  /// Split edge e by a new vertex. Returns the vertex.
  int subdivide(int e);

 private:
  std::vector<std::vector<int>> rot_;
  std::vector<int> origin_;
  int add_edge_raw(int u, int v);
};

enum class MedialOrientation {
  bipartite,  // vertices of part 0 on the left of their boundary arcs
  traced,     // orient each component along its first edge
};

/// Link diagram whose universe is the medial graph of g. `ne_sw_under[e]`
/// chooses which strand passes under at the crossing of edge e; true gives
/// Goeritz index +1 when the vertices of g are the shaded regions.
LinkDiagram medial_diagram(const PlaneGraph& g, const std::vector<bool>& ne_sw_under,
                           MedialOrientation orientation, const std::vector<int>& part = {});

/// Closure of a braid word: generator i (1-based) for sigma_i, -i for its inverse.
LinkDiagram braid_closure(int strands, const std::vector<int>& word);

/// Pretzel link K(p, q, r) as the alternating medial of a subdivided theta graph.
LinkDiagram pretzel(int p, int q, int r);

/// Random special alternating diagram with about `crossings` crossings.
LinkDiagram random_special_alternating(std::mt19937_64& rng, int crossings);
/// Random alternating diagram from a non-bipartite plane graph.
LinkDiagram random_alternating(std::mt19937_64& rng, int crossings);
/// Random medial diagram with random crossing choices (usually non-alternating).
LinkDiagram random_medial(std::mt19937_64& rng, int crossings);
/// Random connected braid closure with mixed signs.
LinkDiagram random_braid(std::mt19937_64& rng, int strands, int length);

}  // namespace dehnkit
