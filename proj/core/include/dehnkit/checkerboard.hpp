#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dehnkit/diagram.hpp"

namespace dehnkit {

/// One edge of the checkerboard graph: the crossing joining the shaded
/// regions at corners k and k+2.
struct GammaEdge {
  int crossing = 0;
  int k = 0;
  int a = 0;  // region at corner k
  int b = 0;  // region at corner k+2
  int eta = 1;
};

/// Passage through a crossing from the shaded corner `from` to corner from+2.
struct Step {
  int crossing = 0;
  int from = 0;
  bool operator==(const Step&) const = default;
};

class CheckerboardGraph {
 public:
  /// A nonzero tree_seed shuffles the neighbour order of the spanning-tree search.
  CheckerboardGraph(const LinkDiagram& d, const Shading& s, std::uint64_t tree_seed = 0);

  /// Shaded region ids in region order.
  const std::vector<int>& vertices() const { return vertices_; }
  /// Indexed by crossing.
  const std::vector<GammaEdge>& edges() const { return edges_; }
  int beta() const { return static_cast<int>(components_.size()); }
  /// Vertices of each component; component 0 supplies S0.
  const std::vector<std::vector<int>>& components() const { return components_; }
  int component_of(int region) const { return component_of_[region]; }
  int base(int lambda) const { return base_[lambda]; }
  int depth(int region) const { return depth_[region]; }
  bool adjacent_to_outer(int region) const { return adjacent_outer_[region]; }
  /// Tree edges, as (crossing, child region) pairs in BFS order.
  const std::vector<std::pair<int, int>>& tree_edges() const { return tree_edges_; }

  /// Steps along the spanning tree from the component's base to `region`.
  std::vector<Step> tree_path(int region) const;
  /// S0..S_{beta-1} for base vertices, the region name otherwise.
  std::string generator_name(int region) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> vertices_;
  std::vector<GammaEdge> edges_;
  std::vector<std::vector<int>> components_;
  std::vector<int> component_of_;
  std::vector<int> base_;
  std::vector<int> depth_;
  std::vector<Step> parent_step_;
  std::vector<int> parent_;
  std::vector<char> adjacent_outer_;
  std::vector<std::pair<int, int>> tree_edges_;
};

CheckerboardGraph checkerboard_graph(const LinkDiagram& d, const Shading& s);

/// Region on the far side of a step.
inline int step_target(const Shading& s, const Step& st) { return s.region_at({st.crossing, (st.from + 2) % 4}); }
inline int step_source(const Shading& s, const Step& st) { return s.region_at({st.crossing, st.from % 4}); }

}  // namespace dehnkit
