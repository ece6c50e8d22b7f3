#include "dehnkit/checkerboard.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <tuple>

namespace dehnkit {

CheckerboardGraph::CheckerboardGraph(const LinkDiagram& d, const Shading& s, std::uint64_t tree_seed) {
  const int nr = s.num_regions();
  for (const auto& r : s.regions()) names_.push_back(r.name);
  for (const auto& r : s.regions())
    if (r.shade == Shade::shaded) vertices_.push_back(r.id);

  std::vector<std::vector<int>> incident(static_cast<std::size_t>(nr));
  for (int x = 0; x < d.num_crossings(); ++x) {
    GammaEdge e;
    e.crossing = x;
    e.eta = s.eta(x);
    e.k = e.eta == 1 ? 1 : 0;
    e.a = s.region_at({x, e.k});
    e.b = s.region_at({x, e.k + 2});
    edges_.push_back(e);
    incident[e.a].push_back(x);
    if (e.b != e.a) incident[e.b].push_back(x);
  }

  adjacent_outer_.assign(static_cast<std::size_t>(nr), 0);
  for (int e = 0; e < d.num_edges(); ++e) {
    if (s.left_region(e) == 0) adjacent_outer_[s.right_region(e)] = 1;
    if (s.right_region(e) == 0) adjacent_outer_[s.left_region(e)] = 1;
  }

  auto base_key = [&](int r) {
    int sign_rank = s.special() ? (s.regions()[r].sign == 1 ? 0 : 1) : 0;
    return std::make_tuple(sign_rank, adjacent_outer_[r] ? 0 : 1, r);
  };

  // Connected components of Gamma.
  component_of_.assign(static_cast<std::size_t>(nr), -1);
  std::vector<std::vector<int>> comps;
  for (int v : vertices_) {
    if (component_of_[v] >= 0) continue;
    int id = static_cast<int>(comps.size());
    std::vector<int> members{v};
    component_of_[v] = id;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int x : incident[members[i]]) {
        int w = edges_[x].a == members[i] ? edges_[x].b : edges_[x].a;
        if (component_of_[w] < 0) {
          component_of_[w] = id;
          members.push_back(w);
        }
      }
    std::sort(members.begin(), members.end());
    comps.push_back(std::move(members));
  }
  std::vector<int> bases;
  for (const auto& c : comps)
    bases.push_back(*std::min_element(c.begin(), c.end(),
                                      [&](int a, int b) { return base_key(a) < base_key(b); }));
  std::vector<int> order(comps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return base_key(bases[a]) < base_key(bases[b]); });
  for (int idx : order) {
    for (int v : comps[idx]) component_of_[v] = static_cast<int>(components_.size());
    components_.push_back(comps[idx]);
    base_.push_back(bases[idx]);
  }

  // Spanning trees by BFS, neighbours in crossing order unless shuffled.
  if (tree_seed != 0) {
    std::mt19937_64 rng(tree_seed);
    for (auto& inc : incident) std::shuffle(inc.begin(), inc.end(), rng);
  }
  depth_.assign(static_cast<std::size_t>(nr), -1);
  parent_.assign(static_cast<std::size_t>(nr), -1);
  parent_step_.assign(static_cast<std::size_t>(nr), Step{});
  for (int b : base_) {
    depth_[b] = 0;
    std::deque<int> queue{b};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int x : incident[v]) {
        const auto& e = edges_[x];
        if (e.a == e.b) continue;
        int w = e.a == v ? e.b : e.a;
        if (depth_[w] >= 0) continue;
        depth_[w] = depth_[v] + 1;
        parent_[w] = v;
        parent_step_[w] = Step{x, e.a == v ? e.k : e.k + 2};
        tree_edges_.emplace_back(x, w);
        queue.push_back(w);
      }
    }
  }
}

std::vector<Step> CheckerboardGraph::tree_path(int region) const {
  std::vector<Step> path;
  for (int v = region; parent_[v] >= 0; v = parent_[v]) path.push_back(parent_step_[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::string CheckerboardGraph::generator_name(int region) const {
  for (int l = 0; l < beta(); ++l)
    if (base_[l] == region) return "S" + std::to_string(l);
  return names_[region];
}

CheckerboardGraph checkerboard_graph(const LinkDiagram& d, const Shading& s) { return CheckerboardGraph(d, s); }

}  // namespace dehnkit
