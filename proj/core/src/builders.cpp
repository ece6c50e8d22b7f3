#include "dehnkit/builders.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace dehnkit {

PlaneGraph PlaneGraph::multi_edge(int multiplicity) {
  if (multiplicity < 1) throw std::invalid_argument("multi_edge: need at least one edge");
  PlaneGraph g;
  g.rot_.resize(2);
  for (int i = 0; i < multiplicity; ++i) g.add_edge_raw(0, 1);
  // Edges leave vertex 0 counterclockwise in order and arrive at vertex 1 in reverse.
  std::reverse(g.rot_[1].begin(), g.rot_[1].end());
  return g;
}

int PlaneGraph::add_edge_raw(int u, int v) {
  int e = num_edges();
  origin_.push_back(u);
  origin_.push_back(v);
  rot_[u].push_back(2 * e);
  rot_[v].push_back(2 * e + 1);
  return e;
}

int PlaneGraph::next_ccw(int dart) const {
  const auto& r = rot_[origin_[dart]];
  auto it = std::find(r.begin(), r.end(), dart);
  return ++it == r.end() ? r.front() : *it;
}

int PlaneGraph::prev_ccw(int dart) const {
  const auto& r = rot_[origin_[dart]];
  auto it = std::find(r.begin(), r.end(), dart);
  return it == r.begin() ? r.back() : *--it;
}

std::vector<std::vector<int>> PlaneGraph::faces() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(origin_.size(), 0);
  for (int d = 0; d < static_cast<int>(origin_.size()); ++d) {
    if (seen[d]) continue;
    std::vector<int> face;
    for (int x = d; !seen[x]; x = prev_ccw(twin(x))) {
      seen[x] = 1;
      face.push_back(x);
    }
    out.push_back(std::move(face));
  }
  return out;
}

int PlaneGraph::add_chord(int out_a, int out_b) {
  int a = origin_[out_a], b = origin_[out_b];
  int e = num_edges();
  origin_.push_back(a);
  origin_.push_back(b);
  auto insert_after = [&](int v, int after, int dart) {
    auto& r = rot_[v];
    r.insert(std::find(r.begin(), r.end(), after) + 1, dart);
  };
  insert_after(a, out_a, 2 * e);
  insert_after(b, out_b, 2 * e + 1);
  return e;
}

int PlaneGraph::subdivide(int e) {
  int w = num_vertices();
  rot_.emplace_back();
  int v = origin_[2 * e + 1];
  int f = num_edges();
  origin_.push_back(w);
  origin_.push_back(v);
  std::replace(rot_[v].begin(), rot_[v].end(), 2 * e + 1, 2 * f + 1);
  origin_[2 * e + 1] = w;
  rot_[w] = {2 * e + 1, 2 * f};
  return w;
}

LinkDiagram medial_diagram(const PlaneGraph& g, const std::vector<bool>& ne_sw_under, MedialOrientation orientation,
                           const std::vector<int>& part) {
  const int ne = g.num_edges();
  if (static_cast<int>(ne_sw_under.size()) != ne) throw std::invalid_argument("medial_diagram: one choice per edge");
  // Medial edge for each corner (v, d, next(d)), keyed by the dart d.
  std::vector<int> corner_after(2 * static_cast<std::size_t>(ne));
  int next_id = 0;
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int d : g.rotation()[v]) corner_after[d] = next_id++;
  auto corner_before = [&](int d) { return corner_after[g.prev_ccw(d)]; };

  // Slots [NE, NW, SW, SE] of the crossing on edge e.
  std::vector<std::array<int, 4>> slots(static_cast<std::size_t>(ne));
  for (int e = 0; e < ne; ++e) {
    int du = 2 * e, dv = 2 * e + 1;
    slots[e] = {corner_before(dv), corner_after[du], corner_before(du), corner_after[dv]};
  }
  // Endpoints of each medial edge as (crossing, slot): the d end and the next(d) end.
  struct End {
    int x, s;
  };
  std::vector<std::array<End, 2>> ends(static_cast<std::size_t>(next_id));
  for (int d = 0; d < 2 * ne; ++d) {
    int m = corner_after[d];
    int e = d / 2;
    ends[m][0] = {e, d % 2 == 0 ? 1 : 3};
    int dn = g.next_ccw(d);
    ends[m][1] = {dn / 2, dn % 2 == 0 ? 2 : 0};
  }
  // tail_end[m] = 0 if the medial edge runs from its d end to its next(d) end.
  std::vector<int> tail_end(static_cast<std::size_t>(next_id), -1);
  if (orientation == MedialOrientation::bipartite) {
    if (static_cast<int>(part.size()) != g.num_vertices()) throw std::invalid_argument("medial_diagram: need parts");
    for (int d = 0; d < 2 * ne; ++d) tail_end[corner_after[d]] = part[g.origin(d)] == 0 ? 0 : 1;
  } else {
    auto at = [&](int x, int s) {
      int m = slots[x][s];
      return m;
    };
    for (int m0 = 0; m0 < next_id; ++m0) {
      if (tail_end[m0] >= 0) continue;
      int m = m0, t = 0;
      while (tail_end[m] < 0) {
        tail_end[m] = t;
        End h = ends[m][1 - t];
        int s2 = (h.s + 2) % 4;
        int m2 = at(h.x, s2);
        // Which end of m2 sits at (h.x, s2)?
        t = (ends[m2][0].x == h.x && ends[m2][0].s == s2) ? 0 : 1;
        m = m2;
      }
    }
  }
  auto is_head = [&](int x, int s) {
    int m = slots[x][s];
    const End& h = ends[m][1 - tail_end[m]];
    return h.x == x && h.s == s;
  };
  std::vector<std::array<int, 4>> pd;
  for (int x = 0; x < ne; ++x) {
    int a = ne_sw_under[x] ? 0 : 1;
    int start = is_head(x, a) ? a : a + 2;
    if (!is_head(x, start) || is_head(x, (start + 2) % 4))
      throw std::logic_error("medial_diagram: strand orientation is inconsistent");
    pd.push_back({slots[x][start], slots[x][(start + 1) % 4], slots[x][(start + 2) % 4], slots[x][(start + 3) % 4]});
  }
  return LinkDiagram(std::move(pd), 0, {}, {});
}

LinkDiagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw std::invalid_argument("braid_closure: need a strand");
  std::vector<int> init(static_cast<std::size_t>(strands)), cur;
  int next_edge = 0;
  for (auto& e : init) e = next_edge++;
  cur = init;
  std::vector<std::array<int, 4>> raw;
  for (int g : word) {
    int i = std::abs(g) - 1;
    if (i < 0 || i + 1 >= strands) throw std::invalid_argument("braid_closure: generator out of range");
    int sw = cur[i], nw = cur[i + 1];
    int ne = next_edge++, se = next_edge++;
    if (g > 0)
      raw.push_back({sw, se, ne, nw});
    else
      raw.push_back({nw, sw, se, ne});
    cur[i] = se;
    cur[i + 1] = ne;
  }
  std::vector<int> relabel(static_cast<std::size_t>(next_edge));
  for (int e = 0; e < next_edge; ++e) relabel[e] = e;
  int circles = 0;
  for (int p = 0; p < strands; ++p) {
    if (cur[p] == init[p])
      ++circles;
    else
      relabel[cur[p]] = init[p];
  }
  // Compact labels so that crossing edges are 0..2c-1.
  std::vector<int> used;
  for (auto& x : raw)
    for (int& e : x) {
      e = relabel[e];
      used.push_back(e);
    }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto& x : raw)
    for (int& e : x) e = static_cast<int>(std::lower_bound(used.begin(), used.end(), e) - used.begin());
  std::vector<int> tokens;
  for (std::size_t i = 0; i < raw.size(); ++i) tokens.push_back(static_cast<int>(i));
  for (int i = 0; i < circles; ++i) tokens.push_back(-1);
  return LinkDiagram(std::move(raw), circles, std::move(tokens), {});
}

LinkDiagram pretzel(int p, int q, int r) {
  if (p < 1 || q < 1 || r < 1) throw std::invalid_argument("pretzel: twist counts must be positive");
  PlaneGraph g = PlaneGraph::multi_edge(3);
  for (int i = 1; i < p; ++i) g.subdivide(0);
  for (int i = 1; i < q; ++i) g.subdivide(1);
  for (int i = 1; i < r; ++i) g.subdivide(2);
  return medial_diagram(g, std::vector<bool>(static_cast<std::size_t>(g.num_edges()), true),
                        MedialOrientation::traced);
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Grow a plane graph by chords and subdivisions until it has `edges` edges.
PlaneGraph grow(std::mt19937_64& rng, int edges, bool bipartite, std::vector<int>& part) {
  PlaneGraph g = PlaneGraph::multi_edge(bipartite ? 2 : 3);
  part = {0, 1};
  if (!bipartite) {
    // Start from a triangle-with-double-edge so odd cycles appear.
    int w = g.subdivide(0);
    part.push_back(0);
    (void)w;
  }
  int guard = 0;
  while (g.num_edges() < edges && ++guard < 100000) {
    if (uniform(rng, 0, 9) < 6) {
      auto fs = g.faces();
      const auto& f = fs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(fs.size()) - 1))];
      if (f.size() < 2) continue;
      int a = f[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(f.size()) - 1))];
      int b = f[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(f.size()) - 1))];
      int va = g.origin(a), vb = g.origin(b);
      if (va == vb) continue;
      if (bipartite && part[va] == part[vb]) continue;
      g.add_chord(a, b);
    } else {
      int e = uniform(rng, 0, g.num_edges() - 1);
      int u = g.origin(2 * e);
      int w = g.subdivide(e);
      part.push_back(1 - part[u]);
      if (bipartite) {
        int w2 = g.subdivide(e);
        part.push_back(1 - part[u]);
        part[w] = part[u];
        (void)w2;
        // Path is now u - w2 - w - v with parts u, !u, u, !u.
      }
    }
  }
  return g;
}

}  // namespace

LinkDiagram random_special_alternating(std::mt19937_64& rng, int crossings) {
  std::vector<int> part;
  PlaneGraph g = grow(rng, crossings, true, part);
  return medial_diagram(g, std::vector<bool>(static_cast<std::size_t>(g.num_edges()), true),
                        MedialOrientation::bipartite, part);
}

LinkDiagram random_alternating(std::mt19937_64& rng, int crossings) {
  std::vector<int> part;
  PlaneGraph g = grow(rng, crossings, false, part);
  return medial_diagram(g, std::vector<bool>(static_cast<std::size_t>(g.num_edges()), true),
                        MedialOrientation::traced);
}

LinkDiagram random_medial(std::mt19937_64& rng, int crossings) {
  std::vector<int> part;
  PlaneGraph g = grow(rng, crossings, false, part);
  std::vector<bool> under(static_cast<std::size_t>(g.num_edges()));
  for (std::size_t i = 0; i < under.size(); ++i) under[i] = uniform(rng, 0, 1) == 1;
  return medial_diagram(g, under, MedialOrientation::traced);
}

LinkDiagram random_braid(std::mt19937_64& rng, int strands, int length) {
  std::vector<int> word;
  for (int i = 0; i < length; ++i) word.push_back(uniform(rng, 1, strands - 1) * (uniform(rng, 0, 1) ? 1 : -1));
  for (int i = 1; i < strands; ++i)
    if (std::none_of(word.begin(), word.end(), [&](int g) { return std::abs(g) == i; }))
      word.push_back(uniform(rng, 0, 1) ? i : -i);
  return braid_closure(strands, word);
}

}  // namespace dehnkit
