#include "dehnkit/diagram.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <tuple>

namespace dehnkit {

std::vector<Face> faces(const LinkDiagram& d) {
  std::vector<Face> out;
  std::vector<char> used(static_cast<std::size_t>(4 * d.num_crossings()), 0);
  for (int pc = 0; pc < d.num_pieces(); ++pc) {
    const auto& piece = d.pieces()[pc];
    if (piece.circle >= 0) {
      for (int side = 0; side < 2; ++side) {
        Face f;
        f.id = static_cast<int>(out.size());
        f.piece = pc;
        f.edges = {d.circle_edge(piece.circle)};
        f.circle_side = side;
        out.push_back(std::move(f));
      }
      continue;
    }
    std::size_t first = out.size();
    for (int x : piece.crossings) {
      for (int s = 0; s < 4; ++s) {
        Position start = position(x, s);
        if (used[start]) continue;
        Face f;
        f.id = static_cast<int>(out.size());
        f.piece = pc;
        Position p = start;
        do {
          if (used[p]) throw DiagramError("non-realizable rotation system: face traversal does not close");
          used[p] = 1;
          f.corners.push_back({crossing_of(p), slot_of(p)});
          f.edges.push_back(d.edge_at(p));
          Position q = d.partner(p);
          p = position(crossing_of(q), slot_of(q) + 3);
        } while (p != start);
        std::sort(f.edges.begin(), f.edges.end());
        f.edges.erase(std::unique(f.edges.begin(), f.edges.end()), f.edges.end());
        out.push_back(std::move(f));
      }
    }
    std::size_t count = out.size() - first;
    if (count != piece.crossings.size() + 2)
      throw DiagramError("non-realizable rotation system: " + std::to_string(count) + " faces for " +
                         std::to_string(piece.crossings.size()) + " crossings (expected c + 2)");
  }
  return out;
}

Shading::Shading(const LinkDiagram& d, std::vector<Face> fs, const ShadeOptions& opts) : faces_(std::move(fs)) {
  face_of_dart_.assign(static_cast<std::size_t>(4 * d.num_crossings()), -1);
  for (const auto& f : faces_)
    for (const auto& c : f.corners) face_of_dart_[position(c.crossing, c.k)] = f.id;

  parent_piece_.assign(static_cast<std::size_t>(d.num_pieces()), -1);
  for (const auto& nest : d.nesting()) {
    if (nest.face < 0 || nest.face >= static_cast<int>(faces_.size()))
      throw DiagramError("IN(" + std::to_string(nest.piece) + "," + std::to_string(nest.face) + "): no such face");
    if (faces_[nest.face].piece == nest.piece)
      throw DiagramError("IN(" + std::to_string(nest.piece) + "," + std::to_string(nest.face) +
                         "): a piece cannot sit inside its own face");
    if (parent_piece_[nest.piece] >= 0)
      throw DiagramError("piece " + std::to_string(nest.piece) + " is nested twice");
    parent_piece_[nest.piece] = faces_[nest.face].piece;
  }
  for (int p = 0; p < d.num_pieces(); ++p) {
    int q = p, steps = 0;
    while (q >= 0) {
      q = parent_piece_[q];
      if (++steps > d.num_pieces()) throw DiagramError("nesting directives form a cycle");
    }
  }

  choose_outer_faces(d, opts);
  colour(d);
  build_regions(d);

  eta_.resize(static_cast<std::size_t>(d.num_crossings()));
  for (int x = 0; x < d.num_crossings(); ++x) eta_[x] = face_shade_[face_at({x, 1})] == Shade::shaded ? 1 : -1;

  compute_alpha(d);
}

namespace {

// Faces on the left and right of every edge.
std::pair<int, int> edge_sides(const LinkDiagram& d, const std::vector<Face>& faces,
                               const std::vector<int>& face_of_dart, int e) {
  const Edge& edge = d.edges()[e];
  if (edge.circle) {
    int left = -1, right = -1;
    for (const auto& f : faces)
      if (f.circle_side >= 0 && f.edges[0] == e) (f.circle_side == 0 ? left : right) = f.id;
    return {left, right};
  }
  return {face_of_dart[edge.tail], face_of_dart[edge.head]};
}

// 2-colour the faces of one piece; class of the first face is 0.
std::map<int, int> face_classes(const LinkDiagram& d, const std::vector<Face>& faces,
                                const std::vector<int>& face_of_dart, int piece) {
  std::map<int, std::vector<int>> adj;
  for (int e : d.pieces()[piece].edges) {
    auto [l, r] = edge_sides(d, faces, face_of_dart, e);
    adj[l].push_back(r);
    adj[r].push_back(l);
  }
  std::map<int, int> cls;
  std::deque<int> queue;
  int first = adj.begin()->first;
  cls[first] = 0;
  queue.push_back(first);
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (int g : adj[f]) {
      auto [it, inserted] = cls.try_emplace(g, 1 - cls[f]);
      if (inserted)
        queue.push_back(g);
      else if (it->second == cls[f])
        throw DiagramError("face adjacency is not bipartite; diagram is corrupted");
    }
  }
  return cls;
}

}  // namespace

void Shading::choose_outer_faces(const LinkDiagram& d, const ShadeOptions& opts) {
  if (opts.outer_face && (*opts.outer_face < 0 || *opts.outer_face >= static_cast<int>(faces_.size())))
    throw DiagramError("--outer " + std::to_string(*opts.outer_face) + ": no such face");
  outer_face_.assign(static_cast<std::size_t>(d.num_pieces()), -1);
  for (int pc = 0; pc < d.num_pieces(); ++pc) {
    const auto& piece = d.pieces()[pc];
    std::vector<int> candidates;
    for (const auto& f : faces_)
      if (f.piece == pc) candidates.push_back(f.id);
    if (opts.outer_face && faces_[*opts.outer_face].piece == pc) {
      outer_face_[pc] = *opts.outer_face;
    } else if (piece.circle >= 0) {
      outer_face_[pc] = candidates[1];
    } else if (parent_piece_[pc] >= 0) {
      outer_face_[pc] = *std::min_element(candidates.begin(), candidates.end(), [&](int a, int b) {
        return std::make_tuple(-static_cast<long>(faces_[a].corners.size()), a) <
               std::make_tuple(-static_cast<long>(faces_[b].corners.size()), b);
      });
    } else {
      // Rank candidate outer faces: keep the generator count within the arc
      // count, prefer a special shading, then the smaller unshaded class.
      auto cls = face_classes(d, faces_, face_of_dart_, pc);
      std::array<int, 2> count{0, 0};
      std::array<bool, 2> special{true, true};
      for (auto [f, c] : cls) ++count[c];
      // A class can be shaded specially iff each of its faces lies on one side of all its arcs.
      std::map<int, int> side_of;
      for (int e : piece.edges) {
        auto [l, r] = edge_sides(d, faces_, face_of_dart_, e);
        for (auto [f, side] : {std::pair{l, 1}, std::pair{r, -1}}) {
          auto [it, inserted] = side_of.try_emplace(f, side);
          if (!inserted && it->second != side) special[cls[f]] = false;
        }
      }
      int arcs = static_cast<int>(piece.crossings.size());
      for (const auto& comp : d.components()) {
        if (d.piece_of_edge(comp.front()) != pc) continue;
        bool has_under = std::any_of(comp.begin(), comp.end(),
                                     [&](int e) { return slot_of(d.edges()[e].head) == 0; });
        if (!has_under) ++arcs;
      }
      auto key = [&](int f) {
        int c = cls[f];
        return std::make_tuple(count[c] <= arcs ? 0 : 1, special[1 - c] ? 0 : 1, count[c],
                               -static_cast<long>(faces_[f].corners.size()), f);
      };
      outer_face_[pc] = *std::min_element(candidates.begin(), candidates.end(),
                                          [&](int a, int b) { return key(a) < key(b); });
    }
    faces_[outer_face_[pc]].is_unbounded = true;
  }
}

void Shading::colour(const LinkDiagram& d) {
  face_shade_.assign(faces_.size(), Shade::unshaded);
  std::vector<int> order;
  for (int pc = 0; pc < d.num_pieces(); ++pc)
    if (parent_piece_[pc] < 0) order.push_back(pc);
  std::vector<int> host(static_cast<std::size_t>(d.num_pieces()), -1);
  for (const auto& nest : d.nesting()) host[nest.piece] = nest.face;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int pc = order[i];
    Shade outer = host[pc] < 0 ? Shade::unshaded : face_shade_[host[pc]];
    if (d.pieces()[pc].circle >= 0) {
      face_shade_[outer_face_[pc]] = outer;
      for (const auto& f : faces_)
        if (f.piece == pc && f.id != outer_face_[pc])
          face_shade_[f.id] = outer == Shade::shaded ? Shade::unshaded : Shade::shaded;
    } else {
      auto cls = face_classes(d, faces_, face_of_dart_, pc);
      int outer_cls = cls[outer_face_[pc]];
      for (auto [f, c] : cls)
        face_shade_[f] = (c == outer_cls) == (outer == Shade::unshaded) ? Shade::unshaded : Shade::shaded;
    }
    for (int child = 0; child < d.num_pieces(); ++child)
      if (parent_piece_[child] == pc) order.push_back(child);
  }
}

void Shading::build_regions(const LinkDiagram& d) {
  const int nf = static_cast<int>(faces_.size());
  std::vector<int> parent(static_cast<std::size_t>(nf));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int root_outer = -1;
  for (int pc = 0; pc < d.num_pieces(); ++pc) {
    if (parent_piece_[pc] >= 0) continue;
    if (root_outer < 0)
      root_outer = outer_face_[pc];
    else
      parent[find(outer_face_[pc])] = find(root_outer);
  }
  for (const auto& nest : d.nesting()) parent[find(outer_face_[nest.piece])] = find(nest.face);

  std::map<int, std::vector<int>> groups;
  for (int f = 0; f < nf; ++f) groups[find(f)].push_back(f);

  struct Draft {
    Shade shade;
    int min_edge;
    std::vector<int> faces;
    bool is_u0;
  };
  std::vector<Draft> drafts;
  for (auto& [root, members] : groups) {
    Draft dr{face_shade_[members.front()], 1 << 30, members, root == find(root_outer)};
    for (int f : members) {
      if (face_shade_[f] != dr.shade) throw DiagramError("nested faces disagree on shading");
      dr.min_edge = std::min(dr.min_edge, faces_[f].edges.front());
    }
    drafts.push_back(std::move(dr));
  }
  std::sort(drafts.begin(), drafts.end(), [](const Draft& a, const Draft& b) {
    return std::make_tuple(!a.is_u0, a.shade == Shade::shaded, a.min_edge) <
           std::make_tuple(!b.is_u0, b.shade == Shade::shaded, b.min_edge);
  });

  region_of_face_.assign(faces_.size(), -1);
  regions_.clear();
  n_ = 0;
  int shaded_count = 0;
  for (auto& dr : drafts) {
    Region r;
    r.id = static_cast<int>(regions_.size());
    r.shade = dr.shade;
    r.faces = dr.faces;
    r.min_edge = dr.min_edge;
    if (r.shade == Shade::unshaded) {
      if (r.id != 0) ++n_;
      r.name = "U" + std::to_string(r.id);
    } else {
      r.name = "V" + std::to_string(++shaded_count);
    }
    if (!dr.is_u0) {
      for (int f : r.faces)
        if (!faces_[f].is_unbounded) {
          if (r.main_face >= 0) throw DiagramError("region has two inner faces; nesting is inconsistent");
          r.main_face = f;
        }
    }
    for (int f : r.faces) region_of_face_[f] = r.id;
    regions_.push_back(std::move(r));
  }
  if (regions_.front().shade != Shade::unshaded) throw DiagramError("unbounded region must be unshaded");

  left_region_.assign(static_cast<std::size_t>(d.num_edges()), -1);
  right_region_.assign(static_cast<std::size_t>(d.num_edges()), -1);
  for (int e = 0; e < d.num_edges(); ++e) {
    auto [l, r] = edge_sides(d, faces_, face_of_dart_, e);
    left_region_[e] = region_of_face_[l];
    right_region_[e] = region_of_face_[r];
  }
}

void Shading::compute_alpha(const LinkDiagram& d) {
  num_vars_ = static_cast<std::size_t>(std::max(1, d.num_components()));
  struct Arc {
    int to;
    std::int64_t power;
    int var;
  };
  std::vector<std::vector<Arc>> adj(regions_.size());
  for (int e = 0; e < d.num_edges(); ++e) {
    int comp = d.edges()[e].component;
    adj[right_region_[e]].push_back({left_region_[e], 1, comp});
    adj[left_region_[e]].push_back({right_region_[e], -1, comp});
  }
  std::vector<char> seen(regions_.size(), 0);
  regions_[0].alpha = LaurentPoly::constant(num_vars_, 1);
  seen[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int r = queue.front();
    queue.pop_front();
    for (const auto& a : adj[r]) {
      LaurentPoly value = regions_[r].alpha * LaurentPoly::variable(num_vars_, a.var, a.power);
      if (!seen[a.to]) {
        seen[a.to] = 1;
        regions_[a.to].alpha = value;
        queue.push_back(a.to);
      } else if (!(regions_[a.to].alpha == value)) {
        throw DiagramError("abelian labels disagree at region " + regions_[a.to].name + "; diagram is corrupted");
      }
    }
  }
  for (const auto& r : regions_)
    if (!seen[r.id]) throw DiagramError("region " + r.name + " is unreachable; nesting is incomplete");

  special_ = true;
  inconsistent_region_ = -1;
  for (auto& r : regions_) {
    if (r.shade != Shade::shaded) continue;
    bool left = false, right = false;
    for (int e = 0; e < d.num_edges(); ++e) {
      left = left || left_region_[e] == r.id;
      right = right || right_region_[e] == r.id;
    }
    r.sign = left && !right ? 1 : (right && !left ? -1 : 0);
    if (r.sign == 0 && special_) {
      special_ = false;
      inconsistent_region_ = r.id;
    }
  }
}

Shading shade(const LinkDiagram& d, const ShadeOptions& opts) { return Shading(d, faces(d), opts); }

std::vector<LaurentPoly> alpha_map(const Shading& s) {
  std::vector<LaurentPoly> out;
  out.reserve(s.regions().size());
  for (const auto& r : s.regions()) out.push_back(r.alpha);
  return out;
}

}  // namespace dehnkit
