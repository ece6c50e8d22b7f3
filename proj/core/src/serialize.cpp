#include "dehnkit/serialize.hpp"

#include <cctype>
#include <sstream>

namespace dehnkit {

namespace {

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<long>());
}

Json tags_json(const std::vector<std::string>& tags) { return tags.empty() ? Json::array() : Json(tags); }

std::string latex_name(const std::string& name) {
  std::size_t i = 0;
  while (i < name.size() && !std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
  if (i == 0 || i == name.size()) return name;
  return name.substr(0, i) + "_{" + name.substr(i) + "}";
}

}  // namespace

Json to_json(const LinkDiagram& d) {
  Json j;
  j["pd"] = d.to_pd();
  Json xs = Json::array();
  for (const auto& x : d.crossings()) xs.push_back({x[0] + 1, x[1] + 1, x[2] + 1, x[3] + 1});
  j["crossings"] = xs;
  j["circles"] = d.num_circles();
  Json nest = Json::array();
  for (const auto& n : d.nesting()) nest.push_back({{"piece", n.piece}, {"face", n.face}});
  j["nesting"] = nest;
  Json comps = Json::array();
  for (const auto& c : d.components()) {
    Json e = Json::array();
    for (int x : c) e.push_back(x + 1);
    comps.push_back(e);
  }
  j["components"] = comps;
  Json pieces = Json::array();
  for (const auto& p : d.pieces()) pieces.push_back({{"crossings", p.crossings}, {"circle", p.circle}});
  j["pieces"] = pieces;
  Json signs = Json::array();
  for (int x = 0; x < d.num_crossings(); ++x) signs.push_back(d.crossing_sign(x));
  j["crossing_signs"] = signs;
  return j;
}

Json to_json(const Face& f) {
  Json corners = Json::array();
  for (const auto& c : f.corners) corners.push_back({c.crossing, c.k});
  Json edges = Json::array();
  for (int e : f.edges) edges.push_back(e + 1);
  Json j;
  j["id"] = f.id;
  j["piece"] = f.piece;
  j["corners"] = corners;
  j["edges"] = edges;
  j["unbounded"] = f.is_unbounded;
  if (f.circle_side >= 0) j["circle_side"] = f.circle_side == 0 ? "inside" : "outside";
  return j;
}

Json to_json(const Shading& s) {
  Json j;
  Json faces = Json::array();
  for (const auto& f : s.faces()) {
    Json fj = to_json(f);
    fj["region"] = s.regions()[s.region_of_face(f.id)].name;
    faces.push_back(fj);
  }
  j["faces"] = faces;
  Json regions = Json::array();
  for (const auto& r : s.regions()) {
    Json rj;
    rj["id"] = r.id;
    rj["name"] = r.name;
    rj["shaded"] = r.shade == Shade::shaded;
    rj["faces"] = r.faces;
    rj["main_face"] = r.main_face;
    rj["min_edge"] = r.min_edge + 1;
    if (r.shade == Shade::shaded) rj["sign"] = r.sign;
    rj["alpha"] = r.alpha.to_string();
    regions.push_back(rj);
  }
  j["regions"] = regions;
  j["n"] = s.n();
  j["num_shaded"] = s.num_shaded();
  Json eta = Json::array();
  for (int x = 0; x < s.num_crossings(); ++x) eta.push_back(s.eta(x));
  j["eta"] = eta;
  j["special"] = s.special();
  if (s.inconsistent_region() >= 0) j["inconsistent_region"] = s.regions()[s.inconsistent_region()].name;
  return j;
}

Json to_json(const CheckerboardGraph& g, const Shading& s) {
  Json j;
  Json verts = Json::array();
  for (int v : g.vertices()) verts.push_back(s.regions()[v].name);
  j["vertices"] = verts;
  Json edges = Json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"crossing", e.crossing},
                     {"a", s.regions()[e.a].name},
                     {"b", s.regions()[e.b].name},
                     {"eta", e.eta}});
  j["edges"] = edges;
  j["beta"] = g.beta();
  Json comps = Json::array();
  for (int l = 0; l < g.beta(); ++l) {
    Json members = Json::array();
    for (int v : g.components()[l]) members.push_back(s.regions()[v].name);
    comps.push_back({{"base", s.regions()[g.base(l)].name}, {"name", g.generator_name(g.base(l))}, {"vertices", members}});
  }
  j["components"] = comps;
  Json tree = Json::array();
  for (const auto& [x, child] : g.tree_edges()) tree.push_back({{"crossing", x}, {"child", s.regions()[child].name}});
  j["tree"] = tree;
  return j;
}

Json to_json(const Presentation& p) {
  Json j;
  j["generators"] = p.names();
  Json rels = Json::array();
  auto names = p.names();
  for (const auto& r : p.relators) rels.push_back({{"tag", r.tag}, {"word", r.word.to_string(names)}});
  j["relators"] = rels;
  j["text"] = p.to_text();
  return j;
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(i, c)));
    rows.push_back(row);
  }
  return {{"rows", tags_json(m.row_tags)}, {"cols", tags_json(m.col_tags)}, {"entries", rows}};
}

Json to_json(const LaurentMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).to_string());
    rows.push_back(row);
  }
  return {{"rows", tags_json(m.row_tags)}, {"cols", tags_json(m.col_tags)}, {"entries", rows}};
}

LinkDiagram diagram_from_json(const Json& j) {
  if (j.is_string()) return parse_pd(j.get<std::string>());
  if (j.is_object() && j.contains("pd") && j["pd"].is_string()) return parse_pd(j["pd"].get<std::string>());
  throw ParseError("diagram JSON needs a \"pd\" string", 0);
}

ShadeOptions shade_options_from_json(const Json& j) {
  ShadeOptions o;
  if (j.is_object() && j.contains("outer_face") && !j["outer_face"].is_null()) o.outer_face = j["outer_face"].get<int>();
  return o;
}

IntMatrix int_matrix_from_json(const Json& j) {
  const Json& rows = j.is_object() ? j.at("entries") : j;
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols, Integer(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("matrix JSON: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = integer_from_json(rows[i][c]);
  }
  if (j.is_object()) {
    for (const auto& t : j.value("rows", Json::array())) m.row_tags.push_back(t.get<std::string>());
    for (const auto& t : j.value("cols", Json::array())) m.col_tags.push_back(t.get<std::string>());
  }
  return m;
}

std::string presentation_to_latex(const Presentation& p) {
  auto names = p.names();
  std::ostringstream out;
  out << "\\langle ";
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? ", " : "") << latex_name(names[i]);
  out << " \\mid ";
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    out << (r ? ",\\ " : "");
    const auto& ls = p.relators[r].word.letters();
    if (ls.empty()) out << "1";
    for (const auto& l : ls) {
      std::string g = latex_name(names[l.gen.value]);
      out << (l.exp > 0 ? g : "\\overline{" + g + "}");
    }
  }
  out << " \\rangle";
  return out.str();
}

}  // namespace dehnkit
