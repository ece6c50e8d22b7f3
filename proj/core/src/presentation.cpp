#include "dehnkit/presentation.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace dehnkit {

namespace {

Letter letter(int region, int exp = 1) { return Letter{GenId{static_cast<std::uint32_t>(region)}, exp}; }

}  // namespace

std::vector<std::string> Presentation::names() const {
  std::vector<std::string> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.name);
  return out;
}

std::optional<GenId> Presentation::find(const std::string& name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == name) return GenId{static_cast<std::uint32_t>(i)};
  return std::nullopt;
}

std::vector<FreeWord> Presentation::reduced_relators() const {
  std::vector<FreeWord> out;
  out.reserve(relators.size());
  for (const auto& r : relators) out.push_back(reduce(r.word));
  return out;
}

void Presentation::validate() const {
  for (const auto& r : relators)
    for (const auto& l : r.word.letters())
      if (l.gen.value >= generators.size()) throw std::logic_error("relator " + r.tag + " uses an unknown generator");
}

std::string Presentation::to_text() const {
  auto n = names();
  std::ostringstream out;
  out << "< ";
  for (std::size_t i = 0; i < n.size(); ++i) out << (i ? ", " : "") << n[i];
  out << " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) out << (i ? ", " : "") << relators[i].word.to_string(n);
  out << " >";
  return out.str();
}

std::string Presentation::to_gap() const {
  std::ostringstream out;
  out << "F := FreeGroup(";
  for (std::size_t i = 0; i < generators.size(); ++i) out << (i ? ", " : "") << '"' << generators[i].name << '"';
  out << ");;\n";
  for (std::size_t i = 0; i < generators.size(); ++i) out << generators[i].name << " := F." << i + 1 << ";;\n";
  out << "G := F / [";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    out << (i ? ", " : "");
    const auto& ls = relators[i].word.letters();
    if (ls.empty()) out << "One(F)";
    for (std::size_t j = 0; j < ls.size(); ++j) {
      out << (j ? "*" : "") << generators[ls[j].gen.value].name;
      if (ls[j].exp != 1) out << "^" << ls[j].exp;
    }
  }
  out << "];;\n";
  return out.str();
}

Fraction step_fraction(const Shading& s, const Step& st) {
  int left = s.region_at({st.crossing, (st.from + 3) % 4});
  int right = s.region_at({st.crossing, (st.from + 1) % 4});
  return s.eta(st.crossing) == 1 ? Fraction{left, right} : Fraction{right, left};
}

FractionSequence fraction_sequence(const Shading& s, int base, std::vector<Step> steps) {
  FractionSequence seq;
  seq.base = base;
  int at = base;
  for (const auto& st : steps) {
    if (step_source(s, st) != at) throw std::invalid_argument("fraction_sequence: loop is not a connected walk from the base");
    at = step_target(s, st);
    seq.entries.push_back(step_fraction(s, st));
  }
  if (at != base) throw std::invalid_argument("fraction_sequence: loop does not return to the base");
  seq.steps = std::move(steps);
  return seq;
}

FreeWord return_value(const FractionSequence& seq) {
  const std::size_t L = seq.entries.size();
  FreeWord w;
  for (std::size_t i = L; i >= 1; --i) {
    const auto& f = seq.entries[i - 1];
    w.push_back((L - i) % 2 == 0 ? letter(f.num) : letter(f.den, -1));
  }
  w.push_back(letter(seq.base, L % 2 == 0 ? 1 : -1));
  for (std::size_t i = 1; i <= L; ++i) {
    const auto& f = seq.entries[i - 1];
    w.push_back((L - i) % 2 == 0 ? letter(f.den) : letter(f.num, -1));
  }
  return w;
}

FreeWord return_value_by_rewriting(const Shading& s, const std::vector<Step>& steps, int base) {
  FreeWord value = FreeWord::generator(GenId{static_cast<std::uint32_t>(base)});
  for (const auto& st : steps) {
    // Dehn relator read from corner from+2: X^e Y = 1, solve for X.
    int target = (st.from + 2) % 4;
    int e = target % 2 == 0 ? 1 : -1;
    FreeWord y;
    for (int j = 1; j < 4; ++j) {
      int corner = (target + j) % 4;
      int exp = corner % 2 == 0 ? 1 : -1;
      if (corner == st.from % 4)
        y.append(exp == 1 ? value : value.inverse());
      else
        y.push_back(letter(s.region_at({st.crossing, corner}), exp));
    }
    value = e == 1 ? y.inverse() : y;
  }
  return value;
}

FreeWord boundary_relator(const FractionSequence& seq) {
  FreeWord r = return_value(seq);
  r.push_back(letter(seq.base, -1));
  return r;
}

FractionSequence reversed(const FractionSequence& seq) {
  FractionSequence out;
  out.base = seq.base;
  for (auto it = seq.entries.rbegin(); it != seq.entries.rend(); ++it) out.entries.push_back({it->den, it->num});
  for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it) out.steps.push_back({it->crossing, (it->from + 2) % 4});
  return out;
}

FreeWord reverse_relator(const FreeWord& r) {
  const auto& ls = r.letters();
  if (ls.empty()) return r;
  if (ls.size() % 2 != 0 || ls.size() < 2) throw std::invalid_argument("reverse_relator: not a boundary relator");
  const std::size_t L = (ls.size() - 2) / 2;
  FractionSequence seq;
  seq.base = static_cast<int>(ls.back().gen.value);
  seq.entries.resize(L);
  for (std::size_t i = L; i >= 1; --i) {
    const Letter& l = ls[L - i];
    ((L - i) % 2 == 0 ? seq.entries[i - 1].num : seq.entries[i - 1].den) = static_cast<int>(l.gen.value);
  }
  for (std::size_t i = 1; i <= L; ++i) {
    const Letter& l = ls[L + i];
    ((L - i) % 2 == 0 ? seq.entries[i - 1].den : seq.entries[i - 1].num) = static_cast<int>(l.gen.value);
  }
  return boundary_relator(reversed(seq));
}

bool reverse_relator_consistent(const FreeWord& r, const FreeWord& r_star, bool odd) {
  return is_cyclic_permutation(odd ? r : r.inverse(), r_star);
}

std::vector<Step> face_loop(const Face& f) {
  std::vector<Step> loop;
  loop.reserve(f.corners.size());
  for (const auto& c : f.corners) loop.push_back({c.crossing, (c.k + 1) % 4});
  return loop;
}

std::vector<Step> based_loop(const Shading& s, const CheckerboardGraph& g, std::vector<Step> loop, int vertex) {
  if (!loop.empty()) {
    auto key = [&](std::size_t i) {
      int v = step_source(s, loop[i]);
      int sign_rank = s.special() && s.regions()[v].sign != 1 ? 1 : 0;
      return std::make_tuple(sign_rank, g.depth(v), i);
    };
    std::size_t best = 0;
    for (std::size_t i = 1; i < loop.size(); ++i)
      if (key(i) < key(best)) best = i;
    std::rotate(loop.begin(), loop.begin() + static_cast<std::ptrdiff_t>(best), loop.end());
    vertex = step_source(s, loop.front());
  }
  std::vector<Step> path = g.tree_path(vertex);
  std::vector<Step> out = path;
  out.insert(out.end(), loop.begin(), loop.end());
  for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back({it->crossing, (it->from + 2) % 4});
  return out;
}

namespace {

// Shaded region across a lone circle from the given face.
int circle_partner_region(const Shading& s, const Face& f) {
  for (const auto& other : s.faces())
    if (other.piece == f.piece && other.id != f.id) return s.region_of_face(other.id);
  throw std::logic_error("circle face without partner");
}

BoundaryLoop make_loop(const Shading& s, const CheckerboardGraph& g, const Face& f) {
  BoundaryLoop bl;
  bl.face = f.id;
  std::vector<Step> loop = face_loop(f);
  int vertex = loop.empty() ? circle_partner_region(s, f) : step_source(s, loop.front());
  bl.lambda = g.component_of(vertex);
  int base = g.base(bl.lambda);
  bl.seq = fraction_sequence(s, base, based_loop(s, g, std::move(loop), vertex));
  bl.relator = boundary_relator(bl.seq);
  return bl;
}

}  // namespace

std::vector<HoleRelator> hole_relators(const LinkDiagram& d, const Shading& s, const CheckerboardGraph& g) {
  std::vector<HoleRelator> out;
  for (int i = 1; i <= s.n(); ++i) {
    const Region& r = s.regions()[i];
    HoleRelator h;
    h.region = i;
    h.loops.push_back(make_loop(s, g, s.faces()[r.main_face]));
    std::vector<BoundaryLoop> inner;
    for (int f : r.faces)
      if (f != r.main_face) inner.push_back(make_loop(s, g, s.faces()[f]));
    std::stable_sort(inner.begin(), inner.end(), [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
    for (auto& l : inner) h.loops.push_back(std::move(l));
    for (const auto& l : h.loops) h.word.append(l.relator);
    out.push_back(std::move(h));
  }
  (void)d;
  return out;
}

BoundaryLoop outer_loop(const LinkDiagram& d, const Shading& s, const CheckerboardGraph& g) {
  if (d.num_pieces() != 1) throw std::invalid_argument("outer_loop: diagram is split");
  return make_loop(s, g, s.faces()[s.outer_face(0)]);
}

Presentation dehn_presentation(const LinkDiagram& d, const Shading& s, const CheckerboardGraph& g) {
  Presentation p;
  for (const auto& r : s.regions())
    p.generators.push_back({g.generator_name(r.id), "region " + r.name, r.id});
  for (int x = 0; x < d.num_crossings(); ++x) {
    FreeWord w;
    for (int k = 0; k < 4; ++k) w.push_back(letter(s.region_at({x, k}), k % 2 == 0 ? 1 : -1));
    p.relators.push_back({w, "crossing " + std::to_string(x + 1), x});
  }
  p.relators.push_back({FreeWord::generator(GenId{0}), "U0", 0});
  return p;
}

std::vector<int> main_generator_of_region(const Shading& s, const CheckerboardGraph& g) {
  std::vector<int> idx(static_cast<std::size_t>(s.num_regions()), -1);
  const int n = s.n();
  for (int i = 1; i <= n; ++i) idx[i] = i - 1;
  for (int l = 1; l < g.beta(); ++l) idx[g.base(l)] = n + l - 1;
  if (g.beta() > 0) idx[g.base(0)] = n + g.beta() - 1;
  return idx;
}

Presentation theorem_main_presentation(const LinkDiagram& d, const Shading& s, const CheckerboardGraph& g) {
  Presentation p;
  auto idx = main_generator_of_region(s, g);
  p.generators.resize(static_cast<std::size_t>(s.n() + g.beta()));
  for (int r = 0; r < s.num_regions(); ++r)
    if (idx[r] >= 0) p.generators[idx[r]] = {g.generator_name(r), "region " + s.regions()[r].name, r};
  for (const auto& h : hole_relators(d, s, g)) {
    FreeWord w;
    for (const auto& l : h.word.letters()) {
      int region = static_cast<int>(l.gen.value);
      if (region == 0) continue;
      if (idx[region] < 0) throw std::logic_error("boundary relator contains a non-base shaded region");
      w.push_back({GenId{static_cast<std::uint32_t>(idx[region])}, l.exp});
    }
    p.relators.push_back({w, "r" + std::to_string(h.region), h.region});
  }
  return p;
}

std::vector<int> wirtinger_arcs(const LinkDiagram& d, int* num_arcs) {
  std::vector<int> arc(static_cast<std::size_t>(d.num_edges()), -1);
  std::vector<std::vector<int>> arcs;
  for (const auto& comp : d.components()) {
    // Start after an under-crossing exit if there is one.
    std::size_t start = 0;
    for (std::size_t i = 0; i < comp.size(); ++i)
      if (!d.edges()[comp[i]].circle && slot_of(d.edges()[comp[i]].tail) == 2) {
        start = i;
        break;
      }
    std::vector<int> current;
    for (std::size_t j = 0; j < comp.size(); ++j) {
      int e = comp[(start + j) % comp.size()];
      if (j > 0 && !d.edges()[e].circle && slot_of(d.edges()[e].tail) == 2) {
        arcs.push_back(std::move(current));
        current.clear();
      }
      current.push_back(e);
    }
    arcs.push_back(std::move(current));
  }
  std::sort(arcs.begin(), arcs.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (int e : arcs[i]) arc[e] = static_cast<int>(i);
  if (num_arcs) *num_arcs = static_cast<int>(arcs.size());
  return arc;
}

Presentation wirtinger_presentation(const LinkDiagram& d) {
  int m = 0;
  auto arc = wirtinger_arcs(d, &m);
  Presentation p;
  for (int i = 0; i < m; ++i) p.generators.push_back({"x" + std::to_string(i + 1), "arc " + std::to_string(i + 1), i});
  for (int x = 0; x < d.num_crossings(); ++x) {
    const auto& c = d.crossings()[x];
    GenId a{static_cast<std::uint32_t>(arc[c[0]])}, b{static_cast<std::uint32_t>(arc[c[2]])},
        o{static_cast<std::uint32_t>(arc[c[1]])};
    int sgn = d.over_runs_1_to_3(x) ? 1 : -1;
    FreeWord w({{o, -sgn}, {a, 1}, {o, sgn}, {b, -1}});
    p.relators.push_back({w, "crossing " + std::to_string(x + 1), x});
  }
  return p;
}

}  // namespace dehnkit
