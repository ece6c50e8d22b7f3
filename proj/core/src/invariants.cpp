#include "dehnkit/invariants.hpp"

#include <algorithm>

namespace dehnkit {

JacobianMatrix jacobian(const Presentation& p) {
  JacobianMatrix j(p.num_relators(), p.num_generators());
  for (std::size_t r = 0; r < p.num_relators(); ++r)
    for (std::size_t g = 0; g < p.num_generators(); ++g)
      j(r, g) = fox_derivative(p.relators[r].word, GenId{static_cast<std::uint32_t>(g)});
  for (const auto& r : p.relators) j.row_tags.push_back(r.tag);
  j.col_tags = p.names();
  return j;
}

Specialization region_alpha(const Presentation& p, const Shading& s) {
  std::vector<LaurentPoly> images;
  for (const auto& g : p.generators) {
    if (g.source < 0 || g.source >= s.num_regions())
      throw std::out_of_range("generator " + g.name + " has no region");
    images.push_back(s.regions()[g.source].alpha);
  }
  return Specialization(std::move(images));
}

Specialization wirtinger_alpha(const Presentation& p, const LinkDiagram& d) {
  auto arc = wirtinger_arcs(d);
  std::vector<int> comp_of_arc(p.num_generators(), -1);
  for (int e = 0; e < d.num_edges(); ++e) comp_of_arc[arc[e]] = d.edges()[e].component;
  std::size_t mu = static_cast<std::size_t>(std::max(1, d.num_components()));
  std::vector<LaurentPoly> images;
  for (int c : comp_of_arc) images.push_back(LaurentPoly::variable(mu, static_cast<std::size_t>(c)));
  return Specialization(std::move(images));
}

LaurentMatrix specialize_jacobian(const JacobianMatrix& j, const Specialization& m) {
  LaurentMatrix out(j.rows(), j.cols(), LaurentPoly(m.num_vars()));
  for (std::size_t r = 0; r < j.rows(); ++r)
    for (std::size_t c = 0; c < j.cols(); ++c) out(r, c) = m.apply(j(r, c));
  out.row_tags = j.row_tags;
  out.col_tags = j.col_tags;
  return out;
}

LaurentMatrix jacobian_alpha(const Presentation& p, const Specialization& alpha) {
  LaurentMatrix out(p.num_relators(), p.num_generators(), LaurentPoly(alpha.num_vars()));
  for (std::size_t r = 0; r < p.num_relators(); ++r) {
    auto row = alpha.fox_row(p.relators[r].word, p.num_generators());
    for (std::size_t c = 0; c < row.size(); ++c) out(r, c) = std::move(row[c]);
    out.row_tags.push_back(p.relators[r].tag);
  }
  out.col_tags = p.names();
  return out;
}

LaurentMatrix jacobian_tau(const Presentation& p, const Specialization& alpha) {
  return jacobian_alpha(p, alpha.collapsed());
}

IntMatrix evaluate_at_minus_one(const LaurentMatrix& m) {
  IntMatrix out(m.rows(), m.cols(), Integer(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).eval_minus_one();
  out.row_tags = m.row_tags;
  out.col_tags = m.col_tags;
  return out;
}

IntMatrix jacobian_nu(const Presentation& p, const Specialization& alpha) {
  return evaluate_at_minus_one(jacobian_tau(p, alpha));
}

namespace {

std::vector<std::string> u_tags(const Shading& s) {
  std::vector<std::string> tags;
  for (int i = 1; i <= s.n(); ++i) tags.push_back(s.regions()[i].name);
  return tags;
}

void require_special_nonsplit(const LinkDiagram& d, const Shading& s) {
  if (d.num_pieces() != 1) throw NotSpecialError("diagram is split");
  if (!s.special())
    throw NotSpecialError("diagram not special: shaded region " + s.regions()[s.inconsistent_region()].name +
                          " has incident arcs on both sides");
}

}  // namespace

IntMatrix goeritz_direct(const LinkDiagram& d, const Shading& s) {
  const int n = s.n();
  IntMatrix g(static_cast<std::size_t>(n), static_cast<std::size_t>(n), Integer(0));
  for (int x = 0; x < d.num_crossings(); ++x) {
    int eta = s.eta(x);
    int k = eta == 1 ? 1 : 0;
    int p = s.region_at({x, k + 1}), q = s.region_at({x, (k + 3) % 4});
    if (p == q) continue;
    if (p > 0) g(p - 1, p - 1) += eta;
    if (q > 0) g(q - 1, q - 1) += eta;
    if (p > 0 && q > 0) {
      g(p - 1, q - 1) -= eta;
      g(q - 1, p - 1) -= eta;
    }
  }
  g.row_tags = g.col_tags = u_tags(s);
  return g;
}

IntMatrix goeritz_via_jacobian(const LinkDiagram& d, const Shading& s, const CheckerboardGraph& g) {
  Presentation p = theorem_main_presentation(d, s, g);
  IntMatrix nu = jacobian_nu(p, region_alpha(p, s));
  const std::size_t n = static_cast<std::size_t>(s.n());
  if (!is_zero(nu.columns(n, nu.cols() - n)))
    throw std::logic_error("J^nu has a nonzero shaded-generator column");
  return nu.columns(0, n);
}

IntMatrix seifert_plus_dots(const LinkDiagram& d, const Shading& s) {
  require_special_nonsplit(d, s);
  const int n = s.n();
  IntMatrix h(static_cast<std::size_t>(n), static_cast<std::size_t>(n), Integer(0));
  for (int x = 0; x < d.num_crossings(); ++x) {
    int eta = s.eta(x);
    // The dot sits in the unshaded corner left of the under-strand (corner 2 or 3).
    int dot = s.is_shaded(s.region_at({x, 2})) ? 3 : 2;
    int dotted = s.region_at({x, dot});
    int across = s.region_at({x, (dot + 2) % 4});
    if (dotted > 0) h(dotted - 1, dotted - 1) += eta;
    if (dotted > 0 && across > 0 && across != dotted) h(across - 1, dotted - 1) -= eta;
  }
  h.row_tags = h.col_tags = u_tags(s);
  return h;
}

IntMatrix seifert_minus(const LinkDiagram& d, const Shading& s) { return seifert_plus_dots(d, s).transpose(); }

std::pair<IntMatrix, IntMatrix> seifert_from_words(const LinkDiagram& d, const Shading& s, const CheckerboardGraph& g) {
  require_special_nonsplit(d, s);
  const int n = s.n();
  IntMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n), Integer(0));
  IntMatrix b = a;
  for (const auto& h : hole_relators(d, s, g)) {
    const auto& seq = h.loops.front().seq;
    if (seq.odd()) throw std::logic_error("odd boundary loop in a special diagram");
    FreeWord w = return_value(seq);
    const auto& ls = w.letters();
    const std::size_t L = seq.entries.size();
    if (ls[L].gen.value != static_cast<std::uint32_t>(seq.base) || ls[L].exp != 1)
      throw std::logic_error("return value does not have the form A S0 B^-1");
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (i == L) continue;
      int region = static_cast<int>(ls[i].gen.value);
      if (region == 0) continue;
      if (region > n) throw std::logic_error("return value contains a shaded letter besides S0");
      if (i < L)
        a(h.region - 1, region - 1) += ls[i].exp;
      else
        b(h.region - 1, region - 1) -= ls[i].exp;
    }
  }
  a.row_tags = a.col_tags = b.row_tags = b.col_tags = u_tags(s);
  return {a, b};
}

LaurentMatrix alexander_matrix_special(const LinkDiagram& d, const Shading& s, const CheckerboardGraph& g) {
  require_special_nonsplit(d, s);
  Presentation p = theorem_main_presentation(d, s, g);
  LaurentMatrix jt = jacobian_tau(p, region_alpha(p, s));
  const std::size_t n = static_cast<std::size_t>(s.n());
  for (std::size_t i = 0; i < n; ++i)
    if (!jt(i, n).is_zero()) throw std::logic_error("J^tau has a nonzero S0 column");
  IntMatrix hp = seifert_plus_dots(d, s);
  LaurentMatrix expected = minus_t_times(hp.transpose(), hp);
  if (!(jt.columns(0, n) == expected)) throw std::logic_error("J^tau leading block differs from H- - tH+");
  return jt;
}

LaurentPoly normalize_alexander(const LaurentPoly& q) { return univariate::normalize(q); }

LaurentPoly alexander_polynomial(const LaurentMatrix& jtau) {
  const std::size_t m = jtau.cols();
  if (m == 0) return LaurentPoly::constant(1, 1);
  if (jtau.rows() + 1 < m) return LaurentPoly(1);
  // Choose m-1 rows (all of them in the deficiency-one case).
  std::vector<std::vector<std::size_t>> row_sets;
  std::vector<std::size_t> pick(m - 1);
  for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
  while (true) {
    row_sets.push_back(pick);
    std::size_t i = pick.size();
    while (i > 0 && pick[i - 1] == jtau.rows() - (pick.size() - (i - 1))) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
    if (row_sets.size() > 5000) throw std::runtime_error("alexander_polynomial: too many row choices");
  }
  LaurentPoly g(1);
  for (const auto& rows : row_sets) {
    LaurentMatrix sub(rows.size(), m, LaurentPoly(1));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t c = 0; c < m; ++c) sub(i, c) = jtau(rows[i], c);
    for (std::size_t c = 0; c < m; ++c) {
      LaurentPoly det = determinant(sub.without_column(c));
      g = univariate::gcd(g, det);
      if (g.is_unit()) return LaurentPoly::constant(1, 1);
    }
  }
  return normalize_alexander(g);
}

LaurentPoly wirtinger_alexander(const LinkDiagram& d) {
  Presentation p = wirtinger_presentation(d);
  std::vector<char> dropped(static_cast<std::size_t>(d.num_pieces()), 0);
  Presentation kept = p;
  kept.relators.clear();
  for (auto it = p.relators.rbegin(); it != p.relators.rend(); ++it) {
    int piece = d.piece_of_crossing(it->source);
    if (!dropped[piece]) {
      dropped[piece] = 1;
      continue;
    }
    kept.relators.insert(kept.relators.begin(), *it);
  }
  return alexander_polynomial(jacobian_tau(kept, wirtinger_alpha(kept, d)));
}

LaurentPoly main_alexander(const LinkDiagram& d, const Shading& s, const CheckerboardGraph& g) {
  Presentation p = theorem_main_presentation(d, s, g);
  return alexander_polynomial(jacobian_tau(p, region_alpha(p, s)));
}

bool hnn_sufficient(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) return false;
  return determinant(a) != 0 && determinant(b) != 0;
}

bool all_eta_equal(const LinkDiagram& d, const Shading& s) {
  for (int x = 1; x < d.num_crossings(); ++x)
    if (s.eta(x) != s.eta(0)) return false;
  return true;
}

bool is_alternating(const LinkDiagram& d) {
  for (const auto& e : d.edges()) {
    if (e.circle) continue;
    bool leaves_under = slot_of(e.tail) == 2;
    bool arrives_under = slot_of(e.head) == 0;
    if (leaves_under == arrives_under) return false;
  }
  return true;
}

}  // namespace dehnkit
