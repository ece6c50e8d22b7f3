// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "harness.hpp"

using namespace dehnkit;
using namespace fixtures;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

IntMatrix nu_of_main(const LinkDiagram& d, const Shading& s, const CheckerboardGraph& g) {
  auto p = theorem_main_presentation(d, s, g);
  return jacobian_nu(p, region_alpha(p, s));
}

IntMatrix with_zero_columns(const IntMatrix& g, std::size_t extra) {
  IntMatrix m(g.rows(), g.cols() + extra, 0);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) m(i, j) = g(i, j);
  return m;
}

// Relabelings of regions (rows and first n columns together) and of the
// remaining S columns. Row i of `want` is the relator of region row_region[i].
bool equal_up_to_labels(const IntMatrix& got, const IntMatrix& want, std::size_t n, std::vector<int> row_region = {}) {
  if (got.rows() != want.rows() || got.cols() != want.cols() || got.rows() != n) return false;
  if (row_region.empty()) {
    row_region.resize(n);
    std::iota(row_region.begin(), row_region.end(), 0);
  }
  std::vector<int> pu(n), ps(got.cols() - n);
  std::iota(pu.begin(), pu.end(), 0);
  do {
    std::iota(ps.begin(), ps.end(), 0);
    do {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < got.cols() && ok; ++j) {
          const int col = j < n ? pu[j] : static_cast<int>(n) + ps[j - n];
          ok = got(pu[row_region[i]], col) == want(i, j);
        }
      if (ok) return true;
    } while (std::next_permutation(ps.begin(), ps.end()));
  } while (std::next_permutation(pu.begin(), pu.end()));
  return false;
}

std::vector<harness::CorpusEntry> corpus;

Outcome borromean() {
  Outcome o;
  auto d = parse_pd(kBorromean);
  auto s = shade(d);
  CheckerboardGraph g(d, s);
  auto want = int_matrix({{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}});
  auto gm = goeritz_direct(d, s);
  if (!permutation_equivalent(gm, want)) o.fail("G = " + to_string(gm));
  auto nu = nu_of_main(d, s, g);
  if (!equal_up_to_labels(nu, with_zero_columns(want, 1), 3)) o.fail("J^nu = " + to_string(nu));
  o.detail = o.pass ? "G = " + to_string(gm) + ", J^nu = (G | 0)" : o.detail;
  return o;
}

Outcome split_six() {
  Outcome o;
  auto d = parse_pd(kSplitSix);
  auto s = shade(d, ShadeOptions{kSplitSixOuter});
  CheckerboardGraph g(d, s);
  auto nu = nu_of_main(d, s, g);
  auto want = int_matrix({{-4, 2, 2, 0, 0, 0}, {2, 0, -2, 0, 0, 0}, {2, -2, 0, 0, 0, 0}});
  // printed relators belong to U1, U3, U2 in that order
  if (!equal_up_to_labels(nu, want, 3, {0, 2, 1})) o.fail("J^nu = " + to_string(nu));
  if (!is_split(d)) o.fail("diagram not split");
  if (o.pass) o.detail = "J^nu = " + to_string(nu);
  return o;
}

Outcome goeritz_suite() {
  Outcome o;
  int split = 0;
  for (const auto& e : corpus) {
    auto d = parse_pd(e.pd);
    auto s = shade(d, ShadeOptions{e.outer_face});
    CheckerboardGraph g(d, s);
    split += is_split(d);
    if (nu_of_main(d, s, g) != with_zero_columns(goeritz_direct(d, s), g.beta())) o.fail(e.name);
  }
  if (corpus.size() < 30) o.fail("corpus has " + std::to_string(corpus.size()) + " entries");
  if (split == 0) o.fail("no split entries");
  if (o.pass) o.detail = std::to_string(corpus.size()) + " diagrams (" + std::to_string(split) + " split)";
  return o;
}

Outcome seifert_suite() {
  Outcome o;
  int count = 0, alternating = 0;
  for (const auto& e : corpus) {
    auto d = parse_pd(e.pd);
    auto s = shade(d, ShadeOptions{e.outer_face});
    if (is_split(d) || !is_special(s)) continue;
    ++count;
    CheckerboardGraph g(d, s);
    auto hp = seifert_plus_dots(d, s), hm = seifert_minus(d, s);
    auto [a, b] = seifert_from_words(d, s, g);
    if (a != hm || b != hp) o.fail(e.name + ": A, B differ from H-, H+");
    if (hm != hp.transpose()) o.fail(e.name + ": H- is not the transpose of H+");
    if (is_alternating(d)) {
      ++alternating;
      if (!hnn_sufficient(a, b)) o.fail(e.name + ": hnn_sufficient false");
    }
  }
  if (count < 10) o.fail("only " + std::to_string(count) + " special non-split entries");
  if (o.pass)
    o.detail = std::to_string(count) + " special non-split diagrams, " + std::to_string(alternating) + " alternating";
  return o;
}

Outcome alexander_suite() {
  Outcome o;
  // Oracle values first.
  const std::vector<std::pair<std::string, std::string>> fixed{
      {kTrefoil, "t^2 - t + 1"}, {kFigureEight, "t^2 - 3t + 1"}, {"O", "1"}, {kKink, "1"}};
  for (const auto& [pd, text] : fixed)
    if (wirtinger_alexander(parse_pd(pd)) != univariate::parse(text)) o.fail("oracle disagrees on " + pd);
  int knots = 0;
  for (const auto& e : corpus) {
    auto d = parse_pd(e.pd);
    if (d.num_components() != 1) continue;
    ++knots;
    auto s = shade(d, ShadeOptions{e.outer_face});
    CheckerboardGraph g(d, s);
    auto oracle = wirtinger_alexander(d);
    auto main = main_alexander(d, s, g);
    if (main != oracle) o.fail(e.name + ": main route " + main.to_string() + " vs " + oracle.to_string());
    if (is_special(s)) {
      auto sf = normalize_alexander(determinant(minus_t_times(seifert_minus(d, s), seifert_plus_dots(d, s))));
      if (sf != oracle) o.fail(e.name + ": Seifert route " + sf.to_string());
    }
    if (abs(oracle.eval_minus_one()) != abs(determinant(goeritz_direct(d, s)))) o.fail(e.name + ": |Delta(-1)| != |det G|");
    for (const auto& [pd, text] : fixed)
      if (parse_pd(pd).to_pd() == d.to_pd() && main != univariate::parse(text)) o.fail(e.name + ": expected " + text);
  }
  if (o.pass) o.detail = std::to_string(knots) + " knots, trefoil t^2 - t + 1, figure-eight t^2 - 3t + 1, unknot 1";
  return o;
}

Outcome fox_suite() {
  Outcome o;
  harness::FoxSuiteOptions opts;
  opts.seed = 2026;
  opts.words = 1000;
  opts.max_length = 50;
  for (const auto& r : harness::fox_property_suite(opts))
    if (!r.pass) o.fail(r.name + ": " + r.detail);
  if (o.pass) o.detail = "product rule, fundamental identity, reduction invariance on 1000 words of length <= 50";
  return o;
}

Outcome generator_counts() {
  Outcome o;
  int checked = 0;
  for (const auto& e : corpus) {
    auto d = parse_pd(e.pd);
    if (is_split(d)) continue;
    ++checked;
    auto s = shade(d, ShadeOptions{e.outer_face});
    auto main = theorem_main_presentation(d, s, CheckerboardGraph(d, s)).num_generators();
    auto wirt = wirtinger_presentation(d).num_generators();
    if (main != static_cast<std::size_t>(1 + s.n()) || main > wirt)
      o.fail(e.name + ": " + std::to_string(main) + " vs " + std::to_string(wirt));
  }
  auto k = pretzel(3, 5, 7);
  auto s = shade(k);
  auto main = theorem_main_presentation(k, s, CheckerboardGraph(k, s)).num_generators();
  auto wirt = wirtinger_presentation(k).num_generators();
  if (main != 3 || wirt != 15) o.fail("K(3,5,7): " + std::to_string(main) + " vs " + std::to_string(wirt));
  if (o.pass) o.detail = std::to_string(checked) + " non-split diagrams; K(3,5,7) 3 vs 15";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : DEHNKIT_CORPUS_PATH;
  corpus = harness::load_corpus(path);
  struct Criterion {
    int id;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{{1, 1, borromean},        {2, 1, split_six},   {3, 30, goeritz_suite},
                                        {4, 0, seifert_suite},    {5, 0, alexander_suite},
                                        {6, 10, fox_suite},       {7, 0, generator_counts}};
  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s) o.fail("took " + std::to_string(secs) + " s");
    all &= o.pass;
    std::printf("criterion %d: %s  %.3f s  %s\n", c.id, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
  }
  return all ? 0 : 1;
}
