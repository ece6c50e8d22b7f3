#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"

using namespace dehnkit;
using namespace fixtures;

namespace {

std::vector<std::string> region_names(const Shading& s, const CheckerboardGraph& g) {
  std::vector<std::string> names;
  for (int r = 0; r < s.num_regions(); ++r) names.push_back(g.generator_name(r));
  return names;
}

bool relators_die_under_alpha(const Presentation& p, const Specialization& alpha) {
  for (const auto& r : p.relators)
    if (alpha.apply(r.word) != LaurentPoly::constant(alpha.num_vars(), 1)) return false;
  return true;
}

std::vector<LinkDiagram> sample_diagrams() {
  std::vector<LinkDiagram> ds;
  for (const auto& pd : {kTrefoil, kFigureEight, kFigureEightSpecial, kKink, kHopf, kBorromean})
    ds.push_back(parse_pd(pd));
  std::mt19937_64 rng(41);
  for (int i = 0; i < 10; ++i) ds.push_back(random_medial(rng, 4 + i));
  for (int i = 0; i < 5; ++i) ds.push_back(random_braid(rng, 3, 5 + i));
  return ds;
}

}  // namespace

TEST_SUITE("presentations") {
  TEST_CASE("dehn_presentation_trefoil") {
    auto d = parse_pd(kTrefoil);
    auto s = shade(d);
    CheckerboardGraph g(d, s);
    auto p = dehn_presentation(d, s, g);
    CHECK(p.num_generators() == 5);
    CHECK(p.num_relators() == 4);
    CHECK(relators_die_under_alpha(p, region_alpha(p, s)));
    p.validate();
  }

  TEST_CASE("dehn_presentation_kink_is_cyclic") {
    auto d = parse_pd(kKink);
    auto s = shade(d);
    auto p = dehn_presentation(d, s, CheckerboardGraph(d, s));
    CHECK(p.num_generators() == 3);
    CHECK(p.num_relators() == 2);
    CHECK(static_cast<int>(p.num_generators()) - rank(abelianized(p)) == 1);
  }

  TEST_CASE("borromean_return_value_and_relators") {
    auto d = parse_pd(kBorromean);
    auto s = shade(d);
    CheckerboardGraph g(d, s);
    auto names = region_names(s, g);
    auto holes = hole_relators(d, s, g);
    REQUIRE(holes.size() == 3);
    const auto& seq = holes[0].loops.at(0).seq;
    std::vector<std::string> fractions;
    for (const auto& f : seq.entries) fractions.push_back(names[f.num] + "/" + names[f.den]);
    CHECK(fractions == std::vector<std::string>{"U1/U0", "U1/U3", "U1/U2"});
    CHECK(return_value(seq).to_string(names) == "U1 U3^-1 U1 S0^-1 U0 U1^-1 U2");

    auto p = theorem_main_presentation(d, s, g);
    CHECK(p.names() == std::vector<std::string>{"U1", "U2", "U3", "S0"});
    CHECK(p.relators[0].word.to_string(p.names()) == "U1 U3^-1 U1 S0^-1 U1^-1 U2 S0^-1");
    CHECK(p.relators[1].word.to_string(p.names()) == "U2 U3^-1 U2 S0^-1 U1 U2^-1 S0^-1");
  }

  TEST_CASE("boundary_relators_follow_from_dehn_relators") {
    for (const auto& d : sample_diagrams()) {
      auto s = shade(d);
      CheckerboardGraph g(d, s);
      for (const auto& h : hole_relators(d, s, g))
        for (const auto& loop : h.loops)
          CHECK(reduce(return_value(loop.seq)) == reduce(return_value_by_rewriting(s, loop.seq.steps, loop.seq.base)));
    }
  }

  TEST_CASE("reverse_relator_parity") {
    int odd = 0, even = 0;
    for (const auto& d : sample_diagrams()) {
      auto s = shade(d);
      CheckerboardGraph g(d, s);
      for (const auto& h : hole_relators(d, s, g))
        for (const auto& loop : h.loops) {
          auto r = loop.relator;
          CHECK(reverse_relator_consistent(r, reverse_relator(r), loop.seq.odd()));
          (loop.seq.odd() ? odd : even)++;
          auto rev = reversed(loop.seq);
          REQUIRE(rev.entries.size() == loop.seq.entries.size());
          for (std::size_t i = 0; i < rev.entries.size(); ++i) {
            const auto& a = rev.entries[i];
            const auto& b = loop.seq.entries[loop.seq.entries.size() - 1 - i];
            CHECK(a == Fraction{b.den, b.num});
          }
        }
    }
    CHECK(odd > 0);
    CHECK(even > 0);
    CHECK(reverse_relator(FreeWord{}).empty());
  }

  TEST_CASE("split_figure_six_presentation") {
    auto d = parse_pd(kSplitSix);
    auto s = shade(d, ShadeOptions{kSplitSixOuter});
    CheckerboardGraph g(d, s);
    auto p = theorem_main_presentation(d, s, g);
    CHECK(p.num_generators() == 6);
    CHECK(p.num_relators() == 3);
    int composite = 0;
    bool empty_loop = false;
    for (const auto& h : hole_relators(d, s, g)) {
      int nontrivial = 0;
      for (const auto& loop : h.loops) {
        nontrivial += !loop.seq.steps.empty();
        if (loop.seq.steps.empty()) {
          empty_loop = true;
          CHECK(reduce(loop.relator).empty());
        }
      }
      composite += nontrivial > 1;
    }
    CHECK(composite == 1);
    CHECK(empty_loop);
    p.validate();

    // printed relators, after renaming U1 -> U3, U2 -> U1, U3 -> U2
    std::vector<std::string> renamed{"U3", "U1", "U2", "S1", "S2", "S0"};
    std::set<std::string> got;
    for (const auto& w : p.reduced_relators()) got.insert(w.to_string(renamed));
    CHECK(got == std::set<std::string>{"U3 U1^-1 S0 U3^-1 U1 S0^-1 U2 U1^-1 S1 U2^-1 U1 S1^-1",
                                       "U1 U3^-1 S0 U1^-1 U3 S0^-1", "U1 U2^-1 S1 U1^-1 U2 S1^-1"});
  }

  TEST_CASE("main_presentation_shape_and_abelianization") {
    for (const auto& d : sample_diagrams()) {
      auto s = shade(d);
      CheckerboardGraph g(d, s);
      auto p = theorem_main_presentation(d, s, g);
      p.validate();
      CHECK(p.num_generators() == static_cast<std::size_t>(s.n() + g.beta()));
      CHECK(p.num_relators() == static_cast<std::size_t>(s.n()));
      CHECK(p.names().back() == "S0");
      CHECK(rank(abelianized(p)) <= s.n());
      CHECK(relators_die_under_alpha(p, region_alpha(p, s)));
      auto w = wirtinger_presentation(d);
      CHECK(relators_die_under_alpha(w, wirtinger_alpha(w, d)));
      auto dp = dehn_presentation(d, s, g);
      CHECK(relators_die_under_alpha(dp, region_alpha(dp, s)));
    }
  }

  TEST_CASE("wirtinger_counts") {
    auto t = wirtinger_presentation(parse_pd(kTrefoil));
    CHECK(t.num_generators() == 3);
    CHECK(t.num_relators() == 3);
    CHECK(wirtinger_presentation(pretzel(3, 5, 7)).num_generators() == 15);
    CHECK(wirtinger_presentation(pretzel(1, 3, 3)).num_generators() == 7);
    auto w = wirtinger_presentation(parse_pd(kBorromean));
    CHECK(static_cast<int>(w.num_generators()) - rank(abelianized(w)) == 3);
  }

  TEST_CASE("generator_count_is_min_side") {
    auto d = pretzel(3, 5, 7);
    auto s = shade(d);
    CheckerboardGraph g(d, s);
    CHECK(theorem_main_presentation(d, s, g).num_generators() == 3);
    // the minimum over outer-face choices equals min(shaded, unshaded)
    for (const auto& pd : {kTrefoil, kFigureEight, kBorromean}) {
      auto dd = parse_pd(pd);
      auto base = shade(dd);
      const int shaded = base.num_shaded(), unshaded = base.n() + 1;
      std::size_t best = SIZE_MAX;
      for (std::size_t f = 0; f < base.faces().size(); ++f) {
        auto sf = shade(dd, ShadeOptions{static_cast<int>(f)});
        best = std::min(best, theorem_main_presentation(dd, sf, CheckerboardGraph(dd, sf)).num_generators());
      }
      CHECK(best == static_cast<std::size_t>(std::min(shaded, unshaded)));
    }
  }

  TEST_CASE("presentation_text_and_gap") {
    auto d = parse_pd(kTrefoil);
    auto s = shade(d);
    auto p = theorem_main_presentation(d, s, CheckerboardGraph(d, s));
    CHECK(p.to_text().rfind("< U1, U2, S0 |", 0) == 0);
    CHECK(p.to_gap().find("FreeGroup") != std::string::npos);
    CHECK(p.find("S0").has_value());
    CHECK(!p.find("S7").has_value());
  }
}
