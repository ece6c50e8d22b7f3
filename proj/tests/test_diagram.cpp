#include <doctest.h>

#include <deque>
#include <random>
#include <set>

#include "dehnkit/checkerboard.hpp"
#include "fixtures.hpp"

using namespace dehnkit;
using namespace fixtures;

TEST_SUITE("diagram") {
  TEST_CASE("pd_parse_trefoil") {
    auto d = parse_pd(kTrefoil);
    CHECK(d.num_crossings() == 3);
    CHECK(d.num_edges() == 6);
    CHECK(d.num_components() == 1);
    CHECK(d.num_pieces() == 1);
  }

  TEST_CASE("pd_parse_errors") {
    CHECK_THROWS_AS(parse_pd(""), ParseError);
    CHECK_THROWS_AS(parse_pd("X[1,2,3]"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[1,2,3,4"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[0,1,1,2]"), ParseError);
    try {
      parse_pd("X[1,4,2,5] X[3,6,4]");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() > 10);
    }
  }

  TEST_CASE("pd_parse_accepts_wrappers") {
    auto a = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]");
    CHECK(a.to_pd() == parse_pd(kTrefoil).to_pd());
  }

  TEST_CASE("pd_parse_any_whitespace") {
    CHECK(parse_pd("X[1\t,4,\n2,5 ]\nX[3,6,4,1]\r\nX[5,2,6,3]\n").to_pd() == parse_pd(kTrefoil).to_pd());
    CHECK_THROWS_AS(parse_pd("X[1,4,2,5\n"), ParseError);
  }

  TEST_CASE("pd_rejects_label_used_once") { CHECK_THROWS(parse_pd("X[1,2,3,4]")); }

  TEST_CASE("pd_to_pd_round_trip") {
    for (const auto& pd : {kTrefoil, kBorromean, kSplitSix, std::string("O O IN(1,0)")}) {
      auto d = parse_pd(pd);
      CHECK(parse_pd(d.to_pd()).to_pd() == d.to_pd());
    }
  }

  TEST_CASE("face_counts") {
    CHECK(faces(parse_pd(kTrefoil)).size() == 5);
    CHECK(faces(parse_pd(kKink)).size() == 3);
    auto s = shade(parse_pd("O O"));
    CHECK(s.num_regions() == 3);
  }

  TEST_CASE("faces_partition_corners_and_satisfy_euler") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
      auto d = i % 2 ? random_medial(rng, 4 + i % 9) : random_braid(rng, 3, 5 + i % 7);
      auto fs = faces(d);
      std::set<Corner> seen;
      for (const auto& f : fs)
        for (const auto& c : f.corners) CHECK(seen.insert(c).second);
      CHECK(seen.size() == static_cast<std::size_t>(4 * d.num_crossings()));
      std::size_t expected = 0;
      for (const auto& p : d.pieces()) expected += p.crossings.empty() ? 2 : p.crossings.size() + 2;
      CHECK(fs.size() == expected);
    }
  }

  TEST_CASE("shading_trefoil_two_shaded_three_unshaded") {
    auto s = shade(parse_pd(kTrefoil));
    CHECK(s.num_shaded() == 2);
    CHECK(s.n() + 1 == 3);
    CHECK(s.special());
  }

  TEST_CASE("shading_kink_outer_override") {
    auto d = parse_pd(kKink);
    auto s = shade(d, ShadeOptions{1});
    CHECK(s.outer_face(0) == 1);
    CHECK(s.n() == 1);
  }

  TEST_CASE("shading_adjacent_faces_differ") {
    for (const auto& pd : {kTrefoil, kFigureEight, kBorromean, kHopf}) {
      auto d = parse_pd(pd);
      auto s = shade(d);
      for (int c = 0; c < d.num_crossings(); ++c)
        for (int k = 0; k < 4; ++k)
          CHECK(s.is_shaded(s.region_at({c, k})) != s.is_shaded(s.region_at({c, (k + 1) % 4})));
      CHECK(!s.is_shaded(0));
      CHECK(s.regions()[0].name == "U0");
    }
  }

  TEST_CASE("shading_rerooting_keeps_or_swaps_colouring") {
    auto d = parse_pd(kFigureEight);
    auto base = shade(d);
    auto colour = [](const Shading& s, int f) { return s.is_shaded(s.region_of_face(f)); };
    for (std::size_t f = 0; f < base.faces().size(); ++f) {
      auto s = shade(d, ShadeOptions{static_cast<int>(f)});
      const bool swapped = colour(base, static_cast<int>(f));
      for (std::size_t h = 0; h < base.faces().size(); ++h)
        CHECK(colour(s, static_cast<int>(h)) == (colour(base, static_cast<int>(h)) != swapped));
    }
  }

  TEST_CASE("borromean_all_eta_positive") {
    auto d = parse_pd(kBorromean);
    auto s = shade(d);
    for (int c = 0; c < d.num_crossings(); ++c) CHECK(goeritz_index(s, c) == 1);
    CheckerboardGraph g(d, s);
    CHECK(g.vertices().size() == 4);
    CHECK(g.edges().size() == 6);
    CHECK(g.beta() == 1);
  }

  TEST_CASE("eta_flips_under_crossing_change") {
    for (const auto& pd : {kBorromean, kFigureEight, kTrefoil}) {
      auto d = parse_pd(pd);
      auto s = shade(d);
      for (int c = 0; c < d.num_crossings(); ++c) {
        // anchor the outer face by a corner away from the changed crossing
        Corner anchor{};
        for (const auto& k : s.faces()[s.outer_face(0)].corners)
          if (k.crossing != c) anchor = k;
        auto d2 = d.with_crossing_changed(c);
        auto s2 = shade(d2, ShadeOptions{shade(d2).face_at(anchor)});
        for (int x = 0; x < d.num_crossings(); ++x) CHECK(s2.eta(x) == (x == c ? -s.eta(x) : s.eta(x)));
      }
    }
  }

  TEST_CASE("eta_preserved_by_edge_relabelling") {
    std::mt19937_64 rng(11);
    for (const auto& pd : {kBorromean, kFigureEight, kFigureEightSpecial}) {
      auto d = parse_pd(pd);
      auto s = shade(d);
      std::vector<int> perm(d.num_edges());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      auto d2 = parse_pd(relabel_pd(d, perm));
      auto s2 = shade(d2, ShadeOptions{shade(d2).face_at(Corner{0, 0})});
      auto s1 = shade(d, ShadeOptions{s.face_at(Corner{0, 0})});
      for (int c = 0; c < d.num_crossings(); ++c) CHECK(s1.eta(c) == s2.eta(c));
    }
  }

  TEST_CASE("trefoil_checkerboard_graph_is_theta") {
    auto d = parse_pd(kTrefoil);
    auto s = shade(d);
    CheckerboardGraph g(d, s);
    CHECK(g.vertices().size() == 2);
    CHECK(g.edges().size() == 3);
    for (const auto& e : g.edges()) CHECK(e.a != e.b);
  }

  TEST_CASE("split_figure_six") {
    auto d = parse_pd(kSplitSix);
    CHECK(is_split(d));
    CHECK(d.num_components() == 6);
    auto s = shade(d, ShadeOptions{kSplitSixOuter});
    CHECK(CheckerboardGraph(d, s).beta() == 3);
    CHECK(s.n() == 3);
  }

  TEST_CASE("special_examples") {
    auto t = parse_pd(kTrefoil);
    CHECK(!is_split(t));
    CHECK(is_special(shade(t)));
    auto f = shade(parse_pd(kFigureEight));
    CHECK(!is_special(f));
    CHECK(f.inconsistent_region() >= 0);
    CHECK(is_special(shade(parse_pd(kFigureEightSpecial))));
  }

  TEST_CASE("beta_equals_shaded_adjacency_components") {
    std::mt19937_64 rng(3);
    std::vector<LinkDiagram> ds{parse_pd(kSplitSix), parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] O")};
    for (int i = 0; i < 20; ++i) ds.push_back(random_medial(rng, 5 + i % 6));
    for (const auto& d : ds) {
      auto s = shade(d, d.num_pieces() == 6 ? ShadeOptions{kSplitSixOuter} : ShadeOptions{});
      // union-find over shaded regions joined through crossings
      std::vector<int> parent(s.num_regions());
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (int c = 0; c < d.num_crossings(); ++c)
        for (int k = 0; k < 2; ++k) {
          int a = s.region_at({c, k}), b = s.region_at({c, k + 2});
          if (s.is_shaded(a)) parent[find(a)] = find(b);
        }
      std::set<int> roots;
      for (int r = 0; r < s.num_regions(); ++r)
        if (s.is_shaded(r)) roots.insert(find(r));
      CHECK(CheckerboardGraph(d, s).beta() == static_cast<int>(roots.size()));
    }
  }

  TEST_CASE("alpha_of_u0_is_one_and_arcs_shift_by_meridian") {
    auto d = parse_pd(kBorromean);
    auto s = shade(d);
    auto alpha = alpha_map(s);
    CHECK(alpha[0] == LaurentPoly::constant(s.num_vars(), 1));
    for (int e = 0; e < d.num_edges(); ++e) {
      auto ratio = alpha[s.left_region(e)] * alpha[s.right_region(e)].monomial_inverse();
      auto t = LaurentPoly::variable(s.num_vars(), d.edges()[e].component);
      CHECK((ratio == t || ratio == t.monomial_inverse()));
    }
  }
}
