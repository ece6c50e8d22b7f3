#include <doctest.h>

#include "dehnkit/serialize.hpp"
#include "fixtures.hpp"
#include "harness.hpp"

using namespace dehnkit;
using namespace fixtures;

TEST_SUITE("serialize") {
  TEST_CASE("diagram_json_round_trip_preserves_matrices") {
    for (const auto& [pd, outer] : std::vector<std::pair<std::string, std::optional<int>>>{
             {kTrefoil, {}}, {kBorromean, {}}, {kSplitSix, kSplitSixOuter}}) {
      auto d = parse_pd(pd);
      Json j = to_json(d);
      if (outer) j["outer_face"] = *outer;
      auto text = j.dump();
      auto j2 = Json::parse(text);
      auto d2 = diagram_from_json(j2);
      auto o2 = shade_options_from_json(j2);
      CHECK(d2.to_pd() == d.to_pd());
      CHECK(o2.outer_face == outer);
      auto s = shade(d, ShadeOptions{outer}), s2 = shade(d2, o2);
      CHECK(goeritz_direct(d2, s2) == goeritz_direct(d, s));
      CHECK(to_json(s2) == to_json(s));
    }
    CHECK(diagram_from_json(Json(kTrefoil)).num_crossings() == 3);
  }

  TEST_CASE("matrix_json_round_trip") {
    auto m = int_matrix({{3, -1}, {-1, 3}});
    m(0, 0) = Integer("123456789012345678901234567890");
    CHECK(int_matrix_from_json(Json::parse(to_json(m).dump())) == m);
  }

  TEST_CASE("presentation_json_and_latex") {
    auto d = parse_pd(kBorromean);
    auto s = shade(d);
    CheckerboardGraph g(d, s);
    auto p = theorem_main_presentation(d, s, g);
    Json j = to_json(p);
    CHECK(j["generators"].size() == 4);
    CHECK(j["relators"].size() == 3);
    CHECK(presentation_to_latex(p).find("\\overline{U_{3}}") != std::string::npos);
    Json gj = to_json(g, s);
    CHECK(gj["beta"] == 1);
  }
}

TEST_SUITE("harness") {
  TEST_CASE("fox_suite_passes_and_is_deterministic") {
    harness::FoxSuiteOptions opts;
    opts.seed = 99;
    auto a = harness::fox_property_suite(opts);
    auto b = harness::fox_property_suite(opts);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK_MESSAGE(a[i].pass, a[i].name << ": " << a[i].detail);
      CHECK(a[i].detail == b[i].detail);
    }
  }

  TEST_CASE("verify_entry_flags_corruption") {
    auto good = harness::make_entry("trefoil", kTrefoil, {}, "test");
    CHECK(harness::verify_entry(good).pass());
    auto bad = good;
    bad.name = "broken";
    bad.pd = "X[1,4,2,5] X[3,6,4";
    auto r = harness::verify_entry(bad);
    CHECK(!r.pass());
    CHECK(r.name == "broken");
    auto wrong = good;
    wrong.expected["alexander"].value = "t^2 - 3*t + 1";
    CHECK(!harness::verify_entry(wrong).pass());
  }

  TEST_CASE("corpus_json_round_trip") {
    std::vector<harness::CorpusEntry> es{harness::make_entry("split", kSplitSix, kSplitSixOuter, "test")};
    Json doc{{"entries", Json::array({harness::to_json(es[0])})}};
    auto back = harness::corpus_from_json(doc);
    REQUIRE(back.size() == 1);
    CHECK(back[0].pd == es[0].pd);
    CHECK(back[0].outer_face == kSplitSixOuter);
    CHECK(back[0].flags.at("split"));
    CHECK_THROWS_AS(harness::corpus_from_json(Json{{"entries", 3}}), harness::CorpusError);
  }

  TEST_CASE("report_is_deterministic") {
    std::vector<harness::CorpusEntry> es{harness::make_entry("b", kBorromean, {}, "t"),
                                         harness::make_entry("a", kTrefoil, {}, "t")};
    harness::FoxSuiteOptions fox;
    fox.words = 50;
    auto r1 = harness::run_verify(es, fox, 2, "h");
    auto r2 = harness::run_verify(es, fox, 1, "h");
    CHECK(r1.entries.front().name == "a");
    CHECK(to_json(r1, false) == to_json(r2, false));
    CHECK(r1.pass());
  }
}
