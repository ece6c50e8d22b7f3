// Writes the bundled corpus. Expected values come from the Wirtinger route.
#include <fstream>
#include <iostream>

#include "dehnkit/builders.hpp"
#include "harness.hpp"

using namespace dehnkit;
using harness::make_entry;

int main(int argc, char** argv) {
  std::string out_path = argc > 1 ? argv[1] : "data/corpus.json";
  std::vector<harness::CorpusEntry> entries;
  auto add = [&](const std::string& name, const std::string& pd, std::optional<int> outer, const std::string& note) {
    entries.push_back(make_entry(name, pd, outer, note));
  };

  add("trefoil", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", {}, "standard trefoil PD");
  add("figure-eight", "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]", {}, "standard figure-eight PD");
  add("figure-eight-special", "X[3,6,5,1] X[1,5,4,2] X[9,10,3,2] X[4,6,8,7] X[10,9,7,8]", {},
      "special non-alternating figure-eight: medial of a theta graph with mixed crossings");
  add("kink", "X[1,2,2,1]", {}, "one-crossing unknot");
  add("unknot", "O", {}, "zero-crossing unknot");
  add("unlink-2", "O O", {}, "two side-by-side circles");
  add("unlink-2-nested", "O O IN(1,0)", {}, "concentric circles");
  add("hopf", "X[1,3,2,4] X[3,1,4,2]", {}, "Hopf link");
  add("borromean", "X[3,7,9,1] X[1,10,12,2] X[4,8,7,5] X[11,4,6,12] X[8,11,10,9] X[2,6,5,3]", {},
      "Borromean rings as the medial diagram of K4, all Goeritz indices +1");
  add("split-six-component", "O X[1,3,2,4] X[3,1,4,2] X[5,7,6,8] X[7,5,8,6] O IN(1,0) IN(2,3) IN(3,5)", 7,
      "six-component split link: circle around a Hopf diagram, a second Hopf diagram and a circle in its holes");
  add("trefoil-split-unknot", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] O", {}, "trefoil beside an unknot");
  for (auto [p, q, r] : {std::array{1, 1, 1}, {1, 1, 3}, {1, 3, 3}, {3, 3, 3}, {3, 5, 7}, {2, 3, 3}, {1, 2, 3}})
    add("pretzel-" + std::to_string(p) + "-" + std::to_string(q) + "-" + std::to_string(r),
        pretzel(p, q, r).to_pd(), {}, "pretzel link as the medial diagram of a subdivided theta graph");
  add("torus-2-5", braid_closure(2, {1, 1, 1, 1, 1}).to_pd(), {}, "closure of sigma_1^5");

  std::mt19937_64 rng(20260101);
  for (int i = 0; i < 8; ++i)
    add("random-special-" + std::to_string(i + 1), random_special_alternating(rng, 5 + i).to_pd(), {},
        "medial of a random bipartite plane graph, seed 20260101");
  for (int i = 0; i < 6; ++i)
    add("random-alternating-" + std::to_string(i + 1), random_alternating(rng, 5 + i).to_pd(), {},
        "medial of a random plane graph, seed 20260101");
  for (int i = 0; i < 4; ++i)
    add("random-medial-" + std::to_string(i + 1), random_medial(rng, 6 + i).to_pd(), {},
        "medial of a random plane graph with random crossings, seed 20260101");
  for (int i = 0; i < 4; ++i)
    add("random-braid-" + std::to_string(i + 1), random_braid(rng, 3 + i % 2, 6 + i).to_pd(), {},
        "closure of a random braid word, seed 20260101");

  Json list = Json::array();
  for (const auto& e : entries) list.push_back(harness::to_json(e));
  Json doc{{"format", "dehnkit-corpus"}, {"version", 1}, {"entries", list}};
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 2;
  }
  out << doc.dump(2) << "\n";
  std::cout << entries.size() << " entries written to " << out_path << "\n";
  return 0;
}
