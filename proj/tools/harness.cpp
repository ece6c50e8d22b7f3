#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "dehnkit/invariants.hpp"

#ifndef DEHNKIT_VERSION
#define DEHNKIT_VERSION "unknown"
#endif

namespace dehnkit::harness {

std::string version() { return DEHNKIT_VERSION; }

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

std::vector<CorpusEntry> corpus_from_json(const Json& j) {
  const Json& list = j.is_array() ? j : j.at("entries");
  std::vector<CorpusEntry> out;
  for (const auto& item : list) {
    CorpusEntry e;
    if (!item.contains("name") || !item.contains("pd")) throw CorpusError("corpus entry needs \"name\" and \"pd\"");
    e.name = item["name"].get<std::string>();
    e.pd = item["pd"].get<std::string>();
    if (item.contains("outer_face") && !item["outer_face"].is_null()) e.outer_face = item["outer_face"].get<int>();
    const Json expected = item.value("expected", Json::object());
    for (const auto& [k, v] : expected.items()) e.expected[k] = {v.at("value").get<std::string>(), v.value("route", "")};
    const Json flags = item.value("flags", Json::object());
    for (const auto& [k, v] : flags.items()) e.flags[k] = v.get<bool>();
    e.provenance = item.value("provenance", "");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open corpus " + path);
  try {
    return corpus_from_json(Json::parse(in));
  } catch (const Json::exception& ex) {
    throw CorpusError(path + ": " + ex.what());
  }
}

Json to_json(const CorpusEntry& e) {
  Json j;
  j["name"] = e.name;
  j["pd"] = e.pd;
  if (e.outer_face) j["outer_face"] = *e.outer_face;
  Json ex = Json::object();
  for (const auto& [k, v] : e.expected) ex[k] = {{"value", v.value}, {"route", v.route}};
  j["expected"] = ex;
  Json fl = Json::object();
  for (const auto& [k, v] : e.flags) fl[k] = v;
  j["flags"] = fl;
  j["provenance"] = e.provenance;
  return j;
}

CorpusEntry make_entry(const std::string& name, const std::string& pd, std::optional<int> outer_face,
                       const std::string& provenance) {
  LinkDiagram d = parse_pd(pd);
  ShadeOptions opts;
  opts.outer_face = outer_face;
  Shading s = shade(d, opts);
  CorpusEntry e;
  e.name = name;
  e.pd = d.to_pd();
  e.outer_face = outer_face;
  LaurentPoly delta = wirtinger_alexander(d);
  Integer det = abs(delta.eval_minus_one());
  e.expected["alexander"] = {delta.to_string(), "wirtinger: gcd of maximal minors of the collapsed Fox matrix"};
  if (!is_split(d)) e.expected["determinant"] = {det.get_str(), "wirtinger: |alexander(-1)|"};
  e.flags["special"] = s.special();
  e.flags["alternating"] = is_alternating(d);
  e.flags["split"] = is_split(d);
  e.provenance = provenance;
  return e;
}

bool EntryResult::pass() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.pass; });
}

bool RunReport::pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass(); }) &&
         std::all_of(fox.begin(), fox.end(), [](const auto& p) { return p.pass; });
}

namespace {

template <class F>
void property(EntryResult& r, const std::string& name, F&& body) {
  PropertyResult p{name, false, ""};
  try {
    p.pass = body(p.detail);
  } catch (const std::exception& ex) {
    p.pass = false;
    p.detail = ex.what();
  }
  r.properties.push_back(std::move(p));
}

bool same_poly(const LaurentPoly& a, const LaurentPoly& b) { return univariate::normalize(a) == univariate::normalize(b); }

void check_properties(EntryResult& r, const CorpusEntry& e, const LinkDiagram& d) {
  ShadeOptions opts;
  opts.outer_face = e.outer_face;
  const Shading s = shade(d, opts);
  const CheckerboardGraph g(d, s);
  const IntMatrix G = goeritz_direct(d, s);
  const bool nonsplit = d.num_pieces() == 1;
  const bool special = s.special() && nonsplit;

  property(r, "goeritz_symmetric", [&](std::string&) { return is_symmetric(G); });
  property(r, "jnu_equals_goeritz", [&](std::string& detail) {
    Presentation p = theorem_main_presentation(d, s, g);
    IntMatrix nu = jacobian_nu(p, region_alpha(p, s));
    const std::size_t n = static_cast<std::size_t>(s.n());
    bool ok = nu.rows() == n && nu.cols() == n + static_cast<std::size_t>(g.beta()) && nu.columns(0, n) == G &&
              is_zero(nu.columns(n, nu.cols() - n));
    if (!ok) detail = "J^nu = " + to_string(nu) + ", G = " + to_string(G);
    return ok;
  });
  LaurentPoly wirt = wirtinger_alexander(d);
  property(r, "alexander_routes_agree", [&](std::string& detail) {
    LaurentPoly main = main_alexander(d, s, g);
    bool ok = same_poly(main, wirt);
    detail = "main " + main.to_string() + ", wirtinger " + wirt.to_string();
    if (special) {
      IntMatrix hp = seifert_plus_dots(d, s);
      LaurentPoly sei = normalize_alexander(determinant(minus_t_times(hp.transpose(), hp)));
      detail += ", seifert " + sei.to_string();
      ok = ok && same_poly(sei, wirt);
    }
    return ok;
  });
  if (auto it = e.expected.find("alexander"); it != e.expected.end())
    property(r, "alexander_expected", [&](std::string& detail) {
      LaurentPoly main = main_alexander(d, s, g);
      detail = "expected " + it->second.value + ", got " + main.to_string();
      return same_poly(univariate::parse(it->second.value), main);
    });
  // Split diagrams have alexander = 0 while G stays nondegenerate in general.
  if (nonsplit)
    property(r, "determinant_matches_alexander", [&](std::string& detail) {
      Integer dg = abs(determinant(G));
      Integer da = abs(wirt.eval_minus_one());
      detail = "|det G| = " + dg.get_str() + ", |alexander(-1)| = " + da.get_str();
      bool ok = dg == da;
      if (auto it = e.expected.find("determinant"); it != e.expected.end()) ok = ok && dg == Integer(it->second.value);
      return ok;
    });
  if (special) {
    property(r, "seifert_from_words", [&](std::string& detail) {
      IntMatrix hp = seifert_plus_dots(d, s);
      IntMatrix hm = seifert_minus(d, s);
      auto [a, b] = seifert_from_words(d, s, g);
      bool ok = a == hm && b == hp && hm == hp.transpose();
      if (!ok) detail = "A = " + to_string(a) + ", B = " + to_string(b) + ", H+ = " + to_string(hp);
      return ok;
    });
    property(r, "alexander_matrix_block", [&](std::string&) {
      alexander_matrix_special(d, s, g);
      return true;
    });
    if (is_alternating(d))
      property(r, "hnn_sufficient", [&](std::string&) {
        return hnn_sufficient(seifert_minus(d, s), seifert_plus_dots(d, s));
      });
  }
  if (nonsplit)
    property(r, "generator_count", [&](std::string& detail) {
      std::size_t main = theorem_main_presentation(d, s, g).num_generators();
      std::size_t wirt_gens = wirtinger_presentation(d).num_generators();
      detail = std::to_string(main) + " vs " + std::to_string(wirt_gens) + " Wirtinger";
      return main == static_cast<std::size_t>(1 + s.n()) && main <= wirt_gens;
    });
  if (!e.flags.empty())
    property(r, "flags", [&](std::string& detail) {
      std::map<std::string, bool> got{{"special", s.special()}, {"alternating", is_alternating(d)}, {"split", !nonsplit}};
      bool ok = true;
      for (const auto& [k, v] : e.flags) {
        auto it = got.find(k);
        if (it == got.end() || it->second != v) {
          ok = false;
          detail += k + " ";
        }
      }
      if (!ok) detail = "mismatched: " + detail;
      return ok;
    });
  property(r, "json_round_trip", [&](std::string&) {
    Json j = to_json(d);
    if (e.outer_face) j["outer_face"] = *e.outer_face;
    LinkDiagram d2 = diagram_from_json(Json::parse(j.dump()));
    Shading s2 = shade(d2, shade_options_from_json(j));
    CheckerboardGraph g2(d2, s2);
    Presentation p1 = theorem_main_presentation(d, s, g), p2 = theorem_main_presentation(d2, s2, g2);
    return goeritz_direct(d2, s2) == G && jacobian_nu(p2, region_alpha(p2, s2)) == jacobian_nu(p1, region_alpha(p1, s));
  });
}
}  // namespace

EntryResult verify_entry(const CorpusEntry& e) {
  auto start = std::chrono::steady_clock::now();
  EntryResult r;
  r.name = e.name;
  std::optional<LinkDiagram> dp;
  property(r, "parse", [&](std::string& detail) {
    dp.emplace(parse_pd(e.pd));
    ShadeOptions opts;
    opts.outer_face = e.outer_face;
    (void)shade(*dp, opts);
    detail = std::to_string(dp->num_crossings()) + " crossings";
    return true;
  });
  if (!dp) return r;
  try {
    check_properties(r, e, *dp);
  } catch (const std::exception& ex) {
    r.properties.push_back({"pipeline", false, ex.what()});
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

FreeWord random_word(std::mt19937_64& rng, int gens, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length), gen(0, gens - 1), sign(0, 1);
  FreeWord w;
  for (int i = len(rng); i > 0; --i) w.push_back({GenId{static_cast<std::uint32_t>(gen(rng))}, sign(rng) ? 1 : -1});
  return w;
}

// Insert cancelling pairs g g^-1 at random places.
FreeWord pad(std::mt19937_64& rng, const FreeWord& w, int gens, int pairs) {
  std::vector<Letter> ls = w.letters();
  std::uniform_int_distribution<int> gen(0, gens - 1), sign(0, 1);
  for (int i = 0; i < pairs; ++i) {
    std::size_t at = std::uniform_int_distribution<std::size_t>(0, ls.size())(rng);
    Letter l{GenId{static_cast<std::uint32_t>(gen(rng))}, sign(rng) ? 1 : -1};
    ls.insert(ls.begin() + static_cast<std::ptrdiff_t>(at), {l, l.inverse()});
  }
  return FreeWord(std::move(ls));
}

}  // namespace

std::vector<PropertyResult> fox_property_suite(const FoxSuiteOptions& o) {
  std::mt19937_64 rng(o.seed);
  const int k = o.generators;
  std::vector<LaurentPoly> images;
  for (int i = 0; i < k; ++i) images.push_back(LaurentPoly::variable(2, static_cast<std::size_t>(i % 2)));
  Specialization alpha(images);
  Specialization tau = alpha.collapsed();

  int product_ok = 0, identity_ok = 0, reduction_ok = 0;
  std::string product_fail, identity_fail, reduction_fail;
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back("x" + std::to_string(i + 1));
  for (int n = 0; n < o.words; ++n) {
    FreeWord u = random_word(rng, k, o.max_length / 2), v = random_word(rng, k, o.max_length - o.max_length / 2);
    FreeWord uv = u.concat(v);
    bool ok = true;
    for (int g = 0; g < k; ++g) {
      GenId x{static_cast<std::uint32_t>(g)};
      ok = ok && fox_derivative(uv, x) == fox_derivative(u, x) + GroupRingElement::of(u) * fox_derivative(v, x);
    }
    if (ok) ++product_ok;
    else if (product_fail.empty()) product_fail = "u = " + u.to_string(names) + ", v = " + v.to_string(names);

    GroupRingElement sum;
    for (int g = 0; g < k; ++g) {
      GenId x{static_cast<std::uint32_t>(g)};
      sum += fox_derivative(uv, x) * (GroupRingElement::of(FreeWord::generator(x)) - GroupRingElement::one());
    }
    if (sum == GroupRingElement::of(uv) - GroupRingElement::one()) ++identity_ok;
    else if (identity_fail.empty()) identity_fail = "w = " + uv.to_string(names);

    FreeWord w = random_word(rng, k, o.max_length);
    FreeWord padded = pad(rng, w, k, std::uniform_int_distribution<int>(1, 5)(rng));
    bool red = true;
    for (int g = 0; g < k; ++g) {
      GenId x{static_cast<std::uint32_t>(g)};
      red = red && alpha.fox(padded, x) == alpha.fox(w, x) && tau.fox(padded, x) == tau.fox(reduce(w), x) &&
            alpha.apply(fox_derivative(padded, x)) == alpha.fox(w, x);
    }
    if (red) ++reduction_ok;
    else if (reduction_fail.empty()) reduction_fail = "w = " + w.to_string(names);
  }
  auto result = [&](const std::string& name, int ok, const std::string& fail) {
    std::string detail = std::to_string(ok) + "/" + std::to_string(o.words);
    if (!fail.empty()) detail += "; first failure " + fail;
    return PropertyResult{name, ok == o.words, detail};
  };
  return {result("fox_product_rule", product_ok, product_fail),
          result("fox_fundamental_identity", identity_ok, identity_fail),
          result("fox_reduction_invariance", reduction_ok, reduction_fail)};
}

RunReport run_verify(const std::vector<CorpusEntry>& corpus, const FoxSuiteOptions& fox, int jobs,
                     const std::string& input_hash) {
  RunReport report;
  report.version = version();
  report.input_hash = input_hash;
  report.seed = fox.seed;
  report.entries.resize(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) report.entries[i] = verify_entry(corpus[i]);
  };
  int n = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::stable_sort(report.entries.begin(), report.entries.end(),
                   [](const auto& a, const auto& b) { return a.name < b.name; });
  if (fox.words > 0) report.fox = fox_property_suite(fox);
  return report;
}

namespace {

Json property_json(const PropertyResult& p) {
  Json j{{"name", p.name}, {"pass", p.pass}};
  if (!p.detail.empty()) j["detail"] = p.detail;
  return j;
}

}  // namespace

Json to_json(const RunReport& r, bool with_timing) {
  Json j;
  j["tool"] = "dehnkit";
  j["version"] = r.version;
  j["input_hash"] = r.input_hash;
  j["seed"] = r.seed;
  j["pass"] = r.pass();
  Json entries = Json::array();
  std::size_t failed = 0;
  for (const auto& e : r.entries) {
    Json ej{{"name", e.name}, {"pass", e.pass()}};
    Json props = Json::array();
    for (const auto& p : e.properties) props.push_back(property_json(p));
    ej["properties"] = props;
    if (with_timing) ej["millis"] = e.millis;
    if (!e.pass()) ++failed;
    entries.push_back(ej);
  }
  j["summary"] = {{"entries", r.entries.size()}, {"failed", failed}};
  j["entries"] = entries;
  Json fox = Json::array();
  for (const auto& p : r.fox) fox.push_back(property_json(p));
  j["fox"] = fox;
  return j;
}

}  // namespace dehnkit::harness
