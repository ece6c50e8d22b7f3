#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "dehnkit/builders.hpp"
#include "dehnkit/invariants.hpp"
#include "dehnkit/serialize.hpp"
#include "harness.hpp"

using namespace dehnkit;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

struct InputOptions {
  std::string pd;
  std::string file;
  std::optional<int> outer;
  std::string format = "text";
  bool oracle = false;
};

struct Loaded {
  LinkDiagram d;
  ShadeOptions opts;
};

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

Loaded load(const InputOptions& io) {
  std::string text = io.pd;
  if (text.empty() && !io.file.empty()) {
    std::ifstream in(io.file);
    if (!in) throw std::runtime_error("cannot open " + io.file);
    text = read_all(in);
  } else if (text.empty()) {
    text = read_all(std::cin);
  }
  auto first = text.find_first_not_of(" \t\r\n");
  ShadeOptions opts;
  if (first != std::string::npos && text[first] == '{') {
    Json j = Json::parse(text);
    if (j.contains("diagram")) j = j["diagram"];
    opts = shade_options_from_json(j);
    LinkDiagram d = diagram_from_json(j);
    if (io.outer) opts.outer_face = io.outer;
    return {std::move(d), opts};
  }
  if (io.outer) opts.outer_face = io.outer;
  return {parse_pd(text), opts};
}

Json diagram_json(const Loaded& in) {
  Json j = to_json(in.d);
  if (in.opts.outer_face) j["outer_face"] = *in.opts.outer_face;
  return j;
}

Json envelope(const std::string& command, const Loaded& in) {
  Json j;
  j["command"] = command;
  j["diagram"] = diagram_json(in);
  return j;
}

void print_matrix(const std::string& fmt, const std::string& label, const IntMatrix& m) {
  if (fmt == "latex")
    std::cout << label << " = " << to_latex(m) << "\n";
  else
    std::cout << (label.empty() ? "" : label + " = ") << to_string(m) << "\n";
}

std::string laurent_matrix_text(const LaurentMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << m(i, j).to_string();
    out << ']';
  }
  out << ']';
  return out.str();
}

int cmd_info(const InputOptions& io) {
  Loaded in = load(io);
  const auto& d = in.d;
  Shading s = shade(d, in.opts);
  CheckerboardGraph g(d, s);
  if (io.format == "json") {
    Json j = envelope("info", in);
    j["shading"] = to_json(s);
    j["graph"] = to_json(g, s);
    j["alternating"] = is_alternating(d);
    j["split"] = is_split(d);
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "pd: " << d.to_pd() << "\n"
            << "crossings: " << d.num_crossings() << ", components: " << d.num_components()
            << ", pieces: " << d.num_pieces() << "\n"
            << "split: " << (is_split(d) ? "yes" : "no") << ", alternating: " << (is_alternating(d) ? "yes" : "no")
            << ", special: " << (s.special() ? "yes" : "no") << "\n"
            << "regions: " << s.num_regions() << " (n = " << s.n() << ", shaded = " << s.num_shaded()
            << "), beta = " << g.beta() << "\n";
  std::cout << "faces:\n";
  for (const auto& f : s.faces()) {
    std::cout << "  " << f.id << ": piece " << f.piece << ", " << f.corners.size() << " corners, region "
              << s.regions()[s.region_of_face(f.id)].name << (f.is_unbounded ? ", outer" : "") << "\n";
  }
  std::cout << "eta:";
  for (int x = 0; x < d.num_crossings(); ++x) std::cout << ' ' << (s.eta(x) > 0 ? "+1" : "-1");
  std::cout << "\n";
  if (!s.special() && s.inconsistent_region() >= 0)
    std::cout << "inconsistent shaded region: " << s.regions()[s.inconsistent_region()].name << "\n";
  return kOk;
}

int cmd_goeritz(const InputOptions& io) {
  Loaded in = load(io);
  Shading s = shade(in.d, in.opts);
  IntMatrix G = goeritz_direct(in.d, s);
  Integer det = determinant(G);
  bool agree = true;
  Integer oracle;
  if (io.oracle) {
    oracle = abs(wirtinger_alexander(in.d).eval_minus_one());
    agree = abs(det) == oracle;
  }
  if (io.format == "json") {
    Json j = envelope("goeritz", in);
    j["goeritz"] = to_json(G);
    j["determinant"] = det.get_str();
    if (io.oracle) j["oracle"] = {{"route", "wirtinger"}, {"determinant", oracle.get_str()}, {"agree", agree}};
    std::cout << j.dump(2) << "\n";
  } else {
    print_matrix(io.format, io.format == "latex" ? "G" : "", G);
    if (io.oracle)
      std::cout << "oracle: |det G| = " << abs(det) << ", wirtinger |alexander(-1)| = " << oracle
                << (agree ? " (agree)" : " (DISAGREE)") << "\n";
  }
  return agree ? kOk : kVerifyFailed;
}

Presentation build_presentation(const std::string& kind, const LinkDiagram& d, const Shading& s,
                                 const CheckerboardGraph& g) {
  if (kind == "wirtinger") return wirtinger_presentation(d);
  if (kind == "dehn") return dehn_presentation(d, s, g);
  return theorem_main_presentation(d, s, g);
}

int cmd_present(const InputOptions& io, const std::string& kind) {
  Loaded in = load(io);
  Shading s = shade(in.d, in.opts);
  CheckerboardGraph g(in.d, s);
  Presentation p = build_presentation(kind, in.d, s, g);
  if (io.format == "json") {
    Json j = envelope("present", in);
    j["kind"] = kind;
    j["presentation"] = to_json(p);
    std::cout << j.dump(2) << "\n";
  } else if (io.format == "latex") {
    std::cout << presentation_to_latex(p) << "\n";
  } else {
    std::cout << p.to_text() << "\n";
    auto names = p.names();
    for (const auto& r : p.relators) std::cout << "  " << r.tag << ": " << r.word.to_string(names) << "\n";
  }
  return kOk;
}

int cmd_jacobian(const InputOptions& io, const std::string& kind, const std::string& spec) {
  Loaded in = load(io);
  Shading s = shade(in.d, in.opts);
  CheckerboardGraph g(in.d, s);
  Presentation p = build_presentation(kind, in.d, s, g);
  Specialization alpha = kind == "wirtinger" ? wirtinger_alpha(p, in.d) : region_alpha(p, s);
  bool agree = true;
  Json j = envelope("jacobian", in);
  j["kind"] = kind;
  j["specialization"] = spec;
  if (spec == "nu") {
    IntMatrix nu = jacobian_nu(p, alpha);
    if (io.oracle && kind == "main") {
      IntMatrix G = goeritz_direct(in.d, s);
      const std::size_t n = static_cast<std::size_t>(s.n());
      agree = nu.columns(0, n) == G && is_zero(nu.columns(n, nu.cols() - n));
    }
    if (io.format == "json") {
      j["matrix"] = to_json(nu);
    } else {
      print_matrix(io.format, io.format == "latex" ? "J^\\nu" : "", nu);
    }
  } else {
    LaurentMatrix m = spec == "tau" ? jacobian_tau(p, alpha) : jacobian_alpha(p, alpha);
    if (io.format == "json")
      j["matrix"] = to_json(m);
    else if (io.format == "latex")
      std::cout << to_latex(m) << "\n";
    else
      std::cout << laurent_matrix_text(m) << "\n";
  }
  if (io.oracle && spec == "nu" && kind == "main") {
    if (io.format == "json")
      j["oracle"] = {{"route", "goeritz"}, {"agree", agree}};
    else
      std::cout << "oracle: J^nu " << (agree ? "equals" : "DIFFERS FROM") << " (G | 0)\n";
  }
  if (io.format == "json") std::cout << j.dump(2) << "\n";
  return agree ? kOk : kVerifyFailed;
}

int cmd_seifert(const InputOptions& io) {
  Loaded in = load(io);
  Shading s = shade(in.d, in.opts);
  CheckerboardGraph g(in.d, s);
  IntMatrix hp = seifert_plus_dots(in.d, s);
  IntMatrix hm = seifert_minus(in.d, s);
  auto [a, b] = seifert_from_words(in.d, s, g);
  bool agree = a == hm && b == hp;
  if (io.format == "json") {
    Json j = envelope("seifert", in);
    j["h_plus"] = to_json(hp);
    j["h_minus"] = to_json(hm);
    j["a"] = to_json(a);
    j["b"] = to_json(b);
    j["agree"] = agree;
    j["hnn_sufficient"] = hnn_sufficient(a, b);
    std::cout << j.dump(2) << "\n";
  } else {
    print_matrix(io.format, io.format == "latex" ? "H^+" : "H+", hp);
    print_matrix(io.format, io.format == "latex" ? "H^-" : "H-", hm);
    if (io.format != "latex")
      std::cout << "from return values: A " << (a == hm ? "=" : "!=") << " H-, B " << (b == hp ? "=" : "!=")
                << " H+\n"
                << "hnn_sufficient: " << (hnn_sufficient(a, b) ? "true" : "false") << "\n";
  }
  return agree ? kOk : kVerifyFailed;
}

int cmd_alexander(const InputOptions& io) {
  Loaded in = load(io);
  Shading s = shade(in.d, in.opts);
  CheckerboardGraph g(in.d, s);
  LaurentPoly main = main_alexander(in.d, s, g);
  Json routes = Json::object();
  bool agree = true;
  if (io.oracle) {
    LaurentPoly w = wirtinger_alexander(in.d);
    routes["wirtinger"] = w.to_string();
    agree = agree && w == main;
    if (s.special() && !is_split(in.d)) {
      IntMatrix hp = seifert_plus_dots(in.d, s);
      LaurentPoly sei = normalize_alexander(determinant(minus_t_times(hp.transpose(), hp)));
      routes["seifert"] = sei.to_string();
      agree = agree && sei == main;
    }
  }
  if (io.format == "json") {
    Json j = envelope("alexander", in);
    j["alexander"] = main.to_string();
    if (io.oracle) {
      j["oracle"] = routes;
      j["agree"] = agree;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << main.to_string() << "\n";
    for (const auto& [k, v] : routes.items()) std::cout << "oracle " << k << ": " << v.get<std::string>() << "\n";
    if (io.oracle) std::cout << (agree ? "routes agree" : "routes DISAGREE") << "\n";
  }
  return agree ? kOk : kVerifyFailed;
}

std::string default_corpus() {
  if (const char* env = std::getenv("DEHNKIT_CORPUS")) return env;
#ifdef DEHNKIT_DEFAULT_CORPUS
  return DEHNKIT_DEFAULT_CORPUS;
#else
  return "data/corpus.json";
#endif
}

struct VerifyOptions {
  std::string corpus;
  std::string report;
  std::uint64_t seed = 1;
  int jobs = 0;
  int fox_words = 1000;
  bool timing = false;
};

int cmd_verify(const VerifyOptions& vo, const std::string& format) {
  std::string path = vo.corpus.empty() ? default_corpus() : vo.corpus;
  std::ifstream in(path);
  if (!in) throw harness::CorpusError("cannot open corpus " + path);
  std::string bytes = read_all(in);
  std::vector<harness::CorpusEntry> corpus;
  try {
    corpus = harness::corpus_from_json(Json::parse(bytes));
  } catch (const Json::exception& ex) {
    throw harness::CorpusError(path + ": " + ex.what());
  }
  int jobs = vo.jobs > 0 ? vo.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  harness::FoxSuiteOptions fox;
  fox.seed = vo.seed;
  fox.words = vo.fox_words;
  auto report = harness::run_verify(corpus, fox, jobs, harness::fnv1a_hex(bytes));
  Json j = harness::to_json(report, vo.timing);
  if (!vo.report.empty()) {
    std::ofstream out(vo.report);
    out << j.dump(2) << "\n";
  }
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& e : report.entries) {
      std::cout << (e.pass() ? "PASS " : "FAIL ") << e.name << "\n";
      for (const auto& p : e.properties)
        if (!p.pass) std::cout << "     " << p.name << ": " << p.detail << "\n";
    }
    for (const auto& p : report.fox) std::cout << (p.pass ? "PASS " : "FAIL ") << p.name << " " << p.detail << "\n";
    std::cout << (report.pass() ? "all properties pass" : "verification FAILED") << " (" << report.entries.size()
              << " entries, input " << report.input_hash << ")\n";
  }
  return report.pass() ? kOk : kVerifyFailed;
}

int cmd_random(const std::string& kind, int size, int strands, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LinkDiagram d = kind == "special"       ? random_special_alternating(rng, size)
                  : kind == "alternating" ? random_alternating(rng, size)
                  : kind == "medial"      ? random_medial(rng, size)
                                          : random_braid(rng, strands, size);
  std::cout << d.to_pd() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goeritz, Seifert and Alexander matrices from Dehn presentations of link diagrams"};
  app.set_version_flag("--version", harness::version());
  app.require_subcommand(1);

  InputOptions io;
  auto add_input = [&](CLI::App* c) {
    c->add_option("pd", io.pd, "PD code, e.g. \"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\" (default: stdin)");
    c->add_option("--file,-f", io.file, "read the PD code or diagram JSON from a file");
    c->add_option("--outer", io.outer, "face id to use as the unbounded face of its piece");
    c->add_option("--format", io.format, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
    c->add_flag("--oracle", io.oracle, "also run the Wirtinger route and report agreement");
  };

  auto* info = app.add_subcommand("info", "faces, regions, shading and checkerboard graph");
  add_input(info);
  auto* goeritz = app.add_subcommand("goeritz", "reduced Goeritz matrix");
  add_input(goeritz);
  std::string kind = "main";
  auto* present = app.add_subcommand("present", "group presentation");
  add_input(present);
  present->add_option("--kind", kind, "main, dehn or wirtinger")->check(CLI::IsMember({"main", "dehn", "wirtinger"}));
  auto* jacobian = app.add_subcommand("jacobian", "specialized Fox Jacobian");
  add_input(jacobian);
  jacobian->add_option("--kind", kind, "main, dehn or wirtinger")->check(CLI::IsMember({"main", "dehn", "wirtinger"}));
  bool nu = false, tau = false, alpha = false;
  auto* fnu = jacobian->add_flag("--nu", nu, "evaluate at t = -1 (default)");
  auto* ftau = jacobian->add_flag("--tau", tau, "collapse to one variable");
  auto* falpha = jacobian->add_flag("--alpha", alpha, "multivariable abelian image");
  fnu->excludes(ftau)->excludes(falpha);
  ftau->excludes(falpha);
  auto* seifert = app.add_subcommand("seifert", "Seifert matrices of a special diagram");
  add_input(seifert);
  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial");
  add_input(alexander);

  VerifyOptions vo;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "run the property suite over a corpus");
  verify->add_option("corpus", vo.corpus, "corpus JSON (default: $DEHNKIT_CORPUS or the bundled corpus)");
  verify->add_option("--seed", vo.seed, "seed for randomized property tests");
  verify->add_option("--jobs,-j", vo.jobs, "worker threads (default: hardware concurrency)");
  verify->add_option("--fox-words", vo.fox_words, "random words per Fox property");
  verify->add_option("--report", vo.report, "write the JSON report to this file");
  verify->add_flag("--timing", vo.timing, "include per-entry timing in the report");
  verify->add_option("--format", verify_format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::string rkind = "special";
  int rsize = 8, rstrands = 3;
  std::uint64_t rseed = 1;
  auto* random = app.add_subcommand("random", "print a random PD code");
  random->add_option("--kind", rkind, "special, alternating, medial or braid")
      ->check(CLI::IsMember({"special", "alternating", "medial", "braid"}));
  random->add_option("--size", rsize, "crossings (braid: word length)");
  random->add_option("--strands", rstrands, "braid strands");
  random->add_option("--seed", rseed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (info->parsed()) return cmd_info(io);
    if (goeritz->parsed()) return cmd_goeritz(io);
    if (present->parsed()) return cmd_present(io, kind);
    if (jacobian->parsed()) return cmd_jacobian(io, kind, tau ? "tau" : alpha ? "alpha" : "nu");
    if (seifert->parsed()) return cmd_seifert(io);
    if (alexander->parsed()) return cmd_alexander(io);
    if (verify->parsed()) return cmd_verify(vo, verify_format);
    if (random->parsed()) return cmd_random(rkind, rsize, rstrands, rseed);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const NotSpecialError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DiagramError& e) {
    std::cerr << "invalid diagram: " << e.what() << "\n";
    return kInputError;
  } catch (const harness::CorpusError& e) {
    std::cerr << "corpus error: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    std::cerr << "JSON error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
