#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "planarcanon/checks.hpp"
#include "planarcanon/embed.hpp"
#include "planarcanon/io.hpp"
#include "planarcanon/wl.hpp"

using json = nlohmann::json;
using namespace planarcanon;

namespace {

int exit_error(const std::exception& e) {
  std::cerr << "error: " << e.what() << "\n";
  return 2;
}

json witness_json(const CanonicalForm& c) {
  return json{{"origin", {c.origin_a, c.origin_b}}, {"conjugate", c.conjugated}};
}

Configuration parse_config(const std::string& kind, const std::string& csv,
                           const Graph& g) {
  std::vector<int> ids;
  std::string cur;
  for (char ch : csv + ",") {
    if (ch == ',') {
      if (!cur.empty()) ids.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  Configuration c = [&] {
    if (kind == "X") {
      if (ids.size() != 5) fail(ErrorCode::ParseError, "X expects w,x,y,u,v");
      return Configuration::x_config(ids[0], ids[1], ids[2], ids[3], ids[4]);
    }
    if (kind == "H") {
      if (ids.size() != 6) fail(ErrorCode::ParseError, "H expects z,w,x,y,u,v");
      return Configuration::h_config(ids[0], ids[1], ids[2], ids[3], ids[4], ids[5]);
    }
    fail(ErrorCode::ParseError, "config kind must be X or H");
  }();
  c.validate(g);
  return c;
}

json path_json(const PathSeq& p) { return json(p.verts); }

json transcript_json(const Transcript& t) {
  json moves = json::array();
  for (const auto& m : t.moves)
    moves.push_back({{"side", m.side}, {"pebble", m.pebble}, {"vertex", m.vertex}});
  json out{{"k", t.k},           {"rmax", t.rmax},   {"moves", moves},
           {"winner", t.winner}, {"round", t.round}, {"violation", t.violation}};
  if (!t.error.empty()) out["error"] = t.error;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"canonization, isomorphism and game tools for triconnected planar graphs"};
  app.require_subcommand(1);

  // gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a corpus graph");
  std::string gen_family;
  int gen_param = 0;
  unsigned gen_seed = 0;
  std::string gen_out;
  gen->add_option("--family", gen_family, "family name")->required();
  gen->add_option("--param", gen_param, "family parameter");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");

  // embed --------------------------------------------------------------
  auto* emb = app.add_subcommand("embed", "compute a rotation system of a graph");
  std::string emb_in;
  emb->add_option("graph", emb_in, "graph file")->required();

  // faces --------------------------------------------------------------
  auto* fc = app.add_subcommand("faces", "trace the faces of a rotation system");
  std::string fc_in;
  fc->add_option("rotation", fc_in, "rotation file")->required();

  // canon --------------------------------------------------------------
  auto* cn = app.add_subcommand("canon", "canonical code of a graph");
  std::string cn_in;
  bool cn_rotation = false;
  cn->add_option("input", cn_in, "graph (or rotation) file")->required();
  cn->add_flag("--rotation", cn_rotation, "input is a rotation system");

  // iso ----------------------------------------------------------------
  auto* is = app.add_subcommand("iso", "isomorphism test for triconnected planar graphs");
  std::string is_a, is_b;
  is->add_option("a", is_a)->required();
  is->add_option("b", is_b)->required();

  // wl -----------------------------------------------------------------
  auto* wl = app.add_subcommand("wl", "Weisfeiler-Lehman comparison");
  std::string wl_a, wl_b;
  int wl_k = 1, wl_rounds = 64;
  bool wl_count_free = false;
  wl->add_option("--k", wl_k, "dimension")->required();
  wl->add_option("--rounds", wl_rounds, "round cap");
  wl->add_flag("--count-free", wl_count_free, "set-based updates");
  wl->add_option("a", wl_a)->required();
  wl->add_option("b", wl_b)->required();

  // game ---------------------------------------------------------------
  auto* gm = app.add_subcommand("game", "play an Ehrenfeucht-Fraisse pebble game");
  std::string gm_a, gm_b, gm_spoiler = "solver", gm_duplicator = "optimal";
  std::string gm_structure = "graph";
  int gm_k = 3, gm_rmax = 16;
  std::vector<std::string> gm_pebbles;
  gm->add_option("a", gm_a)->required();
  gm->add_option("b", gm_b)->required();
  gm->add_option("--structure", gm_structure, "graph|rotation");
  gm->add_option("--k", gm_k, "pebble count");
  gm->add_option("--rmax", gm_rmax, "round cap");
  gm->add_option("--spoiler", gm_spoiler, "halving|coord|solver");
  gm->add_option("--duplicator", gm_duplicator, "optimal|greedy|random:<seed>");
  gm->add_option("--pebble", gm_pebbles, "initial pair u:v (repeatable, slot order)");

  // geometry -----------------------------------------------------------
  auto* ge = app.add_subcommand("geometry", "configuration geometry dumps");
  std::string ge_in, ge_kind, ge_csv, ge_op = "classify";
  ge->add_option("graph", ge_in)->required();
  ge->add_option("--config", ge_kind, "X or H")->required();
  ge->add_option("--vertices", ge_csv, "comma separated labels")->required();
  ge->add_option("--op", ge_op, "classify|boundaries|special|entrances|essential|chain");

  // check ----------------------------------------------------------------
  auto* ck = app.add_subcommand("check", "run invariant suites over the corpus");
  std::vector<std::string> ck_suites;
  int ck_nmax = 12;
  unsigned ck_seed = 1;
  ck->add_option("--suite", ck_suites, "suite names (default: all)");
  ck->add_option("--nmax", ck_nmax, "size cap for configuration suites");
  ck->add_option("--seed", ck_seed, "corpus seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      Graph g = generate(gen_family, gen_param, gen_seed);
      if (gen_out.empty()) {
        write_graph(std::cout, g);
      } else {
        std::ofstream out(gen_out);
        write_graph(out, g);
      }
      return 0;
    }
    if (*emb) {
      RotationSystem r = embed(load_graph_file(emb_in));
      write_rotation(std::cout, r);
      return 0;
    }
    if (*fc) {
      RotationSystem r = load_rotation_file(fc_in);
      FaceSet f = faces(r);
      json walks = json::array();
      for (const auto& w : f.walks) walks.push_back(w);
      std::cout << json{{"faces", walks}, {"euler", genus_check(r)}}.dump() << "\n";
      return 0;
    }
    if (*cn) {
      CanonicalForm form = cn_rotation
                               ? canonical_code_rotation(load_rotation_file(cn_in))
                               : canonical_code_graph(load_graph_file(cn_in));
      std::cout << json{{"code", code_hex(form)}, {"witness", witness_json(form)}}.dump()
                << "\n";
      return 0;
    }
    if (*is) {
      bool same = iso_graphs(load_graph_file(is_a), load_graph_file(is_b));
      std::cout << json{{"isomorphic", same}}.dump() << "\n";
      return same ? 0 : 1;
    }
    if (*wl) {
      WlOptions opt;
      opt.count_free = wl_count_free;
      auto v = wl_distinguish(load_graph_file(wl_a), load_graph_file(wl_b), wl_k,
                              wl_rounds, opt);
      std::cout << json{{"distinguished", v.distinguished},
                        {"round", v.round},
                        {"histogramSizes", v.histogram_sizes}}
                       .dump()
                << "\n";
      return v.distinguished ? 1 : 0;
    }
    if (*gm) {
      Structure a = gm_structure == "rotation"
                        ? Structure::rotation(load_rotation_file(gm_a))
                        : Structure::graph(load_graph_file(gm_a));
      Structure b = gm_structure == "rotation"
                        ? Structure::rotation(load_rotation_file(gm_b))
                        : Structure::graph(load_graph_file(gm_b));
      GamePosition start = GamePosition::empty(gm_k);
      for (size_t i = 0; i < gm_pebbles.size(); ++i) {
        auto colon = gm_pebbles[i].find(':');
        if (colon == std::string::npos)
          fail(ErrorCode::ParseError, "--pebble expects u:v");
        start.left[i] = std::stoi(gm_pebbles[i].substr(0, colon));
        start.right[i] = std::stoi(gm_pebbles[i].substr(colon + 1));
      }
      std::unique_ptr<SpoilerStrategy> sp;
      std::unique_ptr<DepthSolver> solver;
      if (gm_spoiler == "halving") sp = spoiler_halving(0, 1, 2);
      else if (gm_spoiler == "coord") sp = spoiler_coordinate_strategy();
      else if (gm_spoiler == "solver") {
        solver = std::make_unique<DepthSolver>(a, b, gm_k);
        sp = spoiler_solver(*solver);
      } else fail(ErrorCode::ParseError, "unknown spoiler: " + gm_spoiler);
      std::unique_ptr<DuplicatorAdversary> dup;
      if (gm_duplicator == "optimal") {
        if (!solver) solver = std::make_unique<DepthSolver>(a, b, gm_k);
        dup = duplicator_optimal(*solver);
      } else if (gm_duplicator == "greedy") {
        dup = duplicator_greedy_metric();
      } else if (gm_duplicator.rfind("random:", 0) == 0) {
        dup = duplicator_random(std::stoul(gm_duplicator.substr(7)));
      } else fail(ErrorCode::ParseError, "unknown duplicator: " + gm_duplicator);
      Transcript t = play(a, b, *sp, *dup, gm_k, gm_rmax, start);
      std::cout << transcript_json(t).dump() << "\n";
      return t.winner == "spoiler" ? 0 : 1;
    }
    if (*ge) {
      Graph g = load_graph_file(ge_in);
      Configuration c = parse_config(ge_kind, ge_csv, g);
      RotationSystem r = embed(g);
      LocalGeometry lg(r, c);
      json out;
      auto cls = lg.cls();
      out["class"] = cls == ConfigClass::collocated ? "collocated"
                     : cls == ConfigClass::twisted  ? "twisted"
                                                    : "neither";
      if (ge_op == "boundaries") {
        for (auto [name, sp] : {std::pair{"xu", SidePair::XU}, {"yv", SidePair::YV}}) {
          auto [s, t] = lg.pair_ends(sp);
          BoundaryPair bp = lg.boundaries(sp, s, t);
          out[name] = {{"b1", path_json(bp.b1)},
                       {"b2", path_json(bp.b2)},
                       {"singleton", bp.singleton}};
        }
      } else if (ge_op == "special") {
        SpecialVertices sv = lg.special_vertices();
        out["special"] = {{"z1", sv.z1}, {"x1", sv.x1}, {"y1", sv.y1},
                          {"w1", sv.w1}, {"u1", sv.u1}, {"v1", sv.v1},
                          {"twisted", sv.twisted_variant}};
      } else if (ge_op == "entrances") {
        out["entrances"] = {{"x", lg.entrances(ConfigSide::x)},
                            {"y", lg.entrances(ConfigSide::y)},
                            {"u", lg.entrances(ConfigSide::u)},
                            {"v", lg.entrances(ConfigSide::v)}};
      } else if (ge_op == "essential") {
        EssentialDecomposition ed = lg.essential_decomposition();
        out["cutpoints"] = ed.cutpoints;
        out["segments"] = ed.segments;
      } else if (ge_op == "chain") {
        ExternalChain ch = lg.external_chain();
        json steps = json::array();
        for (const auto& s : ch.steps)
          steps.push_back({{"c", s.c},
                           {"a", s.a},
                           {"b", s.b},
                           {"path", path_json(s.path)},
                           {"xExternal", s.x_external},
                           {"routeChoices", s.route_choices}});
        out["steps"] = steps;
      }
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (*ck) {
      Corpus corpus = default_corpus(20, ck_seed);
      SuiteOptions opt;
      opt.nmax = ck_nmax;
      opt.seed = ck_seed;
      auto suites = ck_suites.empty() ? suite_names() : ck_suites;
      json report = json::array();
      bool all_pass = true;
      for (const auto& name : suites) {
        SuiteResult r = run_suite(name, corpus, opt);
        all_pass = all_pass && r.pass;
        report.push_back({{"suite", r.suite},
                          {"pass", r.pass},
                          {"checked", r.checked},
                          {"seconds", r.seconds},
                          {"failures", r.failures}});
        std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << r.suite << " ("
                  << r.checked << " checks, " << r.seconds << "s)\n";
      }
      std::cout << report.dump() << "\n";
      return all_pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    return exit_error(e);
  }
  return 2;
}
