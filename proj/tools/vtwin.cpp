#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vtwin/config.hpp"
#include "vtwin/error.hpp"
#include "vtwin/graph.hpp"
#include "vtwin/morphisms.hpp"
#include "vtwin/perm.hpp"
#include "vtwin/raag.hpp"
#include "vtwin/rewriting.hpp"
#include "vtwin/verify.hpp"
#include "vtwin/word.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Config {
  int n = 0;
  std::string format = "text";
  bool format_given = false;
  std::uint64_t seed = vtwin::kDefaultSeed;
  bool force = false;
};

// Remembers the text being parsed so diagnostics can point into it.
struct Input {
  std::string text;
};
const Input *current_input = nullptr;

void emit(const Config &cfg, const std::string &text, const json &doc) {
  if (cfg.format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

json perm_json(const vtwin::Perm &p) {
  return {{"images", p.images()}, {"cycles", p.cycles()}};
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

vtwin::VWord vword(const Config &cfg, const Input &in) {
  current_input = &in;
  vtwin::VWord w = vtwin::VWord::parse(cfg.n, in.text);
  current_input = nullptr;
  return w;
}

vtwin::RaagWord raag(const Config &cfg, const Input &in) {
  current_input = &in;
  vtwin::RaagWord w = vtwin::RaagWord::parse(cfg.n, in.text);
  current_input = nullptr;
  return w;
}

json graph_json(const vtwin::DefGraph &g) {
  json verts = json::array(), edges = json::array();
  for (vtwin::LambdaGen v : g.vertices())
    verts.push_back(vtwin::to_string(v));
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.adjacency()[u])
      if (u < v)
        edges.push_back({vtwin::to_string(g.vertex(u)), vtwin::to_string(g.vertex(v))});
  return {{"n", g.strands()}, {"vertices", verts}, {"edges", edges}};
}

int run_graph(const Config &cfg) {
  const vtwin::DefGraph g(cfg.n);
  if (cfg.format == "dot") {
    std::cout << g.to_dot();
    return 0;
  }
  std::string text;
  for (int u = 0; u < g.vertex_count(); ++u) {
    text += vtwin::to_string(g.vertex(u)) + ":";
    for (int v : g.adjacency()[u])
      text += " " + vtwin::to_string(g.vertex(v));
    if (u + 1 < g.vertex_count())
      text += "\n";
  }
  emit(cfg, text, graph_json(g));
  return 0;
}

int run_graphprops(const Config &cfg) {
  const int n = cfg.n;
  const vtwin::DefGraph g(n);
  const auto verts = vtwin::generators(n);
  std::size_t dominating = 0;
  json components = json::object();
  std::string comp_text;
  for (vtwin::LambdaGen a : verts) {
    for (vtwin::LambdaGen b : verts)
      if (a != b && vtwin::dominates(n, a, b))
        ++dominating;
    const auto comps = vtwin::components_minus_star(n, a);
    components[vtwin::to_string(a)] = comps.size();
    comp_text += " " + vtwin::to_string(a) + "=" + std::to_string(comps.size());
  }
  const vtwin::LambdaGen first{1, 2};
  json doc{{"n", n},
           {"vertices", g.vertex_count()},
           {"edges", g.edge_count()},
           {"degree", g.degree(0)},
           {"non_neighbours", vtwin::non_neighbors(n, first).size()},
           {"star", vtwin::star(n, first).size()},
           {"chordal", vtwin::is_chordal(n)},
           {"complement_components", vtwin::complement_component_count(n)},
           {"dominating_pairs", dominating},
           {"components_minus_star", components}};
  std::string text = "vertices " + std::to_string(g.vertex_count()) + "\nedges " +
                     std::to_string(g.edge_count()) + "\ndegree " +
                     std::to_string(g.degree(0)) + "\nnon-neighbours " +
                     std::to_string(vtwin::non_neighbors(n, first).size()) + "\nstar " +
                     std::to_string(vtwin::star(n, first).size()) + "\nchordal " +
                     bool_str(vtwin::is_chordal(n)) + "\ncomplement-components " +
                     std::to_string(vtwin::complement_component_count(n)) +
                     "\ndominating-pairs " + std::to_string(dominating) +
                     "\ncomponents-minus-star" + comp_text;
  emit(cfg, text, doc);
  return 0;
}

int run_auts(const Config &cfg) {
  vtwin::Limits limits = vtwin::kDefaultLimits;
  if (cfg.n > limits.max_automorphism_strands) {
    if (!cfg.force) {
      std::cerr << "error: auts refuses n > " << limits.max_automorphism_strands
                << " without --force\n";
      return kExitUsage;
    }
    limits.max_automorphism_strands = cfg.n;
  }
  const vtwin::DefGraph g(cfg.n);
  const auto autos = vtwin::graph_automorphisms(cfg.n, limits);
  json list = json::array();
  std::string text = std::to_string(autos.size()) + " automorphisms";
  for (const auto &a : autos) {
    json m = json::object();
    std::string line;
    for (int v = 0; v < g.vertex_count(); ++v) {
      m[vtwin::to_string(g.vertex(v))] = vtwin::to_string(g.vertex(a[v]));
      line += (v ? " " : "") + vtwin::to_string(g.vertex(a[v]));
    }
    list.push_back(m);
    text += "\n" + line;
  }
  emit(cfg, text, json{{"n", cfg.n}, {"count", autos.size()}, {"automorphisms", list}});
  return 0;
}

int run_verify(const Config &cfg, const std::string &suite) {
  vtwin::SuiteOptions opts;
  opts.seed = cfg.seed;
  const vtwin::VerificationReport r =
      suite == "all" ? vtwin::verify_all(cfg.n, opts) : vtwin::run_suite(suite, cfg.n, opts);
  // Reports default to JSON.
  if (cfg.format == "text")
    std::cout << r.to_text();
  else
    std::cout << r.to_json() << "\n";
  return r.all_passed() ? 0 : kExitFailure;
}

void print_caret(std::size_t position) {
  if (!current_input)
    return;
  std::cerr << "  " << current_input->text << "\n  "
            << std::string(std::min(position, current_input->text.size()), ' ') << "^\n";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Virtual twin groups: words, rewriting, RAAG normal forms, graphs, checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--n", cfg.n, "strand count")->required()->check(CLI::Range(2, 64));
  auto *format = app.add_option("--format", cfg.format, "output format")
                     ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--seed", cfg.seed, "seed for randomised checks");
  app.add_flag("--force", cfg.force, "lift resource guards");

  Input a, b;
  std::string suite;
  std::function<int()> action;

  auto *pi = app.add_subcommand("pi", "permutation image of a word");
  pi->add_option("word", a.text, "word in s<i>/r<i>")->required();
  pi->callback([&] {
    action = [&] {
      const vtwin::Perm p = vtwin::pi_image(vword(cfg, a));
      emit(cfg, p.str(), perm_json(p));
      return 0;
    };
  });

  auto *isid = app.add_subcommand("isid", "is the word trivial in VT_n");
  isid->add_option("word", a.text)->required();
  isid->callback([&] {
    action = [&] {
      const bool r = vtwin::vt_is_identity(vword(cfg, a));
      emit(cfg, bool_str(r), json{{"identity", r}});
      return 0;
    };
  });

  auto *equal = app.add_subcommand("equal", "are two words equal in VT_n");
  equal->add_option("u", a.text)->required();
  equal->add_option("v", b.text)->required();
  equal->callback([&] {
    action = [&] {
      const vtwin::VWord u = vword(cfg, a);
      const bool r = vtwin::vt_equal(u, vword(cfg, b));
      emit(cfg, bool_str(r), json{{"equal", r}});
      return 0;
    };
  });

  auto *rewrite = app.add_subcommand("rewrite", "rewrite a pure word into lambda generators");
  rewrite->add_option("word", a.text)->required();
  rewrite->callback([&] {
    action = [&] {
      const vtwin::RaagWord w = vtwin::rewrite_tau(vword(cfg, a));
      emit(cfg, w.str(), json{{"word", w.str()}});
      return 0;
    };
  });

  auto *decompose = app.add_subcommand("decompose", "split a word as pure part times coset");
  decompose->add_option("word", a.text)->required();
  decompose->callback([&] {
    action = [&] {
      const vtwin::Decomposition d = vtwin::decompose(vword(cfg, a));
      emit(cfg, "pure " + d.pure.str() + "\nperm " + d.perm.str(),
           json{{"pure", d.pure.str()}, {"perm", perm_json(d.perm)}});
      return 0;
    };
  });

  auto *nf = app.add_subcommand("nf", "normal form of a lambda word");
  nf->add_option("word", a.text, "word in L<i>.<j>[^k]")->required();
  nf->callback([&] {
    action = [&] {
      const vtwin::RaagWord w = vtwin::normal_form(raag(cfg, a));
      emit(cfg, w.str(), json{{"word", w.str()}});
      return 0;
    };
  });

  app.add_subcommand("graph", "defining graph of PVT_n")->callback([&] {
    action = [&] { return run_graph(cfg); };
  });
  app.add_subcommand("graphprops", "graph invariants of PVT_n")->callback([&] {
    action = [&] { return run_graphprops(cfg); };
  });
  app.add_subcommand("auts", "graph automorphisms of PVT_n")->callback([&] {
    action = [&] { return run_auts(cfg); };
  });

  auto *verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> names{"all"};
  for (const vtwin::SuiteInfo &s : vtwin::suites())
    names.emplace_back(s.name);
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(names));
  verify->callback([&] {
    action = [&] { return run_verify(cfg, suite); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  cfg.format_given = format->count() > 0;
  if (!cfg.format_given && app.got_subcommand("verify"))
    cfg.format = "json";
  if (cfg.format == "dot" && !app.got_subcommand("graph")) {
    std::cerr << "error: --format dot is only valid for graph\n";
    return kExitUsage;
  }
  if (cfg.n > vtwin::kDefaultLimits.max_strands && !cfg.force) {
    std::cerr << "error: n > " << vtwin::kDefaultLimits.max_strands
              << " needs --force\n";
    return kExitUsage;
  }

  try {
    return action();
  } catch (const vtwin::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    print_caret(e.position());
    return kExitUsage;
  } catch (const vtwin::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
