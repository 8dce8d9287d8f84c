// tiered: command-line front end for tiered graphs, G-parking functions,
// labelled parallelogram polyominoes and the Postnikov-Shapiro algebras.
//
// JSON reports go to stdout, diagnostics to stderr. Exit codes: 0 success,
// 1 validation or check failure, 2 parse or I/O error, 3 cap exceeded.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tiered/inversions.hpp"
#include "tiered/io.hpp"
#include "tiered/polyomino.hpp"
#include "tiered/ps_algebra.hpp"
#include "tiered/sandpile.hpp"
#include "tiered/spanning.hpp"
#include "tiered/tiered_graph.hpp"
#include "tiered/whitney.hpp"

#ifndef TIERED_VERSION
#define TIERED_VERSION "0.0.0"
#endif

using namespace tiered;
using io::json;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kParseFailed = 2, kCapExceeded = 3 };

struct Run {
  std::uint64_t seed = 0;
  Caps caps;
  std::string format = "json";
  bool check = false;
  json inputs = json::array();
  std::string summary;
};

Run run;

json load(const std::string& path) {
  const std::string text = io::read_text_file(path);
  run.inputs.push_back({{"path", path}, {"digest", io::digest(text)}});
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

io::GraphDocument load_graph(const std::string& path) { return io::graph_from_json(load(path)); }

TieredGraph load_tiered(const std::string& path) {
  auto doc = load_graph(path);
  if (!doc.tiered) throw Error(ErrorKind::ParseError, path + ": a \"tier\" array is required here");
  if (auto v = validate_tiered_graph(doc.graph); !v.empty()) throw Error(ErrorKind::InvalidGraph, path + ": " + v.front());
  return doc.graph;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int verdict(bool ok, const std::string& what) {
  run.summary = what + (ok ? ": ok" : ": FAILED");
  if (!ok) std::cerr << what << " failed\n";
  return ok ? kOk : kCheckFailed;
}

std::string str(const Integer& x) { return x.str(); }

// ---------------------------------------------------------------- validate

int cmd_validate(const std::string& path) {
  const json j = load(path);
  std::vector<std::string> violations;
  std::string kind = j.is_object() && j.contains("upper") ? "polyomino" : "graph";
  try {
    if (kind == "polyomino") {
      violations = validate_lpp(io::lpp_from_json(j));
    } else {
      const auto doc = io::graph_from_json(j);
      if (doc.tiered) violations = validate_tiered_graph(doc.graph);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::IoError) throw;
    violations.push_back(e.what());
  }
  for (const auto& v : violations) std::cerr << v << '\n';
  emit({{"kind", kind}, {"valid", violations.empty()}, {"violations", violations}});
  run.summary = violations.empty() ? "valid" : std::to_string(violations.size()) + " violations";
  return violations.empty() ? kOk : kCheckFailed;
}

// --------------------------------------------------------------- bijection

// Black first, then red labels by row and blue labels by column.
std::vector<int> reading_order(const LabelledPolyomino& p) {
  std::vector<CellLabel> cells = p.labels;
  std::stable_sort(cells.begin(), cells.end(), [](const CellLabel& a, const CellLabel& b) {
    auto key = [](const CellLabel& c) {
      return std::pair{c.colour == Colour::Black ? 0 : c.colour == Colour::Red ? 1 : 2,
                       c.colour == Colour::Red ? c.row : c.column};
    };
    return key(a) < key(b);
  });
  std::vector<int> out;
  for (const auto& c : cells) out.push_back(c.label);
  return out;
}

int cmd_bijection_file(const std::string& path) {
  const LabelledPolyomino p = io::lpp_from_json(load(path));
  if (auto v = validate_lpp(p); !v.empty()) {
    for (const auto& s : v) std::cerr << s << '\n';
    emit({{"valid", false}, {"violations", v}});
    run.summary = "invalid polyomino";
    return kCheckFailed;
  }
  const Graph g = polyomino_graph(p.parts).graph;
  const Configuration a = alpha(p);
  const bool parking = is_g_parking(g, a, run.caps);
  const bool roundtrip = alpha_inverse(a, p.parts, run.caps) == p;
  const bool replay = replay_toppling_order(p);
  const IntVector w = white_square_counts(p);
  const auto stats = parking_statistics(g, a);
  const auto order = reading_order(p);
  json alpha_json = json::object(), initial = json::array();
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (v != a.sink) alpha_json[std::to_string(v)] = a[v];
  std::string tuple = "(";
  for (std::size_t k = 0; k < order.size(); ++k) {
    initial.push_back({{"label", order[k]}, {"colour", to_string(p.parts.colour_of(order[k]))}, {"grains", w(order[k] - 1)}});
    tuple += (k ? "," : "") + std::to_string(w(order[k] - 1));
  }
  tuple += ")";
  if (run.format == "ascii") {
    std::cout << render_ascii(p) << "initial configuration " << tuple << "\nroundtrip " << (roundtrip ? "OK" : "FAILED")
              << '\n';
  } else {
    emit({{"U", p.parts.to_string()},
          {"sink", a.sink},
          {"area", area(p)},
          {"bounce_path", bounce_path(p).render()},
          {"toppling_order", toppling_order(p)},
          {"alpha", alpha_json},
          {"sum", stats.sum},
          {"reversed_sum", stats.reversed_sum},
          {"initial_configuration", initial},
          {"g_parking", parking},
          {"toppling_replay", replay},
          {"roundtrip", roundtrip}});
  }
  std::cerr << "initial configuration " << tuple << ", roundtrip " << (roundtrip ? "OK" : "FAILED") << '\n';
  return verdict(parking && roundtrip && replay, "bijection");
}

int cmd_bijection_enumerate(const std::string& text) {
  const OrderedSetPartition u = OrderedSetPartition::parse(text);
  u.validate();
  const Graph g = polyomino_graph(u).graph;
  const auto lpps = enumerate_lpp(u, run.caps);
  const auto pcs = enumerate_g_parking(g, u.sink(), run.caps);
  const Integer trees = count_spanning_trees(g);
  bool roundtrips = true;
  std::set<std::vector<std::int64_t>> images;
  for (const auto& p : lpps) {
    const Configuration a = alpha(p);
    roundtrips = roundtrips && alpha_inverse(a, u, run.caps) == p;
    images.insert({a.grains.data(), a.grains.data() + a.grains.size()});
  }
  for (const auto& b : pcs) roundtrips = roundtrips && alpha(alpha_inverse(b, u, run.caps)) == b;
  const bool equal = Integer(lpps.size()) == trees && Integer(pcs.size()) == trees && images.size() == lpps.size();
  emit({{"U", u.to_string()},
        {"lpp", lpps.size()},
        {"parking", pcs.size()},
        {"spanning_trees", io::to_json(trees)},
        {"counts_equal", equal},
        {"roundtrips", roundtrips}});
  return verdict(equal && roundtrips, "bijection enumeration");
}

// ------------------------------------------------------------------- tutte

int cmd_tutte(const std::string& path) {
  const Graph g = load_graph(path).graph.graph;
  const TuttePolynomial t = tutte_polynomial(g, run.caps);
  const Integer trees = count_spanning_trees(g);
  json out = io::to_json(t);
  out["polynomial"] = t.to_string();
  out["spanning_trees"] = io::to_json(trees);
  if (!run.check) {
    emit(out);
    run.summary = t.to_string();
    return kOk;
  }
  bool orders = true;
  for (std::uint64_t k = 0; k < 10; ++k) orders = orders && tutte_polynomial(g, EdgeOrder::random(g, run.seed + k), run.caps) == t;
  const Polynomial t1q = t.at_x_equals_one();
  bool kappa = true;
  for (Vertex root = 1; root <= g.vertex_count(); ++root) kappa = kappa && kappa_enumerator(g, root, run.caps) == t1q;
  const bool rs = rs_enumerator(g, g.vertex_count(), run.caps) == t1q;
  const bool count = t.evaluate(1, 1) == trees;
  out["checks"] = {{"order_independent", orders}, {"kappa_is_T(1,q)", kappa}, {"rs_is_T(1,q)", rs}, {"T(1,1)_is_tree_count", count}};
  emit(out);
  return verdict(orders && kappa && rs && count, "tutte checks");
}

// ----------------------------------------------------------------- hilbert

int cmd_hilbert(const std::string& path, std::optional<int> sink_flag) {
  const auto doc = load_graph(path);
  const Vertex sink = sink_flag.value_or(doc.graph.vertex_count());
  const GradedAlgebraReport r = doc.tiered ? graded_algebra_report(doc.graph, sink, run.caps)
                                           : graded_algebra_report(doc.graph.graph, sink, run.caps);
  if (run.format == "csv") std::cout << io::to_csv(r);
  else emit(io::to_json(r));
  if (!run.check) {
    run.summary = "report";
    return kOk;
  }
  bool ok = r.tutte_match();
  std::cerr << "tutte_match: " << (r.tutte_match() ? "true" : "false") << ", total=" << str(r.tree_count) << '\n';
  if (auto s = r.s_space_match()) {
    std::cerr << "s_space_match: " << (*s ? "true" : "false") << '\n';
    ok = ok && *s;
  }
  if (r.monomial_dims) {
    const bool m = *r.monomial_dims == r.c_dims;
    std::cerr << "monomial_quotient_match: " << (m ? "true" : "false") << '\n';
    ok = ok && m;
  }
  if (r.power_dims) {
    const bool p = *r.power_dims == forest_hilbert_via_tutte(doc.graph.graph, run.caps);
    std::cerr << "power_quotient_is_forest_series: " << (p ? "true" : "false") << '\n';
    ok = ok && p;
  }
  return verdict(ok, "hilbert checks");
}

// ---------------------------------------------------------------- sandpile

SelectionPolicy policy_from(const std::string& name) {
  if (name == "lowest") return SelectionPolicy::LowestLabel;
  if (name == "highest") return SelectionPolicy::HighestLabel;
  if (name == "fifo") return SelectionPolicy::Fifo;
  if (name == "random") return SelectionPolicy::Random;
  throw Error(ErrorKind::ParseError, "unknown policy '" + name + "'");
}

int cmd_sandpile(const std::string& path, Vertex sink, const std::string& config_path, const std::string& policy) {
  const Graph g = load_graph(path).graph.graph;
  if (sink < 1 || sink > g.vertex_count()) throw Error(ErrorKind::UnknownVertex, "sink " + std::to_string(sink));
  json out;
  bool ok = true;
  if (!config_path.empty()) {
    json cj = load(config_path);
    if (!cj.contains("sink")) cj["sink"] = sink;
    const Configuration c = io::configuration_from_json(cj, g.vertex_count());
    if (c.sink != sink)
      throw Error(ErrorKind::WrongSink, "configuration sink " + std::to_string(c.sink) + " but --sink " + std::to_string(sink));
    const auto s = stabilize(g, c, policy_from(policy), run.seed);
    out = {{"input", io::to_json(c)},
           {"stable", io::to_json(s.config)},
           {"topplings", s.topplings.size()},
           {"recurrent", is_recurrent(g, s.config)},
           {"g_parking", is_superstable(g, s.config)}};
    if (run.check) {
      bool abelian = true;
      for (auto p : {SelectionPolicy::LowestLabel, SelectionPolicy::HighestLabel, SelectionPolicy::Fifo, SelectionPolicy::Random})
        abelian = abelian && stabilize(g, c, p, run.seed).config == s.config;
      out["checks"] = {{"policy_independent", abelian}};
      ok = abelian;
    }
  } else {
    const auto pcs = enumerate_g_parking(g, sink, run.caps);
    const Integer trees = count_spanning_trees(g);
    const Polynomial rs = rs_enumerator(g, sink, run.caps);
    out = {{"sink", sink}, {"parking", pcs.size()}, {"spanning_trees", io::to_json(trees)}, {"reversed_sum_enumerator", rs.to_string('q')}};
    if (run.check) {
      const auto rec = enumerate_recurrent(g, sink, run.caps);
      bool recurrent = rec.size() == pcs.size();
      for (const auto& c : rec) recurrent = recurrent && is_recurrent(g, c);
      bool parking = true;
      for (const auto& b : pcs) parking = parking && is_g_parking(g, b, run.caps);
      const bool counts = Integer(pcs.size()) == trees;
      const bool tutte = rs == tutte_polynomial(g, run.caps).at_x_equals_one();
      std::mt19937_64 rng(run.seed);
      bool abelian = true;
      for (int k = 0; k < 20; ++k) {
        Configuration c = Configuration::zero(g.vertex_count(), sink);
        for (Vertex v = 1; v <= g.vertex_count(); ++v)
          if (v != sink) c[v] = std::uniform_int_distribution<int>(0, 3 * g.degree(v))(rng);
        const auto ref = stabilize(g, c, SelectionPolicy::LowestLabel).config;
        for (auto p : {SelectionPolicy::HighestLabel, SelectionPolicy::Fifo, SelectionPolicy::Random})
          abelian = abelian && stabilize(g, c, p, run.seed + k).config == ref;
      }
      out["checks"] = {{"parking_count_is_tree_count", counts},
                       {"recurrent_are_complements", recurrent},
                       {"subset_definition_agrees", parking},
                       {"reversed_sum_is_T(1,q)", tutte},
                       {"policy_independent", abelian}};
      ok = counts && recurrent && parking && tutte && abelian;
    }
  }
  emit(out);
  return run.check ? verdict(ok, "sandpile checks") : kOk;
}

// -------------------------------------------------------------------- dual

int cmd_dual(const std::string& path) {
  const TieredGraph g = load_tiered(path);
  const TieredGraph d = dual_graph(g);
  if (run.format == "dot") std::cout << io::to_dot(d);
  else emit(io::to_json(d));
  if (!run.check) {
    run.summary = "dual";
    return kOk;
  }
  const int n = g.vertex_count();
  bool iso = d.graph.edge_count() == g.graph.edge_count();
  for (const Edge& e : g.graph.edges()) iso = iso && d.graph.adjacent(reflect_vertex(n, e.u), reflect_vertex(n, e.v));
  const bool involution = dual_graph(d) == g;
  std::set<std::vector<Edge>> mapped, target;
  for (EdgeSet f : spanning_forests(g.graph, run.caps)) {
    auto image = forest_dual(n, g.graph.edges_of(f));
    std::sort(image.begin(), image.end());
    mapped.insert(image);
  }
  for (EdgeSet f : spanning_forests(d.graph, run.caps)) target.insert(d.graph.edges_of(f));
  const bool forests = mapped == target;
  std::cerr << std::boolalpha << "involution: " << involution << ", reflection_isomorphism: " << iso << ", forest_bijection: " << forests << '\n';
  return verdict(is_valid(d) && involution && iso && forests, "dual checks");
}

// ----------------------------------------------------------------- whitney

json tiered_json(const TieredGraph& g) { return io::to_json(g); }

std::pair<Vertex, Vertex> vertex_pair(const std::vector<int>& v, const char* flag) {
  if (v.size() != 2) throw Error(ErrorKind::ParseError, std::string(flag) + " takes two vertices");
  return {v[0], v[1]};
}

int cmd_identify(const std::string& a, const std::string& b, Vertex left, Vertex right) {
  emit(tiered_json(identify(load_tiered(a), left, load_tiered(b), right)));
  run.summary = "identified";
  return kOk;
}

int cmd_cleave(const std::string& path, Vertex v) {
  const Cleft c = cleave(load_tiered(path), v);
  emit({{"first", tiered_json(c.first)},
        {"second", tiered_json(c.second)},
        {"first_vertex", c.first_vertex},
        {"second_vertex", c.second_vertex}});
  run.summary = "cleaved";
  return kOk;
}

int cmd_twist(const std::string& a, const std::string& b, std::pair<Vertex, Vertex> left, std::pair<Vertex, Vertex> right) {
  const TieredGraph g1 = load_tiered(a), g2 = load_tiered(b);
  const TieredGraph s = two_sum(g1, left.first, left.second, g2, right.first, right.second);
  const TieredGraph t = twist(g1, left.first, left.second, g2, right.first, right.second);
  const TuttePolynomial ts = tutte_polynomial(s.graph, run.caps), tt = tutte_polynomial(t.graph, run.caps);
  emit({{"two_sum", tiered_json(s)},
        {"twist", tiered_json(t)},
        {"two_sum_tutte", ts.to_string()},
        {"twist_tutte", tt.to_string()},
        {"tutte_equal", ts == tt},
        {"isomorphic", isomorphic(s.graph, t.graph)}});
  return run.check ? verdict(ts == tt, "twist Tutte invariance") : kOk;
}

// ----------------------------------------------------------------- parking

int cmd_parking(int n) {
  if (n < 1) throw Error(ErrorKind::ParseError, "length must be positive");
  Integer formula = pow(Integer(n + 1), static_cast<unsigned>(n - 1));
  if (formula > run.caps.spanning_trees)
    throw Error(ErrorKind::CapExceeded, "(n+1)^(n-1) = " + str(formula) + " parking functions (cap trees)");
  const auto pfs = enumerate_classical_parking_functions(n);
  std::set<std::vector<int>> classical(pfs.begin(), pfs.end()), via_graph;
  for (const auto& c : enumerate_g_parking(Graph::complete(n + 1), n + 1, run.caps)) {
    std::vector<int> pref(n);
    for (Vertex v = 1; v <= n; ++v) pref[v - 1] = static_cast<int>(c[v]);
    via_graph.insert(parking_function_from_preferences(pref));
  }
  const bool ok = Integer(pfs.size()) == formula && via_graph == classical;
  emit({{"n", n}, {"count", pfs.size()}, {"formula", io::to_json(formula)}, {"complete_graph_agrees", via_graph == classical}});
  return verdict(ok, "parking count");
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::IoError:
    case ErrorKind::BadCharacter:
    case ErrorKind::EmptyPath:
      return kParseFailed;
    case ErrorKind::CapExceeded:
      return kCapExceeded;
    default:
      return kCheckFailed;
  }
}

json caps_json(const Caps& c) {
  return {{"trees", c.spanning_trees}, {"edges", c.slim_edges}, {"subset", c.subset_vertices}, {"rank", c.rank_vertices}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tiered graphs, G-parking functions and labelled parallelogram polyominoes"};
  app.set_version_flag("--version", TIERED_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::uint64_t> cap_trees;
  std::optional<int> cap_edges;
  std::string manifest;
  app.add_option("--seed", run.seed, "Seed for every random choice")->default_val(0);
  app.add_option("--cap-trees", cap_trees, "Largest spanning-tree count to enumerate");
  app.add_option("--cap-edges", cap_edges, "Largest edge count for slim-subgraph and forest enumeration");
  app.add_option("--manifest", manifest, "Write a run manifest (JSON) to this path");

  std::function<int()> action;
  std::string file, file2, text, config, policy = "lowest";
  std::optional<int> sink;
  int vertex = 0, length = 0, left_vertex = 0, right_vertex = 0;
  std::vector<int> left, right;

  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", run.format, "Output format")->check(CLI::IsMember(allowed))->capture_default_str();
  };
  auto add_check = [&](CLI::App* sub) { sub->add_flag("--check", run.check, "Run the invariant suite; exit 1 on failure"); };

  auto* validate = app.add_subcommand("validate", "Validate a graph or polyomino file");
  validate->add_option("file", file)->required();
  validate->callback([&] { action = [&] { return cmd_validate(file); }; });

  auto* bijection = app.add_subcommand("bijection", "Apply the polyomino bijection to a file or a whole partition");
  bijection->add_option("file", file);
  bijection->add_option("--enumerate", text, "Ordered partition \"blue|black|red\", e.g. \"1,2|3|4\"");
  add_format(bijection, {"json", "ascii"});
  bijection->callback([&] {
    if (file.empty() == text.empty()) throw CLI::ValidationError("bijection", "give exactly one of FILE or --enumerate");
    action = [&] { return text.empty() ? cmd_bijection_file(file) : cmd_bijection_enumerate(text); };
  });

  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial by activities");
  tutte->add_option("file", file)->required();
  add_check(tutte);
  tutte->callback([&] { action = [&] { return cmd_tutte(file); }; });

  auto* hilbert = app.add_subcommand("hilbert", "Graded dimensions of the spanning-tree algebras");
  hilbert->add_option("file", file)->required();
  hilbert->add_option("--sink", sink, "Sink vertex (default: the largest label)");
  add_format(hilbert, {"json", "csv"});
  add_check(hilbert);
  hilbert->callback([&] { action = [&] { return cmd_hilbert(file, sink); }; });

  auto* sandpile = app.add_subcommand("sandpile", "Parking and recurrent configurations, stabilization");
  sandpile->add_option("file", file)->required();
  sandpile->add_option("--sink", sink, "Sink vertex")->required();
  sandpile->add_option("--config", config, "Configuration file to stabilize");
  sandpile->add_option("--policy", policy, "Toppling order")->check(CLI::IsMember({"lowest", "highest", "fifo", "random"}));
  add_check(sandpile);
  sandpile->callback([&] { action = [&] { return cmd_sandpile(file, *sink, config, policy); }; });

  auto* dual = app.add_subcommand("dual", "Dual tiered graph");
  dual->add_option("file", file)->required();
  add_format(dual, {"json", "dot"});
  add_check(dual);
  dual->callback([&] { action = [&] { return cmd_dual(file); }; });

  auto* whitney = app.add_subcommand("whitney", "Identification, cleaving and twisting");
  whitney->require_subcommand(1);
  auto* ident = whitney->add_subcommand("identify", "Merge a vertex of one graph with a vertex of another");
  ident->add_option("first", file)->required();
  ident->add_option("second", file2)->required();
  ident->add_option("--left", left_vertex, "Vertex of the first graph")->required();
  ident->add_option("--right", right_vertex, "Vertex of the second graph")->required();
  ident->callback([&] { action = [&] { return cmd_identify(file, file2, left_vertex, right_vertex); }; });
  auto* cleave_cmd = whitney->add_subcommand("cleave", "Split at a cut vertex");
  cleave_cmd->add_option("file", file)->required();
  cleave_cmd->add_option("--vertex", vertex, "Cut vertex")->required();
  cleave_cmd->callback([&] { action = [&] { return cmd_cleave(file, vertex); }; });
  auto* twist_cmd = whitney->add_subcommand("twist", "Two-sum and its twist");
  twist_cmd->add_option("first", file)->required();
  twist_cmd->add_option("second", file2)->required();
  twist_cmd->add_option("--left", left, "u1,v1 in the first graph")->delimiter(',')->required();
  twist_cmd->add_option("--right", right, "u2,v2 in the second graph")->delimiter(',')->required();
  add_check(twist_cmd);
  twist_cmd->callback([&] {
    action = [&] { return cmd_twist(file, file2, vertex_pair(left, "--left"), vertex_pair(right, "--right")); };
  });

  auto* parking = app.add_subcommand("parking", "Classical parking functions of length n");
  parking->add_option("n", length)->required();
  parking->callback([&] { action = [&] { return cmd_parking(length); }; });

  std::string command;
  int code = kOk;
  try {
    app.parse(argc, argv);
    for (auto* sub : app.get_subcommands()) {
      command = sub->get_name();
      for (auto* inner : sub->get_subcommands()) command += " " + inner->get_name();
    }
    // Defaults, then TIERED_CAPS, then explicit flags.
    run.caps = Caps::from_environment();
    if (cap_trees) run.caps.spanning_trees = *cap_trees;
    if (cap_edges) run.caps.slim_edges = *cap_edges;
    code = action();
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParseFailed;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    if (e.kind() == ErrorKind::CapExceeded) std::cerr << "raise the named cap with --cap-trees, --cap-edges or TIERED_CAPS\n";
    code = exit_code_for(e.kind());
    run.summary = e.what();
  }
  if (!manifest.empty()) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const json m{{"command", command},
                 {"arguments", args},
                 {"inputs", run.inputs},
                 {"seed", run.seed},
                 {"caps", caps_json(run.caps)},
                 {"version", TIERED_VERSION},
                 {"outcome", {{"exit_code", code}, {"summary", run.summary}}}};
    std::ofstream(manifest) << m.dump(2) << '\n';
  }
  return code;
}
