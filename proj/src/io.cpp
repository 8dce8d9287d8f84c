#include "tiered/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace tiered::io {

namespace {

[[noreturn]] void parse_failure(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_failure(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    parse_failure(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    parse_failure(path + ": " + e.what());
  }
}

GraphDocument graph_from_json(const json& j) {
  const int n = field<int>(j, "n");
  if (n < 0) parse_failure("negative vertex count");
  std::vector<Edge> edges;
  for (const auto& pair : field<std::vector<std::vector<int>>>(j, "edges")) {
    if (pair.size() != 2) parse_failure("an edge needs two endpoints");
    edges.push_back({pair[0], pair[1]});
  }
  GraphDocument doc;
  doc.graph.graph = Graph(n, std::move(edges));
  if (j.contains("tier")) {
    doc.graph.tier = field<std::vector<int>>(j, "tier");
    doc.graph.tiers = j.contains("m") ? field<int>(j, "m")
                                      : (doc.graph.tier.empty() ? 0 : *std::max_element(doc.graph.tier.begin(), doc.graph.tier.end()));
    if (j.contains("empty_tiers_allowed")) doc.graph.empty_tiers_allowed = field<bool>(j, "empty_tiers_allowed");
  } else {
    doc.tiered = false;
    doc.graph.tier.assign(n, 1);
    doc.graph.tiers = 1;
  }
  return doc;
}

json to_json(const TieredGraph& g) {
  json j = to_json(g.graph);
  j["m"] = g.tiers;
  j["tier"] = g.tier;
  if (g.empty_tiers_allowed) j["empty_tiers_allowed"] = true;
  return j;
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

Configuration configuration_from_json(const json& j, int vertex_count) {
  const int sink = field<int>(j, "sink");
  if (sink < 1 || sink > vertex_count) throw Error(ErrorKind::UnknownVertex, "sink " + std::to_string(sink) + " is not a vertex");
  Configuration c = Configuration::zero(vertex_count, sink);
  const json& grains = j.contains("grains") ? j.at("grains") : json::object();
  if (!grains.is_object()) parse_failure("'grains' must be an object keyed by vertex");
  for (const auto& [key, value] : grains.items()) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      parse_failure("grain key '" + key + "' is not a vertex");
    }
    if (v < 1 || v > vertex_count) throw Error(ErrorKind::UnknownVertex, "no vertex " + key);
    if (!value.is_number_integer()) parse_failure("grain count for " + key + " is not an integer");
    if (v != sink) c[v] = value.get<std::int64_t>();
  }
  return c;
}

json to_json(const Configuration& c) {
  json grains = json::object();
  for (Eigen::Index i = 0; i < c.grains.size(); ++i)
    if (i + 1 != c.sink) grains[std::to_string(i + 1)] = c.grains(i);
  return {{"sink", c.sink}, {"grains", grains}};
}

OrderedSetPartition partition_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) parse_failure("'U' must be three label lists");
  OrderedSetPartition u;
  try {
    u.blue = j[0].get<std::vector<int>>();
    u.black = j[1].get<std::vector<int>>();
    u.red = j[2].get<std::vector<int>>();
  } catch (const json::exception& e) {
    parse_failure(std::string("'U': ") + e.what());
  }
  for (auto* b : {&u.blue, &u.black, &u.red}) std::sort(b->begin(), b->end());
  return u;
}

json to_json(const OrderedSetPartition& u) { return json::array({u.blue, u.black, u.red}); }

LabelledPolyomino lpp_from_json(const json& j) {
  LabelledPolyomino p;
  p.upper = LatticePath::parse(field<std::string>(j, "upper"));
  p.lower = LatticePath::parse(field<std::string>(j, "lower"));
  p.parts = partition_from_json(j.contains("U") ? j.at("U") : json());
  if (!j.contains("labels") || !j.at("labels").is_array()) parse_failure("missing 'labels' array");
  for (const json& item : j.at("labels")) {
    const auto cell = field<std::vector<int>>(item, "cell");
    if (cell.size() != 2) parse_failure("a cell is [column, row]");
    const auto colour = field<std::string>(item, "color");
    CellLabel l{cell[0], cell[1], field<int>(item, "label"), Colour::Blue};
    if (colour == "blue") l.colour = Colour::Blue;
    else if (colour == "black") l.colour = Colour::Black;
    else if (colour == "red") l.colour = Colour::Red;
    else parse_failure("unknown colour '" + colour + "'");
    p.labels.push_back(l);
  }
  std::sort(p.labels.begin(), p.labels.end(), [](const CellLabel& a, const CellLabel& b) {
    return std::tie(a.column, a.row, a.label) < std::tie(b.column, b.row, b.label);
  });
  return p;
}

json to_json(const LabelledPolyomino& p) {
  json labels = json::array();
  for (const CellLabel& l : p.labels)
    labels.push_back({{"cell", {l.column, l.row}}, {"label", l.label}, {"color", std::string(to_string(l.colour))}});
  return {{"upper", p.upper.steps()}, {"lower", p.lower.steps()}, {"labels", labels}, {"U", to_json(p.parts)}};
}

json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

json to_json(const TuttePolynomial& t) {
  json terms = json::array();
  for (const auto& [exp, c] : t.terms()) terms.push_back({{"x", exp.first}, {"y", exp.second}, {"c", to_json(c)}});
  return {{"terms", terms}};
}

json coefficients_json(const Polynomial& p) {
  json out = json::array();
  for (const Integer& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

json to_json(const GradedAlgebraReport& r) {
  json checks = {{"tutte_match", r.tutte_match()}};
  checks["s_space_match"] = r.s_space_match() ? json(*r.s_space_match()) : json(nullptr);
  json j = {{"graded_dims", coefficients_json(r.c_dims)},
            {"tree_count", to_json(r.tree_count)},
            {"hilbert", coefficients_json(r.hilbert)},
            {"external_activity", coefficients_json(r.external_activity)},
            {"total", to_json(r.c_dims.sum_of_coefficients())},
            {"checks", checks}};
  if (r.s_dims) j["s_space_dims"] = coefficients_json(*r.s_dims);
  if (r.power_dims) j["power_ideal_dims"] = coefficients_json(*r.power_dims);
  if (r.monomial_dims) j["monomial_ideal_dims"] = coefficients_json(*r.monomial_dims);
  return j;
}

std::string to_csv(const GradedAlgebraReport& r) {
  int top = std::max({r.c_dims.degree(), r.hilbert.degree(), r.external_activity.degree()});
  for (const auto* p : {&r.s_dims, &r.power_dims, &r.monomial_dims})
    if (*p) top = std::max(top, (*p)->degree());
  std::ostringstream os;
  os << "degree,c_dim,hilbert,external_activity,s_dim,power_dim,monomial_dim\n";
  auto cell = [](const std::optional<Polynomial>& p, int k) { return p ? p->coefficient(k).str() : std::string(); };
  for (int k = 0; k <= top; ++k)
    os << k << ',' << r.c_dims.coefficient(k) << ',' << r.hilbert.coefficient(k) << ','
       << r.external_activity.coefficient(k) << ',' << cell(r.s_dims, k) << ',' << cell(r.power_dims, k) << ','
       << cell(r.monomial_dims, k) << '\n';
  return os.str();
}

std::string to_dot(const TieredGraph& g) {
  std::ostringstream os;
  os << "graph tiered {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int t = 1; t <= g.tiers; ++t) {
    os << "  { rank=same; tier" << t << " [shape=plaintext, label=\"tier " << t << "\"];";
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
      if (g.tier_of(v) == t) os << ' ' << v << ';';
    os << " }\n";
  }
  for (int t = 1; t < g.tiers; ++t) os << "  tier" << t << " -- tier" << t + 1 << " [style=invis];\n";
  for (const Edge& e : g.graph.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

}  // namespace tiered::io
