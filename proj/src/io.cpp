#include "pcprod/io.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include "pcprod/error.hpp"

namespace pcprod::io {

namespace {

[[noreturn]] void parse_error(const std::string &what) { throw Error(ErrorKind::kParse, what); }

int as_int(const json &j, const char *field) {
  if (!j.is_number_integer())
    parse_error(std::string("field \"") + field + "\" must be an integer");
  return j.get<int>();
}

} // namespace

json to_json(const Graph &g) {
  json edges = json::array();
  for (const auto &[u, v] : g.edges())
    edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json &j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    parse_error("graph JSON needs \"n\" and \"edges\"");
  const int n = as_int(j.at("n"), "n");
  const auto &list = j.at("edges");
  if (!list.is_array())
    parse_error("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto &e : list) {
    if (!e.is_array() || e.size() != 2)
      parse_error("each edge must be a pair [u, v]");
    edges.push_back({as_int(e[0], "edges"), as_int(e[1], "edges")});
  }
  return Graph(n, std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Edge> edges;
  int n = 0;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    long long u = 0, v = 0;
    if (!(fields >> u)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        parse_error("edge list line " + std::to_string(line_no) + ": expected \"u v\"");
      continue;
    }
    std::string extra;
    if (!(fields >> v) || (fields >> extra))
      parse_error("edge list line " + std::to_string(line_no) + ": expected \"u v\"");
    if (u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000)
      parse_error("edge list line " + std::to_string(line_no) + ": vertex out of range");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    n = std::max(n, static_cast<int>(std::max(u, v)) + 1);
  }
  return Graph(n, std::move(edges));
}

json to_json(const ProductGraph &p) {
  json j = to_json(p.graph);
  json left = p.left_product ? to_json(*p.left_product) : to_json(p.factor_g);
  j["product"] = {{"kind", std::string(to_string(p.kind))},
                  {"n_g", p.n_g()},
                  {"n_h", p.n_h()},
                  {"factors", {std::move(left), to_json(p.factor_h)}}};
  return j;
}

std::optional<ProductGraph> product_from_json(const json &j) {
  if (!j.is_object() || !j.contains("product"))
    return std::nullopt;
  const auto &meta = j.at("product");
  const auto kind = parse_product_kind(meta.value("kind", std::string{}));
  if (!kind)
    parse_error("product metadata has an unknown kind");
  if (!meta.contains("factors") || !meta.at("factors").is_array() || meta.at("factors").size() != 2)
    parse_error("product metadata needs two factors");
  const auto &factors = meta.at("factors");
  const Graph h = graph_from_json(factors[1]);
  ProductGraph p;
  if (auto left = product_from_json(factors[0]))
    p = product(std::make_shared<const ProductGraph>(std::move(*left)), h, *kind);
  else
    p = product(graph_from_json(factors[0]), h, *kind);
  if (as_int(meta.value("n_g", json(-1)), "n_g") != p.n_g() ||
      as_int(meta.value("n_h", json(-1)), "n_h") != p.n_h())
    parse_error("product metadata n_g/n_h disagree with the factors");
  if (!(p.graph == graph_from_json(j)))
    parse_error("product metadata does not reproduce the graph");
  return p;
}

json to_json(const EdgeColoring &c) { return {{"k", c.palette_size}, {"colors", c.colors}}; }

EdgeColoring coloring_from_json(const json &j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("colors") || !j.at("colors").is_array())
    parse_error("coloring JSON needs \"k\" and \"colors\"");
  EdgeColoring c;
  c.palette_size = as_int(j.at("k"), "k");
  for (const auto &x : j.at("colors"))
    c.colors.push_back(as_int(x, "colors"));
  return c;
}

json to_json(const PcCertificate &cert) {
  json j = cert.certificate ? to_json(*cert.certificate) : json::object();
  j["value"] = cert.value ? json(*cert.value) : json("inf");
  j["method"] = std::string(to_string(cert.method));
  j["quantity"] = std::string(to_string(cert.quantity));
  return j;
}

json to_json(const ConstructionResult &r) {
  json j = to_json(r.coloring);
  j["scheme"] = r.scheme;
  j["case"] = r.case_tag;
  j["claimed_palette"] = r.claimed_palette;
  return j;
}

json to_json(const ConnectivityReport &r) {
  json j = {{"connected", r.connected}, {"pairs_checked", r.pairs_checked}};
  j["failing_pair"] = r.failing_pair ? json{r.failing_pair->first, r.failing_pair->second} : json();
  return j;
}

json to_json(const OddCycleDecomposition &d) {
  auto comps = [](const std::vector<Subgraph> &list) {
    json out = json::array();
    for (const auto &s : list)
      out.push_back({{"vertices", s.vertices}, {"edges", s.edges}});
    return out;
  };
  return {{"odd_edges", d.odd_edges},
          {"bridge_like_edges", d.bridge_like_edges},
          {"o_components", comps(d.o_components)},
          {"b_components", comps(d.b_components)}};
}

std::string to_dot(const Graph &g, const EdgeColoring *coloring) {
  static constexpr const char *palette[] = {"black",  "red",    "blue",  "darkgreen",
                                            "orange", "purple", "brown", "magenta"};
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    out << "  " << v << ";\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "  " << g.edge(e).u << " -- " << g.edge(e).v;
    if (coloring) {
      const Color c = (*coloring)[e];
      out << " [label=\"" << c << "\", color=\"" << palette[(c - 1) % 8] << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

std::string slurp(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::kIo, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

json read_json_file(const std::filesystem::path &path) {
  const auto text = slurp(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw Error(ErrorKind::kParse, path.string() + ": malformed JSON (" + e.what() + ")");
  }
}

Graph read_graph_file(const std::filesystem::path &path) {
  const auto text = slurp(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && text[first] == '{')
      return graph_from_json(json::parse(text));
    return parse_edge_list(text);
  } catch (const json::exception &e) {
    throw Error(ErrorKind::kParse, path.string() + ": malformed JSON (" + e.what() + ")");
  } catch (const Error &e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorKind::kIo, "cannot write " + path.string());
  out << text;
}

} // namespace pcprod::io
