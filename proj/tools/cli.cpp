#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "pcprod/constructive.hpp"
#include "pcprod/error.hpp"
#include "pcprod/io.hpp"
#include "pcprod/products.hpp"
#include "pcprod/solver.hpp"

namespace pcprod::cli {

namespace {

using io::json;

struct Context {
  std::ostream &out;
  std::ostream &err;
};

std::vector<int> parse_params(const std::string &text) {
  std::vector<int> params;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      params.push_back(std::stoi(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    } catch (const std::exception &) {
      throw Error(ErrorKind::kInvalidParameter, "--params: \"" + item + "\" is not an integer");
    }
  }
  return params;
}

void emit(Context &ctx, const json &j, const std::string &out_file) {
  if (out_file.empty())
    ctx.out << j.dump() << "\n";
  else
    io::write_text_file(out_file, j.dump(2) + "\n");
}

void emit_graph(Context &ctx, const json &j, const Graph &g, const std::string &out_file,
                bool dot) {
  if (dot)
    ctx.out << io::to_dot(g);
  else
    emit(ctx, j, out_file);
  if (dot && !out_file.empty())
    io::write_text_file(out_file, j.dump(2) + "\n");
}

struct Loaded {
  json doc;
  Graph graph;
  std::optional<ProductGraph> product;
};

Loaded load_graph(const std::string &path) {
  Loaded l;
  l.graph = io::read_graph_file(path);
  try {
    l.doc = io::read_json_file(path);
    l.product = io::product_from_json(l.doc);
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::kParse)
      throw;
    // edge-list files carry no metadata
    if (l.doc.is_object())
      throw Error(e.kind(), path + ": " + e.what());
  }
  return l;
}

void require_connected(const Graph &g, const std::string &path) {
  if (!is_connected(g))
    throw Error(ErrorKind::kInvalidParameter, path + ": graph is not connected");
}

std::string value_text(const PcCertificate &c) {
  return c.value ? std::to_string(*c.value) : std::string("inf");
}

// Factor coloring used by the `color` command: an optimal one from the exact
// solver.
EdgeColoring optimal_coloring(const Graph &g, const SolverOptions &options) {
  return *pc_exact(g, g.edge_count(), options).certificate;
}

struct Options {
  // gen
  std::string family;
  int n = -1;
  // shared
  std::string out_file;
  bool dot = false;
  int jobs = 1;
  int k_max = -1;
  int max_edges = -1;
  // product / color
  std::string kind;
  std::string scheme;
  std::vector<std::string> files;
  std::string graph_out;
  // topology
  std::string name;
  std::string params;
  // pc / oepc
  std::string mode;
  // verify
  bool odd_even = false;
  // audit
  int max_n = 4;
  unsigned seed = 1;
};

SolverOptions solver_options(const Options &o) {
  SolverOptions s;
  s.jobs = o.jobs;
  s.check.jobs = o.jobs;
  if (o.max_edges > 0)
    s.max_edges = o.max_edges;
  return s;
}

int cmd_gen(Context &ctx, const Options &o) {
  Graph g;
  const std::string &f = o.family;
  auto need_n = [&] {
    if (o.n < 0)
      throw Error(ErrorKind::kInvalidParameter, "gen --family " + f + " needs --n");
    return o.n;
  };
  if (f == "path")
    g = make_path(need_n());
  else if (f == "cycle")
    g = make_cycle(need_n());
  else if (f == "complete")
    g = make_complete(need_n());
  else if (f == "star")
    g = make_star(need_n());
  else if (f == "petersen")
    g = make_petersen();
  else if (f == "hypercube")
    g = make_hypercube(need_n());
  else
    throw Error(ErrorKind::kInvalidParameter, "unknown family " + f);
  emit_graph(ctx, io::to_json(g), g, o.out_file, o.dot);
  ctx.err << f << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  return 0;
}

int cmd_product(Context &ctx, const Options &o) {
  const auto kind = parse_product_kind(o.kind);
  if (!kind)
    throw Error(ErrorKind::kInvalidParameter, "unknown product kind " + o.kind);
  const Graph g = io::read_graph_file(o.files.at(0));
  const Graph h = io::read_graph_file(o.files.at(1));
  const auto p = product(g, h, *kind);
  emit_graph(ctx, io::to_json(p), p.graph, o.out_file, o.dot);
  ctx.err << to_string(*kind) << " product: " << p.graph.vertex_count() << " vertices, "
          << p.graph.edge_count() << " edges\n";
  return 0;
}

int cmd_topology(Context &ctx, const Options &o) {
  const auto p = build_topology(o.name, parse_params(o.params));
  emit_graph(ctx, io::to_json(p), p.graph, o.out_file, o.dot);
  ctx.err << o.name << " [" << o.params << "]: " << p.graph.vertex_count() << " vertices, "
          << p.graph.edge_count() << " edges\n";
  return 0;
}

int cmd_pc(Context &ctx, const Options &o) {
  const auto path = o.files.at(0);
  const auto loaded = load_graph(path);
  require_connected(loaded.graph, path);
  const auto options = solver_options(o);
  if (o.mode == "bounds") {
    const auto b = pc_bounds(loaded.graph, loaded.product ? &*loaded.product : nullptr, options);
    json j = {{"lower", b.lower}, {"upper", b.upper}, {"upper_source", b.upper_source}};
    if (b.upper_coloring)
      j["upper_coloring"] = io::to_json(*b.upper_coloring);
    emit(ctx, j, o.out_file);
    ctx.err << "pc in [" << b.lower << ", " << b.upper << "] (upper from " << b.upper_source
            << ")\n";
    return 0;
  }
  if (o.mode != "exact")
    throw Error(ErrorKind::kInvalidParameter, "pc mode must be exact or bounds");
  const int k_max = o.k_max > 0 ? o.k_max : std::max(1, loaded.graph.edge_count());
  const auto cert = pc_exact(loaded.graph, k_max, options);
  emit(ctx, io::to_json(cert), o.out_file);
  ctx.err << "pc = " << value_text(cert) << " (" << to_string(cert.method) << ")\n";
  return 0;
}

int cmd_oepc(Context &ctx, const Options &o) {
  if (o.mode != "exact")
    throw Error(ErrorKind::kInvalidParameter, "oepc mode must be exact");
  const auto path = o.files.at(0);
  const Graph g = io::read_graph_file(path);
  require_connected(g, path);
  const int k_max = o.k_max > 0 ? o.k_max : std::max(3, g.edge_count());
  const auto cert = oepc_exact(g, k_max, solver_options(o));
  emit(ctx, io::to_json(cert), o.out_file);
  ctx.err << "oepc = " << value_text(cert) << "\n";
  return 0;
}

int cmd_color(Context &ctx, const Options &o) {
  const auto options = solver_options(o);
  const bool k2 = o.scheme == "direct-k2";
  if (o.files.size() != (k2 ? 1u : 2u))
    throw Error(ErrorKind::kInvalidParameter,
                "color --scheme " + o.scheme + " takes " + (k2 ? "one factor" : "two factors"));
  Graph a = io::read_graph_file(o.files[0]);
  Graph b = k2 ? make_complete(2) : io::read_graph_file(o.files[1]);
  require_connected(a, o.files[0]);
  if (!k2)
    require_connected(b, o.files[1]);

  std::optional<ProductGraph> p;
  ConstructionResult r;
  if (o.scheme == "cartesian" || o.scheme == "strong") {
    auto c_a = optimal_coloring(a, options);
    auto c_b = optimal_coloring(b, options);
    const auto kind = o.scheme == "cartesian" ? ProductKind::kCartesian : ProductKind::kStrong;
    if (c_a.palette_size < c_b.palette_size) {
      ctx.err << "factors swapped so the smaller-pc factor is H\n";
      std::swap(a, b);
      std::swap(c_a, c_b);
    }
    p = product(a, b, kind);
    r = kind == ProductKind::kCartesian ? color_cartesian(*p, c_b, options.check)
                                        : color_strong(*p, c_b, options.check);
  } else if (o.scheme == "lex") {
    p = product(a, b, ProductKind::kLexicographic);
    r = color_lexicographic(*p, optimal_coloring(a, options), optimal_coloring(b, options),
                            options.check);
  } else if (o.scheme == "direct") {
    if (is_bipartite(a).valid) {
      if (is_bipartite(b).valid)
        throw Error(ErrorKind::kInvalidParameter, "direct scheme needs a nonbipartite factor");
      ctx.err << "factors swapped so G is nonbipartite\n";
      std::swap(a, b);
    }
    p = product(a, b, ProductKind::kDirect);
    r = color_direct(*p, optimal_coloring(b, options), decomposition_coloring(a, options),
                     options.check);
  } else if (k2) {
    p = product(a, b, ProductKind::kDirect);
    r = color_direct_k2(*p, decomposition_coloring(a, options));
  } else {
    throw Error(ErrorKind::kInvalidParameter, "unknown scheme " + o.scheme);
  }

  if (!o.graph_out.empty())
    io::write_text_file(o.graph_out, io::to_json(*p).dump(2) + "\n");
  if (o.dot)
    ctx.out << io::to_dot(p->graph, &r.coloring);
  else
    emit(ctx, io::to_json(r), o.out_file);
  const auto report = is_proper_connected(p->graph, r.coloring, options.check);
  ctx.err << o.scheme << " (" << r.case_tag << "): " << r.coloring.palette_size
          << " colors, claimed " << r.claimed_palette << ", "
          << (report.connected ? "verified" : "NOT proper connected") << "\n";
  return 0;
}

int cmd_verify(Context &ctx, const Options &o) {
  const Graph g = io::read_graph_file(o.files.at(0));
  const auto c = io::coloring_from_json(io::read_json_file(o.files.at(1)));
  validate_coloring(g, c);
  SearchOptions check;
  check.jobs = o.jobs;
  const auto report = o.odd_even ? is_odd_even_proper(g, c, check) : is_proper_connected(g, c, check);
  emit(ctx, io::to_json(report), o.out_file);
  ctx.err << (o.odd_even ? "odd-even proper: " : "proper connected: ")
          << (report.connected ? "yes" : "no");
  if (report.failing_pair)
    ctx.err << " (fails at " << report.failing_pair->first << "," << report.failing_pair->second
            << ")";
  ctx.err << "\n";
  return 0;
}

int cmd_decompose(Context &ctx, const Options &o) {
  const Graph g = io::read_graph_file(o.files.at(0));
  const auto d = odd_cycle_decomposition(g);
  json j = io::to_json(d);
  try {
    const auto parts = decomposition_coloring(g, solver_options(o));
    j["o"] = parts.o_value;
    j["b"] = parts.b_value;
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::kResourceExceeded && e.kind() != ErrorKind::kSearchBudgetExceeded)
      throw;
    ctx.err << "o(G)/b(G) not computed: " << e.what() << "\n";
  }
  emit(ctx, j, o.out_file);
  ctx.err << d.odd_edges.size() << " edges on odd cycles in " << d.o_components.size()
          << " components; " << d.bridge_like_edges.size() << " other edges in "
          << d.b_components.size() << " components\n";
  return 0;
}

// ---------------------------------------------------------------------------
// audit

struct AuditRow {
  std::string instance;
  std::string claim;
  std::string observed;
  bool pass = false;
};

// Proper connection values the applications section states per family.
struct Claim {
  int lo;
  int hi;
};

Claim family_claim(const std::string &family, const std::vector<int> &params) {
  const bool all_two = std::all_of(params.begin(), params.end(), [](int p) { return p == 2; });
  if (family == "grid" || family == "torus")
    return {2, 3};
  if (family == "mesh" || family == "ghc")
    return {2, 2};
  if (family == "lex-mesh")
    return all_two ? Claim{1, 1} : Claim{2, 2};
  if (family == "lex-torus")
    return {2, 2};
  if (family == "lex-ghc")
    return {1, 1};
  if (family == "hp" || family == "hyper-petersen")
    return params[0] == 3 ? Claim{2, 2} : Claim{2, 3};
  return {2, 2}; // hl
}

std::vector<std::vector<int>> audit_instances(const std::string &family, int max_n) {
  std::vector<std::vector<int>> out;
  if (family == "hp" || family == "hl" || family == "hyper-petersen" ||
      family == "lex-hyper-petersen") {
    for (int n = 3; n <= std::max(3, max_n); ++n)
      out.push_back({n});
    return out;
  }
  const int lo = (family == "torus" || family == "lex-torus") ? 3 : 2;
  for (int a = lo; a <= max_n; ++a)
    for (int b = a; b <= max_n; ++b)
      out.push_back({a, b});
  return out;
}

int audit_topology(Context &ctx, const Options &o, const SolverOptions &options) {
  std::vector<AuditRow> rows;
  const std::string family = o.family == "hyper-petersen" ? "hp"
                             : o.family == "lex-hyper-petersen" ? "hl"
                                                                : o.family;
  for (const auto &params : audit_instances(family, o.max_n)) {
    AuditRow row;
    std::ostringstream inst;
    inst << family << " [";
    for (std::size_t i = 0; i < params.size(); ++i)
      inst << (i ? "," : "") << params[i];
    inst << "]";
    row.instance = inst.str();
    const auto p = build_topology(family, params);
    const auto claim = family_claim(family, params);
    row.claim = claim.lo == claim.hi ? "pc = " + std::to_string(claim.lo)
                                     : std::to_string(claim.lo) + " <= pc <= " +
                                           std::to_string(claim.hi);
    const auto b = pc_bounds(p.graph, &p, options);
    bool ok = b.upper_coloring && is_proper_connected(p.graph, *b.upper_coloring, options.check).connected;
    std::ostringstream obs;
    obs << "bounds [" << b.lower << "," << b.upper << "]";
    int lo = b.lower, hi = b.upper;
    try {
      SolverOptions exact = options;
      exact.hint = b.upper_coloring;
      exact.max_colorings = 2'000'000;
      const auto cert = pc_exact(p.graph, b.upper, exact);
      lo = hi = *cert.value;
      obs << ", pc = " << *cert.value;
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::kResourceExceeded && e.kind() != ErrorKind::kSearchBudgetExceeded)
        throw;
      obs << ", exact skipped";
    }
    // the known range must be consistent with the stated one
    ok = ok && lo >= claim.lo && hi <= claim.hi;
    row.observed = obs.str();
    row.pass = ok;
    rows.push_back(std::move(row));
  }

  json arr = json::array();
  bool all = true;
  ctx.err << std::left << std::setw(22) << "instance" << std::setw(18) << "claim"
          << std::setw(32) << "observed"
          << "result\n";
  for (const auto &r : rows) {
    arr.push_back({{"instance", r.instance}, {"claim", r.claim}, {"observed", r.observed}, {"pass", r.pass}});
    ctx.err << std::left << std::setw(22) << r.instance << std::setw(18) << r.claim
            << std::setw(32) << r.observed << (r.pass ? "PASS" : "FAIL") << "\n";
    all = all && r.pass;
  }
  emit(ctx, arr, o.out_file);
  return all ? 0 : 1;
}

Graph random_connected(std::mt19937 &rng, int n, double density) {
  std::vector<Edge> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (Vertex v = 1; v < n; ++v)
    edges.push_back({std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v});
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const Edge e{std::min(u, v), std::max(u, v)};
      const bool present = std::any_of(edges.begin(), edges.end(), [&](const Edge &f) {
        return (f.u == u && f.v == v) || (f.u == v && f.v == u);
      });
      if (!present && coin(rng) < density)
        edges.push_back(e);
    }
  return Graph(n, std::move(edges));
}

// Random factor pairs: predicted product distances against BFS.
int audit_distances(Context &ctx, const Options &o) {
  std::mt19937 rng(o.seed);
  const int trials = 50;
  int failures = 0;
  long long pairs = 0;
  for (int t = 0; t < trials; ++t) {
    const Graph g = random_connected(rng, std::uniform_int_distribution<int>(1, o.max_n)(rng), 0.4);
    const Graph h = random_connected(rng, std::uniform_int_distribution<int>(1, o.max_n)(rng), 0.4);
    for (const auto kind : {ProductKind::kCartesian, ProductKind::kStrong,
                            ProductKind::kLexicographic, ProductKind::kDirect}) {
      const auto p = product(g, h, kind);
      const DistancePredictor predict(kind, g, h);
      for (Vertex a = 0; a < p.graph.vertex_count(); ++a) {
        const auto row = bfs_distances(p.graph, a);
        for (Vertex b = 0; b < p.graph.vertex_count(); ++b, ++pairs)
          if (predict(p.pair_of(a), p.pair_of(b)) != row[static_cast<std::size_t>(b)])
            ++failures;
      }
    }
  }
  emit(ctx, {{"trials", trials}, {"pairs", pairs}, {"mismatches", failures}, {"seed", o.seed}},
       o.out_file);
  ctx.err << "distance formulas: " << pairs << " pairs, " << failures << " mismatches -> "
          << (failures == 0 ? "PASS" : "FAIL") << "\n";
  return failures == 0 ? 0 : 1;
}

int cmd_audit(Context &ctx, const Options &o) {
  if (o.family == "distance")
    return audit_distances(ctx, o);
  const auto &names = topology_names();
  const bool known = std::find(names.begin(), names.end(), o.family) != names.end() ||
                     o.family == "hp" || o.family == "hl";
  if (!known)
    throw Error(ErrorKind::kInvalidParameter, "unknown audit family " + o.family);
  return audit_topology(ctx, o, solver_options(o));
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Context ctx{out, err};
  Options o;
  CLI::App app{"Proper connection numbers of graph products"};
  app.require_subcommand(1);

  auto add_jobs = [&](CLI::App *cmd) {
    cmd->add_option("--jobs", o.jobs, "worker threads (1 = serial reference, 0 = all cores)");
  };

  auto *gen = app.add_subcommand("gen", "generate a standard graph");
  gen->add_option("--family", o.family)
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "complete", "star", "petersen", "hypercube"}));
  gen->add_option("--n", o.n, "size (path/cycle/complete order, star leaves, cube dimension)");
  gen->add_option("-o,--output", o.out_file);
  gen->add_flag("--dot", o.dot, "print Graphviz DOT instead of JSON");

  auto *prod = app.add_subcommand("product", "build a graph product");
  prod->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"cartesian", "strong", "lex", "direct"}));
  prod->add_option("factors", o.files)->required()->expected(2);
  prod->add_option("-o,--output", o.out_file);
  prod->add_flag("--dot", o.dot);

  auto *topo = app.add_subcommand("topology", "build an interconnection-network preset");
  topo->add_option("--name", o.name)->required();
  topo->add_option("--params", o.params, "comma-separated sizes")->required();
  topo->add_option("-o,--output", o.out_file);
  topo->add_flag("--dot", o.dot);

  auto *pc = app.add_subcommand("pc", "proper connection number");
  pc->add_option("mode", o.mode)->required()->check(CLI::IsMember({"exact", "bounds"}));
  pc->add_option("graph", o.files)->required()->expected(1);
  pc->add_option("--k-max", o.k_max);
  pc->add_option("--max-edges", o.max_edges, "edge limit for searches with 3+ colors");
  pc->add_option("-o,--output", o.out_file);
  add_jobs(pc);

  auto *oe = app.add_subcommand("oepc", "odd-even proper connection number");
  oe->add_option("mode", o.mode)->required()->check(CLI::IsMember({"exact"}));
  oe->add_option("graph", o.files)->required()->expected(1);
  oe->add_option("--k-max", o.k_max);
  oe->add_option("--max-edges", o.max_edges);
  oe->add_option("-o,--output", o.out_file);
  add_jobs(oe);

  auto *color = app.add_subcommand("color", "constructive product coloring");
  color->add_option("--scheme", o.scheme)
      ->required()
      ->check(CLI::IsMember({"cartesian", "strong", "lex", "direct", "direct-k2"}));
  color->add_option("factors", o.files)->required()->expected(1, 2);
  color->add_option("-o,--output", o.out_file);
  color->add_option("--graph-out", o.graph_out, "write the colored product graph here");
  color->add_flag("--dot", o.dot);
  add_jobs(color);

  auto *verify = app.add_subcommand("verify", "check a coloring");
  verify->add_option("files", o.files, "graph and coloring")->required()->expected(2);
  verify->add_flag("--odd-even", o.odd_even);
  verify->add_option("-o,--output", o.out_file);
  add_jobs(verify);

  auto *dec = app.add_subcommand("decompose", "odd-cycle decomposition with o(G), b(G)");
  dec->add_option("graph", o.files)->required()->expected(1);
  dec->add_option("-o,--output", o.out_file);

  auto *audit = app.add_subcommand("audit", "replay the stated bounds for a family");
  audit->add_option("--family", o.family, "topology preset, or 'distance'")->required();
  audit->add_option("--max-n", o.max_n);
  audit->add_option("--seed", o.seed);
  audit->add_option("-o,--output", o.out_file);
  add_jobs(audit);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen)
      return cmd_gen(ctx, o);
    if (*prod)
      return cmd_product(ctx, o);
    if (*topo)
      return cmd_topology(ctx, o);
    if (*pc)
      return cmd_pc(ctx, o);
    if (*oe)
      return cmd_oepc(ctx, o);
    if (*color)
      return cmd_color(ctx, o);
    if (*verify)
      return cmd_verify(ctx, o);
    if (*dec)
      return cmd_decompose(ctx, o);
    if (*audit)
      return cmd_audit(ctx, o);
  } catch (const Error &e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return 1;
  }
  return 2;
}

} // namespace pcprod::cli
