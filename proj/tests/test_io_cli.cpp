#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "pcprod/error.hpp"
#include "pcprod/io.hpp"

using namespace pcprod;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  io::json json() const { return io::json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pcprod_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string &name) const { return (dir_ / name).string(); }
  std::string write(const std::string &name, const std::string &text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  fs::path dir_;
};

} // namespace

TEST(Io, GraphRoundTripKeepsEdgeOrder) {
  const Graph g(4, {{2, 3}, {0, 1}, {3, 0}});
  const Graph back = io::graph_from_json(io::json::parse(io::to_json(g).dump()));
  EXPECT_TRUE(back == g);
  EXPECT_EQ(back.edge(0), (Edge{2, 3}));
}

TEST(Io, EdgeListParsing) {
  const Graph g = io::parse_edge_list("# triangle\n0 1\n1 2 # spoke\n\n2 0\n");
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_THROW(io::parse_edge_list("0 1 2\n"), Error);
  EXPECT_THROW(io::parse_edge_list("0 x\n"), Error);
  EXPECT_THROW(io::parse_edge_list("1 1\n"), Error);
}

TEST(Io, MalformedJson) {
  try {
    (void)io::graph_from_json(io::json::parse(R"({"n": 2})"));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
  }
  EXPECT_THROW(io::graph_from_json(io::json::parse(R"({"n": 2, "edges": [[0]]})")), Error);
  EXPECT_THROW(io::coloring_from_json(io::json::parse(R"({"colors": [1]})")), Error);
}

TEST(Io, ProductMetadataRoundTrip) {
  const auto p = build_topology("mesh", {3, 2, 2});
  const auto back = io::product_from_json(io::json::parse(io::to_json(p).dump()));
  ASSERT_TRUE(back);
  EXPECT_TRUE(back->graph == p.graph);
  ASSERT_TRUE(back->left_product);
  EXPECT_EQ(back->n_g(), 6);
  auto j = io::to_json(p);
  j["product"]["n_h"] = 3;
  EXPECT_THROW(io::product_from_json(j), Error);
  EXPECT_FALSE(io::product_from_json(io::to_json(make_path(3))));
}

TEST(Io, CertificateJson) {
  const auto j = io::to_json(oepc_exact(make_cycle(4), 4));
  EXPECT_EQ(j["value"], "inf");
  EXPECT_EQ(j["quantity"], "oepc");
  const auto k = io::to_json(pc_exact(make_star(3), 3));
  EXPECT_EQ(k["value"], 3);
  EXPECT_EQ(k["k"], 3);
  EXPECT_EQ(k["colors"].size(), 3u);
}

TEST(Io, Dot) {
  const Graph g = make_path(3);
  const auto c = EdgeColoring{{1, 2}, 2};
  const auto dot = io::to_dot(g, &c);
  EXPECT_NE(dot.find("0 -- 1 [label=\"1\""), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2 [label=\"2\""), std::string::npos);
}

TEST_F(CliTest, GenRoundTrip) {
  const auto r = run({"gen", "--family", "petersen", "-o", path("p.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(io::read_graph_file(path("p.json")) == make_petersen());
  const auto s = run({"gen", "--family", "cycle", "--n", "5"});
  ASSERT_EQ(s.code, 0);
  EXPECT_TRUE(io::graph_from_json(s.json()) == make_cycle(5));
  EXPECT_NE(run({"gen", "--family", "path", "--n", "3", "--dot"}).out.find("graph G"),
            std::string::npos);
}

TEST_F(CliTest, StarPcExact) {
  ASSERT_EQ(run({"gen", "--family", "star", "--n", "4", "-o", path("s.json")}).code, 0);
  const auto r = run({"pc", "exact", path("s.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["value"], 4);
  EXPECT_EQ(r.json()["quantity"], "pc");
}

TEST_F(CliTest, HyperPetersenThree) {
  ASSERT_EQ(run({"topology", "--name", "hp", "--params", "3", "-o", path("hp.json")}).code, 0);
  const auto b = run({"pc", "bounds", path("hp.json")});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(b.json()["lower"], 2);
  EXPECT_EQ(b.json()["upper"], 2);
  const auto e = run({"pc", "exact", path("hp.json"), "--jobs", "2"});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(e.json()["value"], 2);
}

TEST_F(CliTest, ProductAndBounds) {
  run({"gen", "--family", "path", "--n", "3", "-o", path("p3.json")});
  const auto r = run({"product", "--kind", "cartesian", path("p3.json"), path("p3.json"), "-o",
                      path("pp.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto b = run({"pc", "bounds", path("pp.json")});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(b.json()["lower"], 2);
  EXPECT_EQ(b.json()["upper"], 3);
}

TEST_F(CliTest, ColorThenVerifyAllSchemes) {
  run({"gen", "--family", "path", "--n", "3", "-o", path("p3.json")});
  run({"gen", "--family", "cycle", "--n", "3", "-o", path("c3.json")});
  run({"gen", "--family", "cycle", "--n", "4", "-o", path("c4.json")});
  const std::vector<std::vector<std::string>> cases = {
      {"cartesian", path("p3.json"), path("p3.json")},
      {"strong", path("c4.json"), path("p3.json")},
      {"lex", path("p3.json"), path("c3.json")},
      {"direct", path("c3.json"), path("c4.json")},
      {"direct", path("c4.json"), path("c3.json")},
      {"direct-k2", path("c3.json")},
  };
  for (const auto &c : cases) {
    std::vector<std::string> args{"color", "--scheme"};
    args.insert(args.end(), c.begin(), c.end());
    args.insert(args.end(), {"-o", path("col.json"), "--graph-out", path("g.json")});
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << c[0] << ": " << r.err;
    const auto v = run({"verify", path("g.json"), path("col.json")});
    ASSERT_EQ(v.code, 0) << v.err;
    EXPECT_EQ(v.json()["connected"], true) << c[0];
  }
}

TEST_F(CliTest, ColorPresetTopologiesVerify) {
  const std::vector<std::pair<std::string, std::string>> presets = {
      {"grid", "3,3"}, {"torus", "3,4"}, {"ghc", "2,3"}, {"lex-mesh", "2,3"}};
  for (const auto &[name, params] : presets) {
    run({"topology", "--name", name, "--params", params, "-o", path("t.json")});
    const auto b = run({"pc", "bounds", path("t.json")});
    ASSERT_EQ(b.code, 0) << b.err;
    std::ofstream(path("c.json")) << b.json()["upper_coloring"].dump();
    const auto v = run({"verify", path("t.json"), path("c.json")});
    EXPECT_EQ(v.json()["connected"], true) << name;
  }
}

TEST_F(CliTest, VerifyReportsFailureWithoutErrorCode) {
  run({"gen", "--family", "path", "--n", "4", "-o", path("p4.json")});
  const auto c = write("c.json", R"({"k": 1, "colors": [1, 1, 1]})");
  const auto v = run({"verify", path("p4.json"), c});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.json()["connected"], false);
  EXPECT_EQ(v.json()["failing_pair"], (io::json{0, 2}));
  const auto oe = run({"verify", path("p4.json"), c, "--odd-even"});
  EXPECT_EQ(oe.json()["connected"], false);
}

TEST_F(CliTest, OepcAndDecompose) {
  run({"gen", "--family", "cycle", "--n", "5", "-o", path("c5.json")});
  EXPECT_EQ(run({"oepc", "exact", path("c5.json")}).json()["value"], 3);
  run({"gen", "--family", "cycle", "--n", "4", "-o", path("c4.json")});
  EXPECT_EQ(run({"oepc", "exact", path("c4.json")}).json()["value"], "inf");
  const auto d = run({"decompose", path("c5.json")});
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(d.json()["o"], 3);
  EXPECT_EQ(d.json()["b"], 0);
}

TEST_F(CliTest, ErrorsNameTheInput) {
  const auto missing = run({"pc", "exact", path("nope.json")});
  EXPECT_EQ(missing.code, 1);
  EXPECT_NE(missing.err.find("nope.json"), std::string::npos);
  const auto bad = write("bad.json", "{\"n\": 3, \"edges\": [[0, 1]");
  const auto malformed = run({"pc", "exact", bad});
  EXPECT_EQ(malformed.code, 1);
  EXPECT_NE(malformed.err.find("bad.json"), std::string::npos);
  const auto split = write("split.txt", "0 1\n2 3\n");
  const auto disc = run({"pc", "exact", split});
  EXPECT_EQ(disc.code, 1);
  EXPECT_NE(disc.err.find("split.txt"), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"gen", "--family", "dodecahedron"}).code, 2);
  EXPECT_EQ(run({"gen", "--family", "cycle", "--n", "2"}).code, 1);
  EXPECT_EQ(run({"topology", "--name", "torus", "--params", "2,x"}).code, 1);
}

TEST_F(CliTest, EdgeListInput) {
  const auto f = write("k3.txt", "0 1\n1 2\n0 2\n");
  EXPECT_EQ(run({"pc", "exact", f}).json()["value"], 1);
}

TEST_F(CliTest, JobsDoNotChangeOutput) {
  run({"topology", "--name", "lex-mesh", "--params", "3,3", "-o", path("t.json")});
  const auto a = run({"pc", "exact", path("t.json"), "--jobs", "1"});
  const auto b = run({"pc", "exact", path("t.json"), "--jobs", "4"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, AuditDistance) {
  const auto a = run({"audit", "--family", "distance", "--max-n", "4", "--seed", "3"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.json()["mismatches"], 0);
  EXPECT_EQ(a.out, run({"audit", "--family", "distance", "--max-n", "4", "--seed", "3"}).out);
}

TEST_F(CliTest, AuditFamilyTable) {
  const auto a = run({"audit", "--family", "mesh", "--max-n", "3"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_NE(a.err.find("PASS"), std::string::npos);
  EXPECT_EQ(run({"audit", "--family", "ring"}).code, 1);
}
