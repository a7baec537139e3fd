#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "lvnet/csv.hpp"
#include "lvnet/dot.hpp"
#include "lvnet/errors.hpp"
#include "lvnet/ggm.hpp"
#include "lvnet/serialize.hpp"
#include "lvnet/sim.hpp"
#include "lvnet/ulvm.hpp"

namespace lvnet {
namespace {

DataMatrix parse(const std::string& text) {
  std::istringstream in(text);
  return parse_csv(in);
}

TEST(Csv, ParsesHeaderAndRows) {
  const DataMatrix d = parse("a, b\n1,2\n\n 3.5 ,-4e-1\n");
  EXPECT_EQ(d.col_names(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(d.n_rows(), 2u);
  EXPECT_EQ(d(1, 0), 3.5);
  EXPECT_EQ(d(1, 1), -0.4);
}

TEST(Csv, RejectsNonFiniteWithLocation) {
  try {
    parse("a,b\n1,2\n3,nan\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.row(), 3u);
    EXPECT_EQ(e.col(), 2u);
    EXPECT_EQ(e.kind(), ErrorKind::validation);
  }
  EXPECT_THROW(parse("a,b\n1,x\n"), ParseError);
  EXPECT_THROW(parse("a,b\n1,inf\n"), ParseError);
}

TEST(Csv, StructuralErrors) {
  EXPECT_THROW(parse("a,b\n1,2\n3\n"), RaggedRows);
  EXPECT_THROW(parse(""), EmptyFile);
  EXPECT_THROW(parse("a,b\n"), EmptyFile);
  EXPECT_THROW(load_csv("/nonexistent/dir/file.csv"), IoError);
}

TEST(Csv, RoundTripIsExact) {
  const DataMatrix d = sample_ulvm(UlvmModel({1.0, 0.3, -2.0}), 200, 6).data;
  std::stringstream buf;
  write_csv(buf, d);
  EXPECT_EQ(parse_csv(buf), d);

  const auto path = std::filesystem::temp_directory_path() / "lvnet_io_test.csv";
  save_csv(path, d);
  EXPECT_EQ(load_csv(path), d);
  std::filesystem::remove(path);
}

TEST(Csv, SymmetricMatrixFile) {
  const auto path = std::filesystem::temp_directory_path() / "lvnet_sigma_test.csv";
  {
    std::ofstream out(path);
    out << "a,b\n2,0.5\n0.7,1\n";
  }
  const SymMatrix s = load_sym_matrix_csv(path);
  EXPECT_DOUBLE_EQ(s(0, 1), 0.6);
  EXPECT_DOUBLE_EQ(s(1, 0), 0.6);
  {
    std::ofstream out(path);
    out << "a,b\n2,0.5\n";
  }
  EXPECT_THROW(load_sym_matrix_csv(path), InvalidArgument);
  std::filesystem::remove(path);
}

TEST(Dot, EmptyGraph) {
  EXPECT_EQ(to_dot(Graph(3)), "graph G {\n  1;\n  2;\n  3;\n}\n");
}

TEST(Dot, UlvmConcentrationGraph) {
  const Graph g = graph_from_concentration(ulvm_concentration(UlvmModel({1.0, 0.5, 0.5})).concentration);
  EXPECT_EQ(to_dot(g),
            "graph G {\n  1;\n  2;\n  3;\n"
            "  1 -- 2 [label=\"-0.2\"];\n"
            "  1 -- 3 [label=\"-0.2\"];\n"
            "  2 -- 3 [label=\"-0.1\"];\n}\n");
}

TEST(Dot, OutputIsOrderIndependent) {
  Graph a(4), b(4);
  a.add_edge(0, 1, 0.5);
  a.add_edge(2, 3, -0.25);
  b.add_edge(3, 2, -0.25);
  b.add_edge(1, 0, 0.5);
  EXPECT_EQ(to_dot(a), to_dot(b));
  EXPECT_NE(to_dot(a, {"p", "q", "r", "s"}).find("[label=\"q\"]"), std::string::npos);
}

TEST(Json, GraphShape) {
  Graph g(3, WeightKind::partial_correlation);
  g.add_edge(0, 2, 0.3);
  const nlohmann::json j = g;
  EXPECT_EQ(j["nodes"], 3);
  EXPECT_EQ(j["weight_kind"], "partial_correlation");
  EXPECT_EQ(j["edge_count"], 1);
  EXPECT_EQ(j["edges"][0]["from"], 1);
  EXPECT_EQ(j["edges"][0]["to"], 3);
  EXPECT_DOUBLE_EQ(j["edges"][0]["weight"].get<double>(), 0.3);
}

TEST(Json, ReportRoundTripsDoubles) {
  const ExperimentReport r = run_table1(100, 2);
  const nlohmann::json j = nlohmann::json::parse(nlohmann::json(r).dump());
  EXPECT_EQ(j["standard_fit"]["r_squared"].get<double>(), r.standard_fit.r_squared);
}

}  // namespace
}  // namespace lvnet
