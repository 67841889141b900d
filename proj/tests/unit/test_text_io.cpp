#include <gtest/gtest.h>

#include <sstream>

#include "sgm/catalog.hpp"
#include "sgm/text_io.hpp"

using namespace sgm;

namespace {

template <typename T, typename W>
std::string dump(W write, const T& value) {
  std::ostringstream out;
  write(out, value);
  return out.str();
}

}  // namespace

TEST(TextIo, MatrixRoundTrip) {
  const BinaryMatroid m = r16();
  const std::string text = dump(write_matroid, m);
  std::istringstream in(text);
  const BinaryMatroid back = read_matroid(in);
  EXPECT_EQ(back.labels(), m.labels());
  EXPECT_EQ(back.representation(), m.representation());
  EXPECT_EQ(dump(write_matroid, back), text);
}

TEST(TextIo, MatrixDefaultLabelsAndComments) {
  std::istringstream in("# a comment\n\n2 3\n101\n011\n\n");
  const LabeledMatrix m = read_matrix(in);
  EXPECT_EQ(m.labels, (std::vector<std::string>{"e1", "e2", "e3"}));
  EXPECT_EQ(m.matrix, Gf2Matrix::from_rows({"101", "011"}));
}

TEST(TextIo, MatrixErrorsCarryLineNumbers) {
  const auto fails_at = [](const std::string& text, const std::string& where) {
    std::istringstream in(text);
    try {
      (void)read_matrix(in);
      ADD_FAILURE() << "no error for: " << text;
    } catch (const ParseError& e) {
      EXPECT_NE(std::string(e.what()).find(where), std::string::npos) << e.what();
    }
  };
  fails_at("2 x\n", "line 1");
  fails_at("2 3\n101\n01\n", "line 3");
  fails_at("1 3\n1a1\n", "line 2");
  fails_at("1 2\n10\n11\n", "line 3");
  fails_at("2 2\n10\n", "expected 2 rows");
  fails_at("#labels a b c\n1 2\n10\n", "#labels");
}

TEST(TextIo, GraphRoundTripIsExact) {
  for (const Multigraph& g : {complete_bipartite(3, 5), petersen(), wheel(5)}) {
    const std::string text = dump(write_graph, g);
    std::istringstream in(text);
    const Multigraph back = read_graph(in);
    EXPECT_EQ(back, g);
    EXPECT_EQ(dump(write_graph, back), text);
  }
}

TEST(TextIo, GraphAllEdgeKinds) {
  std::istringstream in("link x y\nl: loop y\nh: half x\nloose\nab:link x z\n");
  const Multigraph g = read_graph(in);
  ASSERT_EQ(g.edge_count(), 5U);
  EXPECT_EQ(g.edge(0).label, "e1");
  EXPECT_EQ(g.edge(1).kind, EdgeKind::loop);
  EXPECT_EQ(g.edge(2).kind, EdgeKind::half);
  EXPECT_EQ(g.edge(3).kind, EdgeKind::loose);
  EXPECT_EQ(g.edge(4).label, "ab");
  EXPECT_EQ(g.vertices(), (std::vector<std::string>{"x", "y", "z"}));
  std::istringstream again(dump(write_graph, g));
  EXPECT_EQ(read_graph(again), g);
}

TEST(TextIo, GraphErrors) {
  for (const char* text : {"link x\n", "link x x\n", "bridge x y\n", "a: link x y\na: link y z\n",
                           "#vertices x x\n", ": link x y\n", "loose z\n"}) {
    std::istringstream in(text);
    EXPECT_THROW((void)read_graph(in), ParseError) << text;
  }
}

TEST(TextIo, SignedGraphRoundTrip) {
  for (const auto& [name, s] : signed_corpus()) {
    const std::string text = dump(write_signed_graph, s);
    std::istringstream in(text);
    const SignedGraph back = read_signed_graph(in);
    EXPECT_EQ(back.graph(), s.graph()) << name;
    EXPECT_EQ(back.signs(), s.signs()) << name;
  }
}

TEST(TextIo, SignedDefaults) {
  std::istringstream in("a: link x y\nb: link y z -\nh: half z\nf: loose\n");
  const SignedGraph s = read_signed_graph(in);
  EXPECT_EQ(s.signs(), (std::vector<int>{1, -1, -1, 1}));
  std::istringstream bad("h: half z +\n");
  EXPECT_THROW((void)read_signed_graph(bad), Error);
}

TEST(TextIo, MissingFile) {
  EXPECT_THROW((void)read_matrix_file("/nonexistent/file.mat"), Error);
  EXPECT_THROW((void)read_graph_file("/nonexistent/file.graph"), Error);
}
