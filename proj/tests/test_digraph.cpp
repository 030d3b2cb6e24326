#include "support.hpp"

using namespace lapdyn;
using namespace lapdyn::test;

TEST_CASE("parse the seven-vertex example", "[digraph]") {
  Digraph g = example_graph();
  CHECK(g.size() == 7);
  REQUIRE(g.edges().size() == 8);
  for (const Edge& e : g.edges()) CHECK(e.weight == 1.0);
  CHECK(std::find(g.edges().begin(), g.edges().end(), Edge{2, 6, 1.0}) != g.edges().end());  // 3 -> 7
}

TEST_CASE("parse edge cases of the grammar", "[digraph]") {
  SECTION("vertex count only") {
    Digraph g = parse_digraph("1");
    CHECK(g.size() == 1);
    CHECK(g.edges().empty());
  }
  SECTION("explicit weights") {
    Digraph g = parse_digraph("3\n1 2 2.5\n2 3 0.5");
    REQUIRE(g.edges().size() == 2);
    CHECK(g.edges()[0].weight == 2.5);
    CHECK(g.edges()[1].weight == 0.5);
  }
  SECTION("comments, blank lines, CRLF-free whitespace") {
    Digraph g = parse_digraph("# header\n\n  4   # four vertices\n1\t2\n\n3 4 1e-3 # tiny\n");
    CHECK(g.size() == 4);
    REQUIRE(g.edges().size() == 2);
    CHECK(g.edges()[1].weight == 1e-3);
  }
}

TEST_CASE("parse errors carry line numbers", "[digraph][errors]") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_digraph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 999;
  };
  CHECK(line_of("3\n1 2\n1 2 3 4\n") == 3);      // malformed
  CHECK(line_of("3\n1 x\n") == 2);               // not an id
  CHECK(line_of("3\n1 4\n") == 2);               // out of range
  CHECK(line_of("3\n0 1\n") == 2);               // ids are 1-based
  CHECK(line_of("3\n1 2 0\n") == 2);             // non-positive weight
  CHECK(line_of("3\n1 2 -1.5\n") == 2);
  CHECK(line_of("3\n1 2 abc\n") == 2);
  CHECK(line_of("3\n1 2\n# c\n1 2 2\n") == 4);   // duplicate
  CHECK(line_of("0\n") == 1);
  CHECK(line_of("two\n") == 1);
  CHECK_THROWS_AS(parse_digraph("# nothing\n"), ParseError);
}

TEST_CASE("Digraph constructor validates", "[digraph][errors]") {
  CHECK_THROWS_AS(Digraph(2, {{0, 2, 1.0}}), ParseError);
  CHECK_THROWS_AS(Digraph(2, {{0, 1, 0.0}}), ParseError);
  CHECK_THROWS_AS(Digraph(2, {{0, 1, 1.0}, {0, 1, 2.0}}), ParseError);
  CHECK_NOTHROW(Digraph(2, {{0, 0, 1.0}}));
}

TEST_CASE("adjacency bundle of the example matches the printed Q and D", "[digraph]") {
  AdjacencyBundle a = build_adjacency(example_graph());
  Matrix Q = rows({{1, 0, 0, 0, 0, 0, 0},
                   {1, 0, 0, 0, 0, 0, 0},
                   {0, 0, 0, 0, 1, 0, 0},
                   {0, 0, 1, 0, 0, 0, 0},
                   {0, 0, 0, 1, 0, 0, 0},
                   {1, 0, 0, 0, 0, 0, 1},
                   {0, 0, 1, 0, 0, 1, 0}});
  CHECK(max_abs_diff(a.Q, Q) < 1e-12);
  CHECK(max_abs_diff(a.D, vec({1, 1, 1, 1, 1, 2, 2})) < 1e-12);
  CHECK(a.loop_added == ids({1}));
  CHECK(max_abs_diff(a.S.rowwise().sum(), Vector::Ones(7)) < 1e-12);
}

TEST_CASE("adjacency of small graphs", "[digraph]") {
  SECTION("isolated vertex gets the convention loop") {
    AdjacencyBundle a = build_adjacency(parse_digraph("1"));
    CHECK(a.Q(0, 0) == 1.0);
    CHECK(a.D(0) == 1.0);
    CHECK(a.S(0, 0) == 1.0);
  }
  SECTION("3-cycle gives the cyclic permutation") {
    AdjacencyBundle a = build_adjacency(graph(3, {{1, 2}, {2, 3}, {3, 1}}));
    // Row i holds the vertex i sees: 1 sees 3, 2 sees 1, 3 sees 2.
    CHECK(max_abs_diff(a.S, rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})) == 0.0);
    CHECK(a.loop_added.empty());
  }
  SECTION("input self-loop counts toward in-degree") {
    AdjacencyBundle a = build_adjacency(parse_digraph("2\n1 1 3\n1 2"));
    CHECK(a.loop_added.empty());
    CHECK(a.Q(0, 0) == 3.0);
    CHECK(a.D(0) == 3.0);
  }
  SECTION("weights enter S proportionally") {
    AdjacencyBundle a = build_adjacency(parse_digraph("3\n1 3 1\n2 3 3"));
    CHECK(a.S(2, 0) == Catch::Approx(0.25));
    CHECK(a.S(2, 1) == Catch::Approx(0.75));
    CHECK(a.loop_added == ids({1, 2}));
  }
}

TEST_CASE("reverse", "[digraph]") {
  CHECK(reverse(graph(3, {{1, 2}, {2, 3}})) == graph(3, {{3, 2}, {2, 1}}));
  Digraph g = example_graph();
  CHECK(reverse(reverse(g)) == g);
  CHECK(reverse(graph(3, {{1, 2}, {3, 2}})) == graph(3, {{2, 1}, {2, 3}}));
  CHECK(reverse(parse_digraph("2\n1 2 0.25")).edges().front() == Edge{1, 0, 0.25});
}

TEST_CASE("adjacency invariants on random digraphs", "[digraph][property]") {
  std::mt19937_64 rng(0xd1a6);
  for (int trial = 0; trial < 200; ++trial) {
    Digraph g = random_weakly_connected(rng);
    AdjacencyBundle a = build_adjacency(g);
    CHECK(max_abs_diff(a.S.rowwise().sum(), Vector::Ones(g.size())) <= 1e-12);
    CHECK((a.Q.rowwise().maxCoeff().array() > 0.0).all());
    CHECK((a.D.array() > 0.0).all());
    CHECK(reverse(reverse(g)) == g);

    VertexSet no_in;
    auto in = g.in_neighbors();
    for (Index v = 0; v < g.size(); ++v)
      if (in[v].empty()) no_in.push_back(v);
    CHECK(a.loop_added == no_in);
  }
}
