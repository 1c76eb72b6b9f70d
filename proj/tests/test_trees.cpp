#include "gehman/trees.hpp"

#include <random>
#include <sstream>

#include "doctest.h"

using namespace gehman;

TEST_CASE("tree counts") {
  TreeModel t1 = build_tree(1);
  CHECK(t1.vertex_count() == 3);
  CHECK(t1.edge_count() == 2);
  CHECK(t1.leaf_count() == 2);

  TreeModel t2 = build_tree(2);
  CHECK(t2.vertex_count() == 7);
  CHECK(t2.edge_count() == 6);

  TreeModel t3 = build_tree(3);
  CHECK(t3.leaf_count() == 8);
  CHECK(t3.vertex_word(t3.vertex_id(BinaryWord::parse("000"))).str() == "000");
  CHECK_THROWS(build_tree(0));
}

TEST_CASE("degrees match the branch structure") {
  TreeModel t = build_tree(4);
  CHECK(t.degree(0) == 2);  // root
  for (VertexId v = 1; v < t.vertex_count(); ++v) {
    if (t.is_leaf(v))
      CHECK(t.degree(v) == 1);
    else
      CHECK(t.degree(v) == 3);
  }
}

TEST_CASE("edge recursion edges(n+1) = 2 edges(n) + 2") {
  for (int n = 1; n < 6; ++n) CHECK(build_tree(n + 1).edge_count() == 2 * build_tree(n).edge_count() + 2);
}

TEST_CASE("arc between identical points is degenerate") {
  TreeModel t = build_tree(3);
  TreePoint x{t.edge_id(BinaryWord::parse("01")), 0.4};
  CHECK(arc_between(t, x, x).segments.empty());
}

TEST_CASE("arc across the root of T1") {
  TreeModel t = build_tree(1);
  TreePoint c0 = vertex_point(t, t.vertex_id(BinaryWord::parse("0")));
  TreePoint c1 = vertex_point(t, t.vertex_id(BinaryWord::parse("1")));
  Arc a = arc_between(t, c0, c1);
  REQUIRE(a.segments.size() == 2);
  CHECK(a.segments[0].edge == t.edge_id(BinaryWord::parse("0")));
  CHECK(a.segments[1].edge == t.edge_id(BinaryWord::parse("1")));
}

TEST_CASE("arc from deep leaf to the other side of T3") {
  TreeModel t = build_tree(3);
  TreePoint x = vertex_point(t, t.vertex_id(BinaryWord::parse("000")));
  TreePoint y = vertex_point(t, t.vertex_id(BinaryWord::parse("1")));
  Arc a = arc_between(t, x, y);
  CHECK(a.segments.size() == 4);  // 000-00, 00-0, 0-root, root-1
}

TEST_CASE("arc edge count equals graph distance for all vertex pairs") {
  for (int n = 1; n <= 5; ++n) {
    TreeModel t = build_tree(n);
    for (VertexId a = 0; a < t.vertex_count(); ++a)
      for (VertexId b = 0; b < t.vertex_count(); ++b) {
        Arc arc = arc_between(t, vertex_point(t, a), vertex_point(t, b));
        CHECK(static_cast<int>(arc.segments.size()) == t.bfs_distance(a, b));
        CHECK(t.bfs_distance(a, b) == static_cast<int>(t.vertex_path(a, b).size()) - 1);
      }
  }
}

TEST_CASE("arc is symmetric as a segment set") {
  TreeModel t = build_tree(4);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> edge(0, t.edge_count() - 1);
  std::uniform_real_distribution<double> par(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    TreePoint x{edge(rng), par(rng)}, y{edge(rng), par(rng)};
    Arc f = arc_between(t, x, y), b = arc_between(t, y, x);
    REQUIRE(f.segments.size() == b.segments.size());
    for (std::size_t i = 0; i < f.segments.size(); ++i) {
      const auto& s = f.segments[i];
      const auto& r = b.segments[b.segments.size() - 1 - i];
      CHECK(s.edge == r.edge);
      CHECK(s.t0 == doctest::Approx(r.t1));
      CHECK(s.t1 == doctest::Approx(r.t0));
    }
  }
}

TEST_CASE("points off the tree are rejected") {
  TreeModel t = build_tree(2);
  CHECK_THROWS(arc_between(t, TreePoint{99, 0.5}, TreePoint{0, 0.5}));
  CHECK_THROWS(arc_between(t, TreePoint{0, 1.5}, TreePoint{0, 0.5}));
}

TEST_CASE("dot export is deterministic and labelled") {
  TreeModel t = build_tree(2);
  std::ostringstream a, b;
  t.write_dot(a);
  t.write_dot(b);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("label=\"00\"") != std::string::npos);
}
