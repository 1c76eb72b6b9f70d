#ifndef GEHMAN_TREES_HPP
#define GEHMAN_TREES_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gehman/words.hpp"

namespace gehman {

using VertexId = int;
using EdgeId = int;

// The full binary tree of height n.  Vertices are all binary words of length
// <= n (root = empty word); edges join each word w to its children w0, w1.
// Vertex ids enumerate level by level, within a level by integer value of the
// word, so vertex 0 is the root.  The edge leading from parent(w) to w shares
// the index of its child vertex minus one.
class TreeModel {
public:
  explicit TreeModel(int height);

  int height() const { return height_; }
  int vertex_count() const { return static_cast<int>((std::uint64_t{2} << height_) - 1); }
  int edge_count() const { return vertex_count() - 1; }
  int leaf_count() const { return 1 << height_; }

  VertexId vertex_id(const BinaryWord& w) const;
  const BinaryWord& vertex_word(VertexId v) const { return words_[v]; }
  int level(VertexId v) const { return static_cast<int>(words_[v].size()); }
  bool is_leaf(VertexId v) const { return level(v) == height_; }

  // Edge from parent(w) to w, identified by the child word (|w| >= 1).
  EdgeId edge_id(const BinaryWord& child_word) const;
  VertexId edge_parent(EdgeId e) const;
  VertexId edge_child(EdgeId e) const { return e + 1; }
  const BinaryWord& edge_word(EdgeId e) const { return words_[e + 1]; }
  int edge_depth(EdgeId e) const { return level(e + 1); }

  int degree(VertexId v) const;

  // Vertex sequence of the unique injective path between two vertices.
  std::vector<VertexId> vertex_path(VertexId a, VertexId b) const;

  // Graph distance oracle (BFS over the adjacency lists, ignoring the
  // parent/child structure); used to cross-check vertex_path.
  int bfs_distance(VertexId a, VertexId b) const;

  // DOT rendering of the vertex/edge graph, vertices labelled by word and
  // emitted in lexicographic label order.
  void write_dot(std::ostream& os) const;

private:
  int height_;
  std::vector<BinaryWord> words_;  // by vertex id
};

// A point on a tree edge: parameter t in [0,1] measured from the parent
// endpoint.  Vertices are canonical at (parent edge, t=1); the root is
// represented as (edge to child 0, t=0).
struct TreePoint {
  EdgeId edge = 0;
  double t = 0.0;
};

struct ArcSegment {
  EdgeId edge;
  double t0;  // segment runs from t0 to t1 in the edge's own parametrization
  double t1;
};

// Injective path between two points, as an ordered list of oriented edge
// segments; consecutive segments meet at a shared vertex.
struct Arc {
  std::vector<ArcSegment> segments;
};

TreePoint canonical_point(const TreeModel& t, const TreePoint& p);
TreePoint vertex_point(const TreeModel& t, VertexId v);

Arc arc_between(const TreeModel& t, const TreePoint& x, const TreePoint& y);

TreeModel build_tree(int n);

}  // namespace gehman

#endif
