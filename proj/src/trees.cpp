#include "gehman/trees.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <ostream>
#include <stdexcept>

namespace gehman {

TreeModel::TreeModel(int height) : height_(height) {
  if (height < 1) throw std::invalid_argument("tree height must be >= 1");
  if (height > 24) throw std::length_error("tree height too large");
  words_.reserve(vertex_count());
  for (int k = 0; k <= height_; ++k) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v)
      words_.push_back(BinaryWord::from_integer(v, k));
  }
}

VertexId TreeModel::vertex_id(const BinaryWord& w) const {
  const int k = static_cast<int>(w.size());
  if (k > height_) throw std::out_of_range("word longer than tree height");
  return static_cast<int>(((std::uint64_t{1} << k) - 1) + w.to_integer());
}

EdgeId TreeModel::edge_id(const BinaryWord& child_word) const {
  if (child_word.empty()) throw std::invalid_argument("edges are indexed by nonempty child words");
  return vertex_id(child_word) - 1;
}

VertexId TreeModel::edge_parent(EdgeId e) const { return vertex_id(words_[e + 1].parent()); }

int TreeModel::degree(VertexId v) const {
  const int lv = level(v);
  if (lv == height_) return 1;
  return lv == 0 ? 2 : 3;
}

std::vector<VertexId> TreeModel::vertex_path(VertexId a, VertexId b) const {
  // Walk both words up to their longest common prefix.
  BinaryWord wa = words_[a], wb = words_[b];
  std::size_t common = 0;
  while (common < wa.size() && common < wb.size() && wa.bit(common) == wb.bit(common)) ++common;
  std::vector<VertexId> up, down;
  for (BinaryWord w = wa; w.size() > common; w = w.parent()) up.push_back(vertex_id(w));
  up.push_back(vertex_id(wa.prefix(common)));
  for (BinaryWord w = wb; w.size() > common; w = w.parent()) down.push_back(vertex_id(w));
  std::reverse(down.begin(), down.end());
  up.insert(up.end(), down.begin(), down.end());
  return up;
}

int TreeModel::bfs_distance(VertexId a, VertexId b) const {
  std::vector<int> dist(vertex_count(), -1);
  std::deque<VertexId> q{a};
  dist[a] = 0;
  auto neighbours = [&](VertexId v) {
    std::vector<VertexId> out;
    const BinaryWord& w = words_[v];
    if (!w.empty()) out.push_back(vertex_id(w.parent()));
    if (level(v) < height_) {
      out.push_back(vertex_id(w.child(0)));
      out.push_back(vertex_id(w.child(1)));
    }
    return out;
  };
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop_front();
    if (v == b) return dist[v];
    for (VertexId u : neighbours(v))
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push_back(u);
      }
  }
  return -1;
}

void TreeModel::write_dot(std::ostream& os) const {
  os << "graph tree {\n";
  std::map<std::string, VertexId> ordered;
  for (VertexId v = 0; v < vertex_count(); ++v) ordered.emplace(words_[v].str(), v);
  for (const auto& [label, v] : ordered)
    os << "  v" << v << " [label=\"" << (label.empty() ? "@" : label) << "\"];\n";
  std::map<std::string, EdgeId> edges;
  for (EdgeId e = 0; e < edge_count(); ++e) edges.emplace(edge_word(e).str(), e);
  for (const auto& [label, e] : edges) os << "  v" << edge_parent(e) << " -- v" << edge_child(e) << ";\n";
  os << "}\n";
}

TreePoint canonical_point(const TreeModel& t, const TreePoint& p) {
  if (p.edge < 0 || p.edge >= t.edge_count()) throw std::out_of_range("edge id off the tree");
  if (p.t < 0.0 || p.t > 1.0) throw std::out_of_range("edge parameter outside [0,1]");
  if (p.t == 0.0) {
    VertexId parent = t.edge_parent(p.edge);
    return vertex_point(t, parent);
  }
  return p;
}

TreePoint vertex_point(const TreeModel& t, VertexId v) {
  if (t.level(v) == 0) return TreePoint{t.edge_id(BinaryWord::parse("0")), 0.0};
  return TreePoint{v - 1, 1.0};
}

namespace {
void push_segment(std::vector<ArcSegment>& segs, EdgeId e, double t0, double t1) {
  if (t0 != t1) segs.push_back({e, t0, t1});
}
bool is_prefix(const BinaryWord& p, const BinaryWord& w) {
  if (p.size() > w.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.bit(i) != w.bit(i)) return false;
  return true;
}
}  // namespace

Arc arc_between(const TreeModel& t, const TreePoint& x, const TreePoint& y) {
  if (x.edge < 0 || x.edge >= t.edge_count() || y.edge < 0 || y.edge >= t.edge_count())
    throw std::out_of_range("point off the tree");
  if (x.t < 0.0 || x.t > 1.0 || y.t < 0.0 || y.t > 1.0)
    throw std::out_of_range("edge parameter outside [0,1]");
  Arc arc;
  if (x.edge == y.edge) {
    push_segment(arc.segments, x.edge, x.t, y.t);
    return arc;
  }
  const BinaryWord wx = t.edge_word(x.edge), wy = t.edge_word(y.edge);
  if (is_prefix(wx, wy)) {
    // y lies below the child vertex of x's edge: descend.
    push_segment(arc.segments, x.edge, x.t, 1.0);
    for (std::size_t k = wx.size() + 1; k < wy.size(); ++k)
      push_segment(arc.segments, t.edge_id(wy.prefix(k)), 0.0, 1.0);
    push_segment(arc.segments, y.edge, 0.0, y.t);
    return arc;
  }
  if (is_prefix(wy, wx)) {
    push_segment(arc.segments, x.edge, x.t, 0.0);
    for (std::size_t k = wx.size() - 1; k > wy.size(); --k)
      push_segment(arc.segments, t.edge_id(wx.prefix(k)), 1.0, 0.0);
    push_segment(arc.segments, y.edge, 1.0, y.t);
    return arc;
  }
  // Divergent: climb to the longest common prefix vertex, then descend.
  std::size_t common = 0;
  while (common < wx.size() && common < wy.size() && wx.bit(common) == wy.bit(common)) ++common;
  push_segment(arc.segments, x.edge, x.t, 0.0);
  for (std::size_t k = wx.size() - 1; k > common; --k)
    push_segment(arc.segments, t.edge_id(wx.prefix(k)), 1.0, 0.0);
  for (std::size_t k = common + 1; k < wy.size(); ++k)
    push_segment(arc.segments, t.edge_id(wy.prefix(k)), 0.0, 1.0);
  push_segment(arc.segments, y.edge, 0.0, y.t);
  return arc;
}

TreeModel build_tree(int n) { return TreeModel(n); }

}  // namespace gehman
