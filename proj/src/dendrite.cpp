#include "gehman/dendrite.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gehman {

namespace {
const double kLog3 = std::log(3.0);
const double kLog2 = std::log(2.0);
}  // namespace

long long EntropySchedule::big_l(int k) const {
  if (m[k - 1] >= 40) throw std::overflow_error("floor index arithmetic overflow: truncation too deep");
  const long long scale = 1LL << m[k - 1];
  if (ell[k] > std::numeric_limits<long long>::max() / scale) throw std::overflow_error("fold multiplier overflow");
  return scale * ell[k];
}

EntropySchedule build_schedule(double h0, int K) {
  if (K < 1) throw std::invalid_argument("need at least one floor");
  if (!(h0 > 0.0)) throw std::invalid_argument("target entropy must lie in (0, inf]");
  EntropySchedule s;
  s.h0 = h0;
  s.K = K;
  s.n.assign(K + 2, 0);
  s.ell.assign(K + 2, 0);
  s.h.assign(K + 2, 0.0);
  s.m.assign(K + 2, 0);

  if (std::isinf(h0)) {
    if (K + 1 > 30) throw std::overflow_error("truncation too deep for the unbounded-entropy schedule");
    for (int k = 1; k <= K + 1; ++k) {
      s.n[k] = k;
      s.ell[k] = 1LL << (2 * k);  // 4^k, so h_k = 2^k log 3
      s.h[k] = static_cast<double>(s.ell[k]) * kLog3 / std::ldexp(1.0, s.n[k]);
    }
  } else {
    int n0 = -1;
    for (int cand = 0; cand <= 30; ++cand) {
      const double l1 = std::floor(h0 * 0.5 * std::ldexp(1.0, cand + 1) / kLog3);
      if (l1 >= 1.0) {
        n0 = cand;
        break;
      }
    }
    if (n0 < 0) throw std::invalid_argument("target entropy too small: no valid schedule start");
    long long prev = 0;
    for (int k = 1; k <= K + 1; ++k) {
      s.n[k] = k + n0;
      if (s.n[k] > 40) throw std::overflow_error("schedule heights overflow");
      const double raw = std::floor(h0 * (1.0 - std::ldexp(1.0, -k)) * std::ldexp(1.0, s.n[k]) / kLog3);
      s.ell[k] = std::max(prev + 1, static_cast<long long>(raw));
      prev = s.ell[k];
      s.h[k] = static_cast<double>(s.ell[k]) * kLog3 / std::ldexp(1.0, s.n[k]);
    }
  }
  for (int k = 1; k <= K + 1; ++k) s.m[k] = s.m[k - 1] + s.n[k];
  for (int k = 2; k <= K + 1; ++k) {
    if (!(s.ell[k] > s.ell[k - 1]) || !(s.n[k] > s.n[k - 1]) || !(s.h[k] > s.h[k - 1]))
      throw std::runtime_error("schedule validation failed: sequences not strictly increasing");
  }
  for (int k = 1; k <= K + 1; ++k)
    if (!(s.h[k] < h0)) throw std::runtime_error("schedule validation failed: h_k must stay below the target");
  return s;
}

ExactMapCertificate build_gk(const EntropySchedule& sched, int k) {
  if (k < 1 || k > sched.K) throw std::out_of_range("floor index");
  auto cert = build_exact_map(sched.n[k], sched.big_l(k), sched.eps(k));
  // The certified window equals [2^{m(k-1)} h_k, 2^{m(k-1)} h_{k+1}), which
  // is the per-floor bound; assert it numerically anyway.
  const double scale = std::ldexp(1.0, static_cast<int>(sched.m[k - 1]));
  if (!(cert.enclosure.lo / scale >= sched.h[k] - 1e-9) || !(cert.enclosure.hi / scale < sched.h[k + 1] + 1e-9))
    throw std::runtime_error("floor map certificate violates the per-floor entropy bound");
  return cert;
}

FloorMap build_floor_map(const EntropySchedule& sched, int k, const ExactMapCertificate& gk) {
  FloorMap f;
  f.k = k;
  f.trees = sched.tree_count(k);
  const PLTreeMap& g = gk.model.map;
  f.local_intervals = g.cx.interval_count();
  f.local_nodes = g.cx.node_count;

  PLTreeMap& m = f.map;
  for (long long t = 0; t < f.trees; ++t) {
    for (int u = 0; u < f.local_nodes; ++u) m.cx.add_node();
    for (int i = 0; i < f.local_intervals; ++i) {
      const int a = g.cx.end(i, 0), b = g.cx.end(i, 1);
      m.cx.add_interval(f.node_index(t, a), f.node_index(t, b));
    }
  }
  m.node_image.assign(m.cx.node_count, -1);
  m.paths.assign(m.cx.interval_count(), {});
  for (long long t = 0; t < f.trees; ++t) {
    const long long next = (t + 1) % f.trees;
    const bool wrap = (t == f.trees - 1);
    for (int u = 0; u < f.local_nodes; ++u)
      m.node_image[f.node_index(t, u)] = wrap ? f.node_index(next, g.node_image[u]) : f.node_index(next, u);
    for (int i = 0; i < f.local_intervals; ++i) {
      if (!wrap) {
        m.paths[f.index(t, i)] = {PathSeg{{Lap{f.index(next, i), true}}, 1}};
      } else {
        std::vector<PathSeg> path;
        path.reserve(g.paths[i].size());
        for (const auto& seg : g.paths[i]) {
          PathSeg out;
          out.repeats = seg.repeats;
          for (const auto& lap : seg.chain) out.chain.push_back({f.index(next, lap.iv), lap.fwd});
          path.push_back(std::move(out));
        }
        m.paths[f.index(t, i)] = std::move(path);
      }
    }
  }
  validate_map(m);
  return f;
}

namespace {

int floor_of_level_impl(const EntropySchedule& s, int level) {
  for (int k = 1; k <= s.K; ++k)
    if (level <= s.m[k]) return k;
  throw std::out_of_range("level beyond the truncation");
}

}  // namespace

int DendriteModel::floor_of_level(int level) const { return floor_of_level_impl(sched, level); }

double DendriteModel::edge_length(EdgeId e) const {
  double total = 0.0;
  for (int iv : edge_intervals[e]) total += lengths.length(iv);
  return total;
}

DendriteModel assemble_G(const EntropySchedule& sched) {
  if (sched.m[sched.K] > 22) throw std::overflow_error("truncation skeleton too large");
  DendriteModel model(sched, TreeModel(static_cast<int>(sched.m[sched.K])));
  const TreeModel& skel = model.skeleton;
  PLTreeMap& gm = model.map;

  model.vertex_node.resize(skel.vertex_count());
  for (VertexId v = 0; v < skel.vertex_count(); ++v) model.vertex_node[v] = gm.cx.add_node();
  model.edge_intervals.assign(skel.edge_count(), {});
  model.floor_nodes.assign(sched.K + 1, {});
  model.floor_intervals.assign(sched.K + 1, {});
  model.certs.resize(sched.K + 1);

  std::vector<int> pending_image;

  for (int k = 1; k <= sched.K; ++k) {
    model.certs[k] = build_gk(sched, k);
    const TreeMarkovMap& g = model.certs[k].model;
    const long long trees = sched.tree_count(k);
    const int ln = g.map.cx.node_count;
    const int li = g.map.cx.interval_count();
    auto& fnodes = model.floor_nodes[k];
    auto& fivs = model.floor_intervals[k];
    fnodes.assign(trees * ln, -1);
    fivs.assign(trees * li, -1);

    // Nodes: local vertices become skeleton vertices (shared with adjacent
    // floors), cuts get fresh global nodes.
    std::vector<int> local_vertex_of_node(ln, -1);
    for (VertexId v = 0; v < g.tree.vertex_count(); ++v) local_vertex_of_node[g.vertex_node[v]] = v;
    for (long long t = 0; t < trees; ++t) {
      const BinaryWord tree_word =
          BinaryWord::from_integer(static_cast<std::uint64_t>(t), static_cast<std::size_t>(sched.m[k - 1]));
      for (int u = 0; u < ln; ++u) {
        const int lv = local_vertex_of_node[u];
        if (lv >= 0) {
          const BinaryWord global_word = tree_word.concat(g.tree.vertex_word(lv));
          fnodes[t * ln + u] = model.vertex_node[skel.vertex_id(global_word)];
        } else {
          fnodes[t * ln + u] = gm.cx.add_node();
        }
      }
      for (int i = 0; i < li; ++i) {
        const int a = g.map.cx.end(i, 0), b = g.map.cx.end(i, 1);
        fivs[t * li + i] = gm.cx.add_interval(fnodes[t * ln + a], fnodes[t * ln + b]);
      }
      for (EdgeId le = 0; le < g.tree.edge_count(); ++le) {
        const EdgeId ge = skel.edge_id(tree_word.concat(g.tree.edge_word(le)));
        for (int iv : g.edge_intervals[le]) model.edge_intervals[ge].push_back(fivs[t * li + iv]);
      }
    }
    pending_image.resize(gm.cx.node_count, -1);

    // Dynamics: cyclic shift of the copies with g_k applied at the wrap.
    for (long long t = 0; t < trees; ++t) {
      const long long next = (t + 1) % trees;
      const bool wrap = (t == trees - 1);
      for (int u = 0; u < ln; ++u) {
        const int gnode = fnodes[t * ln + u];
        const int image = wrap ? fnodes[next * ln + g.map.node_image[u]] : fnodes[next * ln + u];
        if (pending_image[gnode] >= 0 && pending_image[gnode] != image)
          throw std::runtime_error("gluing inconsistency: floors disagree on a shared vertex image");
        pending_image[gnode] = image;
      }
    }
    gm.paths.resize(gm.cx.interval_count());
    for (long long t = 0; t < trees; ++t) {
      const long long next = (t + 1) % trees;
      const bool wrap = (t == trees - 1);
      for (int i = 0; i < li; ++i) {
        std::vector<PathSeg> path;
        if (!wrap) {
          path = {PathSeg{{Lap{fivs[next * li + i], true}}, 1}};
        } else {
          for (const auto& seg : g.map.paths[i]) {
            PathSeg out;
            out.repeats = seg.repeats;
            for (const auto& lap : seg.chain) out.chain.push_back({fivs[next * li + lap.iv], lap.fwd});
            path.push_back(std::move(out));
          }
        }
        gm.paths[fivs[t * li + i]] = std::move(path);
      }
    }
  }

  gm.node_image = std::move(pending_image);
  gm.node_image.resize(gm.cx.node_count, -1);
  gm.paths.resize(gm.cx.interval_count());

  model.interval_edge.assign(gm.cx.interval_count(), -1);
  for (EdgeId e = 0; e < skel.edge_count(); ++e)
    for (int iv : model.edge_intervals[e]) model.interval_edge[iv] = e;
  model.interval_floor.assign(gm.cx.interval_count(), -1);
  for (int k = 1; k <= sched.K; ++k)
    for (int iv : model.floor_intervals[k]) model.interval_floor[iv] = k;
  model.node_floor.assign(gm.cx.node_count, -1);
  for (int iv = 0; iv < gm.cx.interval_count(); ++iv)
    for (int side = 0; side < 2; ++side) {
      int& slot = model.node_floor[gm.cx.end(iv, side)];
      const int f = model.interval_floor[iv];
      slot = (slot < 0) ? f : std::min(slot, f);
    }

  validate_map(gm);
  return model;
}

void build_measure(DendriteModel& model) {
  const int K = model.sched.K;
  model.lengths.log_len.assign(model.map.cx.interval_count(), 0.0);
  model.floor_log_slope.assign(K + 1, 0.0);
  model.floor_entropy.assign(K + 1, {});
  const CoveringMatrix global = covering_matrix(model.map);
  for (int k = 1; k <= K; ++k) {
    const auto& fivs = model.floor_intervals[k];
    // Extract the floor block; before surgery each floor is invariant, so
    // the block is the whole story for this floor.
    std::vector<int> pos(global.n, -1);
    for (std::size_t j = 0; j < fivs.size(); ++j) pos[fivs[j]] = static_cast<int>(j);
    CoveringMatrix block;
    block.n = static_cast<int>(fivs.size());
    block.rows.resize(block.n);
    for (std::size_t j = 0; j < fivs.size(); ++j) {
      for (const auto& [col, val] : global.rows[fivs[j]]) {
        if (pos[col] < 0) throw std::runtime_error("floor block extraction requires the unsurgered map");
        block.rows[j].emplace_back(pos[col], val);
      }
    }
    if (!is_irreducible(block))
      throw std::runtime_error("floor covering matrix is reducible after root collapse");
    const LengthAssignment mu = constant_slope_lengths(block);
    model.floor_entropy[k] = entropy(block);
    model.floor_log_slope[k] = model.floor_entropy[k].mid();
    for (std::size_t j = 0; j < fivs.size(); ++j)
      model.lengths.log_len[fivs[j]] = mu.log_len[j] - static_cast<double>(k) * kLog2;
  }
  model.has_measure = true;
}

namespace {

// Offset of a point from the parent end of its host edge, in measure units.
double edge_offset(const DendriteModel& model, const MapPoint& p) {
  const EdgeId e = model.interval_edge[p.iv];
  double off = 0.0;
  for (int iv : model.edge_intervals[e]) {
    if (iv == p.iv) {
      off += p.t * model.lengths.length(iv);
      return off;
    }
    off += model.lengths.length(iv);
  }
  throw std::logic_error("interval not found on its host edge");
}

bool word_is_prefix(const BinaryWord& p, const BinaryWord& w) {
  if (p.size() > w.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.bit(i) != w.bit(i)) return false;
  return true;
}

}  // namespace

double distance(const DendriteModel& model, const MapPoint& x, const MapPoint& y) {
  if (!model.has_measure) throw std::logic_error("distance requires the measure");
  if (x.iv < 0 || x.iv >= model.map.cx.interval_count() || y.iv < 0 || y.iv >= model.map.cx.interval_count())
    throw std::out_of_range("point off the truncation");
  const TreeModel& skel = model.skeleton;
  const EdgeId ex = model.interval_edge[x.iv], ey = model.interval_edge[y.iv];
  const double offx = edge_offset(model, x), offy = edge_offset(model, y);
  if (ex == ey) return std::abs(offx - offy);
  const BinaryWord wx = skel.edge_word(ex), wy = skel.edge_word(ey);
  auto between = [&](const BinaryWord& lo, const BinaryWord& hi) {
    double s = 0.0;
    for (std::size_t len = lo.size() + 1; len < hi.size(); ++len)
      s += model.edge_length(skel.edge_id(hi.prefix(len)));
    return s;
  };
  if (word_is_prefix(wx, wy)) return (model.edge_length(ex) - offx) + between(wx, wy) + offy;
  if (word_is_prefix(wy, wx)) return offx + between(wy, wx) + (model.edge_length(ey) - offy);
  std::size_t common = 0;
  while (common < wx.size() && common < wy.size() && wx.bit(common) == wy.bit(common)) ++common;
  const BinaryWord meet = wx.prefix(common);
  return offx + between(meet, wx) + between(meet, wy) + offy;
}

MapPoint vertex_map_point(const DendriteModel& model, VertexId v) {
  const TreeModel& skel = model.skeleton;
  if (skel.level(v) == 0) {
    const EdgeId e = skel.edge_id(BinaryWord::parse("0"));
    return {model.edge_intervals[e].front(), 0.0};
  }
  const EdgeId e = v - 1;
  return {model.edge_intervals[e].back(), 1.0};
}

}  // namespace gehman
