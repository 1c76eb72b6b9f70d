#include "gehman/exactmaps.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace gehman {
namespace {

// Synthesis overview.  The map is the edge rotation induced by the +1 action
// on child labels, refined on the distinguished deepest edge star = e_{1^n},
// whose image runs over the target edge Y = e_{0^n}:
//
//   ladder   L_1..L_x     conveyor; piece i covers target cell i+1, the first
//                         piece starts at the bottom vertex and the last
//                         exits at the far leaf
//   ascent   P            closes the ladder to the top vertex
//   descent  Wa1, Wa1b,   single full pass back down, cut twice near the top
//            Wa2          (the cuts carry the marked points) and extended
//                         through the bottom vertex up the spine to the root
//   dip      XD1, XD2     one fold into the first piece hanging off the root;
//                         its return path has odd length, which makes the
//                         covering digraph aperiodic
//   return   Wret         retraces the spine back to the bottom (n >= 2)
//   wraps    Wb           3^ell - 2 full passes; the entropy carrier
//
// Every other deep edge is subdivided into the same number of cells and maps
// cell-to-cell onto its rotation image, so the deep ring is a conveyor of
// period 2^n carrying mass one ladder rung higher per revolution.  Shallow
// edges e_{1^j} thread ring j into ring j+1; the deepest threading lands on
// the first target cell, i.e. the bottom of the ladder.  All returns to the
// wrap block other than its own therefore pass the full ladder, and the
// entropy excess over ell*log(3)/2^n decays as the ladder grows.
struct StarLayout {
  int x;  // ladder length
  int idx_P, idx_Wa1, idx_Wa1b, idx_Wa2;
  int idx_XD1, idx_XD2;
  int idx_Wret = -1;  // n >= 2 only
  int idx_Wb;
  int count;  // pieces on star == cells on every deep edge
};

StarLayout star_layout(int n, int x) {
  StarLayout s;
  s.x = x;
  s.idx_P = x + 1;
  s.idx_Wa1 = x + 2;
  s.idx_Wa1b = x + 3;
  s.idx_Wa2 = x + 4;
  s.idx_XD1 = x + 5;
  s.idx_XD2 = x + 6;
  if (n >= 2) {
    s.idx_Wret = x + 7;
    s.idx_Wb = x + 8;
  } else {
    s.idx_Wb = x + 7;
  }
  s.count = s.idx_Wb;
  return s;
}

}  // namespace

TreeMarkovMap synthesize_exact_map(int n, long long ell, int delay) {
  if (n < 1) throw std::invalid_argument("height must be >= 1");
  if (ell < 1) throw std::invalid_argument("entropy multiplier must be >= 1");
  if (delay < 4) throw std::invalid_argument("conveyor too short for its own first bite");
  const StarLayout lay = star_layout(n, delay);

  TreeMarkovMap out(n);
  const TreeModel& tree = out.tree;
  PLTreeMap& m = out.map;
  IntervalComplex& cx = m.cx;

  out.vertex_node.resize(tree.vertex_count());
  for (VertexId v = 0; v < tree.vertex_count(); ++v) out.vertex_node[v] = cx.add_node();

  const EdgeId star = tree.edge_id(BinaryWord::ones(n));
  const EdgeId target = tree.edge_id(BinaryWord::zeros(n));

  auto is_deep = [&](EdgeId e) { return tree.edge_depth(e) == n; };
  auto is_threading = [&](EdgeId e) { return tree.edge_depth(e) < n && tree.edge_word(e).all_ones(); };
  auto rotation_image = [&](EdgeId e) { return tree.edge_id(tree.edge_word(e).oplus()); };

  const int C = lay.count;
  out.edge_intervals.assign(tree.edge_count(), {});
  std::vector<std::vector<int>> edge_cuts(tree.edge_count());
  for (EdgeId e = 0; e < tree.edge_count(); ++e) {
    const int pieces = is_deep(e) ? C : (is_threading(e) ? 3 : 1);
    int prev = out.vertex_node[tree.edge_parent(e)];
    for (int c = 1; c <= pieces; ++c) {
      int next = (c == pieces) ? out.vertex_node[tree.edge_child(e)] : cx.add_node();
      if (c != pieces) edge_cuts[e].push_back(next);
      out.edge_intervals[e].push_back(cx.add_interval(prev, next));
      prev = next;
    }
  }
  out.interval_edge.assign(cx.interval_count(), -1);
  for (EdgeId e = 0; e < tree.edge_count(); ++e)
    for (int iv : out.edge_intervals[e]) out.interval_edge[iv] = e;

  auto grid_node = [&](EdgeId e, int c) {
    if (c == 0) return out.vertex_node[tree.edge_parent(e)];
    if (c == static_cast<int>(out.edge_intervals[e].size())) return out.vertex_node[tree.edge_child(e)];
    return edge_cuts[e][c - 1];
  };
  auto cells = [&](EdgeId e) -> const std::vector<int>& { return out.edge_intervals[e]; };

  // --- node images ---------------------------------------------------------
  m.node_image.assign(cx.node_count, -1);
  for (VertexId v = 0; v < tree.vertex_count(); ++v)
    m.node_image[out.vertex_node[v]] = out.vertex_node[tree.vertex_id(tree.vertex_word(v).oplus())];

  for (EdgeId e = 0; e < tree.edge_count(); ++e) {
    if (e == star) continue;
    const EdgeId img = rotation_image(e);
    if (is_deep(e)) {
      for (int c = 1; c < C; ++c) m.node_image[edge_cuts[e][c - 1]] = grid_node(img, c);
    } else if (is_threading(e)) {
      const int j = tree.edge_depth(e);
      m.node_image[edge_cuts[e][0]] = out.vertex_node[tree.vertex_id(BinaryWord::zeros(j))];
      m.node_image[edge_cuts[e][1]] = (j < n - 1)
                                          ? out.vertex_node[tree.vertex_id(BinaryWord::zeros(j + 1))]
                                          : grid_node(target, 1);
    }
  }
  {
    const int root_node = out.vertex_node[tree.vertex_id(BinaryWord())];
    auto set_cut = [&](int piece_index, int node) {
      if (piece_index < C) m.node_image[edge_cuts[star][piece_index - 1]] = node;
    };
    for (int i = 1; i <= lay.x; ++i) set_cut(i, grid_node(target, i + 1));
    set_cut(lay.idx_P, grid_node(target, C));  // p: the far leaf
    set_cut(lay.idx_Wa1, grid_node(target, C - 1));
    set_cut(lay.idx_Wa1b, grid_node(target, C - 2));
    set_cut(lay.idx_Wa2, root_node);  // q
    set_cut(lay.idx_XD1, n >= 2 ? edge_cuts[tree.edge_id(BinaryWord::ones(1))][0] : edge_cuts[star][0]);
    set_cut(lay.idx_XD2, root_node);
    if (n >= 2) set_cut(lay.idx_Wret, grid_node(target, 0));
  }

  // --- covering paths ------------------------------------------------------
  m.paths.assign(cx.interval_count(), {});
  auto chain_over = [&](EdgeId e, int c_lo, int c_hi, bool fwd) {
    PathSeg seg;
    if (fwd)
      for (int c = c_lo; c <= c_hi; ++c) seg.chain.push_back({cells(e)[c - 1], true});
    else
      for (int c = c_hi; c >= c_lo; --c) seg.chain.push_back({cells(e)[c - 1], false});
    return seg;
  };
  auto full_chain = [&](EdgeId e, bool fwd) {
    return chain_over(e, 1, static_cast<int>(cells(e).size()), fwd);
  };

  for (EdgeId e = 0; e < tree.edge_count(); ++e) {
    if (e == star) continue;
    const EdgeId img = rotation_image(e);
    if (is_deep(e)) {
      for (int c = 1; c <= C; ++c) m.paths[cells(e)[c - 1]] = {PathSeg{{Lap{cells(img)[c - 1], true}}, 1}};
    } else if (is_threading(e)) {
      const int j = tree.edge_depth(e);
      m.paths[cells(e)[0]] = {full_chain(tree.edge_id(BinaryWord::zeros(j)), true)};
      if (j < n - 1) {
        const EdgeId down = tree.edge_id(BinaryWord::zeros(j + 1));
        m.paths[cells(e)[1]] = {full_chain(down, true)};
        m.paths[cells(e)[2]] = {full_chain(down, false)};
      } else {
        m.paths[cells(e)[1]] = {PathSeg{{Lap{cells(target)[0], true}}, 1}};
        m.paths[cells(e)[2]] = {PathSeg{{Lap{cells(target)[0], false}}, 1}};
      }
    } else {
      m.paths[cells(e)[0]] = {full_chain(img, true)};
    }
  }

  {
    const auto& pieces = cells(star);
    const BigInt wraps = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(ell)) - 2;
    m.paths[pieces[0]] = {chain_over(target, 1, 2, true)};
    for (int i = 2; i <= lay.x; ++i)
      m.paths[pieces[i - 1]] = {PathSeg{{Lap{cells(target)[i], true}}, 1}};
    m.paths[pieces[lay.idx_P - 1]] = {chain_over(target, lay.x + 2, C, true)};
    m.paths[pieces[lay.idx_Wa1 - 1]] = {PathSeg{{Lap{cells(target)[C - 1], false}}, 1}};
    m.paths[pieces[lay.idx_Wa1b - 1]] = {PathSeg{{Lap{cells(target)[C - 2], false}}, 1}};
    {
      // Descent to the bottom vertex, extended up the spine to the root.
      PathSeg seg = chain_over(target, 1, C - 2, false);
      for (int j = n - 1; j >= 1; --j)
        seg.chain.push_back({cells(tree.edge_id(BinaryWord::zeros(j)))[0], false});
      m.paths[pieces[lay.idx_Wa2 - 1]] = {std::move(seg)};
    }
    if (n >= 2) {
      const int t1 = cells(tree.edge_id(BinaryWord::ones(1)))[0];
      m.paths[pieces[lay.idx_XD1 - 1]] = {PathSeg{{Lap{t1, true}}, 1}};
      m.paths[pieces[lay.idx_XD2 - 1]] = {PathSeg{{Lap{t1, false}}, 1}};
      PathSeg back;
      for (int j = 1; j <= n - 1; ++j)
        back.chain.push_back({cells(tree.edge_id(BinaryWord::zeros(j)))[0], true});
      m.paths[pieces[lay.idx_Wret - 1]] = {std::move(back)};
    } else {
      m.paths[pieces[lay.idx_XD1 - 1]] = {PathSeg{{Lap{pieces[0], true}}, 1}};
      m.paths[pieces[lay.idx_XD2 - 1]] = {PathSeg{{Lap{pieces[0], false}}, 1}};
    }
    {
      PathSeg rest = full_chain(target, true);
      rest.repeats = wraps;
      m.paths[pieces[lay.idx_Wb - 1]] = {std::move(rest)};
    }

    out.node_p = edge_cuts[star][lay.idx_P - 1];
    out.node_a = edge_cuts[star][lay.idx_P - 2];
    out.node_b = edge_cuts[star][lay.idx_Wa1 - 1];
    out.node_d = edge_cuts[star][lay.idx_Wa1b - 1];
    out.node_q = edge_cuts[star][lay.idx_Wa2 - 1];
    out.node_e = edge_cuts[star][lay.idx_XD1 - 1];
  }

  validate_map(m);
  return out;
}

namespace {

bool check_vertex_orbits(const TreeMarkovMap& tm) {
  const TreeModel& tree = tm.tree;
  for (int k = 0; k <= tree.height(); ++k) {
    // The level-k vertices must realize w -> w (+) 1 exactly, and that action
    // must be a single cycle through all 2^k of them.
    for (const auto& w : all_words(k)) {
      const int img = tm.map.node_image[tm.vertex_node[tree.vertex_id(w)]];
      if (img != tm.vertex_node[tree.vertex_id(w.oplus())]) return false;
    }
    const int start = tm.vertex_node[tree.vertex_id(BinaryWord::zeros(k))];
    std::uint64_t steps = 0;
    int cur = start;
    do {
      cur = tm.map.node_image[cur];
      ++steps;
    } while (cur != start && steps <= (std::uint64_t{1} << k));
    if (steps != (std::uint64_t{1} << k)) return false;
  }
  return true;
}

bool check_unique_fixed_root(const TreeMarkovMap& tm, const CoveringMatrix& a) {
  const int root = tm.vertex_node[0];
  if (tm.map.node_image[root] != root) return false;
  for (int u = 0; u < tm.map.cx.node_count; ++u)
    if (u != root && tm.map.node_image[u] == u) return false;
  // No interior fixed point: no interval covers itself.
  for (int i = 0; i < a.n; ++i)
    if (a.at(i, i) != 0) return false;
  return true;
}

bool check_marked_points(const TreeMarkovMap& tm) {
  const auto& m = tm.map;
  const int root = tm.vertex_node[0];
  const int leftmost_leaf = tm.vertex_node[tm.tree.vertex_id(BinaryWord::zeros(tm.tree.height()))];
  for (int node : {tm.node_a, tm.node_b, tm.node_p, tm.node_d, tm.node_e, tm.node_q})
    if (node < 0 || node >= m.cx.node_count) return false;
  if (m.node_image[tm.node_p] != leftmost_leaf) return false;
  if (m.node_image[tm.node_q] != root) return false;

  // Both arcs must be two-interval chains on a single edge (hence free arcs)
  // with the marked point interior, and the closed arcs must be disjoint.
  auto arc_intervals = [&](int na, int nmid, int nb) -> std::vector<int> {
    std::vector<int> found;
    for (int iv = 0; iv < m.cx.interval_count(); ++iv) {
      const int s0 = m.cx.end(iv, 0), s1 = m.cx.end(iv, 1);
      if ((s0 == na && s1 == nmid) || (s0 == nmid && s1 == na) || (s0 == nmid && s1 == nb) ||
          (s0 == nb && s1 == nmid))
        found.push_back(iv);
    }
    return found;
  };
  auto arc1 = arc_intervals(tm.node_a, tm.node_p, tm.node_b);
  auto arc2 = arc_intervals(tm.node_d, tm.node_q, tm.node_e);
  if (arc1.size() != 2 || arc2.size() != 2) return false;
  for (int iv : arc1)
    for (int jv : arc2)
      if (iv == jv) return false;
  const EdgeId e1 = tm.interval_edge[arc1[0]], e2 = tm.interval_edge[arc2[0]];
  if (tm.interval_edge[arc1[1]] != e1 || tm.interval_edge[arc2[1]] != e2) return false;
  std::set<int> ends1{tm.node_a, tm.node_p, tm.node_b};
  for (int u : {tm.node_d, tm.node_q, tm.node_e})
    if (ends1.count(u)) return false;
  return true;
}

bool check_eventually_periodic(const TreeMarkovMap& tm, int* max_transient = nullptr) {
  const auto& img = tm.map.node_image;
  const int nn = tm.map.cx.node_count;
  int worst = 0;
  for (int u = 0; u < nn; ++u) {
    std::vector<int> seen_at(nn, -1);
    int cur = u;
    int step = 0;
    while (seen_at[cur] < 0) {
      seen_at[cur] = step++;
      cur = img[cur];
      if (step > nn + 1) return false;
    }
    worst = std::max(worst, seen_at[cur]);
  }
  if (max_transient) *max_transient = worst;
  return true;
}

}  // namespace

ExactMapCertificate certify(const TreeMarkovMap& tm, int n, long long ell, double epsilon) {
  ExactMapCertificate cert{n, ell, epsilon, 0.0, 0.0, {}, {}, 0, tm};
  cert.window_lo = static_cast<double>(ell) * std::log(3.0) / std::ldexp(1.0, n);
  cert.window_hi = cert.window_lo + epsilon;

  try {
    validate_map(tm.map);
    cert.flags.markov_consistent = true;
  } catch (const std::exception&) {
    cert.flags.markov_consistent = false;
    return cert;
  }
  const CoveringMatrix a = covering_matrix(tm.map);
  cert.flags.vertex_orbits = check_vertex_orbits(tm);
  cert.flags.unique_fixed_root = check_unique_fixed_root(tm, a);
  cert.flags.marked_points = check_marked_points(tm);
  cert.flags.primitive = is_primitive(a);
  cert.flags.eventually_periodic = check_eventually_periodic(tm);
  cert.enclosure = entropy(a);
  cert.flags.entropy_in_window = cert.enclosure.lo >= cert.window_lo - kWindowTolerance &&
                                 cert.enclosure.hi < cert.window_hi + kWindowTolerance;
  return cert;
}

ExactMapCertificate build_exact_map(int n, long long ell, double epsilon) {
  if (n < 1 || ell < 1 || !(epsilon > 0.0)) throw std::invalid_argument("need n >= 1, ell >= 1, epsilon > 0");
  static const int kDelays[] = {13, 14, 17, 18, 21, 22, 25, 26, 33, 34, 49, 50, 65, 66, 97, 129, 193, 257};
  ExactMapCertificate best;
  bool have_best = false;
  for (int delay : kDelays) {
    TreeMarkovMap m = synthesize_exact_map(n, ell, delay);
    ExactMapCertificate cert = certify(m, n, ell, epsilon);
    cert.delay = delay;
    if (cert.ok()) return cert;
    if (!have_best || (cert.enclosure.hi < best.enclosure.hi)) {
      best = std::move(cert);
      have_best = true;
    }
  }
  throw std::runtime_error(
      "synthesis window too tight: achieved entropy enclosure [" + std::to_string(best.enclosure.lo) + ", " +
      std::to_string(best.enclosure.hi) + ") for target [" + std::to_string(best.window_lo) + ", " +
      std::to_string(best.window_hi) + "); retry with a finer grid");
}

std::string certificate_to_json(const ExactMapCertificate& cert) {
  nlohmann::ordered_json j;
  j["n"] = cert.n;
  j["ell"] = cert.ell;
  j["epsilon"] = cert.epsilon;
  j["window"] = {cert.window_lo, cert.window_hi};
  j["window"] = {cert.window_lo, cert.window_hi};
  j["entropy_enclosure"] = {cert.enclosure.lo, cert.enclosure.hi};
  j["delay"] = cert.delay;
  j["flags"] = {
      {"markov_consistent", cert.flags.markov_consistent},
      {"vertex_orbits", cert.flags.vertex_orbits},
      {"unique_fixed_root", cert.flags.unique_fixed_root},
      {"marked_points", cert.flags.marked_points},
      {"primitive", cert.flags.primitive},
      {"entropy_in_window", cert.flags.entropy_in_window},
      {"eventually_periodic", cert.flags.eventually_periodic},
  };
  j["marked_nodes"] = {{"a", cert.model.node_a}, {"b", cert.model.node_b}, {"p", cert.model.node_p},
                       {"d", cert.model.node_d}, {"e", cert.model.node_e}, {"q", cert.model.node_q}};
  j["covering_matrix"] = nlohmann::ordered_json::parse(matrix_to_json(covering_matrix(cert.model.map)));
  return j.dump(2);
}

}  // namespace gehman
