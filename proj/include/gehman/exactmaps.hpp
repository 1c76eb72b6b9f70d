#ifndef GEHMAN_EXACTMAPS_HPP
#define GEHMAN_EXACTMAPS_HPP

#include <string>
#include <vector>

#include "gehman/markov.hpp"
#include "gehman/trees.hpp"

namespace gehman {

// A Markov map on the full binary tree T^(n) together with its layout: which
// tree edge hosts each basic interval, where the tree vertices sit inside the
// node set, and the six marked partition points used by the dendrite surgery.
struct TreeMarkovMap {
  TreeModel tree;
  PLTreeMap map;
  std::vector<int> vertex_node;                // tree vertex -> node id
  std::vector<std::vector<int>> edge_intervals;  // per edge, parent-to-child order
  std::vector<int> interval_edge;              // interval -> host edge

  // Marked points: [a,b] and [d,e] are disjoint free arcs, p and q interior,
  // with f(p) the leftmost leaf and f(q) the root.
  int node_a = -1, node_b = -1, node_p = -1;
  int node_d = -1, node_e = -1, node_q = -1;

  TreeMarkovMap() : tree(1) {}
  explicit TreeMarkovMap(int height) : tree(height) {}
};

struct StructureFlags {
  bool markov_consistent = false;   // covering paths chain and endpoints agree
  bool vertex_orbits = false;       // each vertex level is one +1-cycle
  bool unique_fixed_root = false;   // the root is the only fixed point
  bool marked_points = false;       // p, q, and the two disjoint free arcs
  bool primitive = false;           // covering matrix has a positive power
  bool entropy_in_window = false;   // certified enclosure inside the window
  bool eventually_periodic = false; // every partition point reaches a cycle

  bool all() const {
    return markov_consistent && vertex_orbits && unique_fixed_root && marked_points && primitive &&
           entropy_in_window && eventually_periodic;
  }
};

struct ExactMapCertificate {
  int n = 0;
  long long ell = 0;
  double epsilon = 0.0;
  double window_lo = 0.0;  // ell*log(3)/2^n
  double window_hi = 0.0;  // window_lo + epsilon
  EntropyEnclosure enclosure;
  StructureFlags flags;
  int delay = 0;  // conveyor length used by the synthesis
  TreeMarkovMap model;

  bool ok() const { return flags.all(); }
};

// Deterministic synthesis for a fixed conveyor length.  The resulting map has
// exactly the odometer vertex action, a primitive covering matrix, and
// entropy slightly above ell*log(3)/2^n; the excess shrinks as `delay` grows.
TreeMarkovMap synthesize_exact_map(int n, long long ell, int delay);

// Re-checks every structural property and the entropy window independently of
// how the map was produced.  Failures are recorded in the flags, not thrown.
ExactMapCertificate certify(const TreeMarkovMap& m, int n, long long ell, double epsilon);

// Tries increasing conveyor lengths until the certificate passes.  Throws
// std::runtime_error with the best achieved enclosure if the window cannot be
// met within the synthesis grid.
ExactMapCertificate build_exact_map(int n, long long ell, double epsilon);

std::string certificate_to_json(const ExactMapCertificate& cert);

// Window tolerance applied on both ends of the entropy check.
inline constexpr double kWindowTolerance = 1e-9;

}  // namespace gehman

#endif
