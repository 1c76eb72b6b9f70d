#ifndef GEHMAN_DENDRITE_HPP
#define GEHMAN_DENDRITE_HPP

#include <vector>

#include "gehman/exactmaps.hpp"
#include "gehman/markov.hpp"
#include "gehman/trees.hpp"

namespace gehman {

// Truncation schedule: strictly increasing entropy targets h_k -> h0 realized
// by tree heights n(k) and fold multipliers ell(k).  Sequences run 1..K+1 so
// the bounds of the last materialized floor are available.
struct EntropySchedule {
  double h0 = 0.0;  // may be +infinity
  int K = 0;
  std::vector<int> n;        // n[k], k = 1..K+1 (n[0] unused)
  std::vector<long long> ell;
  std::vector<double> h;     // h[k] = ell(k) log 3 / 2^n(k); h[0] unused
  std::vector<long long> m;  // m[0] = 0, m[k] = m[k-1] + n(k), up to K+1

  long long big_l(int k) const;  // 2^{m(k-1)} * ell(k)
  double eps(int k) const { return std::ldexp(1.0, static_cast<int>(m[k - 1])) * (h[k + 1] - h[k]); }
  long long tree_count(int k) const { return 1LL << m[k - 1]; }
};

EntropySchedule build_schedule(double h0, int K);

// g_k with the window of the floor construction: the certificate entropy
// divided by the number of floor trees lies in [h_k, h_{k+1}).
ExactMapCertificate build_gk(const EntropySchedule& sched, int k);

// One floor: tree_count(k) copies of T^(n(k)) cyclically shifted, with g_k
// applied when wrapping from the last tree to the first.
struct FloorMap {
  int k = 0;
  PLTreeMap map;
  long long trees = 1;
  int local_intervals = 0;  // per tree
  int local_nodes = 0;
  int index(long long tree, int local_iv) const { return static_cast<int>(tree) * local_intervals + local_iv; }
  int node_index(long long tree, int local_node) const {
    return static_cast<int>(tree) * local_nodes + local_node;
  }
};

FloorMap build_floor_map(const EntropySchedule& sched, int k, const ExactMapCertificate& gk);

// The K-floor truncation: the skeleton tree of height m(K), the global map,
// and bookkeeping from (floor, tree, local object) to global ids.
struct DendriteModel {
  EntropySchedule sched;
  TreeModel skeleton;
  PLTreeMap map;  // G after assembly; becomes F after surgery
  std::vector<ExactMapCertificate> certs;  // certs[k], k = 1..K

  std::vector<int> vertex_node;             // skeleton vertex -> node id
  std::vector<std::vector<int>> edge_intervals;  // per skeleton edge, parent-to-child
  std::vector<int> interval_edge;           // interval -> skeleton edge
  std::vector<int> interval_floor;          // interval -> floor
  std::vector<int> node_floor;              // node -> floor of its deepest incidence
  // Global ids of floor-local objects: floor_nodes[k][tree*local_nodes+u],
  // floor_intervals[k][tree*local_intervals+i].
  std::vector<std::vector<int>> floor_nodes;
  std::vector<std::vector<int>> floor_intervals;

  // Measure: log of the weighted length 2^{-k} mu_k per interval, plus the
  // per-floor slopes and entropy enclosures.
  bool has_measure = false;
  LengthAssignment lengths;
  std::vector<double> floor_log_slope;          // log s_k, k = 1..K
  std::vector<EntropyEnclosure> floor_entropy;  // certified enclosure per floor
  bool surgered = false;

  DendriteModel(EntropySchedule s, TreeModel skel) : sched(std::move(s)), skeleton(std::move(skel)) {}

  int floor_of_level(int level) const;  // which floor hosts edges ending at this level
  double edge_length(EdgeId e) const;   // total weighted length of a skeleton edge
  double interval_length(int iv) const { return lengths.length(iv); }
};

// Builds all floors and glues them into the global complex; vertex dynamics
// at glued levels is asserted consistent.
DendriteModel assemble_G(const EntropySchedule& sched);

// Per-floor constant-slope lengths (each floor normalized to measure one),
// weighted by 2^{-k}; fills slopes and floor entropies.
void build_measure(DendriteModel& model);

// Measure of the unique arc between two points of the truncation.
double distance(const DendriteModel& model, const MapPoint& x, const MapPoint& y);

// Point helpers: a point on a skeleton vertex, and the containing-interval
// representation of a point given by (edge, parameter along the edge's
// weighted length).
MapPoint vertex_map_point(const DendriteModel& model, VertexId v);

}  // namespace gehman

#endif
