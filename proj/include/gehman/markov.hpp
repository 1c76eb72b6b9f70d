#ifndef GEHMAN_MARKOV_HPP
#define GEHMAN_MARKOV_HPP

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gehman {

using BigInt = boost::multiprecision::cpp_int;

// Natural log of a positive big integer, computed from the most significant
// limbs so it never overflows a double.
double log_big(const BigInt& v);

// ---------------------------------------------------------------------------
// Interval complexes.
//
// A complex is a collection of closed intervals (free arcs) glued at nodes.
// Nodes are the partition points of a Markov map; intervals are the basic
// intervals.  Geometry (which tree edge hosts an interval) is kept by the
// callers; the complex only knows incidences.
// ---------------------------------------------------------------------------
struct IntervalComplex {
  int node_count = 0;
  std::vector<std::array<int, 2>> ends;  // per interval: {node at side 0, node at side 1}

  int add_node() { return node_count++; }
  int add_interval(int a, int b) {
    ends.push_back({a, b});
    return static_cast<int>(ends.size()) - 1;
  }
  int interval_count() const { return static_cast<int>(ends.size()); }
  int end(int iv, int side) const { return ends[iv][side]; }
};

// One monotone traversal of an interval: forward means from side 0 to side 1.
struct Lap {
  int iv;
  bool fwd;
};

// A run of `repeats` consecutive monotone passes through the same chain of
// intervals.  Passes alternate direction (ping-pong): pass 0 follows `chain`
// as given, pass 1 retraces it backwards, and so on.  Repeats may be huge
// (multiplicities like 3^512 appear in deep floors), hence BigInt.
struct PathSeg {
  std::vector<Lap> chain;
  BigInt repeats = 1;
};

int lap_start(const IntervalComplex& cx, const Lap& l);
int lap_end(const IntervalComplex& cx, const Lap& l);
int seg_start(const IntervalComplex& cx, const PathSeg& s);
int seg_end(const IntervalComplex& cx, const PathSeg& s);

// ---------------------------------------------------------------------------
// Piecewise-linear Markov maps over a complex.
//
// Every interval carries a covering path: the ordered list of intervals its
// image traverses.  node_image is the induced point map on partition points.
// The path of interval i must start at node_image[end(i,0)], chain
// continuously, and stop at node_image[end(i,1)].  `power` marks a p-fold
// composition that is kept virtual: paths describe the base map, and all
// derived quantities (covering matrix, evaluation) apply the base p times.
// ---------------------------------------------------------------------------
struct PLTreeMap {
  IntervalComplex cx;
  std::vector<int> node_image;
  std::vector<std::vector<PathSeg>> paths;
  long long power = 1;

  int interval_count() const { return cx.interval_count(); }
};

// Throws std::invalid_argument naming the offending partition point or
// interval when the map data is inconsistent (discontinuous path, endpoint
// image mismatch, node image out of range).
void validate_map(const PLTreeMap& m);

// ---------------------------------------------------------------------------
// Covering matrices.
// ---------------------------------------------------------------------------
struct CoveringMatrix {
  int n = 0;
  // Sparse rows, each sorted by column: A[i][j] = number of traversals of j
  // by the image of i.
  std::vector<std::vector<std::pair<int, BigInt>>> rows;

  static CoveringMatrix dense(const std::vector<std::vector<long long>>& a);
  BigInt at(int i, int j) const;
  BigInt row_sum(int i) const;
  bool is_zero() const;
  CoveringMatrix multiply(const CoveringMatrix& other) const;
  CoveringMatrix pow(long long p) const;
  std::vector<std::vector<int>> adjacency() const;  // nonzero pattern
};

CoveringMatrix covering_matrix(const PLTreeMap& m);

// Certified enclosure of the log of the Perron spectral radius.
struct EntropyEnclosure {
  double lo = 0.0;
  double hi = 0.0;
  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
};

// Log spectral radius with a two-sided Collatz-Wielandt enclosure.  Reducible
// matrices are decomposed into strongly connected components and the maximum
// over components is returned.  Throws on a zero matrix.
EntropyEnclosure entropy(const CoveringMatrix& a, double rel_tol = 1e-12);

// True iff some power A^p with p <= (n-1)^2 + 1 is entrywise positive,
// decided by boolean matrix powers at the Wielandt exponent.
bool is_primitive(const CoveringMatrix& a);

// Strongly connected components of the nonzero pattern (Tarjan), in reverse
// topological order.
std::vector<std::vector<int>> strongly_connected_components(const CoveringMatrix& a);
bool is_irreducible(const CoveringMatrix& a);

// Wielandt bound on the power at which a primitive matrix becomes positive.
long long wielandt_exponent(int n);

// ---------------------------------------------------------------------------
// Lengths and constant-slope realizations.
// ---------------------------------------------------------------------------
// Lengths are kept as natural logs; the spread between the longest and
// shortest interval of a deep floor exceeds double range in linear scale.
struct LengthAssignment {
  std::vector<double> log_len;

  double length(int iv) const;
  int size() const { return static_cast<int>(log_len.size()); }
};

// Positive right Perron eigenvector of an irreducible matrix, normalized so
// the lengths sum to 1.  Throws on reducible input.
LengthAssignment constant_slope_lengths(const CoveringMatrix& a, double rel_tol = 1e-13);

// log of (image length of interval i) under the given lengths.
double log_image_length(const PLTreeMap& m, const LengthAssignment& len, int iv);

// log slope of interval i = log(image length) - log(length).
double log_slope(const PLTreeMap& m, const LengthAssignment& len, int iv);

// ---------------------------------------------------------------------------
// Composition and evaluation.
// ---------------------------------------------------------------------------
// p-fold composition.  The result shares the base paths and multiplies the
// virtual power; `materialize_composition` expands paths explicitly and
// throws when the expansion would exceed `max_laps` (paths grow like the
// spectral radius to the p-th power).
PLTreeMap compose_power(const PLTreeMap& m, long long p);
PLTreeMap materialize_composition(const PLTreeMap& m, long long p, std::size_t max_laps = 1u << 20);

struct MapPoint {
  int iv = 0;
  double t = 0.0;  // in [0,1] from side 0 of the interval
};

// One application of the PL realization of the map with the given lengths.
MapPoint evaluate(const PLTreeMap& m, const LengthAssignment& len, const MapPoint& p);

// JSON export: {"n": ..., "rows": [[...], ...]} with entries as numbers when
// they fit 53 bits and as decimal strings otherwise.
std::string matrix_to_json(const CoveringMatrix& a);
CoveringMatrix matrix_from_json(const std::string& text);
void matrix_write_dot(const CoveringMatrix& a, std::ostream& os);

}  // namespace gehman

#endif
