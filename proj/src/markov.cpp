#include "gehman/markov.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace gehman {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLog2 = std::log(2.0);

double logsumexp(const std::vector<double>& xs) {
  double m = kNegInf;
  for (double x : xs) m = std::max(m, x);
  if (m == kNegInf) return kNegInf;
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}
}  // namespace

double log_big(const BigInt& v) {
  if (v <= 0) throw std::domain_error("log of non-positive value");
  const unsigned bits = boost::multiprecision::msb(v);
  if (bits <= 900) return std::log(v.convert_to<double>());
  const unsigned shift = bits - 63;
  const std::uint64_t top = (v >> shift).convert_to<std::uint64_t>();
  return std::log(static_cast<double>(top)) + static_cast<double>(shift) * kLog2;
}

int lap_start(const IntervalComplex& cx, const Lap& l) { return cx.end(l.iv, l.fwd ? 0 : 1); }
int lap_end(const IntervalComplex& cx, const Lap& l) { return cx.end(l.iv, l.fwd ? 1 : 0); }

int seg_start(const IntervalComplex& cx, const PathSeg& s) { return lap_start(cx, s.chain.front()); }

int seg_end(const IntervalComplex& cx, const PathSeg& s) {
  const bool odd = boost::multiprecision::bit_test(s.repeats, 0);
  return odd ? lap_end(cx, s.chain.back()) : seg_start(cx, s);
}

void validate_map(const PLTreeMap& m) {
  const auto& cx = m.cx;
  if (static_cast<int>(m.node_image.size()) != cx.node_count)
    throw std::invalid_argument("node image size mismatch");
  if (static_cast<int>(m.paths.size()) != cx.interval_count())
    throw std::invalid_argument("path table size mismatch");
  for (int u = 0; u < cx.node_count; ++u)
    if (m.node_image[u] < 0 || m.node_image[u] >= cx.node_count)
      throw std::invalid_argument("node image out of range at node " + std::to_string(u));
  for (int i = 0; i < cx.interval_count(); ++i) {
    const auto& path = m.paths[i];
    if (path.empty()) throw std::invalid_argument("empty covering path for interval " + std::to_string(i));
    int pos = m.node_image[cx.end(i, 0)];
    for (const auto& seg : path) {
      if (seg.chain.empty()) throw std::invalid_argument("empty chain in path of interval " + std::to_string(i));
      if (seg.repeats < 1) throw std::invalid_argument("non-positive repeat count in path of interval " + std::to_string(i));
      if (seg_start(cx, seg) != pos)
        throw std::invalid_argument("discontinuous covering path at interval " + std::to_string(i));
      for (std::size_t k = 1; k < seg.chain.size(); ++k)
        if (lap_start(cx, seg.chain[k]) != lap_end(cx, seg.chain[k - 1]))
          throw std::invalid_argument("broken chain in path of interval " + std::to_string(i));
      pos = seg_end(cx, seg);
    }
    if (pos != m.node_image[cx.end(i, 1)])
      throw std::invalid_argument("covering path of interval " + std::to_string(i) +
                                  " does not land on the image of its endpoint: the induced point map is inconsistent at node " +
                                  std::to_string(cx.end(i, 1)));
  }
  if (m.power < 1) throw std::invalid_argument("composition power must be positive");
}

CoveringMatrix CoveringMatrix::dense(const std::vector<std::vector<long long>>& a) {
  CoveringMatrix out;
  out.n = static_cast<int>(a.size());
  out.rows.resize(out.n);
  for (int i = 0; i < out.n; ++i) {
    if (static_cast<int>(a[i].size()) != out.n) throw std::invalid_argument("matrix not square");
    for (int j = 0; j < out.n; ++j) {
      if (a[i][j] < 0) throw std::invalid_argument("negative matrix entry");
      if (a[i][j] > 0) out.rows[i].emplace_back(j, BigInt(a[i][j]));
    }
  }
  return out;
}

BigInt CoveringMatrix::at(int i, int j) const {
  for (const auto& [c, v] : rows[i])
    if (c == j) return v;
  return 0;
}

BigInt CoveringMatrix::row_sum(int i) const {
  BigInt s = 0;
  for (const auto& [c, v] : rows[i]) s += v;
  return s;
}

bool CoveringMatrix::is_zero() const {
  for (const auto& r : rows)
    if (!r.empty()) return false;
  return true;
}

CoveringMatrix CoveringMatrix::multiply(const CoveringMatrix& other) const {
  if (n != other.n) throw std::invalid_argument("dimension mismatch");
  CoveringMatrix out;
  out.n = n;
  out.rows.resize(n);
  std::map<int, BigInt> acc;
  for (int i = 0; i < n; ++i) {
    acc.clear();
    for (const auto& [k, v] : rows[i])
      for (const auto& [j, w] : other.rows[k]) acc[j] += v * w;
    out.rows[i].assign(acc.begin(), acc.end());
  }
  return out;
}

CoveringMatrix CoveringMatrix::pow(long long p) const {
  if (p < 1) throw std::invalid_argument("matrix power must be positive");
  CoveringMatrix base = *this, acc;
  bool have = false;
  while (p > 0) {
    if (p & 1) {
      acc = have ? acc.multiply(base) : base;
      have = true;
    }
    p >>= 1;
    if (p > 0) base = base.multiply(base);
  }
  return acc;
}

std::vector<std::vector<int>> CoveringMatrix::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    adj[i].reserve(rows[i].size());
    for (const auto& [j, v] : rows[i]) adj[i].push_back(j);
  }
  return adj;
}

CoveringMatrix covering_matrix(const PLTreeMap& m) {
  validate_map(m);
  CoveringMatrix a;
  a.n = m.interval_count();
  a.rows.resize(a.n);
  std::map<int, BigInt> acc;
  for (int i = 0; i < a.n; ++i) {
    acc.clear();
    for (const auto& seg : m.paths[i])
      for (const auto& lap : seg.chain) acc[lap.iv] += seg.repeats;
    a.rows[i].assign(acc.begin(), acc.end());
  }
  return m.power == 1 ? a : a.pow(m.power);
}

std::vector<std::vector<int>> strongly_connected_components(const CoveringMatrix& a) {
  // Iterative Tarjan.
  const auto adj = a.adjacency();
  const int n = a.n;
  std::vector<int> index(n, -1), low(n, 0), on_stack(n, 0), stack;
  std::vector<std::vector<int>> comps;
  int next_index = 0;
  struct Frame {
    int v;
    std::size_t child;
  };
  for (int start = 0; start < n; ++start) {
    if (index[start] >= 0) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = low[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.child < adj[f.v].size()) {
        int w = adj[f.v][f.child++];
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == index[v]) {
          comps.emplace_back();
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comps.back().push_back(w);
            if (w == v) break;
          }
        }
      }
    }
  }
  return comps;
}

bool is_irreducible(const CoveringMatrix& a) {
  if (a.n == 0) return false;
  return strongly_connected_components(a).size() == 1;
}

long long wielandt_exponent(int n) {
  return static_cast<long long>(n - 1) * (n - 1) + 1;
}

namespace {

// log(e^x - 1), stable for both large and small positive x.
double log_expm1(double x) {
  if (x > 36.0) return x + std::log1p(-std::exp(-x));
  return std::log(std::expm1(x));
}

// Log-domain power iteration on an irreducible submatrix.  A diagonal shift
// of the order of the spectral radius itself separates the rotated spectrum
// of (nearly) periodic matrices, so the iteration converges at a rate bounded
// away from 1 regardless of how large the entries are.  Returns the
// Collatz-Wielandt enclosure of log rho(A_C) and the converged log Perron
// vector.
struct IterationResult {
  double lo, hi;
  std::vector<double> log_v;
};

IterationResult power_iterate_shifted(const CoveringMatrix& a, const std::vector<int>& comp,
                                      double rel_tol, long long max_iters) {
  const int m = static_cast<int>(comp.size());
  std::vector<int> where(a.n, -1);
  for (int k = 0; k < m; ++k) where[comp[k]] = k;
  // Local sparse copy with log entries.
  std::vector<std::vector<std::pair<int, double>>> rows(m);
  for (int k = 0; k < m; ++k) {
    for (const auto& [j, v] : a.rows[comp[k]])
      if (where[j] >= 0) rows[k].emplace_back(where[j], log_big(v));
  }
  std::vector<double> v(m, 0.0), y(m), terms;

  // Scale estimate: the average per-step growth of an unshifted iteration
  // converges to log rho even when the matrix is (nearly) periodic, and a
  // shift within a few e-folds of rho is all the next phase needs.
  double log_c = 0.0;
  {
    const int warm = std::max(96, 4 * m);
    double total = 0.0;
    for (int it = 0; it < warm; ++it) {
      for (int k = 0; k < m; ++k) {
        terms.clear();
        for (const auto& [j, lw] : rows[k]) terms.push_back(lw + v[j]);
        y[k] = logsumexp(terms);
      }
      const double shift = *std::max_element(y.begin(), y.end());
      total += shift;
      for (int k = 0; k < m; ++k) v[k] = y[k] - shift;
    }
    log_c = total / warm;
  }

  // Shifted phase: iterate A + cI and convert the bounds back at the end.
  double lo = kNegInf, hi = std::numeric_limits<double>::infinity();
  for (long long it = 0; it < max_iters; ++it) {
    for (int k = 0; k < m; ++k) {
      terms.clear();
      terms.push_back(log_c + v[k]);
      for (const auto& [j, lw] : rows[k]) terms.push_back(lw + v[j]);
      y[k] = logsumexp(terms);
    }
    double cur_lo = std::numeric_limits<double>::infinity(), cur_hi = kNegInf;
    for (int k = 0; k < m; ++k) {
      cur_lo = std::min(cur_lo, y[k] - v[k]);
      cur_hi = std::max(cur_hi, y[k] - v[k]);
    }
    // Collatz-Wielandt bounds for A + cI are valid at every step; keep the
    // tightest seen.
    lo = std::max(lo, cur_lo);
    hi = std::min(hi, cur_hi);
    const double shift = *std::max_element(y.begin(), y.end());
    for (int k = 0; k < m; ++k) v[k] = y[k] - shift;
    if (hi - lo <= 0.25 * rel_tol * std::max(1.0, std::abs(hi))) break;
  }
  const double lo_a = (lo > log_c) ? log_c + log_expm1(lo - log_c) : kNegInf;
  const double hi_a = log_c + log_expm1(std::max(hi, std::nextafter(log_c, hi)) - log_c);
  return {lo_a, hi_a, std::move(v)};
}

}  // namespace

EntropyEnclosure entropy(const CoveringMatrix& a, double rel_tol) {
  if (a.n == 0 || a.is_zero()) throw std::invalid_argument("entropy of a zero matrix is undefined");
  const auto comps = strongly_connected_components(a);
  EntropyEnclosure best{kNegInf, kNegInf};
  bool any = false;
  for (const auto& comp : comps) {
    if (comp.size() == 1) {
      const BigInt d = a.at(comp[0], comp[0]);
      if (d == 0) continue;  // transient node, no cycle
      const double l = log_big(d);
      best.lo = std::max(best.lo, l);
      best.hi = std::max(best.hi, l);
      any = true;
      continue;
    }
    auto r = power_iterate_shifted(a, comp, rel_tol, 2'000'000);
    best.lo = std::max(best.lo, r.lo);
    best.hi = std::max(best.hi, r.hi);
    any = true;
  }
  if (!any) {
    // No cycles at all: nilpotent, spectral radius 0.
    throw std::invalid_argument("matrix is nilpotent; entropy undefined on log scale");
  }
  return best;
}

namespace {
using BitRow = std::vector<std::uint64_t>;

std::vector<BitRow> bool_multiply(const std::vector<BitRow>& a, const std::vector<BitRow>& b, int n) {
  const int blocks = (n + 63) / 64;
  std::vector<BitRow> c(n, BitRow(blocks, 0));
  for (int i = 0; i < n; ++i) {
    for (int blk = 0; blk < blocks; ++blk) {
      std::uint64_t bits = a[i][blk];
      while (bits) {
        const int bit = std::countr_zero(bits);
        bits &= bits - 1;
        const int j = blk * 64 + bit;
        for (int t = 0; t < blocks; ++t) c[i][t] |= b[j][t];
      }
    }
  }
  return c;
}

bool all_ones(const std::vector<BitRow>& a, int n) {
  const int blocks = (n + 63) / 64;
  for (int i = 0; i < n; ++i) {
    for (int blk = 0; blk < blocks; ++blk) {
      std::uint64_t expect = ~std::uint64_t{0};
      if (blk == blocks - 1 && n % 64 != 0) expect = (std::uint64_t{1} << (n % 64)) - 1;
      if (a[i][blk] != expect) return false;
    }
  }
  return true;
}
}  // namespace

bool is_primitive(const CoveringMatrix& a) {
  const int n = a.n;
  if (n == 0) return false;
  if (n == 1) return !a.rows[0].empty();
  if (strongly_connected_components(a).size() != 1) return false;
  const int blocks = (n + 63) / 64;
  std::vector<BitRow> base(n, BitRow(blocks, 0));
  for (int i = 0; i < n; ++i)
    for (const auto& [j, v] : a.rows[i]) base[i][j / 64] |= std::uint64_t{1} << (j % 64);
  long long p = wielandt_exponent(n);
  std::vector<BitRow> acc;
  bool have = false;
  while (p > 0) {
    if (p & 1) {
      acc = have ? bool_multiply(acc, base, n) : base;
      have = true;
      if (all_ones(acc, n)) return true;  // positive power found early
    }
    p >>= 1;
    if (p > 0) {
      base = bool_multiply(base, base, n);
      if ((p & 1) == 0 && all_ones(base, n)) return true;
    }
  }
  return all_ones(acc, n);
}

double LengthAssignment::length(int iv) const { return std::exp(log_len[iv]); }

LengthAssignment constant_slope_lengths(const CoveringMatrix& a, double rel_tol) {
  if (a.n == 0 || a.is_zero()) throw std::invalid_argument("no lengths for a zero matrix");
  if (!is_irreducible(a))
    throw std::invalid_argument("matrix is reducible; Perron eigenvector may have zero entries");
  std::vector<int> comp(a.n);
  for (int i = 0; i < a.n; ++i) comp[i] = i;
  auto r = power_iterate_shifted(a, comp, rel_tol, 4'000'000);
  // Extra smoothing sweeps so the eigenvector itself settles, not only the
  // eigenvalue enclosure.
  LengthAssignment len;
  len.log_len = std::move(r.log_v);
  std::vector<double> terms;
  terms.reserve(a.n + 1);
  for (int sweep = 0; sweep < 64; ++sweep) {
    std::vector<double> y(a.n);
    for (int i = 0; i < a.n; ++i) {
      terms.clear();
      terms.push_back(len.log_len[i]);
      for (const auto& [j, v] : a.rows[i]) terms.push_back(log_big(v) + len.log_len[j]);
      y[i] = logsumexp(terms);
    }
    const double shift = *std::max_element(y.begin(), y.end());
    double delta = 0.0;
    for (int i = 0; i < a.n; ++i) {
      y[i] -= shift;
      delta = std::max(delta, std::abs(y[i] - len.log_len[i] - (y[0] - len.log_len[0])));
    }
    len.log_len = std::move(y);
    if (delta < 1e-15) break;
  }
  const double total = logsumexp(len.log_len);
  for (double& x : len.log_len) x -= total;
  return len;
}

double log_image_length(const PLTreeMap& m, const LengthAssignment& len, int iv) {
  if (m.power != 1) throw std::logic_error("image length requires materialized paths");
  std::vector<double> seg_logs;
  for (const auto& seg : m.paths[iv]) {
    std::vector<double> lap_logs;
    lap_logs.reserve(seg.chain.size());
    for (const auto& lap : seg.chain) lap_logs.push_back(len.log_len[lap.iv]);
    seg_logs.push_back(log_big(seg.repeats) + logsumexp(lap_logs));
  }
  return logsumexp(seg_logs);
}

double log_slope(const PLTreeMap& m, const LengthAssignment& len, int iv) {
  return log_image_length(m, len, iv) - len.log_len[iv];
}

PLTreeMap compose_power(const PLTreeMap& m, long long p) {
  if (p < 1) throw std::invalid_argument("composition power must be positive");
  PLTreeMap out = m;
  if (m.power > std::numeric_limits<long long>::max() / p)
    throw std::overflow_error("composition power overflow");
  out.power = m.power * p;
  return out;
}

namespace {
std::vector<PathSeg> reverse_path(const std::vector<PathSeg>& path) {
  std::vector<PathSeg> out;
  out.reserve(path.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    PathSeg seg;
    seg.repeats = it->repeats;
    const bool odd = boost::multiprecision::bit_test(it->repeats, 0);
    if (odd) {
      for (auto lit = it->chain.rbegin(); lit != it->chain.rend(); ++lit)
        seg.chain.push_back({lit->iv, !lit->fwd});
    } else {
      seg.chain = it->chain;
    }
    out.push_back(std::move(seg));
  }
  return out;
}

void append_expanded(std::vector<PathSeg>& dst, std::size_t& lap_budget, const std::vector<PathSeg>& src,
                     std::size_t max_laps) {
  for (const auto& seg : src) {
    if (seg.repeats > BigInt(std::size_t{1} << 30)) throw std::overflow_error("covering path expansion too large");
    lap_budget += seg.chain.size() * seg.repeats.convert_to<std::size_t>();
    if (lap_budget > max_laps) throw std::overflow_error("covering path expansion exceeds lap budget");
    dst.push_back(seg);
  }
}
}  // namespace

PLTreeMap materialize_composition(const PLTreeMap& m, long long p, std::size_t max_laps) {
  validate_map(m);
  if (m.power != 1) throw std::logic_error("materialize_composition expects a base map");
  PLTreeMap cur = m;
  for (long long step = 1; step < p; ++step) {
    PLTreeMap next = m;
    next.node_image.resize(m.cx.node_count);
    for (int u = 0; u < m.cx.node_count; ++u) next.node_image[u] = cur.node_image[m.node_image[u]];
    next.paths.assign(m.cx.interval_count(), {});
    for (int i = 0; i < m.cx.interval_count(); ++i) {
      std::vector<PathSeg> acc;
      std::size_t lap_budget = 0;
      for (const auto& seg : m.paths[i]) {
        // Expand ping-pong repeats explicitly; composition of a repeated
        // chain is the repetition of the composed chain and its reverse.
        if (seg.repeats > BigInt(1u << 20)) throw std::overflow_error("covering path expansion too large");
        const std::size_t reps = seg.repeats.convert_to<std::size_t>();
        for (std::size_t r = 0; r < reps; ++r) {
          const bool back = (r % 2) == 1;
          auto emit_lap = [&](const Lap& lap) {
            const auto& sub = cur.paths[lap.iv];
            append_expanded(acc, lap_budget, lap.fwd ? sub : reverse_path(sub), max_laps);
          };
          if (!back) {
            for (const auto& lap : seg.chain) emit_lap(lap);
          } else {
            for (auto it = seg.chain.rbegin(); it != seg.chain.rend(); ++it) emit_lap({it->iv, !it->fwd});
          }
        }
      }
      next.paths[i] = std::move(acc);
    }
    cur = std::move(next);
  }
  validate_map(cur);
  return cur;
}

namespace {
MapPoint evaluate_once(const PLTreeMap& m, const LengthAssignment& len, const MapPoint& p) {
  const auto& path = m.paths[p.iv];
  std::vector<double> seg_logs(path.size());
  for (std::size_t s = 0; s < path.size(); ++s) {
    std::vector<double> lap_logs;
    lap_logs.reserve(path[s].chain.size());
    for (const auto& lap : path[s].chain) lap_logs.push_back(len.log_len[lap.iv]);
    seg_logs[s] = log_big(path[s].repeats) + logsumexp(lap_logs);
  }
  const double log_total = logsumexp(seg_logs);
  // The PL realization is the arc-length parametrization of the image path,
  // so parameter t corresponds to fraction t of the path.
  double u = std::clamp(p.t, 0.0, 1.0);
  double consumed = 0.0;
  for (std::size_t s = 0; s < path.size(); ++s) {
    const auto& seg = path[s];
    const double seg_frac = std::exp(seg_logs[s] - log_total);
    if (u > consumed + seg_frac && s + 1 < path.size()) {
      consumed += seg_frac;
      continue;
    }
    std::vector<double> lap_logs;
    lap_logs.reserve(seg.chain.size());
    for (const auto& lap : seg.chain) lap_logs.push_back(len.log_len[lap.iv]);
    const double pass_frac = std::exp(logsumexp(lap_logs) - log_total);
    const double reps = std::min(std::exp(log_big(seg.repeats)), 1e300);
    const double in_seg = std::max(0.0, u - consumed);
    double pass_idx = std::floor(in_seg / std::max(pass_frac, 1e-300));
    if (pass_idx > reps - 1) pass_idx = reps - 1;
    const bool back = std::fmod(pass_idx, 2.0) >= 0.5;
    const double in_pass = std::clamp(in_seg - pass_idx * pass_frac, 0.0, pass_frac);
    const int nlaps = static_cast<int>(seg.chain.size());
    double acc = 0.0;
    for (int k = 0; k < nlaps; ++k) {
      const int idx = back ? nlaps - 1 - k : k;
      Lap lap = seg.chain[idx];
      if (back) lap.fwd = !lap.fwd;
      const double lap_frac = std::exp(len.log_len[lap.iv] - log_total);
      if (in_pass <= acc + lap_frac || k == nlaps - 1) {
        const double frac = std::clamp((in_pass - acc) / std::max(lap_frac, 1e-300), 0.0, 1.0);
        return {lap.iv, lap.fwd ? frac : 1.0 - frac};
      }
      acc += lap_frac;
    }
  }
  const Lap lap = path.back().chain.back();
  return {lap.iv, lap.fwd ? 1.0 : 0.0};
}
}  // namespace

MapPoint evaluate(const PLTreeMap& m, const LengthAssignment& len, const MapPoint& p) {
  MapPoint cur = p;
  for (long long step = 0; step < m.power; ++step) cur = evaluate_once(m, len, cur);
  return cur;
}

std::string matrix_to_json(const CoveringMatrix& a) {
  nlohmann::ordered_json j;
  j["n"] = a.n;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  const BigInt fits(std::uint64_t{1} << 53);
  for (int i = 0; i < a.n; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int jcol = 0; jcol < a.n; ++jcol) {
      BigInt v = a.at(i, jcol);
      if (v < fits)
        row.push_back(v.convert_to<std::uint64_t>());
      else
        row.push_back(v.str());
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump(2);
}

CoveringMatrix matrix_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  CoveringMatrix a;
  a.n = j.at("n").get<int>();
  a.rows.resize(a.n);
  const auto& rows = j.at("rows");
  if (static_cast<int>(rows.size()) != a.n) throw std::invalid_argument("row count mismatch");
  for (int i = 0; i < a.n; ++i) {
    if (static_cast<int>(rows[i].size()) != a.n) throw std::invalid_argument("matrix not square");
    for (int c = 0; c < a.n; ++c) {
      const auto& cell = rows[i][c];
      BigInt v;
      if (cell.is_string())
        v = BigInt(cell.get<std::string>());
      else
        v = BigInt(cell.get<std::uint64_t>());
      if (v > 0) a.rows[i].emplace_back(c, v);
    }
  }
  return a;
}

void matrix_write_dot(const CoveringMatrix& a, std::ostream& os) {
  os << "digraph covering {\n";
  for (int i = 0; i < a.n; ++i) os << "  i" << i << ";\n";
  for (int i = 0; i < a.n; ++i)
    for (const auto& [j, v] : a.rows[i])
      os << "  i" << i << " -> i" << j << " [label=\"" << v.str() << "\"];\n";
  os << "}\n";
}

}  // namespace gehman
