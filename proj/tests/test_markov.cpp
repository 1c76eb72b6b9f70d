#include "gehman/markov.hpp"

#include <cmath>
#include <random>

#include "doctest.h"

using namespace gehman;

namespace {

// Full m-fold horseshoe on a single interval.
PLTreeMap horseshoe(int folds) {
  PLTreeMap m;
  int a = m.cx.add_node(), b = m.cx.add_node();
  int iv = m.cx.add_interval(a, b);
  m.node_image = {a, folds % 2 == 1 ? b : a};
  m.paths = {{PathSeg{{Lap{iv, true}}, folds}}};
  return m;
}

// Two intervals exchanged linearly.
PLTreeMap swap_map() {
  PLTreeMap m;
  int n0 = m.cx.add_node(), n1 = m.cx.add_node(), n2 = m.cx.add_node();
  int A = m.cx.add_interval(n0, n1), B = m.cx.add_interval(n1, n2);
  m.node_image = {n2, n1, n0};
  m.paths = {
      {PathSeg{{Lap{B, false}}, 1}},
      {PathSeg{{Lap{A, false}}, 1}},
  };
  return m;
}

// Markov map with covering paths I0 -> (I1, I0), I1 -> (I0); covering matrix
// [[1,1],[1,0]], the golden-mean example.
PLTreeMap golden_map() {
  PLTreeMap m;
  int n0 = m.cx.add_node(), n1 = m.cx.add_node(), n2 = m.cx.add_node();
  int I0 = m.cx.add_interval(n0, n1), I1 = m.cx.add_interval(n1, n2);
  m.node_image = {n2, n0, n1};
  m.paths = {
      {PathSeg{{Lap{I1, false}, Lap{I0, false}}, 1}},
      {PathSeg{{Lap{I0, true}}, 1}},
  };
  return m;
}

constexpr double kLogGolden = 0.4812118250596035;  // log((1+sqrt(5))/2), root of x^2-x-1

}  // namespace

TEST_CASE("covering matrix extraction") {
  CHECK(covering_matrix(horseshoe(3)).at(0, 0) == 3);
  auto s = covering_matrix(swap_map());
  CHECK(s.at(0, 0) == 0);
  CHECK(s.at(0, 1) == 1);
  CHECK(s.at(1, 0) == 1);
  CHECK(s.at(1, 1) == 0);
  auto g = covering_matrix(golden_map());
  CHECK(g.at(0, 0) == 1);
  CHECK(g.at(0, 1) == 1);
  CHECK(g.at(1, 0) == 1);
  CHECK(g.at(1, 1) == 0);
}

TEST_CASE("inconsistent maps are rejected with a diagnostic") {
  PLTreeMap m = golden_map();
  m.node_image[2] = 2;  // breaks the endpoint consistency of I1's path
  CHECK_THROWS_WITH_AS(validate_map(m), doctest::Contains("inconsistent"), std::invalid_argument);
}

TEST_CASE("entropy of basic matrices") {
  auto e3 = entropy(covering_matrix(horseshoe(3)));
  CHECK(e3.lo <= std::log(3.0));
  CHECK(e3.hi >= std::log(3.0));
  CHECK(e3.width() < 1e-12);

  auto eswap = entropy(covering_matrix(swap_map()));
  CHECK(std::abs(eswap.mid()) < 1e-12);

  auto eg = entropy(covering_matrix(golden_map()));
  CHECK(eg.lo <= kLogGolden + 1e-13);
  CHECK(eg.hi >= kLogGolden - 1e-13);
  CHECK(eg.width() < 1e-11);

  CHECK_THROWS(entropy(CoveringMatrix::dense({{0}})));
}

TEST_CASE("entropy of reducible matrices is the maximum over blocks") {
  auto a = CoveringMatrix::dense({{3, 0, 0}, {0, 2, 1}, {0, 1, 2}});
  auto e = entropy(a);
  CHECK(e.mid() == doctest::Approx(std::log(3.0)).epsilon(1e-9));
  // Upper-triangular coupling does not change the spectral radius.
  auto b = CoveringMatrix::dense({{2, 5, 9}, {0, 3, 7}, {0, 0, 1}});
  CHECK(entropy(b).mid() == doctest::Approx(std::log(3.0)).epsilon(1e-9));
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(CoveringMatrix::dense({{2}})));
  CHECK_FALSE(is_primitive(CoveringMatrix::dense({{0, 1}, {1, 0}})));
  CHECK(is_primitive(CoveringMatrix::dense({{1, 1}, {1, 0}})));  // A^2 entrywise positive
  CHECK_FALSE(is_primitive(CoveringMatrix::dense({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})));
  CHECK_FALSE(is_primitive(CoveringMatrix::dense({{1, 1}, {0, 1}})));  // reducible
}

TEST_CASE("primitivity agrees with a brute-force power search") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = (rng() % 4 == 0) ? 1 : 0;
    auto m = CoveringMatrix::dense(a);
    // Brute force: check all powers up to the Wielandt bound.
    bool expect = false;
    auto p = m;
    for (long long k = 1; k <= wielandt_exponent(n) && !expect; ++k) {
      bool allpos = true;
      for (int i = 0; i < n && allpos; ++i)
        for (int j = 0; j < n && allpos; ++j)
          if (p.at(i, j) == 0) allpos = false;
      expect = allpos;
      if (!expect) p = p.multiply(m);
    }
    CHECK(is_primitive(m) == expect);
  }
}

TEST_CASE("constant slope lengths") {
  SUBCASE("single horseshoe") {
    auto len = constant_slope_lengths(covering_matrix(horseshoe(3)));
    CHECK(len.length(0) == doctest::Approx(1.0));
  }
  SUBCASE("golden mean eigenvector") {
    auto a = covering_matrix(golden_map());
    auto len = constant_slope_lengths(a);
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(len.length(0) / len.length(1) == doctest::Approx(phi).epsilon(1e-10));
    CHECK(len.length(0) + len.length(1) == doctest::Approx(1.0).epsilon(1e-12));
    // A len = phi len componentwise.
    for (int i = 0; i < 2; ++i) {
      double img = 0;
      for (int j = 0; j < 2; ++j) img += a.at(i, j).convert_to<double>() * len.length(j);
      CHECK(img / len.length(i) == doctest::Approx(phi).epsilon(1e-9));
    }
  }
  SUBCASE("permutation gives equal lengths and slope one") {
    auto len = constant_slope_lengths(covering_matrix(swap_map()));
    CHECK(len.length(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(len.length(1) == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("reducible matrices are rejected") {
    CHECK_THROWS(constant_slope_lengths(CoveringMatrix::dense({{1, 1}, {0, 1}})));
  }
}

TEST_CASE("slope identity for the realized map") {
  PLTreeMap m = golden_map();
  auto a = covering_matrix(m);
  auto len = constant_slope_lengths(a);
  auto ent = entropy(a);
  for (int i = 0; i < m.interval_count(); ++i)
    CHECK(log_slope(m, len, i) == doctest::Approx(ent.mid()).epsilon(1e-9));
  // Lipschitz consistency: entropy never exceeds the log of the max slope.
  double max_slope = std::max(log_slope(m, len, 0), log_slope(m, len, 1));
  CHECK(ent.hi <= max_slope + 1e-9);
}

TEST_CASE("composition powers") {
  PLTreeMap m = golden_map();
  SUBCASE("p=1 is the identity of composition") {
    auto c = compose_power(m, 1);
    CHECK(covering_matrix(c).at(0, 0) == 1);
    CHECK(c.power == 1);
  }
  SUBCASE("matrix of the square") {
    auto c = compose_power(m, 2);
    auto a = covering_matrix(c);
    CHECK(a.at(0, 0) == 2);
    CHECK(a.at(0, 1) == 1);
    CHECK(a.at(1, 0) == 1);
    CHECK(a.at(1, 1) == 1);
  }
  SUBCASE("materialized composition agrees with the matrix power") {
    auto mat = materialize_composition(m, 2);
    auto a = covering_matrix(mat);
    CHECK(a.at(0, 0) == 2);
    CHECK(a.at(0, 1) == 1);
    CHECK(a.at(1, 0) == 1);
    CHECK(a.at(1, 1) == 1);
    auto m3 = materialize_composition(m, 3);
    auto b = covering_matrix(m3);
    auto expect = covering_matrix(m).pow(3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(b.at(i, j) == expect.at(i, j));
  }
  SUBCASE("power rule for entropy") {
    auto base = entropy(covering_matrix(m)).mid();
    for (long long p : {2, 3}) {
      auto ep = entropy(covering_matrix(compose_power(m, p)));
      CHECK(ep.mid() == doctest::Approx(p * base).epsilon(1e-9));
    }
    auto h3 = horseshoe(3);
    CHECK(entropy(covering_matrix(compose_power(h3, 3))).mid() ==
          doctest::Approx(3.0 * std::log(3.0)).epsilon(1e-9));
  }
  SUBCASE("path expansion overflow is reported") {
    CHECK_THROWS_AS(materialize_composition(horseshoe(3), 20), std::overflow_error);
  }
}

TEST_CASE("evaluation follows the arc-length parametrization") {
  PLTreeMap m = golden_map();
  auto len = constant_slope_lengths(covering_matrix(m));
  // Endpoint of I1 at side 0 is n1, which maps to n0 = side 0 of I0.
  auto p = evaluate(m, len, MapPoint{1, 0.0});
  CHECK(p.iv == 0);
  CHECK(p.t == doctest::Approx(0.0));
  // Interior points stretch by the constant slope.
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  auto q = evaluate(m, len, MapPoint{1, 0.5});
  CHECK(q.iv == 0);
  // I1 maps onto I0 forward with slope phi: image length fraction.
  CHECK(q.t == doctest::Approx(0.5 * phi * len.length(1) / len.length(0)).epsilon(1e-9));
}

TEST_CASE("matrix json round trip") {
  auto a = covering_matrix(golden_map());
  auto text = matrix_to_json(a);
  auto b = matrix_from_json(text);
  CHECK(b.n == a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) CHECK(a.at(i, j) == b.at(i, j));
  // Big entries survive via decimal strings.
  CoveringMatrix big;
  big.n = 1;
  big.rows = {{{0, BigInt(1) << 200}}};
  auto rt = matrix_from_json(matrix_to_json(big));
  CHECK(rt.at(0, 0) == BigInt(1) << 200);
}

TEST_CASE("log_big handles huge values") {
  BigInt v = boost::multiprecision::pow(BigInt(3), 2048);
  CHECK(log_big(v) == doctest::Approx(2048 * std::log(3.0)).epsilon(1e-12));
}
