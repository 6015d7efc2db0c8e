#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "orbikit/error.hpp"
#include "orbikit/kernels.hpp"
#include "orbikit/quotient_sim.hpp"

using namespace orbikit;

TEST_CASE("Lefschetz kernels agree with each other and the schoolbook power") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const IntMatrix2 a = oracle::random_matrix(rng, -5, 5);
    const auto s = kernels::lefschetz_dets_serial(a, 25);
    const auto p = kernels::lefschetz_dets_parallel(a, 25);
    REQUIRE(s.size() == 25);
    CHECK(s == p);
    for (int n = 1; n <= 25; n += 6) {
      CHECK(s[static_cast<std::size_t>(n - 1)] == oracle::naive_det_power_minus_identity(a, n));
    }
  }
  CHECK(kernels::lefschetz_dets_serial({2, 0, 0, 2}, 0).empty());
}

TEST_CASE("torsion point kernels agree") {
  std::mt19937_64 rng(4);
  int done = 0;
  while (done < 50) {
    const IntMatrix2 m = oracle::random_matrix(rng, -30, 30);
    if (m.det() == 0 || std::llabs(m.det()) > 5000) continue;
    ++done;
    const auto snf = smith_normal_form(m);
    auto s = kernels::torsion_points_serial(snf.right, snf.s1, snf.s2);
    auto p = kernels::torsion_points_parallel(snf.right, snf.s1, snf.s2);
    std::sort(s.begin(), s.end());
    std::sort(p.begin(), p.end());
    CHECK(s == p);
    CHECK(static_cast<std::int64_t>(s.size()) == snf.s1 * snf.s2);
  }
}

TEST_CASE("orbit counting kernels agree and check invariance") {
  const auto r4 = deck_matrix(OrbifoldCase::TwoFourFour);
  const auto sol = smith_solve(IntMatrix2(1, -1, 1, 1).pow(6) - IntMatrix2::identity());
  std::vector<TorusPoint> pts(sol.begin(), sol.end());
  // Close under R so the set is invariant.
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto q = apply(r4.matrix, pts[i]);
    if (std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(q);
  }
  std::sort(pts.begin(), pts.end());
  CHECK(kernels::count_orbits_serial(pts, r4.matrix) ==
        kernels::count_orbits_parallel(pts, r4.matrix));

  // The orbit count by hand for the 2-torsion points under R = -I: all fixed.
  using Q = boost::rational<std::int64_t>;
  std::vector<TorusPoint> half = {TorusPoint::reduced(Q(0), Q(0)),
                                  TorusPoint::reduced(Q(0), Q(1, 2)),
                                  TorusPoint::reduced(Q(1, 2), Q(0)),
                                  TorusPoint::reduced(Q(1, 2), Q(1, 2))};
  std::sort(half.begin(), half.end());
  const auto minus = deck_matrix(OrbifoldCase::TwoTwoTwoTwo).matrix;
  CHECK(kernels::count_orbits_serial(half, minus) == 4);
  CHECK(kernels::count_orbits_parallel(half, minus) == 4);

  // A set that R does not preserve.
  std::vector<TorusPoint> bad = {TorusPoint::reduced(Q(1, 3), Q(0))};
  CHECK_THROWS_AS(kernels::count_orbits_serial(bad, r4.matrix), Error);
  CHECK_THROWS_AS(kernels::count_orbits_parallel(bad, r4.matrix), Error);
}
