#include "orbikit/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <exception>

#include "orbikit/error.hpp"
#include "orbikit/quotient_sim.hpp"

namespace orbikit::kernels {

namespace {

mpz_class det_minus_identity(BigMatrix2 p) {
  p.m[0] -= 1;
  p.m[3] -= 1;
  return p.det();
}

using Q = boost::rational<std::int64_t>;

TorusPoint torsion_point(const IntMatrix2& v, std::int64_t s1, std::int64_t s2, std::int64_t i,
                         std::int64_t j) {
  const __int128 den = static_cast<__int128>(s1) * s2;
  auto coord = [&](std::int64_t vi, std::int64_t vj) {
    __int128 num = static_cast<__int128>(vi) * i * s2 + static_cast<__int128>(vj) * j * s1;
    num %= den;
    if (num < 0) num += den;
    return Q(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
  };
  return {coord(v.m[0], v.m[1]), coord(v.m[2], v.m[3])};
}

void check_divisors(std::int64_t s1, std::int64_t s2) {
  if (s1 <= 0 || s2 <= 0) throw Error(ErrorCode::SingularMatrix, "zero Smith invariant");
  if (static_cast<__int128>(s1) * s2 > INT64_MAX) {
    throw Error(ErrorCode::Overflow, "torsion subgroup too large");
  }
}

}  // namespace

std::vector<mpz_class> lefschetz_dets_serial(const IntMatrix2& a, int horizon) {
  std::vector<mpz_class> out;
  out.reserve(static_cast<std::size_t>(std::max(horizon, 0)));
  const BigMatrix2 base(a);
  BigMatrix2 power = BigMatrix2::identity();
  for (int n = 1; n <= horizon; ++n) {
    power = power * base;
    out.push_back(det_minus_identity(power));
  }
  return out;
}

std::vector<mpz_class> lefschetz_dets_parallel(const IntMatrix2& a, int horizon) {
  std::vector<mpz_class> out(static_cast<std::size_t>(std::max(horizon, 0)));
  const BigMatrix2 base(a);
#pragma omp parallel for schedule(dynamic)
  for (int n = 1; n <= horizon; ++n) {
    out[static_cast<std::size_t>(n - 1)] = det_minus_identity(base.pow(n));
  }
  return out;
}

std::vector<TorusPoint> torsion_points_serial(const IntMatrix2& v, std::int64_t s1,
                                              std::int64_t s2) {
  check_divisors(s1, s2);
  std::vector<TorusPoint> out;
  out.reserve(static_cast<std::size_t>(s1 * s2));
  for (std::int64_t i = 0; i < s1; ++i) {
    for (std::int64_t j = 0; j < s2; ++j) out.push_back(torsion_point(v, s1, s2, i, j));
  }
  return out;
}

std::vector<TorusPoint> torsion_points_parallel(const IntMatrix2& v, std::int64_t s1,
                                                std::int64_t s2) {
  check_divisors(s1, s2);
  const std::int64_t total = s1 * s2;
  std::vector<TorusPoint> out(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < total; ++t) {
    out[static_cast<std::size_t>(t)] = torsion_point(v, s1, s2, t / s2, t % s2);
  }
  return out;
}

std::int64_t count_orbits_serial(const std::vector<TorusPoint>& sorted_points,
                                 const IntMatrix2& rotation) {
  std::vector<char> seen(sorted_points.size(), 0);
  std::int64_t orbits = 0;
  for (std::size_t i = 0; i < sorted_points.size(); ++i) {
    if (seen[i]) continue;
    ++orbits;
    TorusPoint p = sorted_points[i];
    do {
      auto it = std::lower_bound(sorted_points.begin(), sorted_points.end(), p);
      if (it == sorted_points.end() || !(*it == p)) {
        throw Error(ErrorCode::AssertionFailure, "point set is not invariant under R");
      }
      seen[static_cast<std::size_t>(it - sorted_points.begin())] = 1;
      p = apply(rotation, p);
    } while (!(p == sorted_points[i]));
  }
  return orbits;
}

std::int64_t count_orbits_parallel(const std::vector<TorusPoint>& sorted_points,
                                   const IntMatrix2& rotation) {
  const auto size = static_cast<std::int64_t>(sorted_points.size());
  std::int64_t minima = 0;
  std::atomic<bool> closed{true};
#pragma omp parallel for schedule(static) reduction(+ : minima)
  for (std::int64_t i = 0; i < size; ++i) {
    const TorusPoint& start = sorted_points[static_cast<std::size_t>(i)];
    bool is_min = true;
    for (TorusPoint p = apply(rotation, start); !(p == start); p = apply(rotation, p)) {
      if (!std::binary_search(sorted_points.begin(), sorted_points.end(), p)) {
        closed = false;
        break;
      }
      if (p < start) is_min = false;
    }
    if (is_min) ++minima;
  }
  if (!closed) throw Error(ErrorCode::AssertionFailure, "point set is not invariant under R");
  return minima;
}

}  // namespace orbikit::kernels
