#pragma once

// Data-parallel counting kernels. Each has an OpenMP version and a serial
// reference that computes the same thing by a different loop structure; the
// tests compare them and bench/ times them.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "orbikit/intmatrix.hpp"

namespace orbikit {

struct TorusPoint;

namespace kernels {

// det(A^n - I) for n = 1..N (signed; 0 marks a degenerate iterate).
// Serial: running product A^n = A^(n-1) A.
std::vector<mpz_class> lefschetz_dets_serial(const IntMatrix2& a, int horizon);
// Parallel over n, each row by repeated squaring.
std::vector<mpz_class> lefschetz_dets_parallel(const IntMatrix2& a, int horizon);

// The |s1 * s2| solutions of D y = 0 mod Z^2 for D = diag(s1, s2), mapped
// through the column transform V and reduced into [0, 1)^2.
std::vector<TorusPoint> torsion_points_serial(const IntMatrix2& v, std::int64_t s1,
                                              std::int64_t s2);
std::vector<TorusPoint> torsion_points_parallel(const IntMatrix2& v, std::int64_t s1,
                                                std::int64_t s2);

// Number of orbits of x -> R x (mod Z^2) on a sorted, deduplicated point set
// that R preserves. Serial: visited marking. Parallel: count orbit minima.
std::int64_t count_orbits_serial(const std::vector<TorusPoint>& sorted_points,
                                 const IntMatrix2& rotation);
std::int64_t count_orbits_parallel(const std::vector<TorusPoint>& sorted_points,
                                   const IntMatrix2& rotation);

}  // namespace kernels
}  // namespace orbikit
