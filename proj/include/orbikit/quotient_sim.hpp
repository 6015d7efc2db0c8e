#pragma once

// Brute-force fixed points of f^n on the quotient sphere of a linear torus
// model: every x with A^n x = R^j x (mod Z^2) for some j projects to a fixed
// point, and fixed points of f^n correspond to <R>-orbits of such x.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <gmpxx.h>

#include "orbikit/intmatrix.hpp"
#include "orbikit/toruslift.hpp"

namespace orbikit {

// Point of R^2 / Z^2 with exact coordinates in [0, 1).
struct TorusPoint {
  boost::rational<std::int64_t> x;
  boost::rational<std::int64_t> y;

  static TorusPoint reduced(boost::rational<std::int64_t> x, boost::rational<std::int64_t> y);

  friend bool operator==(const TorusPoint& a, const TorusPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const TorusPoint& a, const TorusPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

// M x reduced mod Z^2.
TorusPoint apply(const IntMatrix2& m, const TorusPoint& p);

inline constexpr std::int64_t kDefaultEnumerationCap = 1'000'000;

// Cap from ORBIKIT_MAX_ENUM if set and valid, else the default.
std::int64_t enumeration_cap_from_env();

struct SmithForm {
  IntMatrix2 left;   // U, unimodular
  IntMatrix2 right;  // V, unimodular
  std::int64_t s1 = 0;  // U M V = diag(s1, s2), s1 | s2, both >= 0
  std::int64_t s2 = 0;
};

SmithForm smith_normal_form(const IntMatrix2& m);

// The |det M| solutions of M x = 0 (mod Z^2). Throws SingularMatrix.
std::vector<TorusPoint> smith_solve(const IntMatrix2& m, Execution exec = Execution::Parallel);

struct TwistRow {
  int j = 0;
  std::int64_t det = 0;  // det(A^n - R^j)
  bool singular = false;
  std::int64_t solutions = 0;
};

struct QuotientFixReport {
  int n = 0;
  std::vector<TwistRow> twists;
  std::int64_t distinct_points = 0;  // size of the union over j
  std::int64_t orbit_count = 0;      // fixed points of f^n on the quotient
  std::vector<std::string> warnings;
};

// Per-j solution sets of (A^n - R^j) x = 0; empty for singular j.
// Throws EnumerationCapExceeded, AllSingular.
std::vector<std::vector<TorusPoint>> twisted_solutions(const IntMatrix2& a, const DeckRotation& r,
                                                       int n, std::int64_t cap,
                                                       Execution exec = Execution::Parallel);

QuotientFixReport count_quotient_fixed(const IntMatrix2& a, const DeckRotation& r, int n,
                                       std::int64_t cap = kDefaultEnumerationCap,
                                       Execution exec = Execution::Parallel);

struct OracleRow {
  int n = 0;
  std::int64_t exact = 0;
  std::optional<mpz_class> bound;  // unset when A'^n has eigenvalue 1
  bool dominates = false;
  double exact_exponent = 0.0;
  double bound_exponent = 0.0;
};

std::vector<OracleRow> oracle_vs_bound(const TorusLift& lift, int horizon,
                                       std::int64_t cap = kDefaultEnumerationCap,
                                       Execution exec = Execution::Parallel);

}  // namespace orbikit
