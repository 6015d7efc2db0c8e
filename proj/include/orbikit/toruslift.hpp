#pragma once

// Linear model of the torus lift F of a non-hyperbolic Thurston map: the
// action A = F_* on H_1(T^2), the deck rotation R, eigenvalue-one avoidance
// by composing with R, exact fixed-point counts |det(A^n - I)| and the
// growth-rate certificate obtained by dividing by the sheet count.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "orbikit/cases.hpp"
#include "orbikit/intmatrix.hpp"

namespace orbikit {

struct DeckRotation {
  OrbifoldCase orbifold_case;
  int order = 1;
  IntMatrix2 matrix;
};

// Rotation of order 2, 4, 6, 3 in the square basis {1, i} or the hexagonal
// basis {1, e^{i pi/3}}. Throws NotTorusCase.
DeckRotation deck_matrix(OrbifoldCase c);

struct TorusLift {
  IntMatrix2 matrix;
  OrbifoldCase orbifold_case;
  std::int64_t degree = 0;
  int sheets = 0;
};

// Throws NotTorusCase, InvalidDegree (|d| <= 1), DegreeMismatch (det A != d).
TorusLift make_torus_lift(const IntMatrix2& a, OrbifoldCase c, std::int64_t degree);

struct AvoidedMatrix {
  IntMatrix2 matrix;
  bool composed = false;  // true iff the result is R * A
};

// A if det(A - I) != 0, otherwise R * A. Throws AssertionFailure when both
// have eigenvalue 1 (only possible for |det A| <= 1).
AvoidedMatrix avoid_eigenvalue_one(const IntMatrix2& a, const DeckRotation& r);

// |det(A^n - I)| by exact matrix powers. Throws DegenerateIterate.
mpz_class fixed_count_torus(const IntMatrix2& a, int n);

// det(A)^n - tr(A^n) + 1, with tr(A^n) from the Cayley-Hamilton trace
// recurrence; an independent route to det(A^n - I).
mpz_class lefschetz_by_trace(const IntMatrix2& a, int n);

// ceil(fixed_count_torus(A', n) / l) with A' = avoid_eigenvalue_one(A, R).
mpz_class sphere_lower_bound(const TorusLift& lift, int n);

enum class Execution { Serial, Parallel };

struct RateRow {
  int n = 0;
  bool degenerate = false;  // det(A'^n - I) == 0
  mpz_class torus_count;    // |det(A'^n - I)|
  mpz_class sphere_bound;   // ceil(torus_count / l)
  double exponent = 0.0;    // ln(sphere_bound) / n
};

struct RateCertificate {
  TorusLift lift;
  IntMatrix2 certified_matrix;  // A or R A
  bool composed = false;
  std::vector<RateRow> rows;
  double epsilon = 0.0;
  double target = 0.0;  // ln |d|
  int verdict_n = 0;    // largest non-degenerate n <= N
  double verdict_exponent = 0.0;
  bool pass = false;
};

inline constexpr int kDefaultHorizon = 20;
inline constexpr double kDefaultEpsilon = 0.05;

// Rows n = 1..N. Degenerate iterates are flagged; the verdict is taken at
// the largest non-degenerate n <= N: pass iff exponent >= ln|d| - eps.
// Throws DegenerateIterate if every row degenerates.
RateCertificate certify_rate(const TorusLift& lift, int horizon = kDefaultHorizon,
                             double epsilon = kDefaultEpsilon,
                             Execution exec = Execution::Parallel);

// True iff A R = R^s A for some s in [0, k).
bool descends_check(const IntMatrix2& a, const DeckRotation& r);

}  // namespace orbikit
