#include "orbikit/toruslift.hpp"

#include <cmath>
#include <cstdlib>

#include "orbikit/error.hpp"
#include "orbikit/kernels.hpp"

namespace orbikit {

DeckRotation deck_matrix(OrbifoldCase c) {
  switch (c) {
    case OrbifoldCase::TwoTwoTwoTwo:  // z -> -z
      return {c, 2, {-1, 0, 0, -1}};
    case OrbifoldCase::TwoFourFour:  // z -> iz on {1, i}
      return {c, 4, {0, -1, 1, 0}};
    case OrbifoldCase::TwoThreeSix:  // z -> w z on {1, w}, w = e^{i pi/3}, w^2 = w - 1
      return {c, 6, {0, -1, 1, 1}};
    case OrbifoldCase::ThreeThreeThree:  // z -> w^2 z on {1, w}
      return {c, 3, {-1, -1, 1, 0}};
    case OrbifoldCase::InfInf:
    case OrbifoldCase::TwoTwoInf:
      break;
  }
  throw Error(ErrorCode::NotTorusCase, case_name(c) + " has no torus lift");
}

TorusLift make_torus_lift(const IntMatrix2& a, OrbifoldCase c, std::int64_t degree) {
  if (!is_torus_case(c)) {
    throw Error(ErrorCode::NotTorusCase, case_name(c) + " has no torus lift");
  }
  if (degree > -2 && degree < 2) {
    throw Error(ErrorCode::InvalidDegree, "|d| must exceed 1, got " + std::to_string(degree));
  }
  if (a.det() != degree) {
    throw Error(ErrorCode::DegreeMismatch, "det " + a.str() + " = " + std::to_string(a.det()) +
                                               " but d = " + std::to_string(degree));
  }
  return {a, c, degree, case_data(c).sheets};
}

AvoidedMatrix avoid_eigenvalue_one(const IntMatrix2& a, const DeckRotation& r) {
  if ((a - IntMatrix2::identity()).det() != 0) return {a, false};
  const IntMatrix2 ra = r.matrix * a;
  if ((ra - IntMatrix2::identity()).det() == 0) {
    throw Error(ErrorCode::AssertionFailure,
                "both " + a.str() + " and R A have eigenvalue 1 (|det A| must exceed 1)");
  }
  return {ra, true};
}

mpz_class fixed_count_torus(const IntMatrix2& a, int n) {
  if (n < 1) throw Error(ErrorCode::AssertionFailure, "iterate must be positive");
  BigMatrix2 p = BigMatrix2(a).pow(n);
  p.m[0] -= 1;
  p.m[3] -= 1;
  mpz_class det = p.det();
  if (det == 0) {
    throw Error(ErrorCode::DegenerateIterate,
                a.str() + "^" + std::to_string(n) + " has eigenvalue 1", n);
  }
  return abs(det);
}

mpz_class lefschetz_by_trace(const IntMatrix2& a, int n) {
  if (n < 1) throw Error(ErrorCode::AssertionFailure, "iterate must be positive");
  const mpz_class t(static_cast<long>(a.trace()));
  const mpz_class d(static_cast<long>(a.det()));
  // tr(A^k) = t tr(A^(k-1)) - d tr(A^(k-2)), tr(A^0) = 2.
  mpz_class prev = 2;
  mpz_class cur = t;
  for (int k = 2; k <= n; ++k) {
    mpz_class next = t * cur - d * prev;
    prev = cur;
    cur = next;
  }
  mpz_class dn;
  mpz_pow_ui(dn.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n));
  return dn - cur + 1;
}

namespace {

mpz_class ceil_div(const mpz_class& num, int den) {
  mpz_class q;
  mpz_cdiv_q_ui(q.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(den));
  return q;
}

}  // namespace

mpz_class sphere_lower_bound(const TorusLift& lift, int n) {
  const auto avoided = avoid_eigenvalue_one(lift.matrix, deck_matrix(lift.orbifold_case));
  return ceil_div(fixed_count_torus(avoided.matrix, n), lift.sheets);
}

RateCertificate certify_rate(const TorusLift& lift, int horizon, double epsilon,
                             Execution exec) {
  if (horizon < 1) throw Error(ErrorCode::AssertionFailure, "horizon must be >= 1");
  RateCertificate cert;
  cert.lift = lift;
  cert.epsilon = epsilon;
  cert.target = std::log(std::fabs(static_cast<double>(lift.degree)));

  const auto avoided = avoid_eigenvalue_one(lift.matrix, deck_matrix(lift.orbifold_case));
  cert.certified_matrix = avoided.matrix;
  cert.composed = avoided.composed;

  const auto dets = exec == Execution::Parallel
                        ? kernels::lefschetz_dets_parallel(avoided.matrix, horizon)
                        : kernels::lefschetz_dets_serial(avoided.matrix, horizon);

  cert.rows.resize(static_cast<std::size_t>(horizon));
  for (int n = 1; n <= horizon; ++n) {
    auto& row = cert.rows[static_cast<std::size_t>(n - 1)];
    row.n = n;
    const auto& det = dets[static_cast<std::size_t>(n - 1)];
    if (det == 0) {
      row.degenerate = true;
      continue;
    }
    row.torus_count = abs(det);
    row.sphere_bound = ceil_div(row.torus_count, lift.sheets);
    row.exponent = log_abs(row.sphere_bound) / n;
    cert.verdict_n = n;
  }
  if (cert.verdict_n == 0) {
    throw Error(ErrorCode::DegenerateIterate,
                "every iterate of " + avoided.matrix.str() + " up to " + std::to_string(horizon) +
                    " has eigenvalue 1",
                1);
  }
  cert.verdict_exponent = cert.rows[static_cast<std::size_t>(cert.verdict_n - 1)].exponent;
  cert.pass = cert.verdict_exponent >= cert.target - epsilon;
  return cert;
}

bool descends_check(const IntMatrix2& a, const DeckRotation& r) {
  const IntMatrix2 ar = a * r.matrix;
  IntMatrix2 rs = IntMatrix2::identity();
  for (int s = 0; s < r.order; ++s) {
    if (rs * a == ar) return true;
    rs = rs * r.matrix;
  }
  return false;
}

}  // namespace orbikit
