#include "orbikit/quotient_sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>

#include "orbikit/error.hpp"
#include "orbikit/kernels.hpp"

namespace orbikit {

namespace {

using Q = boost::rational<std::int64_t>;

Q frac_part(const Q& q) {
  std::int64_t num = q.numerator() % q.denominator();
  if (num < 0) num += q.denominator();
  return Q(num, q.denominator());
}

void swap_rows(IntMatrix2& m) {
  std::swap(m.m[0], m.m[2]);
  std::swap(m.m[1], m.m[3]);
}

void swap_cols(IntMatrix2& m) {
  std::swap(m.m[0], m.m[1]);
  std::swap(m.m[2], m.m[3]);
}

// row[dst] += q * row[other]
void add_row(IntMatrix2& m, int dst, std::int64_t q) {
  m = IntMatrix2(1, dst == 0 ? q : 0, dst == 1 ? q : 0, 1) * m;
}

// col[dst] += q * col[other]
void add_col(IntMatrix2& m, int dst, std::int64_t q) {
  m = m * IntMatrix2(1, dst == 1 ? q : 0, dst == 0 ? q : 0, 1);
}

void negate_row(IntMatrix2& m, int row) {
  m.m[row * 2] = -m.m[row * 2];
  m.m[row * 2 + 1] = -m.m[row * 2 + 1];
}

}  // namespace

TorusPoint TorusPoint::reduced(Q x, Q y) { return {frac_part(x), frac_part(y)}; }

TorusPoint apply(const IntMatrix2& m, const TorusPoint& p) {
  return TorusPoint::reduced(Q(m.m[0]) * p.x + Q(m.m[1]) * p.y,
                             Q(m.m[2]) * p.x + Q(m.m[3]) * p.y);
}

std::int64_t enumeration_cap_from_env() {
  if (const char* env = std::getenv("ORBIKIT_MAX_ENUM")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumerationCap;
}

SmithForm smith_normal_form(const IntMatrix2& m) {
  IntMatrix2 d = m;
  IntMatrix2 u = IntMatrix2::identity();
  IntMatrix2 v = IntMatrix2::identity();
  while (d.m[0] || d.m[1] || d.m[2] || d.m[3]) {
    int best = -1;
    for (int k = 0; k < 4; ++k) {
      if (d.m[k] != 0 && (best < 0 || std::llabs(d.m[k]) < std::llabs(d.m[best]))) best = k;
    }
    if (best / 2 == 1) {
      swap_rows(d);
      swap_rows(u);
    }
    if (best % 2 == 1) {
      swap_cols(d);
      swap_cols(v);
    }
    const std::int64_t qr = d(1, 0) / d(0, 0);
    add_row(d, 1, -qr);
    add_row(u, 1, -qr);
    const std::int64_t qc = d(0, 1) / d(0, 0);
    add_col(d, 1, -qc);
    add_col(v, 1, -qc);
    if (d(1, 0) != 0 || d(0, 1) != 0) continue;
    if (d(1, 1) % d(0, 0) != 0) {
      add_row(d, 0, 1);
      add_row(u, 0, 1);
      continue;
    }
    break;
  }
  for (int row = 0; row < 2; ++row) {
    if (d.m[row * 3] < 0) {
      negate_row(d, row);
      negate_row(u, row);
    }
  }
  return {u, v, d.m[0], d.m[3]};
}

std::vector<TorusPoint> smith_solve(const IntMatrix2& m, Execution exec) {
  if (m.det() == 0) throw Error(ErrorCode::SingularMatrix, m.str() + " is singular");
  const SmithForm snf = smith_normal_form(m);
  return exec == Execution::Parallel
             ? kernels::torsion_points_parallel(snf.right, snf.s1, snf.s2)
             : kernels::torsion_points_serial(snf.right, snf.s1, snf.s2);
}

std::vector<std::vector<TorusPoint>> twisted_solutions(const IntMatrix2& a, const DeckRotation& r,
                                                       int n, std::int64_t cap, Execution exec) {
  if (n < 1) throw Error(ErrorCode::AssertionFailure, "iterate must be positive");
  const IntMatrix2 an = a.pow(n);
  std::vector<IntMatrix2> twists;
  IntMatrix2 rj = IntMatrix2::identity();
  bool any = false;
  for (int j = 0; j < r.order; ++j) {
    const IntMatrix2 mj = an - rj;
    const std::int64_t det = mj.det();
    if (det != 0) {
      any = true;
      if (std::llabs(det) > cap) {
        throw Error(ErrorCode::EnumerationCapExceeded,
                    "|det(A^" + std::to_string(n) + " - R^" + std::to_string(j) +
                        ")| = " + std::to_string(std::llabs(det)) + " exceeds the cap " +
                        std::to_string(cap) + " (set ORBIKIT_MAX_ENUM to raise it)");
      }
    }
    twists.push_back(mj);
    rj = rj * r.matrix;
  }
  if (!any) {
    throw Error(ErrorCode::AllSingular,
                "A^" + std::to_string(n) + " - R^j is singular for every j");
  }
  std::vector<std::vector<TorusPoint>> out;
  out.reserve(twists.size());
  for (const auto& mj : twists) {
    out.push_back(mj.det() == 0 ? std::vector<TorusPoint>{} : smith_solve(mj, exec));
  }
  return out;
}

QuotientFixReport count_quotient_fixed(const IntMatrix2& a, const DeckRotation& r, int n,
                                       std::int64_t cap, Execution exec) {
  QuotientFixReport report;
  report.n = n;
  const auto per_j = twisted_solutions(a, r, n, cap, exec);
  const IntMatrix2 an = a.pow(n);

  std::vector<TorusPoint> all;
  IntMatrix2 rj = IntMatrix2::identity();
  for (int j = 0; j < r.order; ++j) {
    TwistRow row;
    row.j = j;
    row.det = (an - rj).det();
    row.singular = row.det == 0;
    row.solutions = static_cast<std::int64_t>(per_j[static_cast<std::size_t>(j)].size());
    if (row.singular) {
      report.warnings.push_back("j=" + std::to_string(j) +
                                ": A^n - R^j is singular, twist excluded");
    }
    report.twists.push_back(row);
    all.insert(all.end(), per_j[static_cast<std::size_t>(j)].begin(),
               per_j[static_cast<std::size_t>(j)].end());
    rj = rj * r.matrix;
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  report.distinct_points = static_cast<std::int64_t>(all.size());
  report.orbit_count = exec == Execution::Parallel
                           ? kernels::count_orbits_parallel(all, r.matrix)
                           : kernels::count_orbits_serial(all, r.matrix);
  return report;
}

std::vector<OracleRow> oracle_vs_bound(const TorusLift& lift, int horizon, std::int64_t cap,
                                       Execution exec) {
  const DeckRotation r = deck_matrix(lift.orbifold_case);
  std::vector<OracleRow> rows;
  for (int n = 1; n <= horizon; ++n) {
    OracleRow row;
    row.n = n;
    row.exact = count_quotient_fixed(lift.matrix, r, n, cap, exec).orbit_count;
    row.exact_exponent = row.exact > 0 ? std::log(static_cast<double>(row.exact)) / n : 0.0;
    try {
      row.bound = sphere_lower_bound(lift, n);
      row.bound_exponent = log_abs(*row.bound) / n;
      row.dominates = mpz_class(static_cast<long>(row.exact)) >= *row.bound;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateIterate) throw;
      row.dominates = true;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace orbikit
