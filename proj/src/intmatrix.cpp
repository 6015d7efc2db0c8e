#include "orbikit/intmatrix.hpp"

#include <cmath>

#include "orbikit/error.hpp"

namespace orbikit {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "int64 product");
  return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "int64 sum");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "int64 difference");
  return r;
}

}  // namespace

std::int64_t IntMatrix2::det() const { return sub(mul(m[0], m[3]), mul(m[1], m[2])); }

std::int64_t IntMatrix2::trace() const { return add(m[0], m[3]); }

IntMatrix2 IntMatrix2::pow(int n) const {
  if (n < 0) throw Error(ErrorCode::AssertionFailure, "negative matrix power");
  IntMatrix2 result = identity();
  IntMatrix2 base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
  return {add(mul(x.m[0], y.m[0]), mul(x.m[1], y.m[2])),
          add(mul(x.m[0], y.m[1]), mul(x.m[1], y.m[3])),
          add(mul(x.m[2], y.m[0]), mul(x.m[3], y.m[2])),
          add(mul(x.m[2], y.m[1]), mul(x.m[3], y.m[3]))};
}

IntMatrix2 operator+(const IntMatrix2& x, const IntMatrix2& y) {
  return {add(x.m[0], y.m[0]), add(x.m[1], y.m[1]), add(x.m[2], y.m[2]), add(x.m[3], y.m[3])};
}

IntMatrix2 operator-(const IntMatrix2& x, const IntMatrix2& y) {
  return {sub(x.m[0], y.m[0]), sub(x.m[1], y.m[1]), sub(x.m[2], y.m[2]), sub(x.m[3], y.m[3])};
}

std::string IntMatrix2::str() const {
  return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" +
         std::to_string(m[2]) + "," + std::to_string(m[3]) + "]]";
}

BigMatrix2::BigMatrix2(const IntMatrix2& a) {
  for (int i = 0; i < 4; ++i) m[i] = mpz_class(static_cast<long>(a.m[i]));
}

BigMatrix2 BigMatrix2::identity() { return BigMatrix2(IntMatrix2::identity()); }

mpz_class BigMatrix2::det() const { return m[0] * m[3] - m[1] * m[2]; }

mpz_class BigMatrix2::trace() const { return m[0] + m[3]; }

BigMatrix2 operator*(const BigMatrix2& x, const BigMatrix2& y) {
  BigMatrix2 r;
  r.m[0] = x.m[0] * y.m[0] + x.m[1] * y.m[2];
  r.m[1] = x.m[0] * y.m[1] + x.m[1] * y.m[3];
  r.m[2] = x.m[2] * y.m[0] + x.m[3] * y.m[2];
  r.m[3] = x.m[2] * y.m[1] + x.m[3] * y.m[3];
  return r;
}

BigMatrix2 BigMatrix2::pow(int n) const {
  if (n < 0) throw Error(ErrorCode::AssertionFailure, "negative matrix power");
  BigMatrix2 result = identity();
  BigMatrix2 base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

double log_abs(const mpz_class& x) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace orbikit
