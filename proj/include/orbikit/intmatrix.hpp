#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace orbikit {

// 2x2 integer matrix, row-major [[a, b], [c, d]]. Arithmetic is overflow
// checked and throws Error(Overflow).
struct IntMatrix2 {
  std::array<std::int64_t, 4> m{0, 0, 0, 0};

  constexpr IntMatrix2() = default;
  constexpr IntMatrix2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
      : m{a, b, c, d} {}

  static constexpr IntMatrix2 identity() { return {1, 0, 0, 1}; }

  constexpr std::int64_t operator()(int row, int col) const { return m[row * 2 + col]; }

  std::int64_t det() const;
  std::int64_t trace() const;
  IntMatrix2 pow(int n) const;

  friend IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y);
  friend IntMatrix2 operator+(const IntMatrix2& x, const IntMatrix2& y);
  friend IntMatrix2 operator-(const IntMatrix2& x, const IntMatrix2& y);
  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;

  std::string str() const;
};

// Same shape over GMP integers, for exact powers of any size.
struct BigMatrix2 {
  std::array<mpz_class, 4> m;

  BigMatrix2() = default;
  explicit BigMatrix2(const IntMatrix2& a);
  static BigMatrix2 identity();

  mpz_class det() const;
  mpz_class trace() const;
  BigMatrix2 pow(int n) const;
  friend BigMatrix2 operator*(const BigMatrix2& x, const BigMatrix2& y);
};

// Natural log of |x| for x != 0, accurate for values far beyond double range.
double log_abs(const mpz_class& x);

}  // namespace orbikit
