#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace sig {

// Exact real number (a + b*sqrt(d)) / 2 with integer a, b and d >= 0.
// Perfect-square radicands are folded into a on construction, so b != 0
// implies the value is irrational. Comparison is exact.
class Surd {
 public:
  constexpr Surd() = default;
  // Throws std::invalid_argument for d < 0.
  Surd(std::int64_t a, std::int64_t b, std::int64_t d);

  static Surd integer(std::int64_t v) { return Surd(2 * v, 0, 0); }

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  std::int64_t d() const noexcept { return d_; }

  bool is_rational() const noexcept { return b_ == 0; }
  bool is_integer() const noexcept { return b_ == 0 && a_ % 2 == 0; }
  std::optional<std::int64_t> as_integer() const;
  double to_double() const;

  // "int:8", "half:7/2", or "surd:(11+√89)/2".
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Surd& x, const Surd& y);
  friend bool operator==(const Surd& x, const Surd& y) { return (x <=> y) == 0; }

 private:
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  std::int64_t d_ = 0;
};

// floor(sqrt(v)) for v >= 0, exact.
std::int64_t isqrt(std::int64_t v);
bool is_perfect_square(std::int64_t v);

}  // namespace sig
