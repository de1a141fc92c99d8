#include "sig/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace sig {

namespace {

__extension__ using i128 = __int128;

int sign_of(i128 v) { return (v > 0) - (v < 0); }

// sign(alpha + beta * sqrt(m)), m >= 0.
int sign1(i128 alpha, i128 beta, i128 m) {
  if (beta == 0 || m == 0) return sign_of(alpha);
  const int sb = sign_of(beta);
  const int sa = sign_of(alpha);
  if (sa == 0 || sa == sb) return sb;
  const i128 lhs = alpha * alpha;
  const i128 rhs = beta * beta * m;
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

// sign(alpha + beta * sqrt(m) + gamma * sqrt(n)).
int sign2(i128 alpha, i128 beta, i128 m, i128 gamma, i128 n) {
  const int su = [&] {
    const int sb = (m == 0) ? 0 : sign_of(beta);
    const int sg = (n == 0) ? 0 : sign_of(gamma);
    if (sb == 0) return sg;
    if (sg == 0 || sb == sg) return sb;
    const i128 lhs = beta * beta * m;
    const i128 rhs = gamma * gamma * n;
    return lhs > rhs ? sb : (lhs < rhs ? sg : 0);
  }();
  const int sa = sign_of(alpha);
  if (su == 0) return sa;
  if (sa == 0 || sa == su) return su;
  // |alpha| vs |u|:  alpha^2 - u^2 = alpha^2 - beta^2 m - gamma^2 n - 2 beta gamma sqrt(mn)
  const int cmp = sign1(alpha * alpha - beta * beta * m - gamma * gamma * n, -2 * beta * gamma, m * n);
  return cmp > 0 ? sa : (cmp < 0 ? su : 0);
}

}  // namespace

std::int64_t isqrt(std::int64_t v) {
  if (v < 0) throw std::invalid_argument("isqrt of a negative number");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && static_cast<i128>(r) * r > v) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

bool is_perfect_square(std::int64_t v) {
  if (v < 0) return false;
  const auto r = isqrt(v);
  return r * r == v;
}

Surd::Surd(std::int64_t a, std::int64_t b, std::int64_t d) : a_(a), b_(b), d_(d) {
  if (d < 0) throw std::invalid_argument("Surd: negative radicand");
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
  } else if (is_perfect_square(d_)) {
    a_ += b_ * isqrt(d_);
    b_ = 0;
    d_ = 0;
  }
}

std::optional<std::int64_t> Surd::as_integer() const {
  if (!is_integer()) return std::nullopt;
  return a_ / 2;
}

double Surd::to_double() const {
  return (static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(static_cast<double>(d_))) /
         2.0;
}

std::string Surd::to_string() const {
  if (is_integer()) return "int:" + std::to_string(a_ / 2);
  if (b_ == 0) return "half:" + std::to_string(a_) + "/2";
  std::string coeff;
  if (b_ == 1) {
    coeff = "+";
  } else if (b_ == -1) {
    coeff = "-";
  } else {
    coeff = (b_ > 0 ? "+" : "") + std::to_string(b_);
  }
  return "surd:(" + std::to_string(a_) + coeff + "√" + std::to_string(d_) + ")/2";
}

std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
  const int s = sign2(static_cast<i128>(x.a_) - y.a_, x.b_, x.d_, -static_cast<i128>(y.b_), y.d_);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace sig
