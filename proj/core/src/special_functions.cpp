#include "gbinv/special_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gbinv/errors.hpp"

namespace gbinv {
namespace {

constexpr double kEpsilon = std::numeric_limits<double>::epsilon();
constexpr int kMaxIterations = 10'000'000;
constexpr double kLn2Pi = 1.8378770664093454836;  // ln(2 pi)

// t - log1p(t), accurate when |t| is small.
double minus_log1pmx(double t) {
  if (std::abs(t) >= 0.5) return t - std::log1p(t);
  // log1p(t) = 2 atanh(v), v = t / (2 + t); t - 2v = t v.
  const double v = t / (2.0 + t);
  const double vv = v * v;
  double sum = t * v;
  double term = 2.0 * v;
  for (int j = 1; j < 200; ++j) {
    term *= vv;
    const double next = sum - term / (2 * j + 1);
    if (next == sum) break;
    sum = next;
  }
  return sum;
}

// x log(x / m) + m - x, the Poisson deviance term.
double deviance_term(double x, double m) {
  if (std::abs(x - m) < 0.1 * (x + m)) {
    const double v = (x - m) / (x + m);
    double sum = (x - m) * v;
    double ej = 2.0 * x * v;
    const double vv = v * v;
    for (int j = 1; j < 1000; ++j) {
      ej *= vv;
      const double next = sum + ej / (2 * j + 1);
      if (next == sum) return next;
      sum = next;
    }
    return sum;
  }
  return x * std::log(x / m) + m - x;
}

// log(x^s e^-x / Gamma(s)) for s > 0, x > 0.
double log_gamma_prefactor(double s, double x) {
  if (s < 10.0) return s * std::log(x) - x - std::lgamma(s);
  const double t = (x - s) / s;
  return -s * minus_log1pmx(t) + 0.5 * std::log(s) - 0.5 * kLn2Pi - stirling_error(s);
}

void check_gamma_args(double s, double x) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw DomainError("incomplete gamma: shape must be positive and finite, got " + std::to_string(s));
  }
  if (!(x >= 0.0) || std::isnan(x)) {
    throw DomainError("incomplete gamma: argument must be nonnegative, got " + std::to_string(x));
  }
}

// P(s, x) by the power series; intended for x < s + 1.
double lower_series(double s, double x) {
  // x^s e^-x / Gamma(s + 1) * sum_k x^k / ((s+1)...(s+k))
  const double log_front = log_gamma_prefactor(s, x) - std::log(s);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < kMaxIterations; ++k) {
    term *= x / (s + k);
    sum += term;
    if (term < sum * kEpsilon * 0.5) return std::exp(log_front + std::log(sum));
  }
  throw DomainError("incomplete gamma: series failed to converge");
}

// Q(s, x) by the modified Lentz continued fraction; intended for x >= s + 1.
double upper_continued_fraction(double s, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEpsilon) return std::exp(log_gamma_prefactor(s, x)) * h;
  }
  throw DomainError("incomplete gamma: continued fraction failed to converge");
}

}  // namespace

double stirling_error(double n) {
  if (n < 10.0) {
    return std::lgamma(n + 1.0) - (n + 0.5) * std::log(n) + n - 0.5 * kLn2Pi;
  }
  const double nn = n * n;
  constexpr double s0 = 1.0 / 12.0;
  constexpr double s1 = 1.0 / 360.0;
  constexpr double s2 = 1.0 / 1260.0;
  constexpr double s3 = 1.0 / 1680.0;
  constexpr double s4 = 1.0 / 1188.0;
  return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

double regularized_lower_gamma(double s, double x) {
  check_gamma_args(s, x);
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < s + 1.0) return lower_series(s, x);
  return 1.0 - upper_continued_fraction(s, x);
}

double regularized_upper_gamma(double s, double x) {
  check_gamma_args(s, x);
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < s + 1.0) return 1.0 - lower_series(s, x);
  return upper_continued_fraction(s, x);
}

double log_poisson_pmf(long long k, double mean) {
  if (k < 0) return -std::numeric_limits<double>::infinity();
  if (!(mean >= 0.0)) throw DomainError("poisson pmf: mean must be nonnegative");
  if (mean == 0.0) return k == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  if (k == 0) return -mean;
  const auto kd = static_cast<double>(k);
  return -stirling_error(kd) - deviance_term(kd, mean) - 0.5 * (kLn2Pi + std::log(kd));
}

}  // namespace gbinv
