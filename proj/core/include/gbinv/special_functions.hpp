#pragma once

namespace gbinv {

// Regularized lower incomplete gamma P(s, x) = gamma(s, x) / Gamma(s).
//
// Series expansion for x < s + 1, Lentz continued fraction for the upper
// tail otherwise. The x^s e^-x / Gamma(s) prefactor is formed in log space
// with a Stirling-corrected expansion around x = s, so arguments up to 1e6
// (and well beyond) neither overflow nor lose accuracy to cancellation.
// Throws DomainError for s <= 0, x < 0 or NaN arguments.
[[nodiscard]] double regularized_lower_gamma(double s, double x);

// Q(s, x) = 1 - P(s, x), computed directly (no subtraction) in the tail.
[[nodiscard]] double regularized_upper_gamma(double s, double x);

// log of the Poisson pmf e^-mean mean^k / k!, using the saddle-point
// (deviance + Stirling error) form so large k and mean stay accurate.
[[nodiscard]] double log_poisson_pmf(long long k, double mean);

// Stirling series remainder: lgamma(n + 1) - [(n + 1/2) ln n - n + ln(2 pi)/2].
[[nodiscard]] double stirling_error(double n);

}  // namespace gbinv
