#pragma once

namespace edgelab {

struct AiryValue {
  double ai;
  double aip;  // Ai'
};

/// Ai and Ai' on [-20, 200]. Maclaurin series (extended precision) on
/// [-8, 2], oscillatory asymptotic expansion below -8, and the
/// steepest-descent integral e^{-zeta}/pi int_0^inf exp(-sqrt(x) t^2) cos(t^3/3) dt above 2.
AiryValue airy(double x);

double airy_ai(double x);
double airy_ai_prime(double x);

/// exp(2/3 x^{3/2}) Ai(x) and the same factor times Ai'(x), for x > 0;
/// finite where Ai itself underflows.
AiryValue airy_scaled(double x);

/// Leading asymptote e^{-2/3 x^{3/2}} / (2 sqrt(pi) x^{1/4}), x > 0.
double airy_ai_asymptote(double x);

}  // namespace edgelab

namespace edgelab::detail {
/// Same expansions without the [-20, 200] guard; values past 200 underflow to 0.
AiryValue airy_unbounded(double x);
}  // namespace edgelab::detail
