#pragma once

#include <utility>

#include "kerrsq/kernel.hpp"
#include "kerrsq/nlo_phase.hpp"
#include "kerrsq/pulse.hpp"

namespace kerrsq {

// Mean field quadratures <X>, <Y> of the probe at the slice described by ph:
//   <X> = |alpha(t)| exp(-mu1 - mu2x) cos(Phi_tilde),  <Y> with sin.
struct QuadratureMeans {
  double x;
  double y;
};

QuadratureMeans mean_quadratures(const NonlinearPhases& ph, const PulseSpec& probe);

// One sample of a quadrature correlation function R(t, t + tau). The
// shot-noise delta contribution is never discretized: it is carried as the
// coefficient of delta(tau), exactly 1/4 for coherent inputs, and folded into
// spectra analytically.
struct CorrelationSample {
  double t;
  double tau;
  double smooth_value;
  double delta_weight;
};

// Gamma^2-truncated correlation functions of the X and Y quadratures:
//   R_X = 1/4 { delta(tau) - phi1 h(tau) sin(2 Phi~) + phi* g(tau) sin^2(Phi~) }
//   R_Y = 1/4 { delta(tau) + phi1 h(tau) sin(2 Phi~) + phi* g(tau) cos^2(Phi~) }
// Returned as (X, Y). Valid in the quasi-static, small-gamma regime.
std::pair<CorrelationSample, CorrelationSample> corr_R(const NonlinearPhases& ph,
                                                       const ResponseKernel& kernel,
                                                       double tau);

// Exponential damping arguments of the exact two-time correlators. Callers
// choose how to build them: lambda_pointwise forms
//   lambda = [mu(t1) + mu(t2)] h~(t2 - t1)
// from the single-time exponents, while brace-initializing from the K
// correlators uses the full convolution weight (g instead of h~ in the
// quasi-static limit). The two differ at order (|tau|/tau_r) e^{-|tau|}.
struct LambdaTerms {
  double lambda1 = 0.0;
  double lambda2x = 0.0;
  double total() const noexcept { return lambda1 + lambda2x; }
};

LambdaTerms lambda_pointwise(const NonlinearPhases& at_t1, const NonlinearPhases& at_t2,
                             const ResponseKernel& kernel);

// Exact (un-expanded) correlators <X(t1)X(t2)>, <Y(t1)Y(t2)>:
//   C_X = 1/4 delta(tau) + 1/2 |a1||a2| e^{-mu_sum}
//         { e^{-Lambda} cos[Phi~(t1) + Phi~(t2) + gamma1 h~(tau)]
//         + e^{+Lambda} cos[Phi~(t1) - Phi~(t2)] }
// and C_Y with the opposite overall sign and a minus between the braces.
// The gamma1 h~ phase nudge is kept exactly, no small-angle expansion.
struct ExactCorrelators {
  double cx_smooth;
  double cy_smooth;
  double delta_weight;
};

ExactCorrelators correlator_C_exact(const NonlinearPhases& at_t1,
                                    const NonlinearPhases& at_t2,
                                    const LambdaTerms& lambda, const PulseSpec& probe,
                                    double gamma1, const ResponseKernel& kernel);

}  // namespace kerrsq
