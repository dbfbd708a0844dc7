#include "kerrsq/quadrature.hpp"

#include <cmath>

namespace kerrsq {

QuadratureMeans mean_quadratures(const NonlinearPhases& ph, const PulseSpec& probe) {
  const double amp =
      std::sqrt(probe.photon_density(ph.t)) * std::exp(-(ph.mu1 + ph.mu2x));
  return {amp * std::cos(ph.Phi_tilde), amp * std::sin(ph.Phi_tilde)};
}

std::pair<CorrelationSample, CorrelationSample> corr_R(const NonlinearPhases& ph,
                                                       const ResponseKernel& kernel,
                                                       double tau) {
  const double s2 = std::sin(2.0 * ph.Phi_tilde);
  const double s = std::sin(ph.Phi_tilde);
  const double c = std::cos(ph.Phi_tilde);
  const double ht = kernel.h(tau);
  const double gt = kernel.g(tau);
  const double rx = 0.25 * (-ph.phi1 * ht * s2 + ph.phi_star * gt * s * s);
  const double ry = 0.25 * (ph.phi1 * ht * s2 + ph.phi_star * gt * c * c);
  return {CorrelationSample{ph.t, tau, rx, 0.25},
          CorrelationSample{ph.t, tau, ry, 0.25}};
}

LambdaTerms lambda_pointwise(const NonlinearPhases& at_t1, const NonlinearPhases& at_t2,
                             const ResponseKernel& kernel) {
  const double ht = kernel.h_tilde((at_t2.t - at_t1.t) / kernel.tau_r());
  return {(at_t1.mu1 + at_t2.mu1) * ht, (at_t1.mu2x + at_t2.mu2x) * ht};
}

ExactCorrelators correlator_C_exact(const NonlinearPhases& at_t1,
                                    const NonlinearPhases& at_t2,
                                    const LambdaTerms& lambda, const PulseSpec& probe,
                                    double gamma1, const ResponseKernel& kernel) {
  const double a1 = std::sqrt(probe.photon_density(at_t1.t));
  const double a2 = std::sqrt(probe.photon_density(at_t2.t));
  const double mu_sum = at_t1.mu1 + at_t1.mu2x + at_t2.mu1 + at_t2.mu2x;
  const double nudge = gamma1 * kernel.h_tilde((at_t2.t - at_t1.t) / kernel.tau_r());
  const double lam = lambda.total();

  const double pre = 0.5 * a1 * a2 * std::exp(-mu_sum);
  const double sum_cos = std::cos(at_t1.Phi_tilde + at_t2.Phi_tilde + nudge);
  const double diff_cos = std::cos(at_t1.Phi_tilde - at_t2.Phi_tilde);
  const double cx = pre * (std::exp(-lam) * sum_cos + std::exp(lam) * diff_cos);
  const double cy = -pre * (std::exp(-lam) * sum_cos - std::exp(lam) * diff_cos);
  return {cx, cy, 0.25};
}

}  // namespace kerrsq
