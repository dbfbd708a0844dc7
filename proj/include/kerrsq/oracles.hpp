#pragma once

#include <complex>

#include "kerrsq/kernel.hpp"
#include "kerrsq/nlo_phase.hpp"
#include "kerrsq/report.hpp"

namespace kerrsq {

// Numeric Fourier transform of the smooth part of the quadrature correlation
// functions over tau in [-window, window] (absolute time), composite Simpson
// with the given step. The kink at tau = 0 lands on a panel boundary. The
// shot-noise delta is not discretized; add delta_weight analytically.
struct FourierSmooth {
  std::complex<double> x;
  std::complex<double> y;
};

FourierSmooth fourier_corr_smooth(const NonlinearPhases& ph, const ResponseKernel& kernel,
                                  double Omega, double window = 40.0,
                                  double step = 0.005);

// Numeric Fourier transform of corr_R plus the analytic 1/4 against
// spectrum_closed, over the frequency-scan presets (intensity ratios
// {0,2,3,5,8}, phi01 = 2, optimal phase at Omega0 = 0, Omega in [0,3]).
// Absolute tolerance 1e-6.
VerificationReport run_dft_oracle();

// Quasi-static phase and damping forms against exact convolution quadrature
// for tau_p/tau_r in {50, 100, 200, 400}: relative error <= 1% at 100 and
// monotonically decreasing along the list.
VerificationReport run_convolution_oracle();

// Operator-algebra checks on a two-pulse, two-bin truncated Fock lattice
// (n_max = 12, per-bin |alpha|^2 <= 1, gammas <= 0.2): commutators, photon
// statistics, the normally-ordered mean, and the gamma^3 truncation order.
VerificationReport run_fock_oracle();

}  // namespace kerrsq
