#pragma once

#include <complex>
#include <vector>

#include "kerrsq/kernel.hpp"
#include "kerrsq/nlo_phase.hpp"
#include "kerrsq/report.hpp"

namespace kerrsq {

// A short train of time bins, each holding one bosonic mode truncated at
// n_max photons and prepared in a coherent state. Bin k sits at
// theta_k = k * dt (dt in units of tau_r); |alpha_k|^2 is the mean photon
// number of the bin. Continuum field operators map to a_k / sqrt(dt), so the
// equal-space commutator is delta_jk / dt on the grid.
struct ModeLattice {
  int n_bins = 2;
  double dt = 1.0;
  int n_max = 12;
  std::vector<std::complex<double>> alpha;

  void validate() const;      // throws ConfigError
  long dimension() const;     // (n_max + 1)^n_bins
  double theta(int bin) const { return dt * bin; }
};

// <exp(i gamma sum_k h~(theta_k) n_k)> over the lattice coherent state,
// evaluated two independent ways: a dense expectation in the truncated Fock
// basis, and the normally-ordered closed form
//   exp( sum_k (e^{i gamma h~(theta_k)} - 1) |alpha_k|^2 ),
// which is analytic and independent of the truncation.
struct ExpExpOValue {
  std::complex<double> matrix_value;
  std::complex<double> closed_form;
  double difference;
};

ExpExpOValue expect_exp_O(const ModeLattice& lattice, double gamma,
                          const ResponseKernel& kernel);

// Checks that the closed form reduces to exp(i phi - mu) with
//   phi = gamma sum_k h~(theta_k) |alpha_k|^2,
//   mu = gamma^2/2 sum_k h~(theta_k)^2 |alpha_k|^2,
// up to a residual of order gamma^3 (verified by halving gamma and requiring
// an eightfold error reduction), and that the truncated-basis expectation
// converges toward the closed form as n_max grows.
VerificationReport verify_truncated_mean(const ModeLattice& lattice, double gamma,
                                         const ResponseKernel& kernel);

// Builds the diagonal evolution unitary for two co-propagating pulses from
// the normally-ordered SPM generators and the XPM cross term, conjugates the
// per-bin annihilators, and asserts on the joint truncated space:
//   (i)  [A_j, A_k^+] = delta_jk / dt within 1e-10 (max norm, truncation-safe
//        block: every occupation <= n_max - 1);
//  (ii)  photon numbers are invariant under the evolution within 1e-12;
// (iii)  the permutation identity a_k e^O = e^{O + i gamma h~} a_k holds as a
//        matrix identity within 1e-10;
//  (iv)  cross-pulse commutators vanish (disjoint tensor factors).
VerificationReport verify_commutator_and_statistics(const ModeLattice& probe,
                                                    const ModeLattice& control,
                                                    const InteractionParams& params,
                                                    const ResponseKernel& kernel);

}  // namespace kerrsq
