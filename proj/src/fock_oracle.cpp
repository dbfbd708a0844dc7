#include "kerrsq/fock_oracle.hpp"

#include <cmath>
#include <complex>

#include "kerrsq/errors.hpp"

namespace kerrsq {

namespace {

using Complex = std::complex<double>;

// Product basis over a list of modes with individual level counts. States are
// mixed-radix integers; digit m is the occupation of mode m.
struct ProductBasis {
  std::vector<int> levels;
  std::vector<long> strides;
  long dim = 1;

  explicit ProductBasis(std::vector<int> lv) : levels(std::move(lv)) {
    strides.resize(levels.size());
    for (std::size_t m = 0; m < levels.size(); ++m) {
      strides[m] = dim;
      dim *= levels[m];
    }
  }

  int occ(long s, std::size_t m) const {
    return static_cast<int>((s / strides[m]) % levels[m]);
  }
  long raise(long s, std::size_t m) const {
    return occ(s, m) + 1 >= levels[m] ? -1 : s + strides[m];
  }
  long lower(long s, std::size_t m) const {
    return occ(s, m) == 0 ? -1 : s - strides[m];
  }
};

// Coefficients of |alpha> in the number basis, c_{n+1} = c_n alpha / sqrt(n+1).
std::vector<Complex> coherent_coeffs(Complex alpha, int levels) {
  std::vector<Complex> c(levels);
  c[0] = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n < levels; ++n) c[n] = c[n - 1] * alpha / std::sqrt(double(n));
  return c;
}

std::vector<Complex> coherent_state(const ProductBasis& basis,
                                    const std::vector<Complex>& alphas) {
  std::vector<std::vector<Complex>> per_mode;
  per_mode.reserve(alphas.size());
  for (std::size_t m = 0; m < alphas.size(); ++m)
    per_mode.push_back(coherent_coeffs(alphas[m], basis.levels[m]));
  std::vector<Complex> psi(basis.dim);
  for (long s = 0; s < basis.dim; ++s) {
    Complex amp = 1.0;
    for (std::size_t m = 0; m < alphas.size(); ++m) amp *= per_mode[m][basis.occ(s, m)];
    psi[s] = amp;
  }
  return psi;
}

ExpExpOValue expect_exp_O_with_levels(const ModeLattice& lattice, double gamma,
                                      const ResponseKernel& kernel, int levels) {
  std::vector<double> c(lattice.n_bins);
  for (int k = 0; k < lattice.n_bins; ++k)
    c[k] = gamma * kernel.h_tilde(lattice.theta(k));

  ProductBasis basis(std::vector<int>(lattice.n_bins, levels));
  const std::vector<Complex> psi = coherent_state(basis, lattice.alpha);
  Complex matrix = 0.0;
  double norm = 0.0;
  for (long s = 0; s < basis.dim; ++s) {
    double phase = 0.0;
    for (int k = 0; k < lattice.n_bins; ++k) phase += c[k] * basis.occ(s, k);
    matrix += std::norm(psi[s]) * std::polar(1.0, phase);
    norm += std::norm(psi[s]);
  }
  matrix /= norm;  // expectation in the normalized truncated state

  Complex exponent = 0.0;
  for (int k = 0; k < lattice.n_bins; ++k)
    exponent += (std::polar(1.0, c[k]) - 1.0) * std::norm(lattice.alpha[k]);
  const Complex closed = std::exp(exponent);

  return {matrix, closed, std::abs(matrix - closed)};
}

}  // namespace

void ModeLattice::validate() const {
  if (n_bins < 1 || n_bins > 4)
    throw ConfigError("ModeLattice: n_bins must be in 1..4");
  if (n_max < 1 || n_max > 20)
    throw ConfigError("ModeLattice: n_max must be in 1..20");
  if (!(std::isfinite(dt) && dt > 0.0))
    throw ConfigError("ModeLattice: dt must be finite and positive");
  if (static_cast<int>(alpha.size()) != n_bins)
    throw ConfigError("ModeLattice: alpha must have one amplitude per bin");
  for (const auto& a : alpha) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw ConfigError("ModeLattice: non-finite amplitude");
    if (std::norm(a) > 0.25 * n_max)
      throw ConfigError("ModeLattice: |alpha|^2 must stay below n_max/4");
  }
  if (dimension() > 200000)
    throw ConfigError("ModeLattice: state dimension exceeds 2e5");
}

long ModeLattice::dimension() const {
  long d = 1;
  for (int k = 0; k < n_bins; ++k) d *= n_max + 1;
  return d;
}

ExpExpOValue expect_exp_O(const ModeLattice& lattice, double gamma,
                          const ResponseKernel& kernel) {
  lattice.validate();
  return expect_exp_O_with_levels(lattice, gamma, kernel, lattice.n_max + 1);
}

VerificationReport verify_truncated_mean(const ModeLattice& lattice, double gamma,
                                         const ResponseKernel& kernel) {
  lattice.validate();
  VerificationReport report;

  const ExpExpOValue full = expect_exp_O(lattice, gamma, kernel);
  report.add_leq("matrix_vs_closed_form", full.difference, 1e-10);

  if (lattice.n_max >= 3) {
    const ExpExpOValue smaller =
        expect_exp_O_with_levels(lattice, gamma, kernel, lattice.n_max - 1);
    report.add_leq("truncation_monotone", full.difference, smaller.difference);
  }

  auto truncated = [&](double g) {
    double phi = 0.0, mu = 0.0;
    for (int k = 0; k < lattice.n_bins; ++k) {
      const double ht = kernel.h_tilde(lattice.theta(k));
      const double n = std::norm(lattice.alpha[k]);
      phi += g * ht * n;
      mu += 0.5 * g * g * ht * ht * n;
    }
    return std::exp(Complex(-mu, phi));
  };
  auto closed = [&](double g) {
    return expect_exp_O_with_levels(lattice, g, kernel, lattice.n_max + 1).closed_form;
  };

  // The truncated mean drops the gamma^3 term of the exponent, so halving
  // gamma must shrink the defect eightfold.
  const double err1 = std::abs(closed(gamma) - truncated(gamma));
  const double err2 = std::abs(closed(0.5 * gamma) - truncated(0.5 * gamma));
  if (err2 > 0.0) {
    report.add_close("gamma_cubed_order_ratio", err1 / err2, 8.0, 1.5);
  } else {
    report.add_leq("gamma_cubed_order_degenerate", err1, 1e-15);
  }
  return report;
}

VerificationReport verify_commutator_and_statistics(const ModeLattice& probe,
                                                    const ModeLattice& control,
                                                    const InteractionParams& params,
                                                    const ResponseKernel& kernel) {
  probe.validate();
  control.validate();
  params.validate();
  if (probe.dimension() * control.dimension() > 200000)
    throw ConfigError("verify_commutator_and_statistics: joint dimension exceeds 2e5");

  const std::size_t nb1 = static_cast<std::size_t>(probe.n_bins);
  const std::size_t nb2 = static_cast<std::size_t>(control.n_bins);
  const std::size_t modes = nb1 + nb2;

  std::vector<int> levels(modes);
  std::vector<double> theta(modes);
  std::vector<double> bin_dt(modes);
  for (std::size_t m = 0; m < nb1; ++m) {
    levels[m] = probe.n_max + 1;
    theta[m] = probe.theta(static_cast<int>(m));
    bin_dt[m] = probe.dt;
  }
  for (std::size_t m = 0; m < nb2; ++m) {
    levels[nb1 + m] = control.n_max + 1;
    theta[nb1 + m] = control.theta(static_cast<int>(m));
    bin_dt[nb1 + m] = control.dt;
  }
  ProductBasis basis(levels);

  // Diagonal evolution phase per basis state: normally ordered SPM for each
  // pulse plus the XPM cross term,
  //   Phi = (gamma1/2) [sum_ab h~ n_a n_b - h~(0) sum_a n_a]  (probe)
  //       + (gamma2/2) [...]                                  (control)
  //       + gamma_x sum_ab h~ n1_a n2_b.
  std::vector<Complex> u(basis.dim);
  for (long s = 0; s < basis.dim; ++s) {
    double q1 = 0.0, q2 = 0.0, x = 0.0;
    for (std::size_t a = 0; a < nb1; ++a) {
      const double na = basis.occ(s, a);
      for (std::size_t b = 0; b < nb1; ++b)
        q1 += kernel.h_tilde(theta[a] - theta[b]) * na * basis.occ(s, b);
      q1 -= kernel.h_tilde(0.0) * na;
      for (std::size_t b = 0; b < nb2; ++b)
        x += kernel.h_tilde(theta[a] - theta[nb1 + b]) * na * basis.occ(s, nb1 + b);
    }
    for (std::size_t a = 0; a < nb2; ++a) {
      const double na = basis.occ(s, nb1 + a);
      for (std::size_t b = 0; b < nb2; ++b)
        q2 += kernel.h_tilde(theta[nb1 + a] - theta[nb1 + b]) * na *
              basis.occ(s, nb1 + b);
      q2 -= kernel.h_tilde(0.0) * na;
    }
    u[s] = std::polar(1.0, 0.5 * params.gamma1 * q1 + 0.5 * params.gamma2 * q2 +
                               params.gamma_x * x);
  }

  // Truncation-safe block: headroom in every mode, so both commutator paths
  // exist and the truncated algebra matches the untruncated one.
  auto interior = [&](long s) {
    for (std::size_t m = 0; m < modes; ++m)
      if (basis.occ(s, m) + 1 >= basis.levels[m]) return false;
    return true;
  };

  // Entry of U+ a_{m1} U U+ a_{m2}+ U at row s (single path per row).
  auto product_entry = [&](long s, std::size_t m1, std::size_t m2) -> Complex {
    const long q = basis.raise(s, m1);
    if (q < 0) return 0.0;
    const long r = basis.lower(q, m2);
    if (r < 0) return 0.0;
    const Complex first = std::conj(u[s]) * std::sqrt(double(basis.occ(s, m1) + 1)) * u[q];
    const Complex second = std::conj(u[q]) * std::sqrt(double(basis.occ(q, m2))) * u[r];
    return first * second;
  };
  auto product_entry_rev = [&](long s, std::size_t m1, std::size_t m2) -> Complex {
    const long q = basis.lower(s, m2);
    if (q < 0) return 0.0;
    const long r = basis.raise(q, m1);
    if (r < 0) return 0.0;
    const Complex first = std::conj(u[s]) * std::sqrt(double(basis.occ(s, m2))) * u[q];
    const Complex second = std::conj(u[q]) * std::sqrt(double(basis.occ(q, m1) + 1)) * u[r];
    return first * second;
  };

  double same_pulse_resid = 0.0;
  double cross_pulse_resid = 0.0;
  for (std::size_t m1 = 0; m1 < modes; ++m1) {
    for (std::size_t m2 = 0; m2 < modes; ++m2) {
      const bool same_pulse = (m1 < nb1) == (m2 < nb1);
      const double expected = (m1 == m2) ? 1.0 : 0.0;
      const double scale = 1.0 / std::sqrt(bin_dt[m1] * bin_dt[m2]);
      double worst = 0.0;
      for (long s = 0; s < basis.dim; ++s) {
        if (!interior(s)) continue;
        const Complex comm = product_entry(s, m1, m2) - product_entry_rev(s, m1, m2);
        worst = std::max(worst, std::abs(comm - expected) * scale);
      }
      (same_pulse ? same_pulse_resid : cross_pulse_resid) =
          std::max(same_pulse ? same_pulse_resid : cross_pulse_resid, worst);
    }
  }

  double number_resid = 0.0;
  for (std::size_t m = 0; m < modes; ++m)
    for (long s = 0; s < basis.dim; ++s) {
      const double n = basis.occ(s, m);
      number_resid = std::max(number_resid, std::abs(n * (std::norm(u[s]) - 1.0)));
    }

  // a_k exp(O(theta_l)) = exp(O(theta_l) + i gamma1 h~(theta_l - theta_k)) a_k
  // checked entrywise with O built from the probe occupations.
  double permut_resid = 0.0;
  for (std::size_t l = 0; l < nb1; ++l) {
    std::vector<Complex> d(basis.dim);
    for (long s = 0; s < basis.dim; ++s) {
      double phase = 0.0;
      for (std::size_t m = 0; m < nb1; ++m)
        phase += params.gamma1 * kernel.h_tilde(theta[l] - theta[m]) * basis.occ(s, m);
      d[s] = std::polar(1.0, phase);
    }
    for (std::size_t k = 0; k < nb1; ++k) {
      const Complex shift =
          std::polar(1.0, params.gamma1 * kernel.h_tilde(theta[l] - theta[k]));
      for (long s = 0; s < basis.dim; ++s) {
        const long q = basis.raise(s, k);
        if (q < 0) continue;
        const double amp = std::sqrt(double(basis.occ(s, k) + 1));
        permut_resid = std::max(permut_resid, std::abs(amp * d[q] - amp * d[s] * shift));
      }
    }
  }

  VerificationReport report;
  report.add_leq("commutator_same_pulse", same_pulse_resid, 1e-10);
  report.add_leq("commutator_cross_pulse", cross_pulse_resid, 1e-10);
  report.add_leq("photon_number_invariance", number_resid, 1e-12);
  report.add_leq("permutation_identity", permut_resid, 1e-10);
  return report;
}

}  // namespace kerrsq
