#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "kerrsq/errors.hpp"
#include "kerrsq/figures.hpp"
#include "kerrsq/quadrature.hpp"
#include "kerrsq/spectra.hpp"

#include "testutil.hpp"

using namespace kerrsq;

namespace {
const ResponseKernel kExp = ResponseKernel::exponential();
const double kPi = 3.14159265358979323846;

NonlinearPhases figure_phases(double phi01, double ratio, double linear = 0.0) {
  auto [probe, control] = figure_pulses(phi01, ratio);
  NonlinearPhases ph = phases_quasistatic(figure_interaction(), probe, control, 0.0);
  return with_linear_phase(ph, linear);
}
}  // namespace

TEST_CASE("shot-noise floor is exact at zero nonlinearity") {
  const NonlinearPhases ph = phases_quasistatic(
      {}, PulseSpec::gaussian(100.0, 50.0, LinearPhase::constant(0.9)),
      PulseSpec::gaussian(100.0, 120.0), 0.0);
  for (double w = 0.0; w <= 10.0; w += 0.13) {
    const SpectrumPair s = spectrum_closed(ph, w, kExp);
    CHECK(s.sx == 0.25);
    CHECK(s.sy == 0.25);
  }
}

TEST_CASE("SPM-only reduction when the control is off") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double gamma1 = 1e-4 + 0.05 * u01(rng);
    const double phi01 = 4.0 * u01(rng);
    const double n1 = phi01 / (2.0 * gamma1);
    const double varphi = -kPi + 2.0 * kPi * u01(rng);
    const double Omega = 3.0 * u01(rng);
    const InteractionParams ip{gamma1, 0.0, 0.01 * u01(rng)};
    const PulseSpec probe = PulseSpec::gaussian(100.0, n1, LinearPhase::constant(varphi));
    const NonlinearPhases ph = phases_quasistatic(ip, probe, PulseSpec::off(), 0.0);
    const SpectrumPair s = spectrum_closed(ph, Omega, kExp);

    // independent SPM-only arithmetic (no cross term)
    const double L = 1.0 / (1.0 + Omega * Omega);
    const double phi1 = 2.0 * gamma1 * n1;
    const double Phi = phi1 + varphi;
    const double ref_x = 0.25 * (1.0 - 2.0 * phi1 * L * std::sin(2.0 * Phi) +
                                 4.0 * phi1 * phi1 * L * L * std::sin(Phi) * std::sin(Phi));
    const double ref_y = 0.25 * (1.0 + 2.0 * phi1 * L * std::sin(2.0 * Phi) +
                                 4.0 * phi1 * phi1 * L * L * std::cos(Phi) * std::cos(Phi));
    CHECK(std::fabs(s.sx - ref_x) <= 1e-14);
    CHECK(std::fabs(s.sy - ref_y) <= 1e-14);
  }
}

TEST_CASE("spectra relax to the floor at large Omega") {
  const NonlinearPhases ph = figure_phases(2.0, 8.0, 0.4);
  const SpectrumPair s = spectrum_closed(ph, 1e6, kExp);
  CHECK(std::fabs(s.sx - 0.25) <= 1e-9);
  CHECK(std::fabs(s.sy - 0.25) <= 1e-9);
}

TEST_CASE("optimal phase value and limits") {
  // phi1 = 2, phi* = 4, Omega0 = 0, control off
  const NonlinearPhases ph = make_phases(0.0, 2.0, 1.0, 0.0, 0.005, 0.0, 0.0);
  REQUIRE(ph.phi_star == 4.0);
  const double phi = optimal_phase(ph, 0.0, kExp);
  CHECK(phi == doctest::Approx(0.5 * std::atan(0.5) - 2.0).epsilon(1e-15));

  // phi1 -> 0 with phi* > 0: arctan -> 0
  const NonlinearPhases small = make_phases(0.0, 1e-300, 1.0, 2.0, 0.0, 0.0, 0.0);
  CHECK(optimal_phase(small, 0.0, kExp) ==
        doctest::Approx(-small.phi1 - small.phi2x).epsilon(1e-12));

  // L0 -> 0: arctan -> pi/2, so the leading term is pi/4
  const NonlinearPhases ph2 = make_phases(0.0, 2.0, 0.0, 0.0, 0.005, 0.0, 0.0);
  const double far = optimal_phase(ph2, 1e9, kExp);
  CHECK(far == doctest::Approx(kPi / 4.0 - 2.0).epsilon(1e-9));

  const NonlinearPhases zero = make_phases(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
  CHECK_THROWS_AS(optimal_phase(zero, 0.0, kExp), std::invalid_argument);
}

TEST_CASE("optimal-phase spectra anchor values") {
  // phi1 = 2, phi* = 4: S0_X = (9 - 4 sqrt 5)/4
  const SpectrumPair a = spectrum_optimal(figure_phases(2.0, 0.0), 0.0, kExp);
  CHECK(std::fabs(a.sx - (9.0 - 4.0 * std::sqrt(5.0)) / 4.0) <= 1e-12);
  // ratio 8: phi* = 12: S0_X = (25 - 2 sqrt 148)/4
  const SpectrumPair b = spectrum_optimal(figure_phases(2.0, 8.0), 0.0, kExp);
  CHECK(std::fabs(b.sx - (25.0 - 2.0 * std::sqrt(148.0)) / 4.0) <= 1e-12);
  // zero nonlinearity: exact floor
  const NonlinearPhases zero = make_phases(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
  const SpectrumPair c = spectrum_optimal(zero, 0.7, kExp);
  CHECK(c.sx == 0.25);
  CHECK(c.sy == 0.25);
}

TEST_CASE("spectrum_at returns the optimal values at the anchor") {
  const NonlinearPhases ph = figure_phases(2.0, 5.0);
  for (double w0 : {0.0, 0.5, 0.7, 2.0}) {
    const SpectrumPair s0 = spectrum_optimal(ph, w0, kExp);
    const SpectrumPair s = spectrum_at(ph, w0, w0, kExp);
    CHECK(s.sx == s0.sx);
    CHECK(s.sy == s0.sy);
  }
}

TEST_CASE("spectrum_at equals spectrum_closed at the optimal phase") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double phi01 = 0.05 + 3.95 * u01(rng);
    const double ratio = 10.0 * u01(rng);
    const double Omega = 3.0 * u01(rng);
    const double Omega0 = 3.0 * u01(rng);
    NonlinearPhases ph = figure_phases(phi01, ratio);
    const double varphi = optimal_phase(ph, Omega0, kExp);
    ph = with_linear_phase(ph, varphi);
    const SpectrumPair direct = spectrum_closed(ph, Omega, kExp);
    const SpectrumPair two_term = spectrum_at(ph, Omega, Omega0, kExp);
    CHECK(std::fabs(direct.sx - two_term.sx) <= 1e-12);
    CHECK(std::fabs(direct.sy - two_term.sy) <= 1e-12);
  }
}

TEST_CASE("optimal phase beats a coarse scan") {
  for (double ratio : {0.0, 5.0}) {
    for (double w0 : {0.0, 0.7}) {
      const NonlinearPhases ph = figure_phases(2.0, ratio);
      const double s0 = spectrum_optimal(ph, w0, kExp).sx;
      double best = 1e300;
      for (double varphi = -kPi; varphi < kPi; varphi += 1e-3)
        best = std::min(best,
                        spectrum_closed(with_linear_phase(ph, varphi), w0, kExp).sx);
      CHECK(best >= s0 - 1e-8);
      CHECK(best - s0 <= 1e-5);
    }
  }
}

TEST_CASE("Heisenberg product identity at the optimal phase") {
  for (double phi01 = 0.25; phi01 <= 4.0; phi01 += 0.75) {
    for (double ratio = 0.0; ratio <= 10.0; ratio += 2.5) {
      for (double w0 = 0.0; w0 <= 3.0; w0 += 0.5) {
        const NonlinearPhases ph = figure_phases(phi01, ratio);
        const SpectrumPair s0 = spectrum_optimal(ph, w0, kExp);
        const double L0 = lorentzian(w0);
        const double expected =
            (1.0 + 4.0 * L0 * L0 * ph.phi1x * ph.phi2x) / 16.0;
        CHECK(std::fabs(s0.sx * s0.sy - expected) <= 1e-13 * (1.0 + expected));
        CHECK(s0.sx * s0.sy >= 1.0 / 16.0 - 1e-15);
        CHECK(s0.sy >= 0.25);  // anti-squeezed quadrature never dips below the floor
      }
    }
  }
}

TEST_CASE("squeezing at the anchor for Omega0 = 0") {
  for (double phi01 : {0.2, 1.0, 2.0, 3.5}) {
    for (double ratio : {0.0, 3.0, 8.0}) {
      CHECK(spectrum_optimal(figure_phases(phi01, ratio), 0.0, kExp).sx < 0.25);
    }
  }
}

TEST_CASE("dirac kernel removes the spectral filtering") {
  const ResponseKernel flat = ResponseKernel::dirac();
  const NonlinearPhases ph = figure_phases(2.0, 3.0, 0.6);
  const SpectrumPair at_zero = spectrum_closed(ph, 0.0, kExp);
  for (double w : {0.0, 0.5, 2.0, 50.0}) {
    const SpectrumPair s = spectrum_closed(ph, w, flat);
    CHECK(s.sx == at_zero.sx);
    CHECK(s.sy == at_zero.sy);
  }
}

TEST_CASE("numeric Fourier transform of corr_R matches the closed form") {
  // independent Simpson route over the test helper, one preset
  NonlinearPhases ph = figure_phases(2.0, 3.0);
  ph = with_linear_phase(ph, optimal_phase(ph, 0.0, kExp));
  for (double Omega : {0.0, 0.4, 1.1}) {
    const double num = testutil::cosine_transform(
        [&](double tau) { return corr_R(ph, kExp, tau).first.smooth_value; }, Omega,
        40.0, 16000);
    const double closed = spectrum_closed(ph, Omega, kExp).sx;
    CHECK(std::fabs(0.25 + num - closed) <= 1e-6);
  }
}

TEST_CASE("spectra depend only on reduced quantities") {
  // tau_r = 2 with tau_p and t scaled alongside gives identical spectra
  const ResponseKernel slow = ResponseKernel::exponential(2.0);
  const InteractionParams ip = figure_interaction();
  const NonlinearPhases a = phases_quasistatic(ip, PulseSpec::gaussian(100.0, 100.0),
                                               PulseSpec::gaussian(100.0, 300.0), 0.0);
  const NonlinearPhases b = phases_quasistatic(ip, PulseSpec::gaussian(200.0, 100.0),
                                               PulseSpec::gaussian(200.0, 300.0), 0.0);
  for (double w : {0.0, 0.5, 1.5}) {
    const SpectrumPair sa = spectrum_closed(a, w, kExp);
    const SpectrumPair sb = spectrum_closed(b, w, slow);
    CHECK(sa.sx == doctest::Approx(sb.sx).epsilon(1e-14));
    CHECK(sa.sy == doctest::Approx(sb.sy).epsilon(1e-14));
  }
}

namespace {
SpectrumRequest figure_request() {
  SpectrumRequest rq;
  rq.params = figure_interaction();
  auto [probe, control] = figure_pulses(2.0, 0.0);
  rq.probe = probe;
  rq.control = control;
  rq.Omega_grid = {0.0, 0.5, 1.0};
  rq.Omega0 = 0.0;
  rq.phase_mode = PhaseMode::optimal;
  return rq;
}
}  // namespace

TEST_CASE("compute_spectrum in both phase modes") {
  SpectrumRequest rq = figure_request();
  const SpectrumTable opt = compute_spectrum(rq);
  REQUIRE(opt.rows.size() == 3);
  const NonlinearPhases ph = figure_phases(2.0, 0.0);
  for (std::size_t i = 0; i < 3; ++i) {
    const SpectrumPair ref = spectrum_at(ph, rq.Omega_grid[i], rq.Omega0, kExp);
    CHECK(opt.rows[i].sx == ref.sx);
    CHECK(opt.rows[i].sy == ref.sy);
  }

  rq.phase_mode = PhaseMode::explicit_phase;
  rq.probe = PulseSpec::gaussian(100.0, 100.0, LinearPhase::constant(0.3));
  const SpectrumTable expl = compute_spectrum(rq);
  const NonlinearPhases ph2 =
      phases_quasistatic(rq.params, rq.probe, rq.control, 0.0);
  for (std::size_t i = 0; i < 3; ++i) {
    const SpectrumPair ref = spectrum_closed(ph2, rq.Omega_grid[i], kExp);
    CHECK(expl.rows[i].sx == ref.sx);
    CHECK(expl.rows[i].sy == ref.sy);
  }
}

TEST_CASE("sweep basics") {
  const SpectrumRequest rq = figure_request();

  const SpectrumTable empty = sweep(rq, SweepAxis::intensity_ratio, {});
  CHECK(empty.rows.empty());

  // single-point sweep reproduces spectrum_at
  const SpectrumTable one = sweep(rq, SweepAxis::intensity_ratio, {8.0});
  REQUIRE(one.rows.size() == 3);
  const NonlinearPhases ph = figure_phases(2.0, 8.0);
  for (std::size_t i = 0; i < 3; ++i) {
    const SpectrumPair ref = spectrum_at(ph, rq.Omega_grid[i], 0.0, kExp);
    CHECK(one.rows[i].sx == ref.sx);
    CHECK(one.rows[i].sy == ref.sy);
  }

  CHECK_THROWS_AS(parse_sweep_axis("frequency"), ConfigError);
  CHECK(parse_sweep_axis("t") == SweepAxis::time);
}

TEST_CASE("sweep is identical for any worker count") {
  const SpectrumRequest rq = figure_request();
  const std::vector<double> values = {0.0, 2.0, 3.0, 5.0, 8.0};

  setenv("KERRSQ_THREADS", "1", 1);
  const SpectrumTable serial = sweep(rq, SweepAxis::intensity_ratio, values);
  setenv("KERRSQ_THREADS", "4", 1);
  const SpectrumTable threaded = sweep(rq, SweepAxis::intensity_ratio, values);
  unsetenv("KERRSQ_THREADS");

  REQUIRE(serial.rows.size() == threaded.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    CHECK(serial.rows[i].sx == threaded.rows[i].sx);
    CHECK(serial.rows[i].sy == threaded.rows[i].sy);
    CHECK(serial.rows[i].axis_value == threaded.rows[i].axis_value);
  }
}

TEST_CASE("sweep over phi01 reaches its plateau within phi01 <= 1 at high ratio") {
  SpectrumRequest rq = figure_request();
  rq.Omega_grid = {0.0};
  rq.control = PulseSpec::gaussian(100.0, 800.0);  // ratio 8
  std::vector<double> values;
  for (double v = 0.01; v <= 3.0 + 1e-12; v += 0.01) values.push_back(v);
  const SpectrumTable table = sweep(rq, SweepAxis::phi01, values);
  REQUIRE(table.rows.size() == values.size());
  double min_sx = 1e300;
  for (const auto& r : table.rows) min_sx = std::min(min_sx, r.sx);
  double onset = 1e300;
  for (const auto& r : table.rows) {
    if (r.sx <= 1.05 * min_sx) {
      onset = r.axis_value;
      break;
    }
  }
  CHECK(onset <= 1.0);
}

TEST_CASE("request validation and warnings") {
  SpectrumRequest rq = figure_request();
  rq.Omega_grid.clear();
  CHECK_THROWS_AS(rq.validate(), ConfigError);
  rq.Omega_grid = {1.0, 0.5};
  CHECK_THROWS_AS(rq.validate(), ConfigError);

  SpectrumRequest ok = figure_request();
  CHECK(regime_warnings(ok).empty());
  ok.params.gamma1 = 0.2;
  ok.probe = PulseSpec::gaussian(10.0, 1.0);
  const auto ws = regime_warnings(ok);
  REQUIRE(ws.size() == 2);
  CHECK(ws[0].code == "gamma_large");
  CHECK(ws[1].code == "quasistatic");
}

TEST_CASE("figure presets") {
  CHECK_THROWS_AS(run_figure(0), ConfigError);
  CHECK_THROWS_AS(run_figure(8), ConfigError);

  const FigureTable fig1 = run_figure(1);
  REQUIRE(fig1.rows.size() == 5 * 301);
  // curve a at Omega = 0 is the ratio-0 anchor
  CHECK(fig1.rows[0].curve == "a");
  CHECK(fig1.rows[0].x == 0.0);
  CHECK(std::fabs(fig1.rows[0].sx - (9.0 - 4.0 * std::sqrt(5.0)) / 4.0) <= 1e-12);

  // ordering at Omega = 0: larger control intensity destroys the squeezing
  double prev = -1.0;
  for (std::size_t c = 0; c < 5; ++c) {
    const double sx = fig1.rows[c * 301].sx;
    CHECK(sx > prev);
    prev = sx;
  }

  const FigureTable fig4 = run_figure(4);
  CHECK(fig4.preset.x_name == "phi01");
  CHECK(fig4.rows.size() == 5 * 300);
}
