#include "psilab/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "psilab/constants.hpp"
#include "psilab/errors.hpp"

namespace psi {

namespace {

using cplx = std::complex<double>;

cplx dtft(const std::vector<double>& p, const std::vector<double>& x, double k) {
  cplx acc = 0;
  for (size_t l = 0; l < p.size(); ++l) {
    acc += p[l] * std::exp(cplx(0.0, -k * x[l]));
  }
  return acc;
}

std::vector<double> to_double(const std::vector<long long>& v) {
  return std::vector<double>(v.begin(), v.end());
}

}  // namespace

double wrap_phase(double phi) {
  phi = std::remainder(phi, constants::two_pi);
  if (phi <= -constants::pi) phi += constants::two_pi;
  return phi;
}

fringe_estimate fourier_estimate(const std::vector<double>& profile,
                                 const pixel_grid& grid) {
  const int n = static_cast<int>(profile.size());
  if (n < 8) throw estimation_error("fourier_estimate: profile needs >= 8 pixels");
  const std::vector<double> x = grid.x_coords();
  const double dk = constants::two_pi / (n * grid.pitch);
  const int n_bins = n / 2;

  std::vector<double> mag(n_bins + 1);
  std::vector<cplx> spec(n_bins + 1);
  for (int j = 0; j <= n_bins; ++j) {
    spec[j] = dtft(profile, x, j * dk);
    mag[j] = std::abs(spec[j]);
  }

  // Walk down the central peak to its first local minimum; everything below
  // that bin belongs to the zero peak and is excluded from the side-peak
  // search.
  int j_min = 1;
  while (j_min + 1 <= n_bins && mag[j_min + 1] < mag[j_min]) ++j_min;
  if (j_min >= n_bins) {
    throw fringes_unresolved("fourier_estimate: spectrum is monotone; no side peak");
  }

  int j_star = j_min;
  for (int j = j_min; j <= n_bins; ++j) {
    if (mag[j] > mag[j_star]) j_star = j;
  }

  // Noise floor: median off-peak magnitude (side peak neighborhood removed).
  std::vector<double> off;
  for (int j = j_min; j <= n_bins; ++j) {
    if (std::abs(j - j_star) > 2) off.push_back(mag[j]);
  }
  if (!off.empty()) {
    std::nth_element(off.begin(), off.begin() + off.size() / 2, off.end());
    const double median = off[off.size() / 2];
    if (mag[j_star] < 4.0 * median) {
      throw fringes_unresolved("fourier_estimate: side peak below 4x the median noise floor");
    }
  }
  // A peak this far below the zero peak cannot be told apart from the
  // windowing ringing of the truncated cloud profile.
  if (mag[j_star] < 1e-4 * std::max(mag[0], 1e-300)) {
    throw fringes_unresolved("fourier_estimate: side peak below 1e-4 of the zero peak");
  }

  // Quadratic interpolation of the log magnitude; exact for a Gaussian peak.
  double k_hat = j_star * dk;
  if (j_star > j_min && j_star < n_bins && mag[j_star - 1] > 0 && mag[j_star + 1] > 0) {
    const double lm = std::log(mag[j_star - 1]);
    const double l0 = std::log(mag[j_star]);
    const double lp = std::log(mag[j_star + 1]);
    const double denom = lm - 2.0 * l0 + lp;
    if (denom < 0) {
      double delta = 0.5 * (lm - lp) / denom;
      delta = std::clamp(delta, -0.5, 0.5);
      k_hat = (j_star + delta) * dk;
    }
  }

  const cplx side = dtft(profile, x, k_hat);
  double total = 0;
  for (double v : profile) total += v;

  fringe_estimate est;
  est.method = fit_method::fourier;
  est.k_omega_hat = k_hat;
  est.phi_a_hat = wrap_phase(std::arg(side));
  est.contrast_hat = total > 0 ? 2.0 * std::abs(side) / total : 0.0;
  est.converged = true;
  est.iterations = 0;
  return est;
}

fringe_estimate fourier_estimate(const std::vector<long long>& profile,
                                 const pixel_grid& grid) {
  return fourier_estimate(to_double(profile), grid);
}

fringe_estimate wls_fit(const std::vector<double>& profile,
                        const std::vector<double>& f, const pixel_grid& grid,
                        const fringe_estimate& init) {
  if (profile.size() != f.size()) {
    throw estimation_error("wls_fit: profile and model profile sizes differ");
  }
  const std::vector<double> x = grid.x_coords();
  if (x.size() != profile.size()) {
    throw estimation_error("wls_fit: profile length does not match the grid");
  }

  // Pixels with negligible expected occupancy carry no usable weight.
  double f_max = 0;
  for (double v : f) f_max = std::max(f_max, v);
  const double f_floor = 1e-3 * f_max;
  std::vector<int> used;
  for (size_t l = 0; l < f.size(); ++l) {
    if (f[l] > f_floor) used.push_back(static_cast<int>(l));
  }
  if (used.size() < 4) throw estimation_error("wls_fit: too few usable pixels");

  double k = init.k_omega_hat;
  double phi = init.phi_a_hat;
  double c = init.contrast_hat > 0 ? init.contrast_hat : 0.5;

  const double x_span = std::abs(x.back() - x.front()) + grid.pitch;
  const double k_scale_floor = 1.0 / x_span;

  auto objective = [&](double kk, double pp, double cc) {
    double s = 0;
    for (int l : used) {
      const double m = 0.5 * (1.0 + cc * std::cos(kk * x[l] + pp)) * f[l];
      const double r = profile[l] - m;
      s += r * r / f[l];
    }
    return s;
  };

  // One pass of the normal-equation sums at the current point.
  struct normal_state {
    double a11, a12, a13, a22, a23, a33;  // J^T W J
    double g1, g2, g3;                    // J^T W r
    double gamma_scale;                   // gamma bound with sin^2 = 1
  };
  auto assemble = [&](double kk, double pp, double cc) {
    normal_state s{};
    for (int l : used) {
      const double th = kk * x[l] + pp;
      const double cth = std::cos(th), sth = std::sin(th);
      const double m = 0.5 * (1.0 + cc * cth) * f[l];
      const double w = 1.0 / f[l];
      const double r = profile[l] - m;
      const double jk = -0.5 * cc * x[l] * sth * f[l];
      const double jp = -0.5 * cc * sth * f[l];
      const double jc = 0.5 * cth * f[l];
      s.a11 += w * jk * jk;
      s.a12 += w * jk * jp;
      s.a13 += w * jk * jc;
      s.a22 += w * jp * jp;
      s.a23 += w * jp * jc;
      s.a33 += w * jc * jc;
      s.g1 += w * jk * r;
      s.g2 += w * jp * r;
      s.g3 += w * jc * r;
      s.gamma_scale += 0.25 * cc * cc * f[l];
    }
    return s;
  };

  // Solves (A + lambda diag(A)) d = g by Cramer's rule; false on a singular
  // system.
  auto solve = [](const normal_state& s, double lambda, double& dk, double& dp,
                  double& dc) {
    const double b11 = s.a11 * (1 + lambda);
    const double b22 = s.a22 * (1 + lambda);
    const double b33 = s.a33 * (1 + lambda);
    const double det = b11 * (b22 * b33 - s.a23 * s.a23) -
                       s.a12 * (s.a12 * b33 - s.a23 * s.a13) +
                       s.a13 * (s.a12 * s.a23 - b22 * s.a13);
    if (det == 0 || !std::isfinite(det)) return false;
    dk = (s.g1 * (b22 * b33 - s.a23 * s.a23) -
          s.a12 * (s.g2 * b33 - s.a23 * s.g3) +
          s.a13 * (s.g2 * s.a23 - b22 * s.g3)) / det;
    dp = (b11 * (s.g2 * b33 - s.g3 * s.a23) -
          s.g1 * (s.a12 * b33 - s.a23 * s.a13) +
          s.a13 * (s.a12 * s.g3 - s.g2 * s.a13)) / det;
    dc = (b11 * (b22 * s.g3 - s.a23 * s.g2) -
          s.a12 * (s.a12 * s.g3 - s.g2 * s.a13) +
          s.g1 * (s.a12 * s.a23 - b22 * s.a13)) / det;
    return std::isfinite(dk) && std::isfinite(dp) && std::isfinite(dc);
  };

  auto step_norm = [&](double dk, double dp, double dc) {
    return std::max({std::abs(dk) / std::max(std::abs(k), k_scale_floor),
                     std::abs(dp), std::abs(dc)});
  };

  // The (k, phi) block equals the alpha/beta/gamma coefficients of the
  // uncertainty propagation; degenerate means the fringe parameters cannot
  // be identified from this geometry. The absolute floor on gamma catches
  // the every-pixel-on-an-extremum case, where the whole block collapses to
  // rounding noise.
  auto check_identifiable = [](const normal_state& s) {
    const double det_kp = s.a11 * s.a22 - s.a12 * s.a12;
    if (!(det_kp > 1e-12 * std::abs(s.a11 * s.a22)) ||
        !(s.a22 > 1e-12 * s.gamma_scale)) {
      throw unidentifiable("wls_fit: degenerate normal matrix (alpha*gamma - beta^2 ~ 0)");
    }
  };

  double sse = objective(k, phi, c);
  double lambda = 1e-8;  // Levenberg damping
  bool small_step = false;
  int iter = 0;
  const int max_iter = 200;

  for (iter = 1; iter <= max_iter; ++iter) {
    const normal_state s = assemble(k, phi, c);
    check_identifiable(s);

    // Pure Gauss-Newton step first: a sub-1e-8 relative step means we are
    // already at the stationary point.
    double nk, np, nc;
    if (solve(s, 0.0, nk, np, nc) && step_norm(nk, np, nc) < 1e-8) {
      small_step = true;
      break;
    }

    bool stepped = false;
    double step = 0;
    for (int attempt = 0; attempt < 16 && !stepped; ++attempt) {
      double dk, dp, dc;
      if (!solve(s, lambda, dk, dp, dc)) {
        lambda = std::max(lambda * 10, 1e-12);
        continue;
      }
      const double trial = objective(k + dk, phi + dp, c + dc);
      if (trial <= sse) {
        k += dk;
        phi += dp;
        c += dc;
        sse = trial;
        lambda = std::max(lambda * 0.25, 1e-12);
        stepped = true;
        step = step_norm(dk, dp, dc);
      } else {
        lambda *= 10;
      }
    }
    if (!stepped) break;  // damping exhausted; accept the current point
    if (step < 1e-8) {
      small_step = true;
      break;
    }
  }

  // Stationarity in scaled units: the undamped Newton correction still
  // pending at the final point must be negligible in relative terms.
  bool stationary = false;
  {
    const normal_state s = assemble(k, phi, c);
    check_identifiable(s);
    double nk, np, nc;
    if (solve(s, 0.0, nk, np, nc)) stationary = step_norm(nk, np, nc) < 1e-6;
  }
  const bool converged = small_step && stationary;

  // Canonical sign conventions: sign flips of (k, c) fold into phi.
  if (c < 0) {
    c = -c;
    phi += constants::pi;
  }
  if (k < 0) {
    k = -k;
    phi = -phi;
  }

  fringe_estimate est;
  est.method = fit_method::wls;
  est.k_omega_hat = k;
  est.phi_a_hat = wrap_phase(phi);
  est.contrast_hat = c;
  est.converged = converged;
  est.iterations = iter;
  return est;
}

fringe_estimate wls_fit(const std::vector<long long>& profile,
                        const std::vector<double>& f, const pixel_grid& grid,
                        const fringe_estimate& init) {
  return wls_fit(to_double(profile), f, grid, init);
}

double unwrap_acceleration(double phi_a_hat, const pulse_sequence& seq,
                           double k_eff, double a_coarse,
                           double a_coarse_sigma) {
  const double scale = k_eff * seq.big_t * (seq.big_t + 2.0 * seq.interval_sum());
  const double ambiguity_margin = constants::pi / 3.0;
  if (a_coarse_sigma * scale >= ambiguity_margin) {
    throw estimation_error(
        "unwrap_acceleration: coarse accelerometer too uncertain; needs sigma < " +
        std::to_string(ambiguity_margin / scale) + " m/s^2");
  }
  const double m = std::round((a_coarse * scale - phi_a_hat) / constants::two_pi);
  return (phi_a_hat + constants::two_pi * m) / scale;
}

}  // namespace psi
