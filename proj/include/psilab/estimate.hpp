#pragma once

#include <string>
#include <vector>

#include "psilab/grid.hpp"
#include "psilab/sequence.hpp"

namespace psi {

enum class fit_method { fourier, wls };

// Extracted fringe parameters. k_omega_hat is reported non-negative with
// phi_a_hat read off the +k side peak; phi_a_hat is wrapped to (-pi, pi].
struct fringe_estimate {
  double k_omega_hat = 0;   // rad/m
  double phi_a_hat = 0;     // rad
  double contrast_hat = 0;
  fit_method method = fit_method::fourier;
  bool converged = false;
  int iterations = 0;
};

// Locates the side peak of the discrete Fourier transform of the profile,
// refines it with quadratic interpolation of the log magnitude over three
// bins, and reads the fringe phase from the transform at the refined
// frequency. Used as initializer and diagnostic; the precision path is the
// weighted least squares fit.
//
// Throws fringes_unresolved when no side peak clears the noise floor
// (below 4x the median off-peak magnitude, or below 1e-6 of the zero peak).
fringe_estimate fourier_estimate(const std::vector<double>& profile,
                                 const pixel_grid& grid);
fringe_estimate fourier_estimate(const std::vector<long long>& profile,
                                 const pixel_grid& grid);

// Minimizes sum_l (p_l - <p_l>)^2 / f(x_l) over (k_omega, phi_a, c) by
// damped Gauss-Newton from `init`. Weights use the model profile f, and
// pixels with f below 1e-3 * max(f) are excluded. converged flags whether
// the relative step fell below 1e-8 and the normal equations are satisfied
// to 1e-6 in scaled units within 200 iterations.
//
// Throws unidentifiable when the (k, phi) normal matrix is degenerate.
fringe_estimate wls_fit(const std::vector<double>& profile,
                        const std::vector<double>& f, const pixel_grid& grid,
                        const fringe_estimate& init);
fringe_estimate wls_fit(const std::vector<long long>& profile,
                        const std::vector<double>& f, const pixel_grid& grid,
                        const fringe_estimate& init);

// Resolves the 2*pi acceleration ambiguity against a coarse accelerometer
// reading: returns (phi_a_hat + 2*pi*m) / (k_eff * T * (T + 2 sum T_j)) for
// the integer m closest to a_coarse. Fails when the coarse uncertainty maps
// to more than pi/3 of fringe phase.
double unwrap_acceleration(double phi_a_hat, const pulse_sequence& seq,
                           double k_eff, double a_coarse,
                           double a_coarse_sigma);

double wrap_phase(double phi);  // to (-pi, pi]

}  // namespace psi
