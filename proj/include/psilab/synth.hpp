#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "psilab/grid.hpp"

namespace psi {

// Expected atom count per pixel: isotropic Gaussian of width sigma_f
// integrated over each pixel and normalized so the counts sum to N.
// Emits a warning when sigma_f < pitch/10 (cloud under-resolved).
std::vector<double> cloud_profile(long long atom_number, double sigma_f,
                                  const pixel_grid& grid,
                                  std::string* warning = nullptr);

// y-integrated version: the 1D expected profile f(x_l).
std::vector<double> cloud_profile_1d(long long atom_number, double sigma_f,
                                     const pixel_grid& grid,
                                     std::string* warning = nullptr);

struct expected_field {
  std::vector<double> mean;      // <p_l> = (1 + c cos(k x + phi))/2 * f
  std::vector<double> variance;  // (1 - c^2 cos^2)/4 * f
};

// Per-pixel detected-state mean and variance for fringes along +x.
expected_field expected_counts(const std::vector<double>& f,
                               const pixel_grid& grid, double k_omega,
                               double phi_a, double contrast);

// Binomial shot-noise sample of the fringe pattern. Trial counts come from
// f with stochastic rounding (unbiased in the total); each pixel draws from
// its own counter-based stream keyed by (seed, pixel index), so the result
// is independent of evaluation order.
fringe_image sample_image(const std::vector<double>& f, const pixel_grid& grid,
                          double k_omega, double phi_a, double contrast,
                          long long atom_number, uint64_t seed);

}  // namespace psi
