#include "psilab/synth.hpp"

#include <algorithm>
#include <cmath>

#include "psilab/errors.hpp"
#include "psilab/rng.hpp"

namespace psi {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

// Integral of a unit Gaussian of width sigma over [lo, hi].
inline double gauss_cell(double lo, double hi, double sigma) {
  return 0.5 * (std::erf(hi * kInvSqrt2 / sigma) - std::erf(lo * kInvSqrt2 / sigma));
}

void check_resolution(double sigma_f, double pitch, std::string* warning) {
  if (warning && sigma_f < pitch / 10.0) {
    *warning = "cloud_profile: sigma_f below pitch/10; the cloud is under-resolved";
  }
}

}  // namespace

std::vector<double> cloud_profile(long long atom_number, double sigma_f,
                                  const pixel_grid& grid, std::string* warning) {
  grid.validate();
  if (atom_number < 1) throw config_error("cloud_profile: atom_number must be >= 1");
  if (!(sigma_f > 0)) throw config_error("cloud_profile: sigma_f must be positive");
  check_resolution(sigma_f, grid.pitch, warning);

  std::vector<double> wx(grid.nx), wy(grid.ny);
  for (int i = 0; i < grid.nx; ++i) {
    wx[i] = gauss_cell(grid.x(i) - grid.pitch / 2, grid.x(i) + grid.pitch / 2, sigma_f);
  }
  for (int i = 0; i < grid.ny; ++i) {
    wy[i] = gauss_cell(grid.y(i) - grid.pitch / 2, grid.y(i) + grid.pitch / 2, sigma_f);
  }
  std::vector<double> f(static_cast<size_t>(grid.nx) * grid.ny);
  double sum = 0;
  for (int iy = 0; iy < grid.ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      const double v = wx[ix] * wy[iy];
      f[static_cast<size_t>(iy) * grid.nx + ix] = v;
      sum += v;
    }
  }
  if (!(sum > 0)) throw config_error("cloud_profile: grid does not overlap the cloud");
  const double scale = static_cast<double>(atom_number) / sum;
  for (double& v : f) v *= scale;
  return f;
}

std::vector<double> cloud_profile_1d(long long atom_number, double sigma_f,
                                     const pixel_grid& grid, std::string* warning) {
  pixel_grid g1 = grid;
  g1.ny = 1;
  return cloud_profile(atom_number, sigma_f, g1, warning);
}

expected_field expected_counts(const std::vector<double>& f,
                               const pixel_grid& grid, double k_omega,
                               double phi_a, double contrast) {
  if (contrast < 0 || contrast > 1) {
    throw config_error("expected_counts: contrast must lie in [0, 1]");
  }
  const int ny = static_cast<int>(f.size()) / grid.nx;
  expected_field out;
  out.mean.resize(f.size());
  out.variance.resize(f.size());
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      const size_t i = static_cast<size_t>(iy) * grid.nx + ix;
      const double c_cos = contrast * std::cos(k_omega * grid.x(ix) + phi_a);
      out.mean[i] = 0.5 * (1.0 + c_cos) * f[i];
      out.variance[i] = 0.25 * (1.0 - c_cos * c_cos) * f[i];
    }
  }
  return out;
}

fringe_image sample_image(const std::vector<double>& f, const pixel_grid& grid,
                          double k_omega, double phi_a, double contrast,
                          long long atom_number, uint64_t seed) {
  if (contrast < 0 || contrast > 1) {
    throw config_error("sample_image: contrast must lie in [0, 1]");
  }
  const int ny = static_cast<int>(f.size()) / grid.nx;
  fringe_image img;
  img.grid = grid;
  img.grid.ny = ny;
  img.counts.assign(f.size(), 0);

  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      const size_t i = static_cast<size_t>(iy) * grid.nx + ix;
      philox_stream stream(seed, i, 0x5A11CE);
      const double fl = f[i];
      long long trials = static_cast<long long>(std::floor(fl));
      const double frac = fl - std::floor(fl);
      if (stream.next_bernoulli(frac)) ++trials;
      const double prob = 0.5 * (1.0 + contrast * std::cos(k_omega * grid.x(ix) + phi_a));
      img.counts[i] = stream.next_binomial(trials, std::clamp(prob, 0.0, 1.0));
    }
  }

  // Stochastic rounding keeps the trial total unbiased but not strictly
  // capped; a detected total above N would be unphysical, so trim the
  // largest pixels deterministically in that (vanishingly rare) case.
  long long excess = img.total() - atom_number;
  while (excess > 0) {
    size_t arg = 0;
    for (size_t i = 1; i < img.counts.size(); ++i) {
      if (img.counts[i] > img.counts[arg]) arg = i;
    }
    --img.counts[arg];
    --excess;
  }

  img.profile_1d = integrate_y(img);
  img.truth = fringe_truth{k_omega, phi_a, contrast, atom_number, seed};
  return img;
}

}  // namespace psi
