#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace psi {

// Camera pixel grid, centered on the cloud center. Pixel (ix, iy) has
// center coordinates (x(ix), y(iy)).
struct pixel_grid {
  int nx = 0;
  int ny = 0;
  double pitch = 0;                     // m
  std::array<double, 2> origin = {0, 0};  // m

  double x(int ix) const { return origin[0] + (ix - (nx - 1) / 2.0) * pitch; }
  double y(int iy) const { return origin[1] + (iy - (ny - 1) / 2.0) * pitch; }
  std::vector<double> x_coords() const;

  void validate() const;
};

// Generation parameters recorded alongside a synthetic image.
struct fringe_truth {
  double k_omega = 0;      // rad/m
  double phi_a = 0;        // rad
  double contrast = 0;
  long long atom_number = 0;
  uint64_t seed = 0;
};

// Pixelized detected-state atom counts plus the y-integrated 1D profile.
struct fringe_image {
  pixel_grid grid;
  std::vector<long long> counts;      // ny * nx, row-major
  std::vector<long long> profile_1d;  // nx column sums
  std::optional<fringe_truth> truth;

  long long at(int ix, int iy) const { return counts[static_cast<size_t>(iy) * grid.nx + ix]; }
  long long& at(int ix, int iy) { return counts[static_cast<size_t>(iy) * grid.nx + ix]; }
  long long total() const;

  std::string to_csv() const;             // one row per pixel row
  std::string sidecar_json() const;       // grid metadata + truth
};

// Column sums; preserves the total count.
std::vector<long long> integrate_y(const fringe_image& image);

// Parses the CSV plus (optionally) a sidecar for grid geometry/truth.
fringe_image image_from_csv(const std::string& csv_text,
                            const std::optional<std::string>& sidecar_text);

}  // namespace psi
