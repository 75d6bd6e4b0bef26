#include "psilab/grid.hpp"

#include <sstream>

#include <json.hpp>

#include "psilab/errors.hpp"

namespace psi {

void pixel_grid::validate() const {
  if (nx < 1 || ny < 1) throw config_error("pixel_grid: nx and ny must be >= 1");
  if (!(pitch > 0)) throw config_error("pixel_grid: pitch must be positive");
}

std::vector<double> pixel_grid::x_coords() const {
  std::vector<double> xs(nx);
  for (int i = 0; i < nx; ++i) xs[i] = x(i);
  return xs;
}

long long fringe_image::total() const {
  long long t = 0;
  for (long long c : counts) t += c;
  return t;
}

std::vector<long long> integrate_y(const fringe_image& image) {
  std::vector<long long> profile(image.grid.nx, 0);
  for (int iy = 0; iy < image.grid.ny; ++iy) {
    for (int ix = 0; ix < image.grid.nx; ++ix) profile[ix] += image.at(ix, iy);
  }
  return profile;
}

std::string fringe_image::to_csv() const {
  std::ostringstream os;
  for (int iy = 0; iy < grid.ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      if (ix) os << ',';
      os << at(ix, iy);
    }
    os << '\n';
  }
  return os.str();
}

std::string fringe_image::sidecar_json() const {
  nlohmann::json j;
  j["grid"] = {{"nx", grid.nx},
               {"ny", grid.ny},
               {"pitch_m", grid.pitch},
               {"origin_m", {grid.origin[0], grid.origin[1]}}};
  if (truth) {
    j["truth"] = {{"k_omega_rad_per_m", truth->k_omega},
                  {"phi_a_rad", truth->phi_a},
                  {"contrast", truth->contrast},
                  {"atom_number", truth->atom_number},
                  {"seed", truth->seed}};
  }
  return j.dump(2);
}

fringe_image image_from_csv(const std::string& csv_text,
                            const std::optional<std::string>& sidecar_text) {
  fringe_image img;
  std::istringstream is(csv_text);
  std::string line;
  int nx = -1;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    int count = 0;
    while (std::getline(ls, cell, ',')) {
      img.counts.push_back(std::stoll(cell));
      ++count;
    }
    if (nx < 0) {
      nx = count;
    } else if (count != nx) {
      throw config_error("image CSV has ragged rows");
    }
  }
  if (nx < 1 || img.counts.empty()) throw config_error("image CSV is empty");
  img.grid.nx = nx;
  img.grid.ny = static_cast<int>(img.counts.size()) / nx;

  if (sidecar_text) {
    nlohmann::json j = nlohmann::json::parse(*sidecar_text);
    const auto& g = j.at("grid");
    if (g.at("nx").get<int>() != img.grid.nx || g.at("ny").get<int>() != img.grid.ny) {
      throw config_error("sidecar grid dimensions disagree with the CSV");
    }
    img.grid.pitch = g.at("pitch_m").get<double>();
    img.grid.origin = {g.at("origin_m").at(0).get<double>(),
                       g.at("origin_m").at(1).get<double>()};
    if (j.contains("truth")) {
      fringe_truth t;
      t.k_omega = j["truth"].value("k_omega_rad_per_m", 0.0);
      t.phi_a = j["truth"].value("phi_a_rad", 0.0);
      t.contrast = j["truth"].value("contrast", 0.0);
      t.atom_number = j["truth"].value("atom_number", 0ll);
      t.seed = j["truth"].value("seed", 0ull);
      img.truth = t;
    }
  } else {
    img.grid.pitch = 1.0;  // pixel units when no geometry is supplied
  }
  img.grid.validate();
  img.profile_1d = integrate_y(img);
  return img;
}

}  // namespace psi
