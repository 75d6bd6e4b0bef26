#include "psilab/units.hpp"

#include <cctype>
#include <cstdlib>
#include <map>

#include "psilab/constants.hpp"

namespace psi {

namespace {

const std::map<dimension, std::map<std::string, double>>& unit_tables() {
  using constants::gauss_to_tesla;
  using constants::standard_gravity;
  static const std::map<dimension, std::map<std::string, double>> tables = {
      {dimension::time,
       {{"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"μs", 1e-6}, {"ns", 1e-9}}},
      {dimension::length,
       {{"m", 1.0},
        {"cm", 1e-2},
        {"mm", 1e-3},
        {"um", 1e-6},
        {"μm", 1e-6},
        {"nm", 1e-9}}},
      {dimension::temperature,
       {{"K", 1.0}, {"mK", 1e-3}, {"uK", 1e-6}, {"μK", 1e-6}, {"nK", 1e-9}}},
      {dimension::velocity,
       {{"m/s", 1.0}, {"cm/s", 1e-2}, {"mm/s", 1e-3}, {"um/s", 1e-6}}},
      {dimension::acceleration,
       {{"m/s^2", 1.0},
        {"m/s2", 1.0},
        {"g", standard_gravity},
        {"mg", 1e-3 * standard_gravity},
        {"ug", 1e-6 * standard_gravity},
        {"μg", 1e-6 * standard_gravity},
        {"ng", 1e-9 * standard_gravity}}},
      {dimension::frequency,
       {{"Hz", 1.0}, {"kHz", 1e3}, {"MHz", 1e6}, {"GHz", 1e9}}},
      {dimension::magnetic_field,
       {{"T", 1.0},
        {"mT", 1e-3},
        {"uT", 1e-6},
        {"μT", 1e-6},
        {"G", gauss_to_tesla},
        {"mG", 1e-3 * gauss_to_tesla}}},
      {dimension::field_gradient,
       {{"T/m", 1.0},
        {"G/cm", gauss_to_tesla / 1e-2},
        {"G/m", gauss_to_tesla}}},
      {dimension::mass, {{"kg", 1.0}, {"u", 1.66053906660e-27}}},
      {dimension::angular_rate,
       {{"rad/s", 1.0},
        {"mrad/s", 1e-3},
        {"urad/s", 1e-6},
        {"μrad/s", 1e-6},
        {"deg/s", constants::pi / 180.0}}},
      {dimension::intensity, {{"W/m^2", 1.0}, {"W/m2", 1.0}, {"mW/cm^2", 10.0}, {"mW/cm2", 10.0}}},
      {dimension::wavenumber,
       {{"rad/m", 1.0}, {"1/m", 1.0}, {"rad/mm", 1e3}, {"1/mm", 1e3}}},
      {dimension::angle,
       {{"rad", 1.0}, {"mrad", 1e-3}, {"urad", 1e-6}, {"μrad", 1e-6},
        {"deg", constants::pi / 180.0}}},
      {dimension::dimensionless, {{"", 1.0}}},
  };
  return tables;
}

}  // namespace

double unit_scale(const std::string& unit, dimension dim,
                  const std::string& field_name) {
  if (unit.empty()) return 1.0;  // bare numbers are SI
  const auto& table = unit_tables().at(dim);
  auto it = table.find(unit);
  if (it == table.end()) {
    throw config_error(field_name + ": unknown unit '" + unit + "'");
  }
  return it->second;
}

double parse_quantity(const std::string& text, dimension dim,
                      const std::string& field_name) {
  const char* begin = text.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);
  if (end == begin) {
    throw config_error(field_name + ": cannot parse quantity '" + text + "'");
  }
  std::string unit(end);
  size_t a = unit.find_first_not_of(" \t");
  size_t b = unit.find_last_not_of(" \t");
  unit = (a == std::string::npos) ? "" : unit.substr(a, b - a + 1);
  return value * unit_scale(unit, dim, field_name);
}

}  // namespace psi
