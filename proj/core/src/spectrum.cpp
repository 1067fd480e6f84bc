#include "mect/spectrum.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "mect/errors.hpp"

namespace mect {

EnergyGrid::EnergyGrid(std::vector<double> energies_keV)
    : energies_(std::move(energies_keV)) {
  if (energies_.size() < 2) throw DomainError("energy grid needs at least 2 nodes");
  for (std::size_t k = 0; k < energies_.size(); ++k) {
    if (!(energies_[k] > 0.0) || !std::isfinite(energies_[k]))
      throw DomainError("energy grid nodes must be positive and finite");
    if (k > 0 && !(energies_[k] > energies_[k - 1]))
      throw DomainError("energy grid nodes must be strictly increasing");
  }
}

EnergyGrid EnergyGrid::standard() { return uniform(10.0, 150.0, 1.0); }

EnergyGrid EnergyGrid::uniform(double lo_keV, double hi_keV, double step_keV) {
  if (!(step_keV > 0.0) || !(hi_keV > lo_keV))
    throw DomainError("bad uniform grid parameters");
  const auto count = static_cast<std::size_t>(std::llround((hi_keV - lo_keV) / step_keV));
  std::vector<double> nodes(count + 1);
  for (std::size_t k = 0; k <= count; ++k)
    nodes[k] = lo_keV + static_cast<double>(k) * step_keV;
  nodes.back() = hi_keV;
  return EnergyGrid(std::move(nodes));
}

double quadrature(const EnergyGrid& grid, std::span<const double> values) {
  if (values.size() != grid.size())
    throw ShapeError("quadrature: values length does not match grid");
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < grid.size(); ++k)
    total += 0.5 * (grid[k + 1] - grid[k]) * (values[k] + values[k + 1]);
  return total;
}

std::vector<double> normalized_weights(const EnergyGrid& grid, std::vector<double> weights) {
  if (weights.size() != grid.size())
    throw ShapeError("spectrum weights length does not match grid");
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w))
      throw MalformedSpectrum("spectrum weights must be finite and nonnegative");
  }
  const double total = quadrature(grid, weights);
  if (!(total > 0.0)) throw EmptySpectrum("spectrum has zero total weight");
  for (double& w : weights) w /= total;
  return weights;
}

Spectrum::Spectrum(EnergyGrid grid, std::vector<double> weights,
                   std::optional<double> tube_potential_kvp)
    : grid_(std::move(grid)),
      weights_(normalized_weights(grid_, std::move(weights))),
      tube_potential_(tube_potential_kvp) {}

double Spectrum::mean_energy() const {
  std::vector<double> moment(weights_.size());
  for (std::size_t k = 0; k < weights_.size(); ++k) moment[k] = grid_[k] * weights_[k];
  return quadrature(grid_, moment);
}

Spectrum normalize(const Spectrum& s) {
  return Spectrum(s.grid(), s.weights(), s.tube_potential());
}

double kramers_shape(double tube_potential_kvp, double energy_keV) {
  return std::max(tube_potential_kvp / energy_keV - 1.0, 0.0);
}

Spectrum kramers_spectrum(double tube_potential_kvp, double filtration_mm_al,
                          const EnergyGrid& grid, const AttenuationTable& aluminum) {
  if (!(tube_potential_kvp >= 40.0) || !(tube_potential_kvp <= 150.0))
    throw DomainError("tube potential must lie in [40, 150] kVp");
  if (!(filtration_mm_al >= 0.0)) throw DomainError("filtration must be nonnegative");
  if (tube_potential_kvp <= grid.front())
    throw EmptySpectrum("tube potential at or below the grid minimum leaves no weight");

  const double thickness_cm = filtration_mm_al / 10.0;
  std::vector<double> w(grid.size(), 0.0);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double e = grid[k];
    const double shape = kramers_shape(tube_potential_kvp, e);
    if (shape == 0.0) continue;
    const double mu = aluminum.mass_attenuation(e);
    w[k] = shape * std::exp(-mu * kAluminumDensity_g_cm3 * thickness_cm);
  }
  return Spectrum(grid, std::move(w), tube_potential_kvp);
}

namespace {

std::string trim_copy(std::string s) {
  const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && is_space(s[i])) ++i;
  return s.substr(i);
}

void append_shortest(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

}  // namespace

Spectrum load_spectrum(std::istream& source, const EnergyGrid& grid) {
  std::string line;
  if (!std::getline(source, line)) throw MalformedSpectrum("empty spectrum stream");
  if (trim_copy(line) != "energy_keV,weight")
    throw MalformedSpectrum("expected header 'energy_keV,weight', got '" + trim_copy(line) + "'");

  std::vector<double> e, w;
  std::size_t line_no = 1;
  while (std::getline(source, line)) {
    ++line_no;
    const std::string row = trim_copy(line);
    if (row.empty()) continue;
    const auto comma = row.find(',');
    if (comma == std::string::npos)
      throw MalformedSpectrum("line " + std::to_string(line_no) + ": missing comma");
    char* end = nullptr;
    const std::string a = trim_copy(row.substr(0, comma));
    const std::string b = trim_copy(row.substr(comma + 1));
    const double ev = std::strtod(a.c_str(), &end);
    if (end != a.c_str() + a.size() || a.empty())
      throw MalformedSpectrum("line " + std::to_string(line_no) + ": bad energy '" + a + "'");
    const double wv = std::strtod(b.c_str(), &end);
    if (end != b.c_str() + b.size() || b.empty())
      throw MalformedSpectrum("line " + std::to_string(line_no) + ": bad weight '" + b + "'");
    if (!e.empty() && !(ev > e.back()))
      throw MalformedSpectrum("spectrum energies must be strictly increasing");
    if (!(wv >= 0.0) || !std::isfinite(wv))
      throw MalformedSpectrum("negative or non-finite spectrum weight");
    e.push_back(ev);
    w.push_back(wv);
  }
  if (e.size() < 2)
    throw MalformedSpectrum("spectrum needs at least 2 samples to interpolate");

  std::vector<double> resampled(grid.size(), 0.0);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double x = grid[k];
    if (x < e.front() || x > e.back()) continue;  // zero outside given support
    const auto it = std::upper_bound(e.begin(), e.end(), x);
    std::size_t hi = static_cast<std::size_t>(it - e.begin());
    if (hi == e.size()) hi = e.size() - 1;
    const std::size_t lo = hi - 1;
    const double t = (x - e[lo]) / (e[hi] - e[lo]);
    resampled[k] = w[lo] + t * (w[hi] - w[lo]);
  }
  return Spectrum(grid, std::move(resampled));
}

void write_spectrum_csv(const Spectrum& s, std::ostream& out) {
  std::string buf = "energy_keV,weight\n";
  for (std::size_t k = 0; k < s.grid().size(); ++k) {
    append_shortest(buf, s.grid()[k]);
    buf.push_back(',');
    append_shortest(buf, s.weight(k));
    buf.push_back('\n');
  }
  out << buf;
}

}  // namespace mect
