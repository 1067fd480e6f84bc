#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "mect/attenuation.hpp"

namespace mect {

// Strictly increasing energy nodes [keV] shared by the spectra of a setup.
// The default diagnostic grid spans [10, 150] keV at 1 keV spacing.
class EnergyGrid {
 public:
  explicit EnergyGrid(std::vector<double> energies_keV);

  /// [10, 150] keV, uniform 1 keV spacing (141 nodes).
  static EnergyGrid standard();
  static EnergyGrid uniform(double lo_keV, double hi_keV, double step_keV);

  std::size_t size() const { return energies_.size(); }
  double operator[](std::size_t k) const { return energies_[k]; }
  double front() const { return energies_.front(); }
  double back() const { return energies_.back(); }
  const std::vector<double>& energies() const { return energies_; }

  bool operator==(const EnergyGrid&) const = default;

 private:
  std::vector<double> energies_;
};

/// Composite trapezoid rule over the grid nodes; exact for piecewise-linear
/// integrands sampled at the nodes. Throws ShapeError on length mismatch.
double quadrature(const EnergyGrid& grid, std::span<const double> values);

/// Divides weights by their quadrature so the result integrates to 1.
/// Throws MalformedSpectrum on a negative weight, EmptySpectrum when the
/// total is not positive.
std::vector<double> normalized_weights(const EnergyGrid& grid, std::vector<double> weights);

// Normalized source-times-detector energy weights S_i(E) on a grid. The
// constructor normalizes, so quadrature(grid, weights) == 1 holds for every
// live Spectrum. An optional tube potential tag records the bremsstrahlung
// cutoff; tagged spectra vanish at and above it.
class Spectrum {
 public:
  Spectrum(EnergyGrid grid, std::vector<double> weights,
           std::optional<double> tube_potential_kvp = std::nullopt);

  const EnergyGrid& grid() const { return grid_; }
  const std::vector<double>& weights() const { return weights_; }
  double weight(std::size_t k) const { return weights_[k]; }
  std::optional<double> tube_potential() const { return tube_potential_; }

  /// Quadrature-weighted mean energy [keV].
  double mean_energy() const;

 private:
  EnergyGrid grid_;
  std::vector<double> weights_;
  std::optional<double> tube_potential_;
};

/// Renormalizes; idempotent to 1e-12 on an already normalized spectrum.
Spectrum normalize(const Spectrum& s);

/// Unfiltered Kramers bremsstrahlung shape max(tp/E - 1, 0).
double kramers_shape(double tube_potential_kvp, double energy_keV);

/// Density of aluminum used for filtration [g/cm^3].
inline constexpr double kAluminumDensity_g_cm3 = 2.699;

/// Filtered Kramers spectrum: kramers_shape(tp, E) * exp(-mu_Al(E) * rho_Al *
/// t) on the grid nodes, normalized. Requires 40 <= tp <= 150 and
/// filtration >= 0 (DomainError); a tube potential at or below the grid
/// minimum leaves no weight and raises EmptySpectrum.
Spectrum kramers_spectrum(double tube_potential_kvp, double filtration_mm_al,
                          const EnergyGrid& grid, const AttenuationTable& aluminum);

/// Reads CSV `energy_keV,weight` pairs (strictly increasing energies, at
/// least two), resamples onto the grid by linear interpolation with zero
/// outside the given support, and normalizes.
Spectrum load_spectrum(std::istream& source, const EnergyGrid& grid);

/// Writes the CSV format accepted by load_spectrum.
void write_spectrum_csv(const Spectrum& s, std::ostream& out);

}  // namespace mect
