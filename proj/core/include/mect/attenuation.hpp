#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mect {

// Tabulated mass attenuation of one material: samples (E [keV], mu/rho
// [cm^2/g]) with strictly increasing positive energies and positive values.
// Evaluation interpolates piecewise linearly in (ln E, ln mu/rho), which is
// exact at tabulated points and never extrapolates. Absorption edges are
// represented by two samples at nearly identical energies.
class AttenuationTable {
 public:
  AttenuationTable(std::string material_name, std::vector<double> energies_keV,
                   std::vector<double> mass_attenuation_cm2_g);

  const std::string& material_name() const { return name_; }
  std::size_t sample_count() const { return energy_.size(); }
  double energy(std::size_t k) const { return energy_[k]; }
  double value(std::size_t k) const { return mu_[k]; }
  const std::vector<double>& energies() const { return energy_; }
  const std::vector<double>& values() const { return mu_; }
  double min_energy() const { return energy_.front(); }
  double max_energy() const { return energy_.back(); }
  double max_value() const;

  /// Mass attenuation at E via log-log linear interpolation.
  /// Throws OutOfRange outside [min_energy, max_energy].
  double mass_attenuation(double energy_keV) const;

  /// Writes the CSV format accepted by load_material_table. Values are
  /// printed with shortest round-trip formatting, so reloading reproduces
  /// the samples bit identically.
  void write_csv(std::ostream& out) const;

 private:
  std::string name_;
  std::vector<double> energy_;
  std::vector<double> mu_;
  std::vector<double> log_energy_;
  std::vector<double> log_mu_;
};

/// Parses the table CSV (header `energy_keV,mass_attenuation_cm2_g`, one
/// sample per line). Throws MalformedTable on format or invariant
/// violations. `material_name` tags the result.
AttenuationTable load_material_table(std::istream& source,
                                     std::string material_name = "material");

// Ordered set of materials with distinct names; index order defines the
// coordinate order of line-integral vectors.
class MaterialSet {
 public:
  explicit MaterialSet(std::vector<AttenuationTable> materials);

  std::size_t size() const { return materials_.size(); }
  const AttenuationTable& operator[](std::size_t j) const { return materials_[j]; }
  auto begin() const { return materials_.begin(); }
  auto end() const { return materials_.end(); }

 private:
  std::vector<AttenuationTable> materials_;
};

/// Directory holding the bundled reference tables (water, bone, iodine,
/// gadolinium, aluminum). Resolution order: $MECT_DATA_DIR, the source-tree
/// data directory compiled into the library, the install-tree data directory.
std::filesystem::path bundled_data_dir();

/// Loads `<bundled_data_dir>/<name>.csv`. Throws DomainError when the file
/// does not exist.
AttenuationTable load_bundled_material(std::string_view name);

}  // namespace mect
