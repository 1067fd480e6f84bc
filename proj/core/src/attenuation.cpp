#include "mect/attenuation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "mect/errors.hpp"

namespace mect {

namespace {

std::string trim(std::string s) {
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

AttenuationTable::AttenuationTable(std::string material_name,
                                   std::vector<double> energies_keV,
                                   std::vector<double> mass_attenuation_cm2_g)
    : name_(std::move(material_name)),
      energy_(std::move(energies_keV)),
      mu_(std::move(mass_attenuation_cm2_g)) {
  if (energy_.size() != mu_.size())
    throw MalformedTable("energy and attenuation columns differ in length");
  if (energy_.size() < 2)
    throw MalformedTable("attenuation table needs at least 2 samples");
  for (std::size_t k = 0; k < energy_.size(); ++k) {
    if (!(energy_[k] > 0.0) || !std::isfinite(energy_[k]))
      throw MalformedTable("non-positive or non-finite energy in table '" + name_ + "'");
    if (!(mu_[k] > 0.0) || !std::isfinite(mu_[k]))
      throw MalformedTable("non-positive or non-finite attenuation in table '" + name_ + "'");
    if (k > 0 && !(energy_[k] > energy_[k - 1]))
      throw MalformedTable("energies not strictly increasing in table '" + name_ + "'");
  }
  log_energy_.resize(energy_.size());
  log_mu_.resize(mu_.size());
  for (std::size_t k = 0; k < energy_.size(); ++k) {
    log_energy_[k] = std::log(energy_[k]);
    log_mu_[k] = std::log(mu_[k]);
  }
}

double AttenuationTable::max_value() const {
  return *std::max_element(mu_.begin(), mu_.end());
}

double AttenuationTable::mass_attenuation(double energy_keV) const {
  if (!(energy_keV >= energy_.front()) || !(energy_keV <= energy_.back())) {
    std::ostringstream msg;
    msg << "energy " << energy_keV << " keV outside tabulated range ["
        << energy_.front() << ", " << energy_.back() << "] of '" << name_ << "'";
    throw OutOfRange(msg.str());
  }
  const auto it = std::upper_bound(energy_.begin(), energy_.end(), energy_keV);
  std::size_t hi = static_cast<std::size_t>(it - energy_.begin());
  if (hi == energy_.size()) hi = energy_.size() - 1;
  const std::size_t lo = hi - 1;
  if (energy_keV == energy_[lo]) return mu_[lo];
  if (energy_keV == energy_[hi]) return mu_[hi];
  const double t = (std::log(energy_keV) - log_energy_[lo]) /
                   (log_energy_[hi] - log_energy_[lo]);
  return std::exp(log_mu_[lo] + t * (log_mu_[hi] - log_mu_[lo]));
}

void AttenuationTable::write_csv(std::ostream& out) const {
  std::string buf = "energy_keV,mass_attenuation_cm2_g\n";
  for (std::size_t k = 0; k < energy_.size(); ++k) {
    append_shortest(buf, energy_[k]);
    buf.push_back(',');
    append_shortest(buf, mu_[k]);
    buf.push_back('\n');
  }
  out << buf;
}

AttenuationTable load_material_table(std::istream& source, std::string material_name) {
  std::string line;
  if (!std::getline(source, line))
    throw MalformedTable("empty attenuation table stream");
  if (trim(line) != "energy_keV,mass_attenuation_cm2_g")
    throw MalformedTable("expected header 'energy_keV,mass_attenuation_cm2_g', got '" +
                         trim(line) + "'");

  std::vector<double> energy, mu;
  std::size_t line_no = 1;
  while (std::getline(source, line)) {
    ++line_no;
    const std::string row = trim(line);
    if (row.empty()) continue;
    const auto comma = row.find(',');
    if (comma == std::string::npos)
      throw MalformedTable("line " + std::to_string(line_no) + ": missing comma");
    char* end = nullptr;
    const std::string a = trim(row.substr(0, comma));
    const std::string b = trim(row.substr(comma + 1));
    const double e = std::strtod(a.c_str(), &end);
    if (end != a.c_str() + a.size() || a.empty())
      throw MalformedTable("line " + std::to_string(line_no) + ": bad energy '" + a + "'");
    const double v = std::strtod(b.c_str(), &end);
    if (end != b.c_str() + b.size() || b.empty())
      throw MalformedTable("line " + std::to_string(line_no) + ": bad attenuation '" + b + "'");
    energy.push_back(e);
    mu.push_back(v);
  }
  return AttenuationTable(std::move(material_name), std::move(energy), std::move(mu));
}

MaterialSet::MaterialSet(std::vector<AttenuationTable> materials)
    : materials_(std::move(materials)) {
  if (materials_.empty()) throw DomainError("material set must not be empty");
  for (std::size_t i = 0; i < materials_.size(); ++i)
    for (std::size_t j = i + 1; j < materials_.size(); ++j)
      if (materials_[i].material_name() == materials_[j].material_name())
        throw DomainError("duplicate material name '" + materials_[i].material_name() + "'");
}

std::filesystem::path bundled_data_dir() {
  if (const char* env = std::getenv("MECT_DATA_DIR"); env && *env) return env;
#ifdef MECT_SOURCE_DATA_DIR
  if (std::filesystem::exists(MECT_SOURCE_DATA_DIR)) return MECT_SOURCE_DATA_DIR;
#endif
#ifdef MECT_INSTALL_DATA_DIR
  return MECT_INSTALL_DATA_DIR;
#else
  return "data";
#endif
}

AttenuationTable load_bundled_material(std::string_view name) {
  const auto path = bundled_data_dir() / (std::string(name) + ".csv");
  std::ifstream in(path);
  if (!in)
    throw DomainError("no bundled material '" + std::string(name) + "' at " + path.string());
  return load_material_table(in, std::string(name));
}

}  // namespace mect
