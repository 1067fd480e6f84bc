#pragma once

#include <Eigen/Core>
#include <vector>

#include "mect/attenuation.hpp"
#include "mect/map.hpp"
#include "mect/spectrum.hpp"

namespace mect {

// The ME-CT transform for a fixed acquisition: n spectra sharing one energy
// grid and m <= n materials. For a line-integral vector x >= 0 [g/cm^2],
//
//   transform(x)_i = -ln Int S_i(E) exp(-M(E).x) dE          (all >= 0)
//   jacobian(x)_ij = e^{transform(x)_i} Int S_i M_j exp(-M(E).x) dE  (> 0)
//
// Quadrature nodes are the spectrum grid augmented with every material table
// sample inside the grid range, so absorption edges sit on nodes and the
// composite trapezoid rule keeps its second order. Spectrum weights are
// interpolated linearly onto inserted nodes, which leaves their integral
// (and hence transform(0) = 0) unchanged.
//
// Setups are immutable after construction and safe for concurrent reads.
class MectSetup final : public DifferentiableMap {
 public:
  MectSetup(std::vector<Spectrum> spectra, MaterialSet materials);

  int n() const { return static_cast<int>(spectra_.size()); }
  int m() const { return static_cast<int>(materials_.size()); }
  const std::vector<Spectrum>& spectra() const { return spectra_; }
  const MaterialSet& materials() const { return materials_; }
  const EnergyGrid& grid() const { return spectra_.front().grid(); }

  Eigen::VectorXd transform(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const;
  void transform_and_jacobian(const Eigen::VectorXd& x, Eigen::VectorXd& out_value,
                              Eigen::MatrixXd& out_jacobian) const;
  double transform_component(int i, const Eigen::VectorXd& x) const;

  // DifferentiableMap
  int domain_dim() const override { return m(); }
  int range_dim() const override { return n(); }
  Eigen::VectorXd value(const Eigen::VectorXd& x) const override { return transform(x); }
  Eigen::MatrixXd jacobian_map(const Eigen::VectorXd& x) const { return jacobian(x); }
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const override NOT_DECLARED;

  /// Quadrature nodes actually used (grid plus inserted table samples).
  const std::vector<double>& eval_energies() const { return eval_energy_; }
  /// Basis matrix B[e][j] = M_j(eval_energy[e]); entries are positive.
  const Eigen::MatrixXd& basis() const { return basis_; }
  /// Largest basis value of material j over the quadrature nodes.
  double max_basis(int j) const { return basis_.col(j).maxCoeff(); }

 private:
  void check_x(const Eigen::VectorXd& x) const;

  std::vector<Spectrum> spectra_;
  MaterialSet materials_;
  std::vector<double> eval_energy_;
  Eigen::MatrixXd weighted_spectra_;  // n x K, spectrum weights times trapezoid cell weights
  Eigen::MatrixXd basis_;             // K x m
};

}  // namespace mect
