#pragma once

#include <Eigen/Core>
#include <functional>
#include <utility>

#include "mect/errors.hpp"

namespace mect {

// A differentiable map R^m -> R^n. Everything the certification and
// inversion machinery touches (the ME-CT transform, linearly transformed and
// sign-flipped variants, subsystem and averaged maps, the 1-D staircase test
// fixtures) implements this interface.
class DifferentiableMap {
 public:
  virtual ~DifferentiableMap() = default;

  virtual int domain_dim() const = 0;
  virtual int range_dim() const = 0;
  virtual Eigen::VectorXd value(const Eigen::VectorXd& x) const = 0;
  virtual Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const = 0;

  /// Single component of value(x); overridden where a cheaper evaluation
  /// exists (nonlinear Gauss-Seidel sweeps call this in an inner loop).
  virtual double value_component(int i, const Eigen::VectorXd& x) const {
    return value(x)(i);
  }
};

/// x -> A f(x); the Jacobian is A J(x).
class LinearlyTransformedMap final : public DifferentiableMap {
 public:
  LinearlyTransformedMap(const DifferentiableMap& base, Eigen::MatrixXd A)
      : base_(&base), A_(std::move(A)) {
    if (A_.cols() != base.range_dim())
      throw ShapeError("transform matrix columns must match the map's range dimension");
  }

  int domain_dim() const override { return base_->domain_dim(); }
  int range_dim() const override { return static_cast<int>(A_.rows()); }
  Eigen::VectorXd value(const Eigen::VectorXd& x) const override {
    return A_ * base_->value(x);
  }
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const override {
    return A_ * base_->jacobian(x);
  }
  const Eigen::MatrixXd& matrix() const { return A_; }

 private:
  const DifferentiableMap* base_;
  Eigen::MatrixXd A_;
};

/// x -> D f(D x) for a +-1 diagonal D; the Jacobian is D J(Dx) D, whose
/// principal minors equal those of J (sign conjugation).
class DiagonalFlipMap final : public DifferentiableMap {
 public:
  DiagonalFlipMap(const DifferentiableMap& base, Eigen::VectorXd signs)
      : base_(&base), signs_(std::move(signs)) {
    if (signs_.size() != base.domain_dim() || base.domain_dim() != base.range_dim())
      throw ShapeError("diagonal flip needs a square map and matching sign vector");
    for (Eigen::Index i = 0; i < signs_.size(); ++i)
      if (signs_(i) != 1.0 && signs_(i) != -1.0)
        throw DomainError("flip signs must be +1 or -1");
  }

  int domain_dim() const override { return base_->domain_dim(); }
  int range_dim() const override { return base_->range_dim(); }
  Eigen::VectorXd value(const Eigen::VectorXd& x) const override {
    return signs_.cwiseProduct(base_->value(signs_.cwiseProduct(x)));
  }
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const override {
    const Eigen::MatrixXd j = base_->jacobian(signs_.cwiseProduct(x));
    return signs_.asDiagonal() * j * signs_.asDiagonal();
  }
  const Eigen::VectorXd& signs() const { return signs_; }

 private:
  const DifferentiableMap* base_;
  Eigen::VectorXd signs_;
};

inline DiagonalFlipMap diagonal_flip(const Eigen::VectorXd& signs,
                                     const DifferentiableMap& f) {
  return DiagonalFlipMap(f, signs);
}

/// Map defined by callables; used for crafted test maps.
class FunctionMap final : public DifferentiableMap {
 public:
  FunctionMap(int domain_dim, int range_dim,
              std::function<Eigen::VectorXd(const Eigen::VectorXd&)> value,
              std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> jacobian)
      : dom_(domain_dim), rng_(range_dim),
        value_(std::move(value)), jacobian_(std::move(jacobian)) {}

  int domain_dim() const override { return dom_; }
  int range_dim() const override { return rng_; }
  Eigen::VectorXd value(const Eigen::VectorXd& x) const override { return value_(x); }
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const override { return jacobian_(x); }

 private:
  int dom_, rng_;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> value_;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> jacobian_;
};

}  // namespace mect
