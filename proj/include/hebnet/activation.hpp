#pragma once

#include <Eigen/Dense>

#include "hebnet/errors.hpp"

namespace hebnet {

/// Sigmoidal activation phi(s) = ceiling / (1 + exp(-gain * s)).
///
/// The family is restricted to (scaled) sigmoids so that the suprema of phi
/// and phi' are known in closed form: sup phi = ceiling, sup phi' =
/// gain * ceiling / 4 (attained at s = 0). Construction rejects parameters
/// with sup phi' > 1, so every instance satisfies 0 <= phi <= phi_max and
/// 0 <= phi' <= 1 everywhere.
class Activation {
public:
    /// Standard logistic sigmoid: gain 1, ceiling 1.
    static Activation sigmoid() { return Activation(1.0, 1.0); }

    /// Sigmoid with slope gain g and supremum phi_max. Requires g > 0,
    /// phi_max > 0 and g * phi_max <= 4.
    static Activation scaled_sigmoid(double gain, double ceiling) {
        return Activation(gain, ceiling);
    }

    double value(double s) const;
    double slope(double s) const;

    Eigen::VectorXd value(const Eigen::VectorXd& s) const;
    Eigen::VectorXd slope(const Eigen::VectorXd& s) const;

    double max_value() const { return ceiling_; }
    double max_slope() const { return gain_ * ceiling_ / 4.0; }

    double gain() const { return gain_; }

    friend bool operator==(const Activation&, const Activation&) = default;

private:
    Activation(double gain, double ceiling);

    double gain_ = 1.0;
    double ceiling_ = 1.0;
};

} // namespace hebnet
