#include "hebnet/activation.hpp"

#include <cmath>
#include <string>

namespace hebnet {

Activation::Activation(double gain, double ceiling) : gain_(gain), ceiling_(ceiling) {
    if (!(gain > 0.0) || !std::isfinite(gain))
        throw InvalidParams("activation gain must be positive, got " + std::to_string(gain));
    if (!(ceiling > 0.0) || !std::isfinite(ceiling))
        throw InvalidParams("activation ceiling must be positive, got " +
                            std::to_string(ceiling));
    if (gain * ceiling > 4.0)
        throw InvalidParams("activation slope bound gain*ceiling/4 = " +
                            std::to_string(gain * ceiling / 4.0) + " exceeds 1");
}

double Activation::value(double s) const {
    // exp(-gain*s) overflows to +inf for very negative s; 1/(1+inf) = 0 is
    // the correct saturated limit, so no special casing is needed.
    return ceiling_ / (1.0 + std::exp(-gain_ * s));
}

double Activation::slope(double s) const {
    // Evaluated through the value to stay overflow-free:
    // phi' = gain * phi * (ceiling - phi) / ceiling.
    const double phi = value(s);
    return gain_ * phi * (ceiling_ - phi) / ceiling_;
}

Eigen::VectorXd Activation::value(const Eigen::VectorXd& s) const {
    Eigen::VectorXd out(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i) out[i] = value(s[i]);
    return out;
}

Eigen::VectorXd Activation::slope(const Eigen::VectorXd& s) const {
    Eigen::VectorXd out(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i) out[i] = slope(s[i]);
    return out;
}

} // namespace hebnet
