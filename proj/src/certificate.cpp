#include "hebnet/certificate.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace hebnet {

namespace {

void validate_params(ModelKind model, const MajorantParams& p) {
    if (!(p.c_n > 0.0) || !(p.c_s > 0.0))
        throw InvalidParams("decay rates c_n, c_s must be positive");
    if (p.c_o < 0.0) throw InvalidParams("c_o must be non-negative");
    if (!is_oja(model) && p.c_o != 0.0)
        throw InvalidParams(std::string("c_o must be 0 for model ") + to_string(model));
    if (!(p.phi_max > 0.0)) throw InvalidParams("phi_max must be positive");
    if (p.h_max < 0.0 || p.ubar_max < 0.0 || p.d_max < 0)
        throw InvalidParams("h_max, ubar_max and d_max must be non-negative");
}

double c_tilde_constant(ModelKind model, const MajorantParams& p) {
    const double phi2 = p.phi_max * p.phi_max;
    const double b = p.d_max * p.h_max * phi2;
    const double du = p.d_max * p.ubar_max;
    switch (model) {
        case ModelKind::HopfieldHebbian:
            return p.c_s * p.c_s + 2.0 * b;
        case ModelKind::FiringRateHebbian:
            return p.c_s * p.c_s + 2.0 * b / p.c_n;
        case ModelKind::HopfieldOja:
            return p.c_s * p.c_s + 2.0 * b + 2.0 * phi2 * (p.c_o / p.c_s) * (b + du);
        case ModelKind::FiringRateOja:
            return p.c_s * p.c_s + 2.0 * b / p.c_n +
                   2.0 * phi2 * (p.c_o / (p.c_n * p.c_s)) * (b + du);
    }
    return 0.0;
}

} // namespace

Eigen::Matrix2d majorant_bound(ModelKind model, const MajorantParams& p) {
    validate_params(model, p);
    const double phi2 = p.phi_max * p.phi_max;
    const double a11 = p.d_max * (p.h_max * phi2 + p.ubar_max) / p.c_s - p.c_n;
    const double a12 =
        is_hopfield(model) ? p.d_max * p.phi_max : p.d_max * p.phi_max / p.c_n;
    const double a21 =
        is_oja(model)
            ? 2.0 * p.phi_max * (p.h_max + p.c_o * (p.h_max * phi2 + p.ubar_max) / p.c_s)
            : 2.0 * p.h_max * p.phi_max;
    Eigen::Matrix2d M;
    M << a11, a12, a21, -p.c_s;
    return M;
}

double condition_rhs(ModelKind model, const MajorantParams& p) {
    validate_params(model, p);
    const double phi2 = p.phi_max * p.phi_max;
    const double b = p.d_max * p.h_max * phi2;
    const double du = p.d_max * p.ubar_max;
    switch (model) {
        case ModelKind::HopfieldHebbian:
            return 3.0 * b + du;
        case ModelKind::FiringRateHebbian:
            return b * (1.0 + 2.0 / p.c_n) + du;
        case ModelKind::HopfieldOja:
            return 3.0 * b + du + 2.0 * (p.c_o / p.c_s) * phi2 * (b + du);
        case ModelKind::FiringRateOja:
            return b * (1.0 + 2.0 / p.c_n) + du +
                   2.0 * (p.c_o / (p.c_n * p.c_s)) * phi2 * (b + du);
    }
    return 0.0;
}

Bounds compute_bounds(const Topology& topo, const ModelSpec& spec) {
    spec.validate(topo);
    Bounds b;
    b.model = spec.model;
    b.c_n = spec.c_n;
    b.c_s = spec.c_s;
    b.phi_max = spec.phi_max();
    b.h_max = topo.max_abs_coefficient();
    b.d_max = topo.max_in_degree();
    b.u_max = spec.u.sup_abs();
    b.ubar_max = spec.ubar.sup_abs();
    const double phi2 = b.phi_max * b.phi_max;
    b.w_max = (b.h_max * phi2 + b.ubar_max) / spec.c_s;
    b.x_max = (b.u_max + b.d_max * b.phi_max * b.w_max) / spec.c_n;
    b.nu_max = b.phi_max / spec.c_n;
    b.b_max = b.d_max * b.h_max * phi2;
    return b;
}

Certificate certify_params(ModelKind model, const MajorantParams& p) {
    Certificate cert;
    cert.model = model;
    cert.majorant = majorant_bound(model, p);
    cert.condition_lhs = p.c_n * p.c_s;
    cert.condition_rhs = condition_rhs(model, p);
    cert.gap = cert.condition_lhs - cert.condition_rhs; // = det(majorant)
    cert.c_tilde = c_tilde_constant(model, p);
    cert.p = kInf;

    const double trace = cert.majorant.trace();
    cert.satisfied = cert.gap > 0.0 && trace < 0.0;

    const double sum = cert.c_tilde + cert.gap; // = -c_s * trace
    const double disc = sum * sum - 4.0 * cert.gap * p.c_s * p.c_s;
    if (cert.satisfied && disc < 0.0) {
        // The discriminant is positive whenever the condition holds; a
        // negative value can only be boundary rounding, so report the
        // certificate as not satisfied instead of emitting a complex rate.
        cert.satisfied = false;
    }
    cert.rate = cert.satisfied ? 2.0 * cert.gap * p.c_s / (sum + std::sqrt(disc))
                               : std::numeric_limits<double>::quiet_NaN();

    const double delta = is_irreducible(cert.majorant) ? 0.0 : 1e-6;
    cert.eta = compute_eta(cert.majorant, kInf, delta);
    return cert;
}

Certificate certify(const Topology& topo, const ModelSpec& spec) {
    spec.validate(topo);
    MajorantParams p;
    p.c_n = spec.c_n;
    p.c_s = spec.c_s;
    p.c_o = spec.c_o;
    p.phi_max = spec.phi_max();
    p.h_max = topo.max_abs_coefficient();
    p.ubar_max = spec.ubar.sup_abs();
    p.d_max = topo.max_in_degree();
    return certify_params(spec.model, p);
}

} // namespace hebnet
