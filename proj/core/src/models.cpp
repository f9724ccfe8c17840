#include "dgl/models.hpp"

#include <cmath>
#include <stdexcept>

#include "dgl/errors.hpp"

namespace dgl {

namespace {

void require_same_geometry(const LatticeState& a, const LatticeState& b, const char* what) {
    if (a.geometry != b.geometry)
        throw std::invalid_argument(std::string(what) + ": geometry mismatch");
}

} // namespace

LatticeState discrete_laplacian(const LatticeState& state) {
    LatticeState out = state;
    const auto& u = state.amplitudes;
    const size_t L = u.size();
    for (size_t i = 0; i < L; ++i) {
        const complexd left = i > 0 ? u[i - 1] : complexd{};
        const complexd right = i + 1 < L ? u[i + 1] : complexd{};
        out.amplitudes[i] = left - 2.0 * u[i] + right;
    }
    return out;
}

LatticeState forward_difference(const LatticeState& state) {
    LatticeState out = state;
    const auto& u = state.amplitudes;
    const size_t L = u.size();
    for (size_t i = 0; i < L; ++i) {
        const complexd right = i + 1 < L ? u[i + 1] : complexd{};
        out.amplitudes[i] = right - u[i];
    }
    return out;
}

LatticeState apply_nonlinearity(const LatticeState& state, const Nonlinearity& nl, complexd coeff) {
    if (!(nl.p > 1.0)) throw std::invalid_argument("nonlinearity requires p > 1");
    LatticeState out = state;
    for (auto& z : out.amplitudes) {
        const double a = std::abs(z);
        switch (nl.kind) {
            case Nonlinearity::Kind::gauge: z = coeff * std::pow(a, nl.p - 1.0) * z; break;
            case Nonlinearity::Kind::non_gauge: z = coeff * std::pow(a, nl.p); break;
            case Nonlinearity::Kind::general_f: z = coeff * nl.f(a * a) * z; break;
        }
    }
    return out;
}

LatticeState rhs_general(const LatticeState& state, const GeneralParams& params,
                         const Nonlinearity& nl) {
    const LatticeState lap = discrete_laplacian(state);
    const LatticeState fu = apply_nonlinearity(state, nl, complexd{1.0, 0.0});
    if (params.forcing) require_same_geometry(state, *params.forcing, "rhs_general");

    const complexd ab{params.alpha_hat, params.beta_hat};
    const complexd gd{params.gamma_hat, params.delta_hat};
    const complexd ez{params.eta_hat, params.zeta_hat};
    const complexd i{0.0, 1.0};

    LatticeState out = state;
    for (size_t idx = 0; idx < out.amplitudes.size(); ++idx) {
        complexd v = ab * lap.amplitudes[idx] + gd * state.amplitudes[idx] + ez * fu.amplitudes[idx];
        if (params.forcing) v -= params.forcing->amplitudes[idx];
        out.amplitudes[idx] = i * v;
    }
    return out;
}

GeneralParams dcgl_to_general(const DCGLParams& params) {
    GeneralParams g;
    g.alpha_hat = params.alpha;
    g.beta_hat = -params.lambda;
    g.gamma_hat = 0.0;
    g.delta_hat = -params.gamma;
    g.eta_hat = -params.beta;
    g.zeta_hat = params.k;
    if (params.forcing) {
        LatticeState gn = *params.forcing;
        for (auto& z : gn.amplitudes) z *= complexd{0.0, 1.0}; // g = i f
        g.forcing = std::move(gn);
    }
    return g;
}

LatticeState rhs_dcgl(const LatticeState& state, const DCGLParams& params, const Nonlinearity& nl,
                      SignConvention convention) {
    const LatticeState lap = discrete_laplacian(state);
    const complexd coeff{params.k, params.beta};
    const LatticeState fu = apply_nonlinearity(state, nl, coeff);
    if (params.forcing) require_same_geometry(state, *params.forcing, "rhs_dcgl");

    const complexd la{params.lambda, params.alpha};
    const double f_sign = convention == SignConvention::source ? 1.0 : -1.0;

    LatticeState out = state;
    for (size_t idx = 0; idx < out.amplitudes.size(); ++idx) {
        complexd v = la * lap.amplitudes[idx] + params.gamma * state.amplitudes[idx] +
                     f_sign * fu.amplitudes[idx];
        if (params.forcing) v += params.forcing->amplitudes[idx];
        out.amplitudes[idx] = v;
    }
    return out;
}

double lipschitz_constant(double radius, const Nonlinearity& nl) {
    if (nl.kind == Nonlinearity::Kind::general_f)
        throw hypothesis_error("lipschitz_constant: no constructive constant for general f");
    if (!(radius > 0.0)) throw std::invalid_argument("lipschitz_constant requires R > 0");
    return 2.0 * nl.c * std::pow(radius, nl.p - 1.0);
}

double local_existence_time(double radius, const Nonlinearity& nl) {
    return 1.0 / (2.0 * (lipschitz_constant(radius, nl) + 1.0));
}

} // namespace dgl
