#include "dgl/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "dgl/errors.hpp"

namespace dgl {

namespace {

complexd plain_sum(const LatticeState& state) {
    complexd s{};
    for (complexd z : state.amplitudes) s += z;
    return s;
}

double power_sum(const LatticeState& state, double exponent) {
    double s = 0.0;
    for (complexd z : state.amplitudes) s += std::pow(std::abs(z), exponent);
    return s;
}

double difference_sq_sum(const LatticeState& state) {
    const LatticeState d = forward_difference(state);
    double s = 0.0;
    for (complexd z : d.amplitudes) s += std::norm(z);
    return s;
}

double l_pow(const LatticeState& state, double sigma) {
    return std::pow(static_cast<double>(state.geometry.site_count()), -sigma);
}

} // namespace

double m_imag(const LatticeState& state, double gamma, double sigma) {
    return std::exp(-gamma * state.time) * l_pow(state, sigma) * plain_sum(state).imag();
}

double n_real(const LatticeState& state, double gamma, double sigma) {
    return std::exp(-gamma * state.time) * l_pow(state, sigma) * plain_sum(state).real();
}

double mass_sigma(const LatticeState& state, double sigma) {
    return l_pow(state, sigma) * power_sum(state, 2.0);
}

double energy_drgl(const LatticeState& state, double lambda, double gamma, double k, double p,
                   double sigma) {
    return l_pow(state, sigma) * (0.5 * lambda * difference_sq_sum(state) -
                                  0.5 * gamma * power_sum(state, 2.0) -
                                  k / (p + 1.0) * power_sum(state, p + 1.0));
}

double charge(const LatticeState& state) { return power_sum(state, 2.0); }

DnlsEnergies hamiltonian_dnls(const LatticeState& state, double alpha, double beta, double p) {
    const double h = 0.5 * alpha * difference_sq_sum(state) -
                     beta / (p + 1.0) * power_sum(state, p + 1.0);
    return {h, h + 0.5 * alpha * power_sum(state, 2.0)};
}

BoundResult bound_nongauge(const BoundInput& input, NonGaugeCase which) {
    const double b = which == NonGaugeCase::imag_beta ? input.params.beta : input.params.k;
    if (!(b > 0.0))
        throw hypothesis_error(which == NonGaugeCase::imag_beta
                                   ? "bound_nongauge: requires beta > 0"
                                   : "bound_nongauge: requires k > 0");
    if (!(input.m0 > 0.0)) throw hypothesis_error("bound_nongauge: requires M(0) > 0");
    if (!(input.p > 1.0)) throw std::invalid_argument("bound_nongauge: requires p > 1");

    const double L = static_cast<double>(input.site_count);
    const double gamma = input.params.gamma;
    const double exponent = (1.0 - input.p) * (1.0 - input.sigma);
    const double m0_pow = std::pow(input.m0, 1.0 - input.p);

    BoundResult result;
    if (gamma == 0.0) {
        result.valid = true;
        result.t_star = m0_pow * std::pow(L, -exponent) / ((input.p - 1.0) * b);
        return result;
    }
    result.valid = (gamma / b) * m0_pow > -std::pow(L, exponent);
    if (!result.valid) return result;
    const double arg = 1.0 + (gamma / b) * m0_pow * std::pow(L, -exponent);
    result.t_star = std::log(arg) / ((input.p - 1.0) * gamma);
    return result;
}

double bound_gauge_drgl(const BoundInput& input) {
    if (!(input.params.k > 0.0)) throw hypothesis_error("bound_gauge_drgl: requires k > 0");
    if (!(input.m0 > 0.0)) throw hypothesis_error("bound_gauge_drgl: requires M(0) > 0");
    if (!(input.p > 1.0)) throw std::invalid_argument("bound_gauge_drgl: requires p > 1");
    const double L = static_cast<double>(input.site_count);
    const double exponent = (1.0 - input.p) * (1.0 - input.sigma);
    return (input.p + 1.0) / (input.params.k * (input.p - 1.0) * (input.p - 1.0)) *
           std::pow(L, -exponent) / std::pow(input.m0, (input.p - 1.0) / 2.0);
}

double lambda1_star(int half_width) {
    if (half_width < 0) throw std::invalid_argument("lambda1_star requires N >= 0");
    return 2.0 * (1.0 - std::cos(std::numbers::pi / (2.0 * half_width + 2.0)));
}

AttractorReport absorbing_finite(const DCGLParams& params, double p, int half_width, double rho1) {
    if (!(params.k < 0.0)) throw hypothesis_error("absorbing_finite: requires k < 0");
    if (!(params.lambda > 0.0)) throw hypothesis_error("absorbing_finite: requires lambda > 0");
    if (!(p > 1.0)) throw std::invalid_argument("absorbing_finite: requires p > 1");

    const double m = -params.k;
    const double L = 2.0 * half_width + 1.0;

    AttractorReport report;
    report.kind = AttractorReport::Kind::finite;
    report.lambda1 = lambda1_star(half_width);
    report.trivial_dynamics = params.gamma / params.lambda < report.lambda1;
    report.k1 = m * std::pow(L, (1.0 - p) / 2.0);
    report.rho0 = params.gamma > 0.0
                      ? (p - 1.0) / (p + 1.0) *
                            std::pow(2.0 / (report.k1 * (p + 1.0)), 1.0 / (p - 1.0)) *
                            std::pow(params.gamma, (p + 1.0) / (p - 1.0))
                      : 0.0;
    report.rho_limit = std::pow(2.0 * report.rho0 / report.k1, 1.0 / (p + 1.0));
    report.rho1 = rho1;
    if (!(rho1 * rho1 > report.rho_limit))
        throw std::invalid_argument("absorbing_finite: rho1^2 must exceed rho_limit");
    report.t0 = 2.0 / (report.k1 * p) * std::pow(rho1 * rho1 - report.rho_limit, -p);
    report.sigma0 = std::numeric_limits<double>::quiet_NaN();
    report.rho_sq = std::numeric_limits<double>::quiet_NaN();
    report.entry_time = std::numeric_limits<double>::quiet_NaN();
    return report;
}

double sigma0(const GeneralParams& params, const Weight& weight, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("sigma0 requires epsilon > 0");
    const double d_low = weight.d_lower();
    return params.delta_hat - epsilon / 2.0 - 2.0 * params.beta_hat -
           std::abs(params.alpha_hat) * weight.big_d() / std::sqrt(d_low) -
           std::abs(params.beta_hat) * (1.0 + weight.d_upper() / 2.0 + 0.5 / d_low);
}

AttractorReport absorbing_weighted(double g_norm_sq, double sigma0_value, double epsilon, double R,
                                   double rho1) {
    if (!(sigma0_value > 0.0))
        throw hypothesis_error("absorbing_weighted: requires sigma0 > 0 (dissipative regime)");
    if (!(epsilon > 0.0)) throw std::invalid_argument("absorbing_weighted requires epsilon > 0");
    if (g_norm_sq < 0.0) throw std::invalid_argument("absorbing_weighted requires ||g||^2 >= 0");

    AttractorReport report;
    report.kind = AttractorReport::Kind::weighted;
    report.sigma0 = sigma0_value;
    report.rho_sq = g_norm_sq / (2.0 * sigma0_value * epsilon);
    report.rho1 = rho1;
    if (!(rho1 * rho1 > report.rho_sq))
        throw std::invalid_argument("absorbing_weighted: rho1^2 must exceed rho^2");
    report.entry_time = 1.0 / (2.0 * sigma0_value) * std::log(R * R / (rho1 * rho1 - report.rho_sq));
    report.k1 = std::numeric_limits<double>::quiet_NaN();
    report.rho0 = std::numeric_limits<double>::quiet_NaN();
    report.rho_limit = std::numeric_limits<double>::quiet_NaN();
    report.t0 = std::numeric_limits<double>::quiet_NaN();
    report.lambda1 = std::numeric_limits<double>::quiet_NaN();
    return report;
}

TailMass tail_mass(const LatticeState& state, const Weight& weight, int window_m) {
    if (window_m < 1) throw std::invalid_argument("tail_mass requires M >= 1");
    const int half = state.geometry.half_width;
    TailMass out;
    if (2 * window_m >= half) {
        out.in_range = false;
        return out;
    }
    for (int n = -half; n <= half; ++n) {
        if (std::abs(n) <= 2 * window_m) continue;
        out.value += weight.value(n) * std::norm(state.at_site(n));
    }
    return out;
}

} // namespace dgl
