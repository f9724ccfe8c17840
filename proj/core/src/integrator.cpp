#include "dgl/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dgl {

namespace {

bool finite(complexd z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

} // namespace

void IntegratorConfig::validate() const {
    if (!(dt > 0.0) || !(t_max > 0.0)) throw std::invalid_argument("dt and t_max must be positive");
    if (!(dt_min > 0.0) || !(dt_min < dt)) throw std::invalid_argument("requires 0 < dt_min < dt");
    if (!(blowup_threshold > 1.0)) throw std::invalid_argument("blowup_threshold must exceed 1");
    if (refine_factor < 2) throw std::invalid_argument("refine_factor must be >= 2");
    if (!(growth_guard > 1.0)) throw std::invalid_argument("growth_guard must exceed 1");
    if (observer_stride < 1) throw std::invalid_argument("observer_stride must be >= 1");
}

LatticeState rk4_step(const LatticeState& state, const RhsFn& rhs, double dt) {
    const size_t L = state.amplitudes.size();
    auto stage_ok = [](const LatticeState& s) {
        return std::all_of(s.amplitudes.begin(), s.amplitudes.end(),
                           [](complexd z) { return finite(z); });
    };
    auto fail_at = [&](double fraction) {
        LatticeState out = state;
        out.post_blow_up = true;
        out.time = state.time + fraction * dt;
        return out;
    };

    const LatticeState k1 = rhs(state);
    if (!stage_ok(k1)) return fail_at(0.0);

    LatticeState tmp = state;
    for (size_t i = 0; i < L; ++i)
        tmp.amplitudes[i] = state.amplitudes[i] + 0.5 * dt * k1.amplitudes[i];
    tmp.time = state.time + 0.5 * dt;
    const LatticeState k2 = rhs(tmp);
    if (!stage_ok(k2)) return fail_at(0.5);

    for (size_t i = 0; i < L; ++i)
        tmp.amplitudes[i] = state.amplitudes[i] + 0.5 * dt * k2.amplitudes[i];
    const LatticeState k3 = rhs(tmp);
    if (!stage_ok(k3)) return fail_at(0.5);

    for (size_t i = 0; i < L; ++i)
        tmp.amplitudes[i] = state.amplitudes[i] + dt * k3.amplitudes[i];
    tmp.time = state.time + dt;
    const LatticeState k4 = rhs(tmp);
    if (!stage_ok(k4)) return fail_at(1.0);

    LatticeState out = state;
    for (size_t i = 0; i < L; ++i)
        out.amplitudes[i] = state.amplitudes[i] +
                            (dt / 6.0) * (k1.amplitudes[i] + 2.0 * k2.amplitudes[i] +
                                          2.0 * k3.amplitudes[i] + k4.amplitudes[i]);
    out.time = state.time + dt;
    return out;
}

IntegrationResult integrate(const LatticeState& state0, const RhsFn& rhs,
                            const IntegratorConfig& config, const std::vector<Observer>& observers) {
    config.validate();

    IntegrationResult result;
    result.report.threshold = config.blowup_threshold;
    result.report.growth_guard = config.growth_guard;

    LatticeState state = state0;
    double dt = config.dt;
    long streak = 0;
    const auto notify = [&](const LatticeState& s, double dt_local) {
        for (const auto& obs : observers) obs(s, dt_local);
    };
    notify(state, 0.0);

    while (state.time < config.t_max) {
        const double dt_local = std::min(dt, config.t_max - state.time);
        LatticeState next = rk4_step(state, rhs, dt_local);

        const double sup_old = sup_abs_unchecked(state);
        const double sup_new = sup_abs_unchecked(next);
        const bool bad = next.post_blow_up || !std::isfinite(sup_new) ||
                         sup_new > config.growth_guard * std::max(sup_old, 1e-300);
        if (bad) {
            if (dt / config.refine_factor >= config.dt_min) {
                dt /= config.refine_factor;
                ++result.report.refinements;
                streak = 0;
                continue;
            }
            if (next.post_blow_up || !std::isfinite(sup_new)) {
                // Out of resolution and still non-finite: report the last
                // finite time with low confidence.
                result.report.blew_up = true;
                result.report.low_confidence = true;
                result.report.t_sim = state.time;
                result.report.final_norm = sup_old;
                result.report.dt_at_detection = dt_local;
                result.final_state = std::move(state);
                return result;
            }
            // Finite over-growth at the floor step: accept it.
        }

        state = std::move(next);
        ++result.accepted_steps;
        ++streak;
        if (streak >= config.recover_after && dt < config.dt) {
            dt = std::min(dt * config.refine_factor, config.dt);
            streak = 0;
        }
        const bool crossed = sup_new >= config.blowup_threshold;
        if (crossed || result.accepted_steps % config.observer_stride == 0 ||
            state.time >= config.t_max)
            notify(state, dt_local);
        if (crossed) {
            result.report.blew_up = true;
            result.report.t_sim = state.time;
            result.report.final_norm = sup_new;
            result.report.dt_at_detection = dt_local;
            state.post_blow_up = !std::isfinite(sup_new);
            result.final_state = std::move(state);
            return result;
        }
    }

    result.report.final_norm = sup_abs_unchecked(state);
    result.final_state = std::move(state);
    return result;
}

double conserved_drift(const std::vector<double>& functional_values) {
    if (functional_values.empty())
        throw std::invalid_argument("conserved_drift requires a nonempty trajectory");
    const double q0 = functional_values.front();
    const double denom = std::max(std::abs(q0), 1.0);
    double drift = 0.0;
    for (double q : functional_values) drift = std::max(drift, std::abs(q - q0) / denom);
    return drift;
}

double conserved_drift(const std::vector<LatticeState>& trajectory,
                       const std::function<double(const LatticeState&)>& functional) {
    std::vector<double> values;
    values.reserve(trajectory.size());
    for (const auto& s : trajectory) values.push_back(functional(s));
    return conserved_drift(values);
}

Observer TrajectoryRecorder::observer() {
    return [this](const LatticeState& s, double) {
        Sample sample;
        sample.t = s.time;
        double sq = 0.0;
        for (complexd z : s.amplitudes) sq += std::norm(z);
        sample.norm2 = std::sqrt(sq);
        sample.norm_inf = sup_abs_unchecked(s);
        sample.extra.reserve(functionals_.size());
        for (const auto& [name, fn] : functionals_) sample.extra.push_back(fn(s));
        samples_.push_back(std::move(sample));
    };
}

std::vector<std::string> TrajectoryRecorder::column_names() const {
    std::vector<std::string> names{"t", "norm2", "norm_inf"};
    for (const auto& [name, fn] : functionals_) names.push_back(name);
    return names;
}

std::vector<double> TrajectoryRecorder::extra_series(size_t functional_index) const {
    std::vector<double> out;
    out.reserve(samples_.size());
    for (const auto& s : samples_) out.push_back(s.extra.at(functional_index));
    return out;
}

} // namespace dgl
