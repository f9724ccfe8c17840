#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dgl/lattice.hpp"

namespace dgl {

// Fixed-step RK4 with emergency step halving. A step whose sup-norm growth
// exceeds growth_guard (or that produces non-finite values) is rolled back
// and retried with dt/refine_factor, down to dt_min. After recover_after
// accepted steps the step size doubles back toward dt.
struct IntegratorConfig {
    double dt = 1e-3;
    double t_max = 10.0;
    double blowup_threshold = 1e6; // sup-norm
    double dt_min = 1e-12;
    int refine_factor = 2;
    double growth_guard = 10.0; // max sup-norm growth factor per step
    int observer_stride = 1;
    int recover_after = 50;

    void validate() const; // throws std::invalid_argument
};

struct BlowUpReport {
    bool blew_up = false;
    double t_sim = 0.0;       // first threshold-crossing time
    double threshold = 1e6;
    double final_norm = 0.0;  // sup-norm at termination
    long refinements = 0;     // rolled-back steps
    double dt_at_detection = 0.0; // T_sim resolution
    double growth_guard = 10.0;   // echoed for reproducibility
    bool low_confidence = false;  // dt_min hit with non-finite values
    std::optional<double> bound_t_star;
    bool bound_valid = false;
};

using RhsFn = std::function<LatticeState(const LatticeState&)>;
using Observer = std::function<void(const LatticeState&, double /*dt_local*/)>;

// Classical RK4 update; time advances by dt. A non-finite stage value returns
// the input state flagged post-blow-up, with time set to the failing stage.
LatticeState rk4_step(const LatticeState& state, const RhsFn& rhs, double dt);

struct IntegrationResult {
    LatticeState final_state;
    BlowUpReport report;
    long accepted_steps = 0;
};

// Observers fire on the initial state and then every observer_stride accepted
// steps (and always on the final accepted state).
IntegrationResult integrate(const LatticeState& state0, const RhsFn& rhs,
                            const IntegratorConfig& config,
                            const std::vector<Observer>& observers = {});

// max_t |Q(t) - Q(0)| / max(|Q(0)|, 1) over recorded samples.
double conserved_drift(const std::vector<double>& functional_values);
double conserved_drift(const std::vector<LatticeState>& trajectory,
                       const std::function<double(const LatticeState&)>& functional);

// Streams (t, norm2, norm_inf, named functionals) rows; the trajectory record
// behind the CSV output.
class TrajectoryRecorder {
public:
    struct Sample {
        double t;
        double norm2;
        double norm_inf;
        std::vector<double> extra;
    };

    explicit TrajectoryRecorder(
        std::vector<std::pair<std::string, std::function<double(const LatticeState&)>>> functionals = {})
        : functionals_(std::move(functionals)) {}

    Observer observer();
    const std::vector<Sample>& samples() const { return samples_; }
    std::vector<std::string> column_names() const;
    std::vector<double> extra_series(size_t functional_index) const;

private:
    std::vector<std::pair<std::string, std::function<double(const LatticeState&)>>> functionals_;
    std::vector<Sample> samples_;
};

} // namespace dgl
