#include "dgl/weight.hpp"

#include <cmath>
#include <stdexcept>

namespace dgl {

Weight Weight::exponential(double mu) {
    if (mu < 0.0) throw std::invalid_argument("exponential weight requires mu >= 0");
    Weight w;
    w.mu_ = mu;
    w.big_d_ = std::expm1(mu);
    w.d_upper_ = std::exp(mu);
    w.d_lower_ = std::exp(-mu);
    return w;
}

Weight Weight::from_table(std::vector<double> values_by_abs_n, double big_d, double d_lower,
                          double d_upper) {
    if (values_by_abs_n.empty()) throw std::invalid_argument("weight table must be nonempty");
    Weight w;
    w.table_ = std::move(values_by_abs_n);
    w.big_d_ = big_d;
    w.d_lower_ = d_lower;
    w.d_upper_ = d_upper;
    return w;
}

double Weight::value(int n) const {
    const size_t a = static_cast<size_t>(n < 0 ? -static_cast<long>(n) : n);
    if (mu_) return std::exp(*mu_ * static_cast<double>(a));
    return a < table_.size() ? table_[a] : table_.back();
}

double weighted_norm(const LatticeState& state, const Weight& weight, double p) {
    if (!(p >= 1.0) || std::isinf(p))
        throw std::invalid_argument("weighted_norm requires p in [1, inf)");
    if (!all_finite(state)) throw std::domain_error("non-finite amplitude in lattice state");
    const int half = state.geometry.half_width;
    double sum = 0.0;
    for (int n = -half; n <= half; ++n)
        sum += weight.value(n) * std::pow(std::abs(state.at_site(n)), p);
    return std::pow(sum, 1.0 / p);
}

WeightValidation validate_weight(const Weight& weight, int n_lo, int n_hi) {
    WeightValidation report;
    if (!(weight.big_d() > 0.0) || !(weight.d_lower() > 0.0) || !(weight.d_upper() > 0.0)) {
        report.constants_positive = false;
        report.message = "constants D, d_lower, d_upper must be positive; supply any D > 0 "
                         "for a constant weight";
    }
    constexpr double slack = 1e-12; // tolerate roundoff at equality cases
    for (int n = n_lo; n <= n_hi; ++n) {
        const double t0 = weight.value(n);
        const double t1 = weight.value(n + 1);
        const double scale = 1.0 + slack;
        bool ok = t0 >= 1.0 - slack;
        ok = ok && std::abs(t1 - t0) <= weight.big_d() * t0 * scale + slack;
        ok = ok && weight.d_lower() * t0 <= t1 * scale && t1 <= weight.d_upper() * t0 * scale;
        if (!ok) {
            report.pointwise_ok = false;
            report.first_violation = n;
            report.message = "(WS) violated at n = " + std::to_string(n);
            break;
        }
    }
    return report;
}

} // namespace dgl
