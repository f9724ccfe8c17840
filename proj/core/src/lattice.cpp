#include "dgl/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dgl {

namespace {

bool finite(complexd z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(const LatticeState& state) {
    if (!all_finite(state))
        throw std::domain_error("non-finite amplitude in lattice state");
}

} // namespace

LatticeState zero_state(const LatticeGeometry& geometry) {
    LatticeState state;
    state.geometry = geometry;
    state.amplitudes.assign(static_cast<size_t>(geometry.site_count()), complexd{0.0, 0.0});
    return state;
}

LatticeState reframed(const LatticeState& state, const LatticeGeometry& target) {
    LatticeState out = zero_state(target);
    out.time = state.time;
    out.post_blow_up = state.post_blow_up;
    const int half = std::min(state.geometry.half_width, target.half_width);
    for (int n = -half; n <= half; ++n)
        out.amplitudes[static_cast<size_t>(target.index_of(n))] = state.at_site(n);
    return out;
}

bool all_finite(const LatticeState& state) {
    return std::all_of(state.amplitudes.begin(), state.amplitudes.end(),
                       [](complexd z) { return finite(z); });
}

double sup_abs_unchecked(const LatticeState& state) {
    double sup = 0.0;
    for (complexd z : state.amplitudes) {
        if (!finite(z)) return std::numeric_limits<double>::infinity();
        sup = std::max(sup, std::abs(z));
    }
    return sup;
}

double norm_p(const LatticeState& state, double p) {
    require_finite(state);
    if (p < 1.0) throw std::invalid_argument("norm_p requires p >= 1");
    if (std::isinf(p)) return sup_abs_unchecked(state);
    double sum = 0.0;
    for (complexd z : state.amplitudes) sum += std::pow(std::abs(z), p);
    return std::pow(sum, 1.0 / p);
}

double real_inner_product(const LatticeState& u, const LatticeState& v) {
    if (u.geometry != v.geometry)
        throw std::invalid_argument("real_inner_product: geometry mismatch");
    require_finite(u);
    require_finite(v);
    double sum = 0.0;
    for (size_t i = 0; i < u.amplitudes.size(); ++i)
        sum += (u.amplitudes[i] * std::conj(v.amplitudes[i])).real();
    return sum;
}

NormEquivalence norm_equivalence_constants(double p, double q, int site_count) {
    if (p > q) throw std::invalid_argument("norm_equivalence_constants requires p <= q");
    if (p < 1.0) throw std::invalid_argument("norm_equivalence_constants requires p >= 1");
    if (site_count < 1) throw std::invalid_argument("norm_equivalence_constants requires L >= 1");
    const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
    const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
    return {std::pow(static_cast<double>(site_count), inv_q - inv_p), 1.0};
}

} // namespace dgl
