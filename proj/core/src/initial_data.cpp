#include "dgl/initial_data.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace dgl {

namespace {

// Canonical uniform in [0, 1) from the top 53 bits; keeps streams identical
// across standard library implementations.
double canonical(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

LatticeState make_initial_data(const LatticeGeometry& geometry, const ScalingProfile& profile,
                               DataKind kind, std::uint64_t seed) {
    if (!(profile.amplitude > 0.0))
        throw std::invalid_argument("make_initial_data requires a positive amplitude");
    LatticeState state = zero_state(geometry);
    std::mt19937_64 rng(seed);
    const int half = geometry.half_width;
    for (int n = -half; n <= half; ++n) {
        const double modulus =
            profile.amplitude * std::pow(static_cast<double>(std::abs(n)) + 1.0, profile.delta);
        complexd value;
        switch (kind) {
            case DataKind::imaginary_positive: value = complexd{0.0, modulus}; break;
            case DataKind::real_positive: value = complexd{modulus, 0.0}; break;
            case DataKind::random_phase:
            default:
                value = std::polar(modulus, profile.phase + 2.0 * std::numbers::pi * canonical(rng));
                break;
        }
        state.amplitudes[static_cast<size_t>(geometry.index_of(n))] = value;
    }
    return state;
}

LatticeState scaled(const LatticeState& state, double factor) {
    LatticeState out = state;
    for (auto& z : out.amplitudes) z *= factor;
    return out;
}

} // namespace dgl
