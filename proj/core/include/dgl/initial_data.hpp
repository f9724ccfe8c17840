#pragma once

#include <cstdint>

#include "dgl/lattice.hpp"

namespace dgl {

// Spatial decay profile |u_n(0)| = amplitude * (|n|+1)^delta. The blow-up
// scaling exponent sigma = 1 + delta is derived, never stored.
struct ScalingProfile {
    double delta = 0.0;
    double amplitude = 1.0;
    double phase = 0.0; // base phase, used by the random-phase kind

    double sigma() const { return 1.0 + delta; }
};

enum class DataKind {
    imaginary_positive, // u_n = i |u_n|, so Im sum u_n > 0
    real_positive,      // u_n = |u_n|, so Re sum u_n > 0
    random_phase,       // seeded phases, no sign constraint
};

// Deterministic for a given seed. The seed only affects random_phase.
LatticeState make_initial_data(const LatticeGeometry& geometry, const ScalingProfile& profile,
                               DataKind kind, std::uint64_t seed);

// Convenience: u scaled by a real factor (used to hit norm or M(0) targets).
LatticeState scaled(const LatticeState& state, double factor);

} // namespace dgl
