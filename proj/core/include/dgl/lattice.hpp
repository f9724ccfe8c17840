#pragma once

#include <complex>
#include <vector>

namespace dgl {

using complexd = std::complex<double>;

// One-dimensional lattice of 2N+1 sites indexed n in [-N, N]. Ghost sites
// +-(N+1) are identically zero (Dirichlet). A truncated infinite lattice is
// represented the same way; the kind only records intent.
struct LatticeGeometry {
    enum class Kind { finite_dirichlet, truncated_infinite };

    Kind kind = Kind::finite_dirichlet;
    int half_width = 0; // N >= 0

    int site_count() const { return 2 * half_width + 1; } // L = 2N+1
    int index_of(int n) const { return n + half_width; }  // n in [-N, N]
    int site_of(int index) const { return index - half_width; }

    bool operator==(const LatticeGeometry&) const = default;
};

// Complex amplitude per site plus the trajectory time it belongs to.
// Value type: copy freely, never mutated in place by library code.
struct LatticeState {
    LatticeGeometry geometry;
    std::vector<complexd> amplitudes; // size L
    double time = 0.0;
    bool post_blow_up = false;

    complexd at_site(int n) const { return amplitudes[static_cast<size_t>(geometry.index_of(n))]; }
};

LatticeState zero_state(const LatticeGeometry& geometry);

// Zero-extension (or restriction) onto another half-width; sites present in
// both keep their values.
LatticeState reframed(const LatticeState& state, const LatticeGeometry& target);

// Entrywise finiteness. Blown-up states are allowed to carry non-finite
// amplitudes only when flagged.
bool all_finite(const LatticeState& state);

// Sup of |u_n| without finiteness checks; returns +inf if any entry is
// non-finite. Used by the integrator on candidate states.
double sup_abs_unchecked(const LatticeState& state);

// (sum |u_n|^p)^(1/p); p = infinity gives max |u_n|. Throws std::domain_error
// on non-finite amplitudes.
double norm_p(const LatticeState& state, double p);

// Re sum u_n conj(v_n). Throws std::invalid_argument on geometry mismatch.
double real_inner_product(const LatticeState& u, const LatticeState& v);

// Sharp constants with c1*|psi|_p <= |psi|_q <= c2*|psi|_p on L sites for
// p <= q: c1 = L^(1/q - 1/p), c2 = 1 (with 1/inf = 0).
struct NormEquivalence {
    double c1;
    double c2;
};
NormEquivalence norm_equivalence_constants(double p, double q, int site_count);

} // namespace dgl
