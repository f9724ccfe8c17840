#pragma once

#include <optional>

#include "dgl/lattice.hpp"
#include "dgl/models.hpp"
#include "dgl/weight.hpp"

namespace dgl {

// Blow-up functionals. sigma is caller-supplied throughout; it ties the
// functional to the spatial scaling of the data.
double m_imag(const LatticeState& state, double gamma, double sigma); // e^{-gamma t} L^{-sigma} Im sum u_n
double n_real(const LatticeState& state, double gamma, double sigma); // e^{-gamma t} L^{-sigma} Re sum u_n
double mass_sigma(const LatticeState& state, double sigma);           // L^{-sigma} sum |u_n|^2

// L^{-sigma} [ lambda/2 sum |(B_d u)_n|^2 - gamma/2 sum |u_n|^2
//              - k/(p+1) sum |u_n|^(p+1) ].
double energy_drgl(const LatticeState& state, double lambda, double gamma, double k, double p,
                   double sigma);

double charge(const LatticeState& state); // sum |u_n|^2

// hamiltonian = alpha/2 sum |(B u)_n|^2 - beta/(p+1) sum |u_n|^(p+1);
// e1 trades the difference term for the full ell^2_1 norm, i.e.
// e1 = hamiltonian + alpha/2 sum |u_n|^2. Both are conserved along
// gauge-DNLS trajectories.
struct DnlsEnergies {
    double hamiltonian;
    double e1;
};
DnlsEnergies hamiltonian_dnls(const LatticeState& state, double alpha, double beta, double p);

// Input for the closed-form blow-up bounds. m0 is M(0) (case A) or N(0)
// (case B), both required positive.
struct BoundInput {
    DCGLParams params;
    double p = 2.0;    // > 1
    double sigma = 1.0;
    int site_count = 1; // L
    double m0 = 1.0;
};

enum class NonGaugeCase { imag_beta, real_k };

// Upper bound on the maximal existence time for the non-gauge nonlinearity.
// gamma != 0: T* = ln(1 + (gamma/b) m0^(1-p) L^(-(1-p)(1-sigma))) / ((p-1) gamma),
// gamma  = 0: T* = m0^(1-p) L^(-(1-p)(1-sigma)) / ((p-1) b),
// where b = beta (imag_beta) or k (real_k). valid records the condition
// (gamma/b) m0^(1-p) > -L^((1-p)(1-sigma)); when it fails t_star is absent.
// Throws hypothesis_error when b <= 0 or m0 <= 0.
struct BoundResult {
    std::optional<double> t_star;
    bool valid = false;
};
BoundResult bound_nongauge(const BoundInput& input, NonGaugeCase which);

// Gauge DRGL bound T* <= (p+1)/(k (p-1)^2) * L^(-(1-p)(1-sigma)) / m0^((p-1)/2).
// Caller must have checked E(u_0) <= 0. Throws hypothesis_error when k <= 0.
double bound_gauge_drgl(const BoundInput& input);

// Smallest eigenvalue of the (2N+1)-point Dirichlet second-difference
// operator -A_d: 2 (1 - cos(pi / (2N+2))).
double lambda1_star(int half_width);

// Absorbing-ball data. kind tells which block is populated; unused entries
// are NaN.
struct AttractorReport {
    enum class Kind { finite, weighted };
    Kind kind = Kind::finite;

    // finite lattice (Proposition on the dissipative gauge case)
    double k1 = 0.0;
    double rho0 = 0.0;
    double rho_limit = 0.0; // asymptotic bound on ||u||_2^2
    double rho1 = 0.0;      // chosen ball radius, rho1^2 > rho_limit required
    double t0 = 0.0;        // data-independent entry time
    double lambda1 = 0.0;
    bool trivial_dynamics = false; // gamma/lambda < lambda1*

    // weighted lattice
    double sigma0 = 0.0;
    double rho_sq = 0.0;     // ||g||^2_theta / (2 sigma0 epsilon)
    double entry_time = 0.0; // (1/(2 sigma0)) log(R^2 / (rho1^2 - rho^2))
};

// Finite-lattice ball from k = -m < 0:
//   k1 = m L^((1-p)/2),
//   rho0 = (p-1)/(p+1) (2/(k1(p+1)))^(1/(p-1)) gamma^((p+1)/(p-1)) for
//   gamma > 0 and 0 otherwise (the gamma term is already dissipative),
//   rho_limit = (2 rho0 / k1)^(1/(p+1)),
//   t0 = (2/(k1 p)) (rho1^2 - rho_limit)^(-p).
// Throws hypothesis_error for k >= 0 or lambda <= 0, std::invalid_argument
// for rho1^2 <= rho_limit.
AttractorReport absorbing_finite(const DCGLParams& params, double p, int half_width, double rho1);

// sigma0 = delta_hat - eps/2 - 2 beta_hat - |alpha_hat| D d_lower^(-1/2)
//          - |beta_hat| (1 + d_upper/2 + d_lower^(-1)/2).
// Negative values are valid answers; the dissipative regime additionally
// needs sigma0 > 0 and zeta_hat > 0.
double sigma0(const GeneralParams& params, const Weight& weight, double epsilon);

// Weighted ball: rho^2 = g_norm_sq/(2 sigma0 eps) and the entry time for data
// of weighted norm R. f = 0 gives rho = 0 and pure exponential decay at rate
// 2 sigma0. Throws hypothesis_error for sigma0 <= 0, std::invalid_argument
// for rho1^2 <= rho^2.
AttractorReport absorbing_weighted(double g_norm_sq, double sigma0_value, double epsilon, double R,
                                   double rho1);

// sum_{|n| > 2M} theta_n |u_n|^2. When 2M >= N there are no such sites and
// the value 0 is returned with in_range = false.
struct TailMass {
    double value = 0.0;
    bool in_range = true;
};
TailMass tail_mass(const LatticeState& state, const Weight& weight, int window_m);

} // namespace dgl
