#pragma once

#include <functional>
#include <optional>

#include "dgl/lattice.hpp"

namespace dgl {

// Parameters of the general complex lattice equation
//   i du/dt + (alpha_hat + i beta_hat) A_d u + (gamma_hat + i delta_hat) u
//           + (eta_hat + i zeta_hat) F(u) = g,
// solved for du/dt by rhs_general.
struct GeneralParams {
    double alpha_hat = 0.0;
    double beta_hat = 0.0;
    double gamma_hat = 0.0;
    double delta_hat = 0.0;
    double eta_hat = 0.0;
    double zeta_hat = 0.0;
    std::optional<LatticeState> forcing; // g_n
};

// The (lambda, alpha, k, beta, gamma) form
//   du/dt = (lambda + i alpha) A_d u + gamma u + F(u) + f      (source)
//   du/dt = (lambda + i alpha) A_d u + gamma u - F(u) + f      (lhs)
// with F(s) = (k + i beta)|s|^(p-1) s or (k + i beta)|s|^p.
struct DCGLParams {
    double lambda = 0.0; // >= 0
    double alpha = 0.0;
    double k = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    std::optional<LatticeState> forcing; // f_n
};

// Power nonlinearities, plus the user-supplied F(z) = f(|z|^2) z form whose
// Lipschitz machinery is not constructive and therefore unsupported by
// lipschitz_constant.
struct Nonlinearity {
    enum class Kind { gauge, non_gauge, general_f };

    Kind kind = Kind::gauge;
    double p = 2.0;   // > 1
    double c = 1.0;   // constant in the Lipschitz estimate, caller-supplied
    std::function<double(double)> f;       // general_f only
    std::function<double(double)> f_prime; // general_f only

    static Nonlinearity gauge(double p, double c = 1.0) { return {Kind::gauge, p, c, {}, {}}; }
    static Nonlinearity non_gauge(double p, double c = 1.0) { return {Kind::non_gauge, p, c, {}, {}}; }
};

enum class SignConvention { source, lhs };

// (A_d u)_n = u_{n-1} - 2 u_n + u_{n+1}, ghost values zero.
LatticeState discrete_laplacian(const LatticeState& state);

// (B_d u)_n = u_{n+1} - u_n, ghost value zero at n = N.
LatticeState forward_difference(const LatticeState& state);

// coeff * |u_n|^(p-1) u_n (gauge), coeff * |u_n|^p (non-gauge),
// coeff * f(|u_n|^2) u_n (general_f), componentwise.
LatticeState apply_nonlinearity(const LatticeState& state, const Nonlinearity& nl, complexd coeff);

// du/dt = i [ (alpha_hat + i beta_hat) A_d u + (gamma_hat + i delta_hat) u
//             + (eta_hat + i zeta_hat) F(u) - g ],  F evaluated with coeff 1.
LatticeState rhs_general(const LatticeState& state, const GeneralParams& params,
                         const Nonlinearity& nl);

// alpha_hat = alpha, beta_hat = -lambda, gamma_hat = 0, delta_hat = -gamma,
// eta_hat = -beta, zeta_hat = k, g = i f. rhs_general of the image equals
// rhs_dcgl with the lhs convention.
GeneralParams dcgl_to_general(const DCGLParams& params);

LatticeState rhs_dcgl(const LatticeState& state, const DCGLParams& params, const Nonlinearity& nl,
                      SignConvention convention);

// L(R) = 2 c R^(p-1). Throws hypothesis_error for general_f.
double lipschitz_constant(double radius, const Nonlinearity& nl);

// Lower bound on the remaining existence time, 1/(2(L(R)+1)), to be called
// with R = 2 ||u(t)||_2.
double local_existence_time(double radius, const Nonlinearity& nl);

} // namespace dgl
