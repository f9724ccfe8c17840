#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgl/lattice.hpp"

namespace dgl {

// Weight sequence theta_n with the (WS) constants:
//   theta_n >= 1,
//   |theta_{n+1} - theta_n| <= D * theta_n,
//   d_lower * theta_n <= theta_{n+1} <= d_upper * theta_n.
// The exponential preset theta_n = exp(mu|n|) carries D = e^mu - 1,
// d_upper = e^mu, d_lower = e^-mu. Table weights are symmetric in n, indexed
// by |n|, extended by their last entry, and carry caller-supplied constants
// (they are validated, not inferred).
class Weight {
public:
    static Weight exponential(double mu);
    static Weight from_table(std::vector<double> values_by_abs_n, double big_d,
                             double d_lower, double d_upper);

    double value(int n) const;
    double big_d() const { return big_d_; }
    double d_lower() const { return d_lower_; }
    double d_upper() const { return d_upper_; }
    std::optional<double> mu() const { return mu_; }

private:
    Weight() = default;
    std::optional<double> mu_;
    std::vector<double> table_;
    double big_d_ = 0.0;
    double d_lower_ = 1.0;
    double d_upper_ = 1.0;
};

// (sum theta_n |u_n|^p)^(1/p) for p in [1, inf). Same error behavior as
// norm_p.
double weighted_norm(const LatticeState& state, const Weight& weight, double p);

// Pointwise (WS) check over [n_lo, n_hi]. Violations are report content, not
// errors. constants_positive flags D, d_lower, d_upper <= 0 (e.g. the mu = 0
// preset has D = 0; supply any D > 0 to make such a weight admissible).
struct WeightValidation {
    bool pointwise_ok = true;
    bool constants_positive = true;
    std::optional<int> first_violation;
    std::string message;

    bool valid() const { return pointwise_ok && constants_positive; }
};
WeightValidation validate_weight(const Weight& weight, int n_lo, int n_hi);

} // namespace dgl
