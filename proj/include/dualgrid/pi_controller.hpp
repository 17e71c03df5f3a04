#pragma once

#include <optional>

#include "dualgrid/tuning.hpp"

namespace dualgrid {

/// Sampled PI controller with a forward-Euler integrator:
///   u_k = k_p*e_k + acc_k,   acc_{k+1} = acc_k + (k_p/t_i)*e_k*t_sample.
///
/// With an output limit set, the output is clamped symmetrically and the
/// integrator is frozen while the clamp is active (conditional integration).
/// t_i = +infinity disables the integral action.
class DiscretePi {
public:
    explicit DiscretePi(PiGains gains, std::optional<double> output_limit = std::nullopt);

    double step(double error, double t_sample);

    void preload(double integrator_value) { acc_ = integrator_value; }
    double integrator() const { return acc_; }
    const PiGains& gains() const { return gains_; }

private:
    PiGains gains_;
    std::optional<double> limit_;
    double acc_ = 0.0;
};

}  // namespace dualgrid
