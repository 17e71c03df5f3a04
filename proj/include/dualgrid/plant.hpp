#pragma once

#include "dualgrid/rational_tf.hpp"

namespace dualgrid {

enum class PlantKind { AcDqAxis, Dc };

/// Physical values of the averaged converter stage: input DC voltage, filter
/// inductance, and the output capacitance (filter cap for AC, bus cap for DC).
struct PlantParams {
    double v_in = 0.0;   // V
    double l_f = 0.0;    // H
    double c_out = 0.0;  // F
    PlantKind kind = PlantKind::Dc;

    /// Throws std::invalid_argument on non-positive values.
    void validate() const;
};

/// Open-loop small-signal transfer functions. All four share the
/// denominator 1 + s^2*L*C.
struct PlantTfs {
    RationalTf g_di;  // duty -> inductor current
    RationalTf g_oi;  // output current -> inductor current
    RationalTf g_dv;  // duty -> output voltage
    RationalTf z_o;   // output impedance
};

/// First-order modulator delay, gain 1/v_in.
struct PwmDelay {
    double time_constant = 0.0;  // s
    double gain = 0.0;           // 1/V

    PwmDelay() = default;
    PwmDelay(double tau_s, double v_in_v);

    /// The lag itself, 1/(1 + s*tau), without the 1/v_in gain.
    RationalTf lag_tf() const;
};

///   G_di = v_in*s*C / (1 + s^2*L*C)     G_oi = 1 / (1 + s^2*L*C)
///   G_dv = v_in / (1 + s^2*L*C)         Z_o  = s*L / (1 + s^2*L*C)
PlantTfs derive_plant(const PlantParams& params);

/// Current-loop gain with the modulator delay and the output-voltage
/// feedforward path included:
///   T_i = [G_di*G_t/v_in] / [1 - G_dv*G_t/v_in] * R_i
RationalTf current_loop_gain(const PlantTfs& plant, const PwmDelay& pwm,
                             const RationalTf& r_i);

/// First-order tuning approximation of the current loop: R_i / (s*L).
RationalTf simplified_current_loop(double l_f, const RationalTf& r_i);

/// First-order tuning approximation of the voltage loop: R_v / (s*C).
RationalTf simplified_voltage_loop(double c_f, const RationalTf& r_v);

}  // namespace dualgrid
