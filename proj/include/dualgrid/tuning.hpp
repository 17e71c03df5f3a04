#pragma once

#include "dualgrid/per_unit.hpp"
#include "dualgrid/rational_tf.hpp"

namespace dualgrid {

/// PI controller parameters in the form k_p * (1 + s*T_i) / (s*T_i).
struct PiGains {
    double k_p = 0.0;  // proportional gain
    double t_i = 0.0;  // integral time constant, s
};

/// The continuous-time PI transfer function for a PiGains set.
RationalTf pi_tf(const PiGains& gains);

/// Internal-model-control tuning of the current loop: k_p = omega_bi * l_f,
/// t_i = c_i / omega_bi. Identical for the AC d/q axes and the DC converter.
PiGains tune_current_controller(double l_f, double omega_bi, double c_i);

/// Internal-model-control tuning of the voltage loop: k_p = omega_bv * c_f,
/// t_i = c_v / omega_bv.
PiGains tune_voltage_controller(double c_f, double omega_bv, double c_v);

/// Power-frequency droop parameters together with their swing-equation form.
/// Invariants: h = 1/(2*omega_c*m_p) and k_d = 1/m_p.
struct AcDroopParams {
    double m_p = 0.0;      // p.u. frequency per p.u. power
    double omega_c = 0.0;  // power LPF corner, rad/s
    double h = 0.0;        // emulated inertia constant, s
    double k_d = 0.0;      // damping coefficient, p.u.
};

/// Current-voltage droop parameters of the DC converter.
struct DcDroopParams {
    double k_d = 0.0;      // p.u. current per p.u. voltage
    double c_dc_pu = 0.0;  // bus capacitance as a time constant, s
};

/// Swing-equation parameters emulated by a droop + power LPF:
/// h = 1/(2*omega_c*m_p), k_d = 1/m_p.
AcDroopParams swing_from_droop(double m_p, double omega_c);

/// Inverse of swing_from_droop: m_p = 1/k_d, omega_c = k_d/(2*h).
AcDroopParams droop_from_swing(double h, double k_d);

/// Maps the DC droop design onto the dual AC droop: the bus capacitance time
/// constant supplies 2h, the droop gains coincide.
AcDroopParams duality_map(double c_dc_farads, double k_d_dc, const PerUnitBase& base);

struct TimescaleReport {
    bool ok = false;
    double ratio = 0.0;      // omega_bv / omega_c
    double ratio_min = 0.0;
};

/// Checks the separation between droop and voltage-control dynamics,
/// omega_bv/omega_c >= ratio_min (boundary passes).
TimescaleReport timescale_check(double omega_c, double omega_bv, double ratio_min = 100.0);

}  // namespace dualgrid
