#include "dualgrid/tuning.hpp"

#include <stdexcept>
#include <string>

namespace dualgrid {

namespace {
void require_positive(double value, const char* what) {
    if (!(value > 0.0)) {
        throw std::invalid_argument(std::string(what) + " must be > 0");
    }
}
}  // namespace

RationalTf pi_tf(const PiGains& gains) {
    // k_p * (1 + s*T_i) / (s*T_i)
    return RationalTf({gains.k_p, gains.k_p * gains.t_i}, {0.0, gains.t_i});
}

PiGains tune_current_controller(double l_f, double omega_bi, double c_i) {
    require_positive(l_f, "tune_current_controller: l_f");
    require_positive(omega_bi, "tune_current_controller: omega_bi");
    require_positive(c_i, "tune_current_controller: c_i");
    return PiGains{omega_bi * l_f, c_i / omega_bi};
}

PiGains tune_voltage_controller(double c_f, double omega_bv, double c_v) {
    require_positive(c_f, "tune_voltage_controller: c_f");
    require_positive(omega_bv, "tune_voltage_controller: omega_bv");
    require_positive(c_v, "tune_voltage_controller: c_v");
    return PiGains{omega_bv * c_f, c_v / omega_bv};
}

AcDroopParams swing_from_droop(double m_p, double omega_c) {
    require_positive(m_p, "swing_from_droop: m_p");
    require_positive(omega_c, "swing_from_droop: omega_c");
    AcDroopParams p;
    p.m_p = m_p;
    p.omega_c = omega_c;
    p.h = 1.0 / (2.0 * omega_c * m_p);
    p.k_d = 1.0 / m_p;
    return p;
}

AcDroopParams droop_from_swing(double h, double k_d) {
    require_positive(h, "droop_from_swing: h");
    require_positive(k_d, "droop_from_swing: k_d");
    AcDroopParams p;
    p.h = h;
    p.k_d = k_d;
    p.m_p = 1.0 / k_d;
    p.omega_c = 1.0 / (2.0 * h * p.m_p);
    return p;
}

AcDroopParams duality_map(double c_dc_farads, double k_d_dc, const PerUnitBase& base) {
    require_positive(c_dc_farads, "duality_map: c_dc");
    require_positive(k_d_dc, "duality_map: k_d_dc");
    const double c_dc_pu = base.capacitance_to_pu(c_dc_farads);
    return droop_from_swing(c_dc_pu / 2.0, k_d_dc);
}

TimescaleReport timescale_check(double omega_c, double omega_bv, double ratio_min) {
    require_positive(omega_c, "timescale_check: omega_c");
    require_positive(omega_bv, "timescale_check: omega_bv");
    require_positive(ratio_min, "timescale_check: ratio_min");
    TimescaleReport report;
    report.ratio = omega_bv / omega_c;
    report.ratio_min = ratio_min;
    report.ok = report.ratio >= ratio_min;
    return report;
}

}  // namespace dualgrid
