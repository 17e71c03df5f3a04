#include "dualgrid/plant.hpp"

#include <stdexcept>

namespace dualgrid {

void PlantParams::validate() const {
    if (!(v_in > 0.0)) throw std::invalid_argument("PlantParams: v_in must be > 0");
    if (!(l_f > 0.0)) throw std::invalid_argument("PlantParams: l_f must be > 0");
    if (!(c_out > 0.0)) throw std::invalid_argument("PlantParams: c_out must be > 0");
}

PwmDelay::PwmDelay(double tau_s, double v_in_v) : time_constant(tau_s), gain(1.0 / v_in_v) {
    if (!(tau_s > 0.0)) throw std::invalid_argument("PwmDelay: time constant must be > 0");
    if (!(v_in_v > 0.0)) throw std::invalid_argument("PwmDelay: v_in must be > 0");
}

RationalTf PwmDelay::lag_tf() const { return RationalTf({1.0}, {1.0, time_constant}); }

PlantTfs derive_plant(const PlantParams& params) {
    params.validate();
    const double lc = params.l_f * params.c_out;
    const std::vector<double> den{1.0, 0.0, lc};
    PlantTfs tfs;
    tfs.g_di = RationalTf({0.0, params.v_in * params.c_out}, den);
    tfs.g_oi = RationalTf({1.0}, den);
    tfs.g_dv = RationalTf({params.v_in}, den);
    tfs.z_o = RationalTf({0.0, params.l_f}, den);
    return tfs;
}

RationalTf current_loop_gain(const PlantTfs& plant, const PwmDelay& pwm,
                             const RationalTf& r_i) {
    const RationalTf g_t_over_vin = pwm.lag_tf() * RationalTf::constant(pwm.gain);
    const RationalTf forward = plant.g_di * g_t_over_vin;
    const RationalTf inner = RationalTf::constant(1.0) - plant.g_dv * g_t_over_vin;
    return (forward / inner).simplify() * r_i;
}

RationalTf simplified_current_loop(double l_f, const RationalTf& r_i) {
    if (!(l_f > 0.0)) throw std::invalid_argument("simplified_current_loop: l_f must be > 0");
    return r_i / RationalTf({0.0, l_f}, {1.0});
}

RationalTf simplified_voltage_loop(double c_f, const RationalTf& r_v) {
    if (!(c_f > 0.0)) throw std::invalid_argument("simplified_voltage_loop: c_f must be > 0");
    return r_v / RationalTf({0.0, c_f}, {1.0});
}

}  // namespace dualgrid
