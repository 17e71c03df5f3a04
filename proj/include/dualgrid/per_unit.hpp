#pragma once

namespace dualgrid {

/// Per-unit base quantities for a single-base normalization: all conversions
/// divide by s_base/v_base and the quantities derived from them.
///
/// Inductance and capacitance normalize to time constants (seconds):
///   C_pu = C * z_base,  L_pu = L / z_base.
class PerUnitBase {
public:
    /// Throws std::invalid_argument unless both bases are strictly positive.
    PerUnitBase(double s_base_w, double v_base_v);

    double s_base() const { return s_base_; }
    double v_base() const { return v_base_; }
    double i_base() const { return i_base_; }
    double z_base() const { return z_base_; }

    double voltage_to_pu(double volts) const { return volts / v_base_; }
    double voltage_from_pu(double pu) const { return pu * v_base_; }
    double current_to_pu(double amps) const { return amps / i_base_; }
    double current_from_pu(double pu) const { return pu * i_base_; }
    double power_to_pu(double watts) const { return watts / s_base_; }
    double power_from_pu(double pu) const { return pu * s_base_; }
    double impedance_to_pu(double ohms) const { return ohms / z_base_; }
    double impedance_from_pu(double pu) const { return pu * z_base_; }

    /// Capacitance as a per-unit time constant in seconds.
    double capacitance_to_pu(double farads) const { return farads * z_base_; }
    double capacitance_from_pu(double seconds) const { return seconds / z_base_; }
    /// Inductance as a per-unit time constant in seconds.
    double inductance_to_pu(double henries) const { return henries / z_base_; }
    double inductance_from_pu(double seconds) const { return seconds * z_base_; }

private:
    double s_base_;
    double v_base_;
    double i_base_;
    double z_base_;
};

}  // namespace dualgrid
