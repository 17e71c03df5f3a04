#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dualgrid/trace.hpp"

namespace dualgrid {

/// Fixed-step co-simulation timing: continuous states advance every dt,
/// discrete controllers execute every t_sample (an integer multiple of dt).
struct SimConfig {
    double t_end = 0.0;           // s
    double dt = 1e-6;             // s
    double t_sample = 1e-5;       // s
    int record_decimation = 100;  // record every N continuous steps
    double t_settle = 0.0;        // unrecorded pre-roll before t = 0

    void validate() const;
    std::size_t steps() const;         // continuous steps over [0, t_end]
    std::size_t sample_every() const;  // continuous steps per controller period
    std::size_t settle_steps() const;
};

/// Sets a named steppable model input to a new absolute value at the first
/// step boundary at or after t.
struct StepEvent {
    double t = 0.0;
    std::string target;
    double new_value = 0.0;
};

class SimulationDivergedError : public std::runtime_error {
public:
    explicit SimulationDivergedError(double t);
    double time() const { return t_; }

private:
    double t_;
};

/// A converter model owned by a single run: continuous states integrated by
/// the engine, discrete controller state advanced on sample boundaries.
class ConverterModel {
public:
    virtual ~ConverterModel() = default;

    virtual std::span<double> state() = 0;
    virtual void derivatives(double t, std::span<const double> x,
                             std::span<double> dxdt) const = 0;

    /// Discrete controller update at a sample boundary; outputs are held
    /// (zero-order hold) until the next boundary.
    virtual void controller_step(double t, double t_sample) = 0;

    virtual bool is_steppable(std::string_view target) const = 0;
    virtual void apply_event(const StepEvent& event) = 0;

    /// Signal names recorded per sample, not counting the time column.
    virtual const std::vector<std::string>& trace_signals() const = 0;
    virtual void record_into(std::span<double> row) const = 0;
};

struct Rk4Workspace {
    std::vector<double> k1, k2, k3, k4, xtmp;
    void resize(std::size_t n) {
        if (k1.size() != n) {
            k1.resize(n); k2.resize(n); k3.resize(n); k4.resize(n); xtmp.resize(n);
        }
    }
};

/// Classical 4th-order Runge-Kutta update, in place. Deterministic: a fixed
/// arithmetic order, no reductions that depend on external state.
template <typename F>
void rk4_step(F&& f, double t, double dt, std::span<double> x, Rk4Workspace& ws) {
    const std::size_t n = x.size();
    ws.resize(n);
    f(t, std::span<const double>(x), std::span<double>(ws.k1));
    for (std::size_t i = 0; i < n; ++i) ws.xtmp[i] = x[i] + 0.5 * dt * ws.k1[i];
    f(t + 0.5 * dt, std::span<const double>(ws.xtmp), std::span<double>(ws.k2));
    for (std::size_t i = 0; i < n; ++i) ws.xtmp[i] = x[i] + 0.5 * dt * ws.k2[i];
    f(t + 0.5 * dt, std::span<const double>(ws.xtmp), std::span<double>(ws.k3));
    for (std::size_t i = 0; i < n; ++i) ws.xtmp[i] = x[i] + dt * ws.k3[i];
    f(t + dt, std::span<const double>(ws.xtmp), std::span<double>(ws.k4));
    for (std::size_t i = 0; i < n; ++i) {
        x[i] += dt / 6.0 * (ws.k1[i] + 2.0 * ws.k2[i] + 2.0 * ws.k3[i] + ws.k4[i]);
    }
}

using DerivativeFn =
    std::function<void(double t, std::span<const double> x, std::span<double> dxdt)>;

/// One RK4 update of a free-standing state vector. Throws
/// SimulationDivergedError when the update produces non-finite values.
std::vector<double> integrate_step(std::span<const double> state, const DerivativeFn& fn,
                                   double t, double dt);

/// Runs the model over [0, t_end]: events applied at the first boundary at or
/// after their time, controllers on sample boundaries, decimated recording.
/// Events must be sorted by time, lie within [0, t_end], and target known
/// steppable inputs.
SimTrace run(ConverterModel& model, const SimConfig& config,
             const std::vector<StepEvent>& events);

}  // namespace dualgrid
