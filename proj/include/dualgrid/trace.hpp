#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dualgrid {

/// Uniformly sampled named signal records from one simulation run.
/// All signals have equal length; sample k is at time t0 + k*dt_record.
class SimTrace {
public:
    SimTrace(double t0, double dt_record, std::vector<std::string> signal_names);

    /// Appends one sample per signal; values must match the signal count.
    void append_row(std::span<const double> values);

    std::size_t size() const { return columns_.empty() ? 0 : columns_.front().size(); }
    const std::vector<std::string>& signal_names() const { return names_; }
    bool has_signal(std::string_view name) const;
    /// Throws std::out_of_range for an unknown signal name.
    std::span<const double> signal(std::string_view name) const;

    double t0() const { return t0_; }
    double dt_record() const { return dt_record_; }
    double time_at(std::size_t k) const { return t0_ + static_cast<double>(k) * dt_record_; }

    /// Index of the first sample at or after time t (clamped to the range).
    std::size_t index_at_or_after(double t) const;

private:
    double t0_;
    double dt_record_;
    std::vector<std::string> names_;
    std::vector<std::vector<double>> columns_;
};

}  // namespace dualgrid
