#include "dualgrid/trace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dualgrid {

SimTrace::SimTrace(double t0, double dt_record, std::vector<std::string> signal_names)
    : t0_(t0), dt_record_(dt_record), names_(std::move(signal_names)) {
    if (!(dt_record > 0.0)) throw std::invalid_argument("SimTrace: dt_record must be > 0");
    if (names_.empty()) throw std::invalid_argument("SimTrace: need at least one signal");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        for (std::size_t j = i + 1; j < names_.size(); ++j) {
            if (names_[i] == names_[j]) {
                throw std::invalid_argument("SimTrace: duplicate signal name " + names_[i]);
            }
        }
    }
    columns_.resize(names_.size());
}

void SimTrace::append_row(std::span<const double> values) {
    if (values.size() != columns_.size()) {
        throw std::invalid_argument("SimTrace: row width does not match signal count");
    }
    for (std::size_t i = 0; i < values.size(); ++i) columns_[i].push_back(values[i]);
}

bool SimTrace::has_signal(std::string_view name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::span<const double> SimTrace::signal(std::string_view name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        throw std::out_of_range("SimTrace: unknown signal " + std::string(name));
    }
    return columns_[static_cast<std::size_t>(it - names_.begin())];
}

std::size_t SimTrace::index_at_or_after(double t) const {
    if (size() == 0) return 0;
    const double k = std::ceil((t - t0_) / dt_record_ - 1e-9);
    if (k <= 0.0) return 0;
    return std::min(static_cast<std::size_t>(k), size() - 1);
}

}  // namespace dualgrid
