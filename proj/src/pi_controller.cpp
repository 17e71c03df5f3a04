#include "dualgrid/pi_controller.hpp"

#include <stdexcept>

namespace dualgrid {

DiscretePi::DiscretePi(PiGains gains, std::optional<double> output_limit)
    : gains_(gains), limit_(output_limit) {
    if (!(gains_.k_p > 0.0)) throw std::invalid_argument("DiscretePi: k_p must be > 0");
    if (!(gains_.t_i > 0.0)) throw std::invalid_argument("DiscretePi: t_i must be > 0");
    if (limit_ && !(*limit_ > 0.0)) {
        throw std::invalid_argument("DiscretePi: output limit must be > 0");
    }
}

double DiscretePi::step(double error, double t_sample) {
    if (!(t_sample > 0.0)) throw std::invalid_argument("DiscretePi: t_sample must be > 0");
    double u = gains_.k_p * error + acc_;
    bool clamped = false;
    if (limit_) {
        if (u > *limit_) {
            u = *limit_;
            clamped = true;
        } else if (u < -*limit_) {
            u = -*limit_;
            clamped = true;
        }
    }
    if (!clamped) {
        const double ki = gains_.k_p / gains_.t_i;  // 0 when t_i is infinite
        acc_ += ki * error * t_sample;
    }
    return u;
}

}  // namespace dualgrid
