#include "dualgrid/rational_tf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dualgrid {

namespace {

// Canonical form: drop trailing (highest-power) zeros, keep >= 1 coefficient.
std::vector<double> trim(std::vector<double> p) {
    while (p.size() > 1 && p.back() == 0.0) p.pop_back();
    if (p.empty()) p.push_back(0.0);
    return p;
}

bool is_zero_poly(const std::vector<double>& p) {
    return std::all_of(p.begin(), p.end(), [](double c) { return c == 0.0; });
}

std::vector<double> poly_add(const std::vector<double>& a, const std::vector<double>& b,
                             double sign_b) {
    std::vector<double> out(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += sign_b * b[i];
    return trim(std::move(out));
}

std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return trim(std::move(out));
}

std::complex<double> poly_eval(const std::vector<double>& p, std::complex<double> s) {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * s + *it;
    return acc;
}

// Scale used to decide whether an evaluated denominator is effectively zero.
double poly_eval_scale(const std::vector<double>& p, double mag) {
    double acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * mag + std::abs(*it);
    return acc;
}

std::size_t leading_zero_count(const std::vector<double>& p) {
    std::size_t k = 0;
    while (k < p.size() && p[k] == 0.0) ++k;
    return k;  // == p.size() only for the zero polynomial
}

}  // namespace

PoleEvalError::PoleEvalError(double omega)
    : std::runtime_error("transfer function evaluated at a pole, omega = " +
                         std::to_string(omega) + " rad/s"),
      omega_(omega) {}

RationalTf::RationalTf() : num_{0.0}, den_{1.0} {}

RationalTf::RationalTf(std::vector<double> num, std::vector<double> den)
    : num_(trim(std::move(num))), den_(trim(std::move(den))) {
    if (is_zero_poly(den_)) {
        throw std::invalid_argument("RationalTf: denominator must not be the zero polynomial");
    }
}

RationalTf RationalTf::constant(double value) { return RationalTf({value}, {1.0}); }

RationalTf RationalTf::s() { return RationalTf({0.0, 1.0}, {1.0}); }

bool RationalTf::is_zero() const { return is_zero_poly(num_); }

RationalTf RationalTf::operator+(const RationalTf& rhs) const {
    if (den_ == rhs.den_) return RationalTf(poly_add(num_, rhs.num_, 1.0), den_);
    return RationalTf(poly_add(poly_mul(num_, rhs.den_), poly_mul(rhs.num_, den_), 1.0),
                      poly_mul(den_, rhs.den_));
}

RationalTf RationalTf::operator-(const RationalTf& rhs) const {
    if (den_ == rhs.den_) return RationalTf(poly_add(num_, rhs.num_, -1.0), den_);
    return RationalTf(poly_add(poly_mul(num_, rhs.den_), poly_mul(rhs.num_, den_), -1.0),
                      poly_mul(den_, rhs.den_));
}

RationalTf RationalTf::operator*(const RationalTf& rhs) const {
    return RationalTf(poly_mul(num_, rhs.num_), poly_mul(den_, rhs.den_));
}

RationalTf RationalTf::operator/(const RationalTf& rhs) const {
    if (rhs.is_zero()) {
        throw std::invalid_argument("RationalTf: division by the zero transfer function");
    }
    return RationalTf(poly_mul(num_, rhs.den_), poly_mul(den_, rhs.num_));
}

RationalTf RationalTf::simplify() const {
    if (is_zero()) return RationalTf();
    std::vector<double> n = num_;
    std::vector<double> d = den_;
    // Cancel the shared s^k factor.
    std::size_t k = std::min(leading_zero_count(n), leading_zero_count(d));
    if (k > 0) {
        n.erase(n.begin(), n.begin() + static_cast<std::ptrdiff_t>(k));
        d.erase(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(k));
    }
    if (n == d) return RationalTf::constant(1.0);
    return RationalTf(std::move(n), std::move(d));
}

std::complex<double> RationalTf::eval(double omega) const {
    const std::complex<double> s(0.0, omega);
    const std::complex<double> d = poly_eval(den_, s);
    const double scale = poly_eval_scale(den_, std::abs(omega));
    if (std::abs(d) <= 1e-12 * scale) throw PoleEvalError(omega);
    return poly_eval(num_, s) / d;
}

BodeResult bode_grid(const RationalTf& tf, double omega_min, double omega_max,
                     int points_per_decade) {
    if (!(omega_min > 0.0) || !(omega_min < omega_max)) {
        throw std::invalid_argument("bode_grid: require 0 < omega_min < omega_max");
    }
    if (points_per_decade < 1) {
        throw std::invalid_argument("bode_grid: points_per_decade must be >= 1");
    }
    const double lg_min = std::log10(omega_min);
    const double lg_max = std::log10(omega_max);
    const auto n = std::max<std::size_t>(
        2, static_cast<std::size_t>(std::lround(points_per_decade * (lg_max - lg_min))) + 1);

    BodeResult result;
    result.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double omega;
        if (i == 0) {
            omega = omega_min;
        } else if (i == n - 1) {
            omega = omega_max;
        } else {
            const double f = static_cast<double>(i) / static_cast<double>(n - 1);
            omega = std::pow(10.0, lg_min + f * (lg_max - lg_min));
        }
        try {
            result.points.push_back({omega, tf.eval(omega)});
        } catch (const PoleEvalError&) {
            result.skipped_pole_omegas.push_back(omega);
        }
    }
    return result;
}

}  // namespace dualgrid
