#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace dualgrid {

/// Evaluation of a transfer function at (or numerically indistinguishable
/// from) one of its poles.
class PoleEvalError : public std::runtime_error {
public:
    explicit PoleEvalError(double omega);
    double omega() const { return omega_; }

private:
    double omega_;
};

/// Ratio of two real-coefficient polynomials in the Laplace variable s.
///
/// Coefficients are stored in ascending powers of s and kept in canonical
/// form: no trailing (highest-power) zero coefficients. No pole-zero
/// cancellation happens during arithmetic; simplify() cancels shared s^k
/// factors and exactly equal numerator/denominator polynomials only.
class RationalTf {
public:
    /// The zero transfer function 0/1.
    RationalTf();
    /// Throws std::invalid_argument if den is the zero polynomial.
    RationalTf(std::vector<double> num, std::vector<double> den);

    static RationalTf constant(double value);
    /// The Laplace variable s itself.
    static RationalTf s();

    const std::vector<double>& num() const { return num_; }
    const std::vector<double>& den() const { return den_; }

    bool is_zero() const;

    RationalTf operator+(const RationalTf& rhs) const;
    RationalTf operator-(const RationalTf& rhs) const;
    RationalTf operator*(const RationalTf& rhs) const;
    /// Throws std::invalid_argument when dividing by the zero function.
    RationalTf operator/(const RationalTf& rhs) const;

    RationalTf simplify() const;

    /// num(jw)/den(jw) via Horner evaluation; throws PoleEvalError at poles.
    std::complex<double> eval(double omega) const;

    /// Exact coefficient-wise equality of the canonical forms.
    friend bool operator==(const RationalTf& a, const RationalTf& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    std::vector<double> num_;
    std::vector<double> den_;
};

struct FreqResponsePoint {
    double omega = 0.0;              // rad/s, > 0
    std::complex<double> value{};
};

struct BodeResult {
    std::vector<FreqResponsePoint> points;
    std::vector<double> skipped_pole_omegas;  // grid points that hit a pole
};

/// Logarithmically spaced frequency grid, endpoints included. Grid points
/// landing on poles are skipped and reported in the result.
/// Throws std::invalid_argument for an invalid range or an empty grid request.
BodeResult bode_grid(const RationalTf& tf, double omega_min, double omega_max,
                     int points_per_decade);

}  // namespace dualgrid
