#include "sabrsmile/black_scholes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sabrsmile/errors.hpp"

namespace sabrsmile {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

void check_price_inputs(double s, double strike, double vol, double tau) {
    if (!(s > 0.0) || !(strike > 0.0)) {
        throw std::domain_error("black_scholes: spot and strike must be positive");
    }
    if (!(vol >= 0.0) || !(tau >= 0.0)) {
        throw std::domain_error("black_scholes: vol and tau must be non-negative");
    }
}

}  // namespace

double norm_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double bs_call(double s, double strike, double vol, double tau) {
    check_price_inputs(s, strike, vol, tau);
    const double stddev = vol * std::sqrt(tau);
    if (stddev == 0.0) {
        return std::max(s - strike, 0.0);
    }
    const double d1 = std::log(s / strike) / stddev + 0.5 * stddev;
    const double d2 = d1 - stddev;
    return s * norm_cdf(d1) - strike * norm_cdf(d2);
}

double bs_put(double s, double strike, double vol, double tau) {
    check_price_inputs(s, strike, vol, tau);
    const double stddev = vol * std::sqrt(tau);
    if (stddev == 0.0) {
        return std::max(strike - s, 0.0);
    }
    const double d1 = std::log(s / strike) / stddev + 0.5 * stddev;
    const double d2 = d1 - stddev;
    return strike * norm_cdf(-d2) - s * norm_cdf(-d1);
}

OptionQuote bs_quote(double s, double strike, double vol, double tau) {
    return OptionQuote{strike, tau, vol, bs_call(s, strike, vol, tau),
                       bs_put(s, strike, vol, tau)};
}

double implied_vol_from_price(double s, double strike, double tau, double price, bool is_call) {
    if (!(s > 0.0) || !(strike > 0.0)) {
        throw std::domain_error("implied_vol_from_price: spot and strike must be positive");
    }
    if (!(tau > 0.0)) {
        throw std::domain_error("implied_vol_from_price: tau must be positive");
    }
    const double lower = is_call ? std::max(s - strike, 0.0) : std::max(strike - s, 0.0);
    const double upper = is_call ? s : strike;
    if (!(price > lower) || !(price < upper)) {
        throw OutOfBandError(price, lower, upper);
    }

    const auto value = [&](double vol) {
        return is_call ? bs_call(s, strike, vol, tau) : bs_put(s, strike, vol, tau);
    };
    const double sqrt_tau = std::sqrt(tau);

    double lo = 0.0;
    double hi = 1.0;
    while (value(hi) < price) {
        hi *= 2.0;
        if (hi > 1e6) {
            throw ConvergenceError("implied_vol_from_price: failed to bracket vol");
        }
    }

    constexpr double kPriceTol = 1e-12;
    double vol = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double f = value(vol) - price;
        if (f == 0.0) {
            return vol;  // inside the target's roundoff plateau
        }
        if (f > 0.0) {
            hi = vol;
        } else {
            lo = vol;
        }
        // The price tolerance alone is too lax where vega is tiny; insist on
        // a tight vol bracket as well so round-trips stay at 1e-8.
        if (std::abs(f) <= kPriceTol && hi - lo <= 1e-9 * std::max(vol, 1e-2)) {
            return vol;
        }
        const double stddev = vol * sqrt_tau;
        const double d1 = std::log(s / strike) / stddev + 0.5 * stddev;
        const double vega = s * sqrt_tau * norm_pdf(d1);
        double next = vol - f / vega;
        if (!(next > lo) || !(next < hi) || !std::isfinite(next)) {
            next = 0.5 * (lo + hi);  // Newton left the bracket; bisect
        }
        vol = next;
    }
    throw ConvergenceError("implied_vol_from_price: no convergence in 200 iterations");
}

}  // namespace sabrsmile
