#pragma once

// Test-only oracle: re-evaluates the closed-form expressions in 50-digit
// arithmetic, straight from their definitions and independent of the library
// code paths (no branch logic, no series).

#include <boost/math/special_functions/erf.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace highprec {

using Real = boost::multiprecision::cpp_bin_float_50;

inline Real d_function(const Real& z, const Real& rho) {
    using boost::multiprecision::log;
    using boost::multiprecision::sqrt;
    return log((sqrt(1 - 2 * rho * z + z * z) + z - rho) / (1 - rho));
}

inline Real z_transform(const Real& alpha, const Real& beta, const Real& nu, const Real& s,
                        const Real& k) {
    using boost::multiprecision::pow;
    return nu / alpha * (pow(s, 1 - beta) - pow(k, 1 - beta)) / (1 - beta);
}

inline Real zeta_transform(const Real& alpha, const Real& beta, const Real& nu, const Real& s,
                           const Real& k) {
    using boost::multiprecision::pow;
    return nu / alpha * (s - k) / pow(s * k, beta / 2);
}

inline Real i0_localvol(const Real& alpha, const Real& beta, const Real& s, const Real& k) {
    using boost::multiprecision::log;
    using boost::multiprecision::pow;
    const Real x = log(s / k);
    return x * alpha * (1 - beta) / (pow(s, 1 - beta) - pow(k, 1 - beta));
}

inline Real i0_berestycki(const Real& alpha, const Real& beta, const Real& rho, const Real& nu,
                          const Real& s, const Real& k) {
    using boost::multiprecision::log;
    const Real x = log(s / k);
    return nu * x / d_function(z_transform(alpha, beta, nu, s, k), rho);
}

inline Real i0_hagan(const Real& alpha, const Real& beta, const Real& rho, const Real& nu,
                     const Real& s, const Real& k) {
    using boost::multiprecision::log;
    const Real x = log(s / k);
    const Real z = z_transform(alpha, beta, nu, s, k);
    const Real zeta = zeta_transform(alpha, beta, nu, s, k);
    return nu * x * (zeta / z) / d_function(zeta, rho);
}

inline Real norm_cdf(const Real& x) {
    using boost::multiprecision::sqrt;
    return boost::math::erfc(-x / sqrt(Real(2))) / 2;
}

inline Real bs_call(const Real& s, const Real& k, const Real& vol, const Real& tau) {
    using boost::multiprecision::log;
    using boost::multiprecision::sqrt;
    const Real stddev = vol * sqrt(tau);
    const Real d1 = log(s / k) / stddev + stddev / 2;
    return s * norm_cdf(d1) - k * norm_cdf(d1 - stddev);
}

inline Real lognormal_density(const Real& s, const Real& k, const Real& vol, const Real& tau) {
    using boost::multiprecision::exp;
    using boost::multiprecision::log;
    using boost::multiprecision::sqrt;
    const Real pi = boost::math::constants::pi<Real>();
    const Real stddev = vol * sqrt(tau);
    const Real d2 = log(s / k) / stddev - stddev / 2;
    return exp(-d2 * d2 / 2) / (k * stddev * sqrt(2 * pi));
}

inline double to_double(const Real& x) { return static_cast<double>(x); }

}  // namespace highprec
