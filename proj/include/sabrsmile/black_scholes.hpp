#pragma once

/**
 * @file black_scholes.hpp
 * @brief Undiscounted (forward-measure, r = 0) European pricing and
 *        implied-vol inversion.
 */

namespace sabrsmile {

/// Standard normal CDF via erfc; absolute error below 1e-15 everywhere.
double norm_cdf(double x);

/// Standard normal density.
double norm_pdf(double x);

/// Matched call/put pair at one strike. Satisfies call - put = s - K.
struct OptionQuote {
    double strike;
    double tau;
    double vol;
    double call_price;
    double put_price;
};

/// s N(d1) - K N(d2); degenerates to intrinsic max(s - K, 0) when
/// vol sqrt(tau) = 0. Preconditions s, K > 0, vol >= 0, tau >= 0.
double bs_call(double s, double strike, double vol, double tau);

/// Put value; equals bs_call - s + K by parity but is evaluated directly
/// so deep out-of-the-money puts keep relative precision.
double bs_put(double s, double strike, double vol, double tau);

/// Both prices at once.
OptionQuote bs_quote(double s, double strike, double vol, double tau);

/**
 * @brief Invert a price to its Black-Scholes vol.
 *
 * The price must lie strictly inside the no-arbitrage band
 * (intrinsic, s) for calls, (intrinsic, K) for puts; otherwise an
 * OutOfBandError carrying the band is thrown. Bisection brackets the root,
 * a safeguarded Newton polishes it to |price error| < 1e-12 (price units),
 * 200 iterations cap (ConvergenceError beyond that).
 */
double implied_vol_from_price(double s, double strike, double tau, double price, bool is_call);

}  // namespace sabrsmile
