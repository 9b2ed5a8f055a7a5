#pragma once

/**
 * @file mc.hpp
 * @brief Direct Monte Carlo simulation of the SABR dynamics, used as an
 *        independent check on the asymptotic smile and structure prices.
 *
 * The volatility path is simulated exactly (it is lognormal); the forward
 * uses full-truncation Euler, S <- S + sigma max(S,0)^beta dW1. Draws come
 * from a counter-based generator keyed by (seed, path, step), so estimates
 * are bit-identical for a fixed config regardless of thread count or
 * schedule; reductions run in fixed path order.
 */

#include <cstdint>
#include <vector>

#include "sabrsmile/sabr_core.hpp"
#include "sabrsmile/structures.hpp"

namespace sabrsmile {

struct McConfig {
    std::uint64_t paths = 200'000;  ///< rounded up to even when antithetic
    int steps_per_year = 250;       ///< time grid has ceil(steps_per_year * tau) steps
    std::uint64_t seed = 42;
    bool absorption = true;   ///< freeze S at 0 once it crosses
    bool antithetic = true;   ///< mirror the Brownian increments pairwise
    int threads = 0;          ///< execution hint only, 0 = hardware; never affects results
};

struct McEstimate {
    double value;
    double std_error;
    std::uint64_t paths_used;
};

/// Terminal forwards S_tau, one per path, in path order. Deterministic in
/// (params, tau, cfg). Throws std::runtime_error if a path goes non-finite.
std::vector<double> simulate_terminal(const SabrParams& p, double tau, const McConfig& cfg);

/// Mean and standard error of max(S_tau - K, 0).
McEstimate mc_call_price(const SabrParams& p, double strike, double tau, const McConfig& cfg);

/// Implied vol of the MC call price; the standard error is propagated by
/// re-inverting at price +/- one standard error. Throws OutOfBandError when
/// the MC price is not strictly inside the no-arbitrage band.
McEstimate mc_implied_vol(const SabrParams& p, double strike, double tau, const McConfig& cfg);

/// Pathwise triangle price: mean of spec.payoff(S_tau). Shares one terminal
/// sample per call, so the long and short legs are priced on common paths.
McEstimate mc_triangle_price(const SabrParams& p, const TriangleSpec& spec, double tau,
                             const McConfig& cfg);

/// Mean/standard-error reduction over per-path values in fixed order.
/// With antithetic on, statistics are over the means of mirrored pairs.
McEstimate reduce_samples(const std::vector<double>& per_path, bool antithetic);

/// Fraction of paths at or below zero (absorbed or frozen negative).
double absorbed_fraction(const std::vector<double>& terminal);

}  // namespace sabrsmile
