#pragma once

/**
 * @file structures.hpp
 * @brief The triangle spread T(K) and the risk-neutral-density scan used to
 *        probe a smile for arbitrage at low strikes.
 *
 * T(K) is long one put at K + 2 and short (K+2)/K puts at K (strikes in
 * percentage points). Its payoff is a triangle: zero at zero and at K + 2,
 * peak value 2 at K. A valid density can never price it negative.
 */

#include <string>
#include <utility>
#include <vector>

#include "sabrsmile/sabr_core.hpp"

namespace sabrsmile {

/// Density below -kDensityTol per price unit counts as a violation; the
/// threshold sits above finite-difference noise at the default step.
inline constexpr double kDensityTol = 1e-8;

/// Triangle spread: long one wing-strike put, short short_notional
/// peak-strike puts. wing = peak + offset, short_notional = wing / peak.
struct TriangleSpec {
    double peak;
    double wing;
    double short_notional;

    /// offset is 2 in percent units, 0.02 in decimals.
    static TriangleSpec from_peak(double peak, double wing_offset = 2.0);

    /// max(wing - S, 0) - short_notional * max(peak - S, 0); equals 2S/peak
    /// on [0, peak], non-negative everywhere.
    double payoff(double terminal) const;
};

/// One entry of a triangle price curve; ok = false marks a strike where the
/// smile was not evaluable and carries the reason.
struct TriangleCurvePoint {
    double peak;
    double price;
    bool ok;
    std::string error;
};

/// Finite-difference density over a strike grid. density[i] is NaN where
/// point_errors[i] is non-empty; violations are the maximal runs of
/// consecutive grid points with density < -kDensityTol, sorted and disjoint.
struct DensityReport {
    std::vector<double> strikes;
    std::vector<double> density;
    std::vector<std::string> point_errors;
    std::vector<std::pair<double, double>> violations;
};

/// Price of T(peak) under the smile of the given formula kind.
/// Propagates DegenerateVolError from the smile evaluation.
double price_triangle(FormulaKind kind, const SabrParams& p, double tau, double peak,
                      double wing_offset = 2.0);

/// price_triangle over a peak list; per-point failures are marked, not thrown.
/// Output is sorted by peak.
std::vector<TriangleCurvePoint> triangle_curve(FormulaKind kind, const SabrParams& p, double tau,
                                               std::vector<double> peaks,
                                               double wing_offset = 2.0);

/**
 * @brief Scan the smile-implied risk-neutral density on a strike grid.
 *
 * density(K) = [C(K-h) - 2 C(K) + C(K+h)] / h^2 with C(K) the call priced
 * at strike K's own smile vol. Requires a strictly increasing grid and
 * h > 0; per-point smile failures are recorded and the scan continues.
 */
DensityReport density_scan(FormulaKind kind, const SabrParams& p, double tau,
                           const std::vector<double>& grid, double h);

}  // namespace sabrsmile
