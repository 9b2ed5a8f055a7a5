#include "sabrsmile/structures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sabrsmile/black_scholes.hpp"
#include "sabrsmile/errors.hpp"
#include "sabrsmile/smile.hpp"

namespace sabrsmile {

TriangleSpec TriangleSpec::from_peak(double peak, double wing_offset) {
    if (!(peak > 0.0) || !(wing_offset > 0.0)) {
        throw std::invalid_argument("TriangleSpec: peak and wing offset must be positive");
    }
    return TriangleSpec{peak, peak + wing_offset, (peak + wing_offset) / peak};
}

double TriangleSpec::payoff(double terminal) const {
    return std::max(wing - terminal, 0.0) - short_notional * std::max(peak - terminal, 0.0);
}

namespace {

double smile_put(FormulaKind kind, const SabrParams& p, double tau, double strike) {
    const SmilePoint pt = implied_vol(kind, p, strike, tau);
    return bs_put(p.forward, strike, pt.vol, tau);
}

double smile_call(FormulaKind kind, const SabrParams& p, double tau, double strike) {
    const SmilePoint pt = implied_vol(kind, p, strike, tau);
    return bs_call(p.forward, strike, pt.vol, tau);
}

}  // namespace

double price_triangle(FormulaKind kind, const SabrParams& p, double tau, double peak,
                      double wing_offset) {
    const TriangleSpec spec = TriangleSpec::from_peak(peak, wing_offset);
    return smile_put(kind, p, tau, spec.wing) -
           spec.short_notional * smile_put(kind, p, tau, spec.peak);
}

std::vector<TriangleCurvePoint> triangle_curve(FormulaKind kind, const SabrParams& p, double tau,
                                               std::vector<double> peaks, double wing_offset) {
    std::sort(peaks.begin(), peaks.end());
    std::vector<TriangleCurvePoint> curve;
    curve.reserve(peaks.size());
    for (double peak : peaks) {
        try {
            curve.push_back({peak, price_triangle(kind, p, tau, peak, wing_offset), true, {}});
        } catch (const std::exception& e) {
            curve.push_back({peak, std::numeric_limits<double>::quiet_NaN(), false, e.what()});
        }
    }
    return curve;
}

DensityReport density_scan(FormulaKind kind, const SabrParams& p, double tau,
                           const std::vector<double>& grid, double h) {
    if (grid.size() < 1) {
        throw std::invalid_argument("density_scan: empty grid");
    }
    if (!(h > 0.0)) {
        throw std::invalid_argument("density_scan: h must be positive");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("density_scan: grid must be strictly increasing");
        }
    }

    DensityReport report;
    report.strikes = grid;
    report.density.assign(grid.size(), std::numeric_limits<double>::quiet_NaN());
    report.point_errors.assign(grid.size(), {});

    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double k = grid[i];
        try {
            if (!(k - h > 0.0)) {
                throw std::domain_error("strike - h is not positive");
            }
            const double c_lo = smile_call(kind, p, tau, k - h);
            const double c_mid = smile_call(kind, p, tau, k);
            const double c_hi = smile_call(kind, p, tau, k + h);
            report.density[i] = (c_lo - 2.0 * c_mid + c_hi) / (h * h);
        } catch (const std::exception& e) {
            report.point_errors[i] = e.what();
        }
    }

    // Violation intervals: maximal runs of consecutive violating points.
    std::size_t run_start = grid.size();
    for (std::size_t i = 0; i <= grid.size(); ++i) {
        const bool violating = i < grid.size() && std::isfinite(report.density[i]) &&
                               report.density[i] < -kDensityTol;
        if (violating && run_start == grid.size()) {
            run_start = i;
        } else if (!violating && run_start != grid.size()) {
            report.violations.emplace_back(grid[run_start], grid[i - 1]);
            run_start = grid.size();
        }
    }
    return report;
}

}  // namespace sabrsmile
