#pragma once

/**
 * @file smile.hpp
 * @brief Small-maturity implied-volatility terms and the composite smile.
 *
 * The implied volatility is expanded in time to maturity as
 *   I(x, tau) = I0(x) (1 + I1(x) tau) + O(tau^2),   x = ln(s/K).
 *
 * Two zero-order terms are provided: the original Hagan et al. (A.65) form
 * and the Berestycki et al. form, which differ for beta < 1 and nu > 0.
 * Both are combined with Hagan's first-order coefficient I1.
 */

#include <vector>

#include "sabrsmile/sabr_core.hpp"

namespace sabrsmile {

/// One strike of a smile: log-moneyness, the two expansion terms and the
/// composite vol = i0 * (1 + i1 * tau) for the tau it was built with.
struct SmilePoint {
    double strike;
    double x;
    double i0;
    double i1;
    double vol;
};

/// How to back alpha out of an at-the-money vol quote.
enum class AtmBackout {
    FirstOrder,  ///< solve i0_atm(alpha) * (1 + i1(alpha) tau) = atm_vol
    ZeroOrder,   ///< alpha = atm_vol * s^(1-beta)
};

/// Zero-order vol at the money: alpha * s^(beta-1).
double i0_atm(const SabrParams& p);

/// Zero-order vol of the nu = 0 local-volatility model,
/// x alpha (1-beta) / (s^(1-beta) - K^(1-beta)). Ignores p.nu. The ATM and
/// beta -> 1 limits are removable and taken analytically.
double i0_localvol(const SabrParams& p, double strike);

/// Berestycki et al. zero-order term nu x / D(z).
double i0_berestycki(const SabrParams& p, double strike);

/// Hagan et al. (A.65) zero-order term nu x (zeta/z) / D(zeta). Within
/// kBetaEps of beta = 1 it is evaluated through the z-form, where the two
/// columns of the comparison coincide.
double i0_hagan(const SabrParams& p, double strike);

/// Hagan's first-order coefficient
///   (beta-1)^2/24 alpha^2/(sK)^(1-beta)
/// + rho nu alpha beta / (4 (sK)^((1-beta)/2))
/// + (2 - 3 rho^2)/24 nu^2,
/// shared by both composite vols.
double i1_hagan(const SabrParams& p, double strike);

/**
 * @brief Composite implied vol I = i0 (1 + i1 tau) at one strike.
 *
 * Throws DegenerateVolError if the composite vol is non-positive (the
 * expansion left its validity region; the value is never clamped), and
 * std::domain_error for tau < 0.
 */
SmilePoint implied_vol(FormulaKind kind, const SabrParams& p, double strike, double tau);

/**
 * @brief Back alpha out of an at-the-money implied-vol quote.
 *
 * FirstOrder mode solves atm_vol = alpha s^(beta-1) (1 + i1(alpha) tau) by
 * bisection on alpha in (1e-6, 10); ZeroOrder inverts the leading term
 * only. Throws ConvergenceError when no root lies in the bracket.
 */
double backout_alpha(double atm_vol, double beta, double rho, double nu, double forward,
                     double tau, AtmBackout mode = AtmBackout::FirstOrder);

/// n >= 2 points from lo to hi, multiplicatively spaced; endpoints exact.
std::vector<double> geometric_grid(double lo, double hi, int n);

/// n >= 2 points from lo to hi, additively spaced; endpoints exact.
std::vector<double> linear_grid(double lo, double hi, int n);

/// Default smile grid: 200 geometric points spanning [s/10, 3s].
std::vector<double> default_smile_grid(const SabrParams& p);

}  // namespace sabrsmile
