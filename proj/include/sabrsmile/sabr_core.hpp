#pragma once

/**
 * @file sabr_core.hpp
 * @brief SABR parameters and the moneyness transforms shared by the
 *        small-maturity implied-volatility formulas.
 *
 * The model is the usual SABR dynamics for a forward S_t:
 *   dS_t     = sigma_t S_t^beta dW1_t,   S_0 = s
 *   dsigma_t = nu sigma_t dW2_t,         sigma_0 = alpha,  d<W1,W2>_t = rho dt
 *
 * Reference: Hagan, Kumar, Lesniewski & Woodward (2002), "Managing smile
 * risk"; Berestycki, Busca & Florent (2004), "Computing the implied
 * volatility in stochastic volatility models".
 */

#include <cstdint>

namespace sabrsmile {

/// Below this distance from beta = 1 the moneyness transforms switch to
/// their log limit; the direct expression cancels catastrophically there.
inline constexpr double kBetaEps = 1e-8;

/// Switch point between the closed form and the series branch of the
/// distance function. The cubic series truncation error is O(z^4) ~ 1e-24
/// relative at this point, below double roundoff.
inline constexpr double kZEps = 1e-6;

/// Selects which zero-order smile term a composite vol is built from.
enum class FormulaKind { HaganA65, Berestycki };

/**
 * @brief SABR model state (alpha, beta, rho, nu, forward).
 *
 * Validation is eager: construction throws std::invalid_argument on any
 * violated constraint, so downstream operations never re-check.
 *
 * Constraints: alpha > 0, beta in (0, 1], |rho| < 1, nu >= 0, forward > 0.
 * beta = 1 is admitted (lognormal backbone); |rho| = 1 is rejected because
 * the distance function divides by 1 - rho.
 */
struct SabrParams {
    double alpha;
    double beta;
    double rho;
    double nu;
    double forward;

    SabrParams(double alpha_, double beta_, double rho_, double nu_, double forward_);
};

/// ln(forward / strike); positive for in-the-money calls, exactly 0 ATM.
/// Throws std::domain_error on non-positive input.
double log_moneyness(double forward, double strike);

/// z = (nu/alpha) (s^(1-beta) - K^(1-beta)) / (1-beta), with the analytic
/// limit (nu/alpha) ln(s/K) taken for |1-beta| < kBetaEps.
double z_transform(const SabrParams& p, double strike);

/// zeta = (nu/alpha) (s - K) / (s K)^(beta/2).
double zeta_transform(const SabrParams& p, double strike);

/**
 * @brief Distance function D(z) = ln((sqrt(1 - 2 rho z + z^2) + z - rho) / (1 - rho)).
 *
 * Equals the integral of (1 - 2 rho t + t^2)^(-1/2) from 0 to z, so it is
 * strictly increasing with D(0) = 0 and sign(D(z)) = sign(z). For
 * |z| < kZEps the Legendre-series branch
 *   z (1 + rho z/2 + (3 rho^2 - 1) z^2/6 + (5 rho^3 - 3 rho) z^3/8)
 * is used; the two branches agree to machine precision at the switch.
 *
 * Throws std::domain_error unless |rho| < 1.
 */
double d_function(double z, double rho);

/// Ratio z / D(z) continued through the removable singularity at z = 0
/// (value 1). Both zero-order smile formulas reduce to the local-vol term
/// times this ratio, evaluated at z or at zeta.
double d_ratio(double z, double rho);

}  // namespace sabrsmile
