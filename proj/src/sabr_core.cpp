#include "sabrsmile/sabr_core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sabrsmile {

SabrParams::SabrParams(double alpha_, double beta_, double rho_, double nu_, double forward_)
    : alpha(alpha_), beta(beta_), rho(rho_), nu(nu_), forward(forward_) {
    if (!(alpha > 0.0)) {
        throw std::invalid_argument("SabrParams: alpha must be positive, got " +
                                    std::to_string(alpha));
    }
    if (!(beta > 0.0 && beta <= 1.0)) {
        throw std::invalid_argument("SabrParams: beta must be in (0, 1], got " +
                                    std::to_string(beta));
    }
    if (!(std::abs(rho) < 1.0)) {
        throw std::invalid_argument("SabrParams: |rho| must be < 1, got " + std::to_string(rho));
    }
    if (!(nu >= 0.0)) {
        throw std::invalid_argument("SabrParams: nu must be non-negative, got " +
                                    std::to_string(nu));
    }
    if (!(forward > 0.0)) {
        throw std::invalid_argument("SabrParams: forward must be positive, got " +
                                    std::to_string(forward));
    }
}

double log_moneyness(double forward, double strike) {
    if (!(forward > 0.0) || !(strike > 0.0)) {
        throw std::domain_error("log_moneyness: forward and strike must be positive");
    }
    return std::log(forward / strike);
}

double z_transform(const SabrParams& p, double strike) {
    const double x = log_moneyness(p.forward, strike);
    const double u = 1.0 - p.beta;
    if (std::abs(u) < kBetaEps) {
        return p.nu / p.alpha * x;
    }
    return p.nu / p.alpha * (std::pow(p.forward, u) - std::pow(strike, u)) / u;
}

double zeta_transform(const SabrParams& p, double strike) {
    if (!(strike > 0.0)) {
        throw std::domain_error("zeta_transform: strike must be positive");
    }
    return p.nu / p.alpha * (p.forward - strike) /
           std::pow(p.forward * strike, 0.5 * p.beta);
}

namespace {

// D on z >= 0 only; callers map negative z through D(z, rho) = -D(-z, -rho),
// which keeps the closed form free of cancellation between sqrt and z.
double d_nonnegative(double z, double rho) {
    if (z < kZEps) {
        // Coefficients are Legendre polynomials: D(z) = sum P_n(rho) z^(n+1)/(n+1).
        const double r2 = rho * rho;
        return z * (1.0 + z * (0.5 * rho +
                               z * ((3.0 * r2 - 1.0) / 6.0 +
                                    z * (5.0 * r2 - 3.0) * rho / 8.0)));
    }
    // ln((sqrt(Q) + z - rho)/(1 - rho)) regrouped as log1p of
    // (sqrt(Q) - 1 + z)/(1 - rho) with sqrt(Q) - 1 = z(z - 2 rho)/(1 + sqrt(Q)),
    // which stays fully accurate as z -> 0.
    const double sqrt_q = std::sqrt(1.0 + z * (z - 2.0 * rho));
    return std::log1p((z * (z - 2.0 * rho) / (1.0 + sqrt_q) + z) / (1.0 - rho));
}

}  // namespace

double d_function(double z, double rho) {
    if (!(std::abs(rho) < 1.0)) {
        throw std::domain_error("d_function: |rho| must be < 1, got " + std::to_string(rho));
    }
    if (z < 0.0) {
        return -d_nonnegative(-z, -rho);
    }
    return d_nonnegative(z, rho);
}

double d_ratio(double z, double rho) {
    if (!(std::abs(rho) < 1.0)) {
        throw std::domain_error("d_ratio: |rho| must be < 1, got " + std::to_string(rho));
    }
    if (std::abs(z) < kZEps) {
        // Reciprocal of the D series; even under (z, rho) -> (-z, -rho).
        const double r2 = rho * rho;
        return 1.0 - 0.5 * rho * z + (2.0 - 3.0 * r2) * z * z / 12.0 +
               rho * (5.0 - 6.0 * r2) * z * z * z / 24.0;
    }
    return z / d_function(z, rho);
}

}  // namespace sabrsmile
