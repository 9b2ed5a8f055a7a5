#include "sabrsmile/smile.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sabrsmile/errors.hpp"

namespace sabrsmile {

namespace {

// y / (e^y - 1) continued through y = 0. With x = ln(s/K) and u = 1 - beta,
//   x alpha u / (s^u - K^u) = alpha K^(beta-1) * bernoulli_ratio(u x),
// which is the local-vol term with both removable singularities (K = s and
// beta = 1) handled in one place.
double bernoulli_ratio(double y) {
    if (std::abs(y) < 1e-5) {
        return 1.0 - 0.5 * y + y * y / 12.0;
    }
    return y / std::expm1(y);
}

}  // namespace

double i0_atm(const SabrParams& p) {
    return p.alpha * std::pow(p.forward, p.beta - 1.0);
}

double i0_localvol(const SabrParams& p, double strike) {
    const double x = log_moneyness(p.forward, strike);
    const double u = 1.0 - p.beta;
    return p.alpha * std::pow(strike, -u) * bernoulli_ratio(u * x);
}

double i0_berestycki(const SabrParams& p, double strike) {
    return i0_localvol(p, strike) * d_ratio(z_transform(p, strike), p.rho);
}

double i0_hagan(const SabrParams& p, double strike) {
    if (std::abs(1.0 - p.beta) < kBetaEps) {
        // At beta = 1 both zero-order terms coincide; evaluate via z, where
        // the single beta = 1 expression is stated.
        return i0_berestycki(p, strike);
    }
    return i0_localvol(p, strike) * d_ratio(zeta_transform(p, strike), p.rho);
}

double i1_hagan(const SabrParams& p, double strike) {
    if (!(strike > 0.0)) {
        throw std::domain_error("i1_hagan: strike must be positive");
    }
    const double u = 1.0 - p.beta;
    const double sk = p.forward * strike;
    const double term_cev = u * u / 24.0 * p.alpha * p.alpha / std::pow(sk, u);
    const double term_corr = 0.25 * p.rho * p.nu * p.alpha * p.beta / std::pow(sk, 0.5 * u);
    const double term_volvol = (2.0 - 3.0 * p.rho * p.rho) / 24.0 * p.nu * p.nu;
    return term_cev + term_corr + term_volvol;
}

SmilePoint implied_vol(FormulaKind kind, const SabrParams& p, double strike, double tau) {
    if (!(tau >= 0.0)) {
        throw std::domain_error("implied_vol: tau must be non-negative, got " +
                                std::to_string(tau));
    }
    SmilePoint pt{};
    pt.strike = strike;
    pt.x = log_moneyness(p.forward, strike);
    pt.i0 = kind == FormulaKind::HaganA65 ? i0_hagan(p, strike) : i0_berestycki(p, strike);
    pt.i1 = i1_hagan(p, strike);
    pt.vol = pt.i0 * (1.0 + pt.i1 * tau);
    if (!(pt.vol > 0.0)) {
        throw DegenerateVolError(strike, pt.vol);
    }
    return pt;
}

double backout_alpha(double atm_vol, double beta, double rho, double nu, double forward,
                     double tau, AtmBackout mode) {
    if (!(atm_vol > 0.0)) {
        throw std::domain_error("backout_alpha: atm_vol must be positive");
    }
    if (mode == AtmBackout::ZeroOrder) {
        return atm_vol * std::pow(forward, 1.0 - beta);
    }
    const auto residual = [&](double alpha) {
        const SabrParams p(alpha, beta, rho, nu, forward);
        return i0_atm(p) * (1.0 + i1_hagan(p, forward) * tau) - atm_vol;
    };
    double lo = 1e-6;
    double hi = 10.0;
    double f_lo = residual(lo);
    double f_hi = residual(hi);
    if (f_lo > 0.0 || f_hi < 0.0) {
        throw ConvergenceError("backout_alpha: atm vol " + std::to_string(atm_vol) +
                               " not bracketed by alpha in (1e-6, 10)");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (residual(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> geometric_grid(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) {
        throw std::invalid_argument("geometric_grid: need 0 < lo < hi and n >= 2");
    }
    std::vector<double> g(static_cast<std::size_t>(n));
    const double step = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
        g[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
    }
    g.front() = lo;
    g.back() = hi;
    return g;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
    if (!(hi > lo) || n < 2) {
        throw std::invalid_argument("linear_grid: need lo < hi and n >= 2");
    }
    std::vector<double> g(static_cast<std::size_t>(n));
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
        g[static_cast<std::size_t>(i)] = lo + step * i;
    }
    g.front() = lo;
    g.back() = hi;
    return g;
}

std::vector<double> default_smile_grid(const SabrParams& p) {
    return geometric_grid(p.forward / 10.0, 3.0 * p.forward, 200);
}

}  // namespace sabrsmile
