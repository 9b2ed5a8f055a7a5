#include "sabrsmile/mc.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "sabrsmile/black_scholes.hpp"
#include "sabrsmile/detail/philox.hpp"
#include "sabrsmile/errors.hpp"

namespace sabrsmile {

namespace {

struct GridSpec {
    std::uint64_t n_steps;
    double dt;
    double sqrt_dt;
};

GridSpec time_grid(double tau, const McConfig& cfg) {
    if (!(tau > 0.0)) {
        throw std::domain_error("simulate_terminal: tau must be positive");
    }
    if (cfg.paths < 1 || cfg.steps_per_year < 1) {
        throw std::invalid_argument("McConfig: paths and steps_per_year must be >= 1");
    }
    const auto n = static_cast<std::uint64_t>(std::ceil(cfg.steps_per_year * tau));
    const double dt = tau / static_cast<double>(n);
    return {n, dt, std::sqrt(dt)};
}

// One path leg. stream keys the Brownian draws; sign = -1 mirrors them.
double simulate_path(const SabrParams& p, const GridSpec& grid, std::uint64_t seed,
                     std::uint64_t stream, double sign, bool absorption) {
    const double rho_ortho = std::sqrt(1.0 - p.rho * p.rho);
    const double sigma_drift = -0.5 * p.nu * p.nu * grid.dt;
    double s = p.forward;
    double sigma = p.alpha;
    for (std::uint64_t k = 0; k < grid.n_steps; ++k) {
        const auto [z0, z1] = detail::gaussian_pair(seed, stream, k);
        const double dw2 = grid.sqrt_dt * sign * z0;
        const double dw1 = p.rho * dw2 + rho_ortho * grid.sqrt_dt * sign * z1;
        s += sigma * std::pow(std::max(s, 0.0), p.beta) * dw1;
        sigma *= std::exp(p.nu * dw2 + sigma_drift);
        if (s <= 0.0) {
            // max(S,0)^beta = 0 from here on, so the path is frozen either way.
            if (absorption) {
                s = 0.0;
            }
            break;
        }
    }
    return s;
}

}  // namespace

std::vector<double> simulate_terminal(const SabrParams& p, double tau, const McConfig& cfg) {
    const GridSpec grid = time_grid(tau, cfg);
    std::uint64_t paths = cfg.paths;
    if (cfg.antithetic && paths % 2 != 0) {
        ++paths;
    }
    std::vector<double> terminal(paths);

    const std::uint64_t block = 2048;
    const std::uint64_t n_blocks = (paths + block - 1) / block;
    unsigned n_threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                         : std::max(1u, std::thread::hardware_concurrency());
    n_threads = static_cast<unsigned>(
        std::min<std::uint64_t>(n_threads, n_blocks));

    std::atomic<std::uint64_t> next_block{0};
    const auto worker = [&] {
        for (;;) {
            const std::uint64_t b = next_block.fetch_add(1);
            if (b >= n_blocks) {
                return;
            }
            const std::uint64_t lo = b * block;
            const std::uint64_t hi = std::min(lo + block, paths);
            for (std::uint64_t i = lo; i < hi; ++i) {
                const std::uint64_t stream = cfg.antithetic ? i / 2 : i;
                const double sign = cfg.antithetic && (i % 2 == 1) ? -1.0 : 1.0;
                terminal[i] = simulate_path(p, grid, cfg.seed, stream, sign, cfg.absorption);
            }
        }
    };

    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    for (double s : terminal) {
        if (!std::isfinite(s)) {
            throw std::runtime_error("simulate_terminal: non-finite path value");
        }
    }
    return terminal;
}

McEstimate reduce_samples(const std::vector<double>& per_path, bool antithetic) {
    if (per_path.empty() || (antithetic && per_path.size() % 2 != 0)) {
        throw std::invalid_argument("reduce_samples: bad sample count");
    }
    const std::size_t stride = antithetic ? 2 : 1;
    const std::size_t n = per_path.size() / stride;

    // Fixed-order block-pairwise sums keep the reduction reproducible and
    // accurate at 1e6+ samples.
    const auto block_sum = [&](auto&& value_at, std::size_t count) {
        constexpr std::size_t kBlock = 1024;
        std::vector<double> partial;
        partial.reserve(count / kBlock + 1);
        std::size_t i = 0;
        while (i < count) {
            double acc = 0.0;
            const std::size_t end = std::min(i + kBlock, count);
            for (; i < end; ++i) {
                acc += value_at(i);
            }
            partial.push_back(acc);
        }
        while (partial.size() > 1) {
            std::size_t half = 0;
            for (std::size_t j = 0; j + 1 < partial.size(); j += 2) {
                partial[half++] = partial[j] + partial[j + 1];
            }
            if (partial.size() % 2 == 1) {
                partial[half++] = partial.back();
            }
            partial.resize(half);
        }
        return partial.empty() ? 0.0 : partial[0];
    };

    const auto sample_at = [&](std::size_t i) {
        return antithetic ? 0.5 * (per_path[2 * i] + per_path[2 * i + 1]) : per_path[i];
    };

    const double mean = block_sum(sample_at, n) / static_cast<double>(n);
    double std_error = 0.0;
    if (n > 1) {
        const auto sq_dev_at = [&](std::size_t i) {
            const double d = sample_at(i) - mean;
            return d * d;
        };
        const double var = block_sum(sq_dev_at, n) / static_cast<double>(n - 1);
        std_error = std::sqrt(var / static_cast<double>(n));
    }
    return McEstimate{mean, std_error, per_path.size()};
}

McEstimate mc_call_price(const SabrParams& p, double strike, double tau, const McConfig& cfg) {
    if (!(strike >= 0.0)) {
        throw std::domain_error("mc_call_price: strike must be non-negative");
    }
    const std::vector<double> terminal = simulate_terminal(p, tau, cfg);
    std::vector<double> payoff(terminal.size());
    for (std::size_t i = 0; i < terminal.size(); ++i) {
        payoff[i] = std::max(terminal[i] - strike, 0.0);
    }
    return reduce_samples(payoff, cfg.antithetic);
}

McEstimate mc_implied_vol(const SabrParams& p, double strike, double tau, const McConfig& cfg) {
    const McEstimate price = mc_call_price(p, strike, tau, cfg);
    const double vol = implied_vol_from_price(p.forward, strike, tau, price.value, true);

    // Vega-propagated error: re-invert at price +/- SE, one-sided when a
    // bumped price falls off the band.
    double vol_hi = vol;
    double vol_lo = vol;
    bool hi_ok = false;
    bool lo_ok = false;
    try {
        vol_hi = implied_vol_from_price(p.forward, strike, tau, price.value + price.std_error, true);
        hi_ok = true;
    } catch (const OutOfBandError&) {
    }
    try {
        vol_lo = implied_vol_from_price(p.forward, strike, tau, price.value - price.std_error, true);
        lo_ok = true;
    } catch (const OutOfBandError&) {
    }
    double se;
    if (hi_ok && lo_ok) {
        se = 0.5 * (vol_hi - vol_lo);
    } else if (hi_ok) {
        se = vol_hi - vol;
    } else if (lo_ok) {
        se = vol - vol_lo;
    } else {
        se = std::numeric_limits<double>::infinity();
    }
    return McEstimate{vol, se, price.paths_used};
}

McEstimate mc_triangle_price(const SabrParams& p, const TriangleSpec& spec, double tau,
                             const McConfig& cfg) {
    const std::vector<double> terminal = simulate_terminal(p, tau, cfg);
    std::vector<double> payoff(terminal.size());
    for (std::size_t i = 0; i < terminal.size(); ++i) {
        payoff[i] = spec.payoff(terminal[i]);
    }
    return reduce_samples(payoff, cfg.antithetic);
}

double absorbed_fraction(const std::vector<double>& terminal) {
    if (terminal.empty()) {
        return 0.0;
    }
    std::size_t absorbed = 0;
    for (double s : terminal) {
        if (s <= 0.0) {
            ++absorbed;
        }
    }
    return static_cast<double>(absorbed) / static_cast<double>(terminal.size());
}

}  // namespace sabrsmile
