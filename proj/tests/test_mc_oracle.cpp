#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "sabrsmile/black_scholes.hpp"
#include "sabrsmile/errors.hpp"
#include "sabrsmile/mc.hpp"

using namespace sabrsmile;

namespace {

McConfig small_config() {
    McConfig cfg;
    cfg.paths = 40'000;
    cfg.steps_per_year = 100;
    cfg.seed = 20080131;
    return cfg;
}

}  // namespace

TEST_CASE("simulate_terminal is bit-identical across runs and thread counts") {
    const SabrParams p(0.3, 0.6, -0.4, 0.5, 1.2);
    McConfig cfg = small_config();
    cfg.paths = 10'000;

    cfg.threads = 1;
    const auto serial = simulate_terminal(p, 1.7, cfg);
    cfg.threads = 4;
    const auto parallel = simulate_terminal(p, 1.7, cfg);
    const auto again = simulate_terminal(p, 1.7, cfg);

    REQUIRE(serial.size() == parallel.size());
    CHECK(std::memcmp(serial.data(), parallel.data(), serial.size() * sizeof(double)) == 0);
    CHECK(std::memcmp(serial.data(), again.data(), serial.size() * sizeof(double)) == 0);

    const McEstimate a = mc_call_price(p, 1.0, 1.7, cfg);
    cfg.threads = 1;
    const McEstimate b = mc_call_price(p, 1.0, 1.7, cfg);
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);
}

TEST_CASE("different seeds give different samples") {
    const SabrParams p(0.3, 0.6, -0.4, 0.5, 1.2);
    McConfig cfg = small_config();
    cfg.paths = 1'000;
    const auto s1 = simulate_terminal(p, 1.0, cfg);
    cfg.seed += 1;
    const auto s2 = simulate_terminal(p, 1.0, cfg);
    CHECK(s1[0] != s2[0]);
}

TEST_CASE("lognormal reduction: mean of ln S matches ln s - alpha^2 tau / 2") {
    const SabrParams p(0.2, 1.0, 0.0, 0.0, 1.0);
    const double tau = 1.0;
    McConfig cfg = small_config();
    cfg.steps_per_year = 250;
    const auto terminal = simulate_terminal(p, tau, cfg);
    std::vector<double> logs(terminal.size());
    for (std::size_t i = 0; i < terminal.size(); ++i) {
        REQUIRE(terminal[i] > 0.0);
        logs[i] = std::log(terminal[i]);
    }
    const McEstimate est = reduce_samples(logs, cfg.antithetic);
    const double expected = -0.5 * 0.2 * 0.2 * tau;
    CHECK(std::abs(est.value - expected) < 3.0 * est.std_error);
}

TEST_CASE("driftless dynamics: terminal mean stays at the forward") {
    const SabrParams p(0.3, 0.6, -0.3, 0.4, 1.0);
    McConfig cfg = small_config();
    const auto terminal = simulate_terminal(p, 2.0, cfg);
    const McEstimate est = reduce_samples(terminal, cfg.antithetic);
    CHECK(std::abs(est.value - 1.0) < 3.0 * est.std_error);
}

TEST_CASE("flat lognormal call price matches Black-Scholes within 3 SE") {
    const SabrParams p(0.2, 1.0, 0.0, 0.0, 1.0);
    McConfig cfg = small_config();
    cfg.steps_per_year = 250;
    const McEstimate est = mc_call_price(p, 1.0, 1.0, cfg);
    const double bs = bs_call(1.0, 1.0, 0.2, 1.0);
    CHECK(std::abs(est.value - bs) < 3.0 * est.std_error);
    CHECK(est.std_error > 0.0);
}

TEST_CASE("strike edges of the Monte Carlo price") {
    const SabrParams p(0.25, 0.7, -0.2, 0.3, 1.0);
    McConfig cfg = small_config();
    cfg.paths = 20'000;
    const McEstimate at_zero = mc_call_price(p, 0.0, 1.0, cfg);
    CHECK(std::abs(at_zero.value - 1.0) < 3.0 * at_zero.std_error);
    const McEstimate far = mc_call_price(p, 50.0, 1.0, cfg);
    CHECK(far.value == 0.0);
    CHECK_THROWS_AS(mc_call_price(p, -1.0, 1.0, cfg), std::domain_error);
    CHECK_THROWS_AS(simulate_terminal(p, 0.0, cfg), std::domain_error);
}

TEST_CASE("standard error halves when paths quadruple") {
    const SabrParams p(0.3, 0.6, -0.3, 0.4, 1.0);
    McConfig cfg = small_config();
    cfg.paths = 20'000;
    const McEstimate base = mc_call_price(p, 1.0, 1.0, cfg);
    cfg.paths = 80'000;
    const McEstimate fine = mc_call_price(p, 1.0, 1.0, cfg);
    const double ratio = base.std_error / fine.std_error;
    CHECK(ratio > 1.6);
    CHECK(ratio < 2.4);
}

TEST_CASE("antithetic pairing: odd path counts round up, flag can be disabled") {
    const SabrParams p(0.3, 0.6, -0.3, 0.4, 1.0);
    McConfig cfg = small_config();
    cfg.paths = 10'001;
    CHECK(simulate_terminal(p, 1.0, cfg).size() == 10'002);
    const McEstimate est = mc_call_price(p, 1.0, 1.0, cfg);
    CHECK(est.paths_used == 10'002);

    cfg.antithetic = false;
    CHECK(simulate_terminal(p, 1.0, cfg).size() == 10'001);

    // first leg of each pair reproduces the plain stream
    cfg.paths = 4;
    cfg.antithetic = true;
    const auto paired = simulate_terminal(p, 1.0, cfg);
    cfg.antithetic = false;
    cfg.paths = 2;
    const auto plain = simulate_terminal(p, 1.0, cfg);
    CHECK(paired[0] == plain[0]);
    CHECK(paired[2] == plain[1]);
}

TEST_CASE("absorbed fraction is monotone in tau and in nu") {
    McConfig cfg = small_config();
    cfg.paths = 20'000;
    cfg.steps_per_year = 50;

    const SabrParams p(0.6, 0.3, 0.0, 0.8, 1.0);
    const double f1 = absorbed_fraction(simulate_terminal(p, 1.0, cfg));
    const double f5 = absorbed_fraction(simulate_terminal(p, 5.0, cfg));
    const double f15 = absorbed_fraction(simulate_terminal(p, 15.0, cfg));
    // same dt and shared increments: paths absorbed early stay absorbed
    CHECK(f1 <= f5);
    CHECK(f5 <= f15);
    CHECK(f15 > 0.0);

    const auto frac_at_nu = [&](double nu) {
        const SabrParams q(0.6, 0.3, 0.0, nu, 1.0);
        return absorbed_fraction(simulate_terminal(q, 10.0, cfg));
    };
    const double g_lo = frac_at_nu(0.2);
    const double g_mid = frac_at_nu(0.6);
    const double g_hi = frac_at_nu(1.0);
    CHECK(g_lo <= g_mid);
    CHECK(g_mid <= g_hi);
}

TEST_CASE("absorption freezes paths at zero; without it they freeze negative") {
    McConfig cfg = small_config();
    cfg.paths = 20'000;
    cfg.steps_per_year = 50;
    const SabrParams p(0.6, 0.3, 0.0, 0.8, 1.0);

    const auto absorbed = simulate_terminal(p, 10.0, cfg);
    for (double s : absorbed) {
        CHECK(s >= 0.0);
    }

    cfg.absorption = false;
    const auto frozen = simulate_terminal(p, 10.0, cfg);
    bool any_negative = false;
    for (double s : frozen) {
        any_negative = any_negative || s < 0.0;
    }
    CHECK(any_negative);  // overshoots are kept, not clipped
}

TEST_CASE("halving the time step moves the price by less than 3 combined SE") {
    const SabrParams p(0.3, 0.6, -0.3, 0.4, 1.0);
    McConfig cfg = small_config();
    cfg.paths = 100'000;
    cfg.steps_per_year = 125;
    const McEstimate coarse = mc_call_price(p, 1.0, 1.0, cfg);
    cfg.steps_per_year = 250;
    const McEstimate fine = mc_call_price(p, 1.0, 1.0, cfg);
    const double combined = std::hypot(coarse.std_error, fine.std_error);
    CHECK(std::abs(coarse.value - fine.value) < 3.0 * combined);
}

TEST_CASE("mc_implied_vol recovers a flat lognormal vol") {
    const SabrParams p(0.2, 1.0, 0.0, 0.0, 1.0);
    McConfig cfg = small_config();
    cfg.paths = 100'000;
    cfg.steps_per_year = 250;
    for (double strike : {0.9, 1.0, 1.1}) {
        const McEstimate iv = mc_implied_vol(p, strike, 1.0, cfg);
        CHECK(iv.std_error > 0.0);
        CHECK(std::abs(iv.value - 0.2) < 3.0 * iv.std_error);
    }
}

TEST_CASE("mc_implied_vol reports out-of-band prices") {
    // a strike no path can reach prices to exactly zero, the band edge
    const SabrParams p(0.2, 1.0, 0.0, 0.0, 1.0);
    McConfig cfg = small_config();
    cfg.paths = 2'000;
    CHECK_THROWS_AS(mc_implied_vol(p, 10.0, 0.02, cfg), OutOfBandError);
}

TEST_CASE("config validation") {
    const SabrParams p(0.2, 1.0, 0.0, 0.0, 1.0);
    McConfig cfg = small_config();
    cfg.paths = 0;
    CHECK_THROWS_AS(simulate_terminal(p, 1.0, cfg), std::invalid_argument);
    cfg = small_config();
    cfg.steps_per_year = 0;
    CHECK_THROWS_AS(simulate_terminal(p, 1.0, cfg), std::invalid_argument);
}
