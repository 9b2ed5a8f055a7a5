#pragma once

#include <stdexcept>
#include <string>

namespace sabrsmile {

/// Composite implied volatility came out non-positive: the point left the
/// validity region of the small-maturity expansion. Carries the offending
/// strike and the raw value so callers can mark the point instead of aborting.
class DegenerateVolError : public std::runtime_error {
public:
    DegenerateVolError(double strike, double vol)
        : std::runtime_error("degenerate implied vol " + std::to_string(vol) +
                             " at strike " + std::to_string(strike)),
          strike_(strike),
          vol_(vol) {}

    double strike() const noexcept { return strike_; }
    double vol() const noexcept { return vol_; }

private:
    double strike_;
    double vol_;
};

/// Price handed to the implied-vol inverter lies on or outside the static
/// no-arbitrage band for its option type. Carries the band.
class OutOfBandError : public std::runtime_error {
public:
    OutOfBandError(double price, double lower, double upper)
        : std::runtime_error("price " + std::to_string(price) +
                             " outside no-arbitrage band (" + std::to_string(lower) +
                             ", " + std::to_string(upper) + ")"),
          price_(price),
          lower_(lower),
          upper_(upper) {}

    double price() const noexcept { return price_; }
    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }

private:
    double price_;
    double lower_;
    double upper_;
};

/// A root-find exhausted its iteration budget without meeting tolerance.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sabrsmile
