#include "sabrsmile/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "sabrsmile/black_scholes.hpp"
#include "sabrsmile/errors.hpp"
#include "sabrsmile/mc.hpp"
#include "sabrsmile/smile.hpp"
#include "sabrsmile/structures.hpp"

namespace sabrsmile {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitOutOfBand = 4;

// ---------------------------------------------------------------------------
// Table output

using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv(std::ostream& os, const Table& table) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        os << (c ? "," : "") << table.columns[c];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) {
                os << ',';
            }
            if (const double* d = std::get_if<double>(&row[c])) {
                os << format_double(*d);
            } else if (const std::string* s = std::get_if<std::string>(&row[c])) {
                os << *s;
            }
        }
        os << '\n';
    }
}

void write_json(std::ostream& os, const Table& table, nlohmann::json meta) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json obj;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (const double* d = std::get_if<double>(&row[c])) {
                obj[table.columns[c]] = *d;
            } else if (const std::string* s = std::get_if<std::string>(&row[c])) {
                obj[table.columns[c]] = *s;
            } else {
                obj[table.columns[c]] = nullptr;
            }
        }
        rows.push_back(std::move(obj));
    }
    meta["columns"] = table.columns;
    meta["rows"] = std::move(rows);
    os << meta.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Option plumbing

struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;
    bool geometric = false;
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        parts.push_back(item);
    }
    if (parts.size() < 3 || parts.size() > 4) {
        throw CLI::ValidationError("--grid", "expected min:max:count[:geom|lin]");
    }
    try {
        g.lo = std::stod(parts[0]);
        g.hi = std::stod(parts[1]);
        g.count = std::stoi(parts[2]);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--grid", "could not parse '" + text + "'");
    }
    if (parts.size() == 4) {
        if (parts[3] == "geom") {
            g.geometric = true;
        } else if (parts[3] != "lin") {
            throw CLI::ValidationError("--grid", "spacing must be 'geom' or 'lin'");
        }
    }
    if (g.count < 2 || !(g.lo < g.hi)) {
        throw CLI::ValidationError("--grid", "need min < max and count >= 2");
    }
    return g;
}

struct ToolOptions {
    double alpha = std::numeric_limits<double>::quiet_NaN();
    double atm = std::numeric_limits<double>::quiet_NaN();
    std::string atm_mode = "first-order";
    double beta = 1.0;
    double rho = 0.0;
    double nu = 0.0;
    double forward = std::numeric_limits<double>::quiet_NaN();
    double tau = std::numeric_limits<double>::quiet_NaN();
    std::string formula = "both";
    std::string grid;
    std::string units = "percent";
    std::uint64_t seed = 42;
    std::uint64_t paths = 200'000;
    int steps = 250;
    int sweep = 200;
    double fd_step = 0.0;  // 0 = default 1e-4 * forward
    bool with_mc = false;
    std::string out = "-";
    std::string format = "csv";
};

void add_model_options(CLI::App* sub, ToolOptions& opt) {
    sub->add_option("--alpha", opt.alpha, "initial vol level alpha (same unit system as --forward)");
    sub->add_option("--atm", opt.atm,
                    "ATM implied vol quote to back alpha out of (a percentage under "
                    "--units=percent, a decimal otherwise)");
    sub->add_option("--atm-mode", opt.atm_mode, "alpha back-out: first-order | zero-order")
        ->check(CLI::IsMember({"first-order", "zero-order"}));
    sub->add_option("--beta", opt.beta, "CEV exponent in (0,1]")->capture_default_str();
    sub->add_option("--rho", opt.rho, "correlation, |rho| < 1")->capture_default_str();
    sub->add_option("--nu", opt.nu, "vol of vol, >= 0")->capture_default_str();
    sub->add_option("--forward", opt.forward, "forward level s > 0");
    sub->add_option("--tau", opt.tau, "time to maturity in years");
    sub->add_option("--formula", opt.formula, "hagan | berestycki | both")
        ->check(CLI::IsMember({"hagan", "berestycki", "both"}))
        ->capture_default_str();
    sub->add_option("--grid", opt.grid, "strike/peak grid, min:max:count[:geom|lin]");
    sub->add_option("--units", opt.units,
                    "price units: percent (strikes in percentage points) or decimal")
        ->check(CLI::IsMember({"percent", "decimal"}))
        ->capture_default_str();
    sub->add_option("--out", opt.out, "output path, '-' for stdout")->capture_default_str();
    sub->add_option("--format", opt.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->set_config("--config", "", "key=value config file; command line wins on conflict");
}

void add_mc_options(CLI::App* sub, ToolOptions& opt) {
    sub->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
    sub->add_option("--paths", opt.paths, "Monte Carlo paths")->capture_default_str();
    sub->add_option("--steps", opt.steps, "time steps per year")->capture_default_str();
}

struct RunSetup {
    SabrParams params;
    double tau;
    std::optional<FormulaKind> kind;  // nullopt = both
    bool percent_units;
    double wing_offset;
    McConfig mc;
    std::ostream* os;
    std::unique_ptr<std::ofstream> file;
    bool json;
};

RunSetup resolve_setup(const ToolOptions& opt, bool needs_tau = true) {
    const bool has_alpha = std::isfinite(opt.alpha);
    const bool has_atm = std::isfinite(opt.atm);
    if (has_alpha == has_atm) {
        throw CLI::ValidationError("model", "exactly one of --alpha or --atm is required");
    }
    if (!std::isfinite(opt.forward)) {
        throw CLI::ValidationError("model", "--forward is required");
    }
    if (needs_tau && !std::isfinite(opt.tau)) {
        throw CLI::ValidationError("model", "--tau is required");
    }
    const bool percent = opt.units == "percent";

    double alpha = opt.alpha;
    if (has_atm) {
        const double atm_vol = percent ? opt.atm / 100.0 : opt.atm;
        const AtmBackout mode = opt.atm_mode == "zero-order" ? AtmBackout::ZeroOrder
                                                             : AtmBackout::FirstOrder;
        alpha = backout_alpha(atm_vol, opt.beta, opt.rho, opt.nu, opt.forward,
                              needs_tau ? opt.tau : 0.0, mode);
    }

    std::optional<FormulaKind> kind;
    if (opt.formula == "hagan") {
        kind = FormulaKind::HaganA65;
    } else if (opt.formula == "berestycki") {
        kind = FormulaKind::Berestycki;
    }

    RunSetup setup{SabrParams(alpha, opt.beta, opt.rho, opt.nu, opt.forward),
                   opt.tau,
                   kind,
                   percent,
                   percent ? 2.0 : 0.02,
                   McConfig{},
                   nullptr,
                   nullptr,
                   opt.format == "json"};
    setup.mc.paths = opt.paths;
    setup.mc.steps_per_year = opt.steps;
    setup.mc.seed = opt.seed;

    if (opt.out == "-") {
        setup.os = &std::cout;
    } else {
        setup.file = std::make_unique<std::ofstream>(opt.out, std::ios::binary);
        if (!*setup.file) {
            throw CLI::ValidationError("--out", "cannot open '" + opt.out + "'");
        }
        setup.os = setup.file.get();
    }
    return setup;
}

std::vector<double> resolve_grid(const ToolOptions& opt, double def_lo, double def_hi,
                                 int def_count, bool def_geometric) {
    if (opt.grid.empty()) {
        return def_geometric ? geometric_grid(def_lo, def_hi, def_count)
                             : linear_grid(def_lo, def_hi, def_count);
    }
    const GridSpec g = parse_grid(opt.grid);
    return g.geometric ? geometric_grid(g.lo, g.hi, g.count)
                       : linear_grid(g.lo, g.hi, g.count);
}

nlohmann::json meta_for(const char* command, const RunSetup& s) {
    return nlohmann::json{{"command", command},
                          {"alpha", s.params.alpha},
                          {"beta", s.params.beta},
                          {"rho", s.params.rho},
                          {"nu", s.params.nu},
                          {"forward", s.params.forward},
                          {"tau", s.tau},
                          {"units", s.percent_units ? "percent" : "decimal"}};
}

void emit(const RunSetup& s, const Table& table, nlohmann::json meta) {
    if (s.json) {
        write_json(*s.os, table, std::move(meta));
    } else {
        write_csv(*s.os, table);
    }
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_smile(const ToolOptions& opt) {
    RunSetup s = resolve_setup(opt);
    const std::vector<double> strikes =
        resolve_grid(opt, s.params.forward / 10.0, 3.0 * s.params.forward, 200, true);

    Table table;
    const bool both = !s.kind.has_value();
    if (both) {
        table.columns = {"strike", "x", "i0_hagan", "i0_berestycki", "i1",
                         "vol_hagan", "vol_berestycki", "abs_diff"};
    } else {
        table.columns = {"strike", "x", "i0", "i1", "vol"};
    }

    for (double k : strikes) {
        std::vector<Cell> row;
        row.emplace_back(k);
        row.emplace_back(log_moneyness(s.params.forward, k));
        const double i1 = i1_hagan(s.params, k);
        const auto vol_cell = [&](FormulaKind kind) -> std::pair<Cell, Cell> {
            const double i0 =
                kind == FormulaKind::HaganA65 ? i0_hagan(s.params, k) : i0_berestycki(s.params, k);
            try {
                return {Cell{i0}, Cell{implied_vol(kind, s.params, k, s.tau).vol}};
            } catch (const DegenerateVolError& e) {
                std::cerr << "warning: strike " << format_double(k) << ": " << e.what() << '\n';
                return {Cell{i0}, Cell{}};
            }
        };
        if (both) {
            auto [i0_h, vol_h] = vol_cell(FormulaKind::HaganA65);
            auto [i0_b, vol_b] = vol_cell(FormulaKind::Berestycki);
            row.push_back(i0_h);
            row.push_back(i0_b);
            row.emplace_back(i1);
            row.push_back(vol_h);
            row.push_back(vol_b);
            if (std::holds_alternative<double>(vol_h) && std::holds_alternative<double>(vol_b)) {
                row.emplace_back(std::abs(std::get<double>(vol_h) - std::get<double>(vol_b)));
            } else {
                row.emplace_back();
            }
        } else {
            auto [i0, vol] = vol_cell(*s.kind);
            row.push_back(i0);
            row.emplace_back(i1);
            row.push_back(vol);
        }
        table.rows.push_back(std::move(row));
    }
    emit(s, table, meta_for("smile", s));
    return kExitOk;
}

int cmd_triangle(const ToolOptions& opt) {
    RunSetup s = resolve_setup(opt);
    const double def_lo = s.percent_units ? 0.25 : 0.0025;
    const double def_hi = s.percent_units ? 6.0 : 0.06;
    const std::vector<double> peaks = resolve_grid(opt, def_lo, def_hi, 24, false);

    Table table;
    table.columns = {"peak", "price_hagan", "price_berestycki"};
    if (opt.with_mc) {
        table.columns.push_back("mc_price");
        table.columns.push_back("mc_se");
    }

    const auto hagan = triangle_curve(FormulaKind::HaganA65, s.params, s.tau, peaks, s.wing_offset);
    const auto beres = triangle_curve(FormulaKind::Berestycki, s.params, s.tau, peaks, s.wing_offset);

    std::vector<double> terminal;
    if (opt.with_mc) {
        terminal = simulate_terminal(s.params, s.tau, s.mc);
    }

    for (std::size_t i = 0; i < peaks.size(); ++i) {
        std::vector<Cell> row;
        row.emplace_back(peaks[i]);
        for (const auto* curve : {&hagan, &beres}) {
            if ((*curve)[i].ok) {
                row.emplace_back((*curve)[i].price);
            } else {
                std::cerr << "warning: peak " << format_double(peaks[i]) << ": "
                          << (*curve)[i].error << '\n';
                row.emplace_back();
            }
        }
        if (opt.with_mc) {
            const TriangleSpec spec = TriangleSpec::from_peak(peaks[i], s.wing_offset);
            std::vector<double> payoff(terminal.size());
            for (std::size_t j = 0; j < terminal.size(); ++j) {
                payoff[j] = spec.payoff(terminal[j]);
            }
            const McEstimate est = reduce_samples(payoff, s.mc.antithetic);
            row.emplace_back(est.value);
            row.emplace_back(est.std_error);
        }
        table.rows.push_back(std::move(row));
    }
    nlohmann::json meta = meta_for("triangle", s);
    meta["wing_offset"] = s.wing_offset;
    emit(s, table, std::move(meta));
    return kExitOk;
}

int cmd_density(const ToolOptions& opt) {
    RunSetup s = resolve_setup(opt);
    const std::vector<double> strikes =
        resolve_grid(opt, s.params.forward / 10.0, 3.0 * s.params.forward, 200, false);
    const double h = opt.fd_step > 0.0 ? opt.fd_step : 1e-4 * s.params.forward;

    std::vector<FormulaKind> kinds;
    std::vector<std::string> suffix;
    if (s.kind.has_value()) {
        kinds.push_back(*s.kind);
        suffix.emplace_back("");
    } else {
        kinds = {FormulaKind::HaganA65, FormulaKind::Berestycki};
        suffix = {"_hagan", "_berestycki"};
    }

    Table table;
    table.columns = {"strike"};
    for (const auto& sfx : suffix) {
        table.columns.push_back("density" + sfx);
        table.columns.push_back("violation" + sfx);
    }

    nlohmann::json meta = meta_for("density", s);
    meta["fd_step"] = h;
    std::vector<DensityReport> reports;
    for (FormulaKind kind : kinds) {
        reports.push_back(density_scan(kind, s.params, s.tau, strikes, h));
    }
    for (std::size_t r = 0; r < reports.size(); ++r) {
        nlohmann::json intervals = nlohmann::json::array();
        for (const auto& [lo, hi] : reports[r].violations) {
            intervals.push_back({{"lo", lo}, {"hi", hi}});
            std::cerr << "info: negative density" << suffix[r] << " on ["
                      << format_double(lo) << ", " << format_double(hi) << "]\n";
        }
        meta["violations" + suffix[r]] = std::move(intervals);
        for (const auto& err : reports[r].point_errors) {
            if (!err.empty()) {
                std::cerr << "warning: " << err << '\n';
            }
        }
    }

    for (std::size_t i = 0; i < strikes.size(); ++i) {
        std::vector<Cell> row;
        row.emplace_back(strikes[i]);
        for (const auto& report : reports) {
            if (report.point_errors[i].empty()) {
                const double d = report.density[i];
                row.emplace_back(d);
                row.emplace_back(d < -kDensityTol ? 1.0 : 0.0);
            } else {
                row.emplace_back();
                row.emplace_back();
            }
        }
        table.rows.push_back(std::move(row));
    }
    emit(s, table, std::move(meta));
    return kExitOk;
}

int cmd_mc_check(const ToolOptions& opt) {
    RunSetup s = resolve_setup(opt);
    const std::vector<double> strikes =
        resolve_grid(opt, 0.8 * s.params.forward, 1.2 * s.params.forward, 5, false);

    const bool both = !s.kind.has_value();
    Table table;
    table.columns = {"strike"};
    if (both) {
        table.columns.insert(table.columns.end(),
                             {"formula_vol_hagan", "formula_vol_berestycki", "mc_vol", "mc_se",
                              "z_hagan", "z_berestycki"});
    } else {
        table.columns.insert(table.columns.end(), {"formula_vol", "mc_vol", "mc_se", "z_score"});
    }

    const std::vector<double> terminal = simulate_terminal(s.params, s.tau, s.mc);
    bool any_out_of_band = false;

    for (double k : strikes) {
        std::vector<Cell> row;
        row.emplace_back(k);

        std::vector<Cell> formula_cells;
        std::vector<double> formula_vols;
        const auto kinds = both ? std::vector<FormulaKind>{FormulaKind::HaganA65,
                                                           FormulaKind::Berestycki}
                                : std::vector<FormulaKind>{*s.kind};
        for (FormulaKind kind : kinds) {
            try {
                const double v = implied_vol(kind, s.params, k, s.tau).vol;
                formula_cells.emplace_back(v);
                formula_vols.push_back(v);
            } catch (const DegenerateVolError& e) {
                std::cerr << "warning: strike " << format_double(k) << ": " << e.what() << '\n';
                formula_cells.emplace_back();
                formula_vols.push_back(std::numeric_limits<double>::quiet_NaN());
            }
        }

        std::vector<double> payoff(terminal.size());
        for (std::size_t j = 0; j < terminal.size(); ++j) {
            payoff[j] = std::max(terminal[j] - k, 0.0);
        }
        const McEstimate price = reduce_samples(payoff, s.mc.antithetic);

        Cell mc_vol_cell;
        Cell mc_se_cell;
        std::vector<Cell> z_cells(formula_vols.size());
        try {
            const double vol = implied_vol_from_price(s.params.forward, k, s.tau, price.value, true);
            McEstimate iv{vol, 0.0, price.paths_used};
            // one-sided when a bump leaves the band
            double hi = vol;
            double lo = vol;
            bool hi_ok = false;
            bool lo_ok = false;
            try {
                hi = implied_vol_from_price(s.params.forward, k, s.tau,
                                            price.value + price.std_error, true);
                hi_ok = true;
            } catch (const OutOfBandError&) {
            }
            try {
                lo = implied_vol_from_price(s.params.forward, k, s.tau,
                                            price.value - price.std_error, true);
                lo_ok = true;
            } catch (const OutOfBandError&) {
            }
            iv.std_error = hi_ok && lo_ok ? 0.5 * (hi - lo)
                           : hi_ok        ? hi - vol
                           : lo_ok        ? vol - lo
                                          : std::numeric_limits<double>::infinity();
            mc_vol_cell = iv.value;
            mc_se_cell = iv.std_error;
            for (std::size_t f = 0; f < formula_vols.size(); ++f) {
                if (std::isfinite(formula_vols[f])) {
                    z_cells[f] = (iv.value - formula_vols[f]) / iv.std_error;
                }
            }
        } catch (const OutOfBandError& e) {
            std::cerr << "warning: strike " << format_double(k) << ": MC " << e.what() << '\n';
            any_out_of_band = true;
        }

        if (both) {
            row.push_back(formula_cells[0]);
            row.push_back(formula_cells[1]);
            row.push_back(mc_vol_cell);
            row.push_back(mc_se_cell);
            row.push_back(z_cells[0]);
            row.push_back(z_cells[1]);
        } else {
            row.push_back(formula_cells[0]);
            row.push_back(mc_vol_cell);
            row.push_back(mc_se_cell);
            row.push_back(z_cells[0]);
        }
        table.rows.push_back(std::move(row));
    }

    nlohmann::json meta = meta_for("mc-check", s);
    meta["paths"] = s.mc.paths;
    meta["steps_per_year"] = s.mc.steps_per_year;
    meta["seed"] = s.mc.seed;
    emit(s, table, std::move(meta));
    return any_out_of_band ? kExitOutOfBand : kExitOk;
}

int cmd_table1(const ToolOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };
    const auto log_uniform = [&](double lo, double hi) {
        return lo * std::exp(uniform(0.0, std::log(hi / lo)));
    };

    const int n = opt.sweep;
    double max_atm = 0.0;
    double max_nu0 = 0.0;
    double max_beta1 = 0.0;
    double max_generic = 0.0;
    int generic_above = 0;

    for (int i = 0; i < n; ++i) {
        const double alpha = log_uniform(0.05, 1.0);
        const double beta = uniform(0.1, 0.9);
        const double rho = uniform(-0.9, 0.9);
        const double nu = log_uniform(0.05, 1.0);
        const double s = log_uniform(0.1, 10.0);
        const double x = (unit(rng) < 0.5 ? -1.0 : 1.0) * uniform(0.1, 1.5);
        const double k = s * std::exp(-x);

        const auto rel_diff = [](double a, double b) {
            return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
        };

        {
            const SabrParams p(alpha, beta, rho, nu, s);
            max_atm = std::max(max_atm, rel_diff(i0_hagan(p, s), i0_berestycki(p, s)));
            const double d = rel_diff(i0_hagan(p, k), i0_berestycki(p, k));
            max_generic = std::max(max_generic, d);
            if (d > 1e-6) {
                ++generic_above;
            }
        }
        {
            const SabrParams p(alpha, beta, rho, 0.0, s);
            max_nu0 = std::max(max_nu0, rel_diff(i0_hagan(p, k), i0_berestycki(p, k)));
        }
        {
            const SabrParams p(alpha, 1.0, rho, nu, s);
            max_beta1 = std::max(max_beta1, rel_diff(i0_hagan(p, k), i0_berestycki(p, k)));
        }
    }

    Table table;
    table.columns = {"row", "max_rel_diff", "frac_above_1e-6", "verdict"};
    const auto verdict = [](double max_diff) {
        return std::string(max_diff < 1e-10 ? "=" : "!=");
    };
    const double frac = static_cast<double>(generic_above) / n;
    table.rows.push_back({Cell{std::string("atm")}, Cell{max_atm}, Cell{}, Cell{verdict(max_atm)}});
    table.rows.push_back(
        {Cell{std::string("nu_zero")}, Cell{max_nu0}, Cell{}, Cell{verdict(max_nu0)}});
    table.rows.push_back(
        {Cell{std::string("beta_one")}, Cell{max_beta1}, Cell{}, Cell{verdict(max_beta1)}});
    table.rows.push_back({Cell{std::string("generic")}, Cell{max_generic}, Cell{frac},
                          Cell{verdict(max_generic)}});

    std::ostream* os = &std::cout;
    std::unique_ptr<std::ofstream> file;
    if (opt.out != "-") {
        file = std::make_unique<std::ofstream>(opt.out, std::ios::binary);
        if (!*file) {
            throw CLI::ValidationError("--out", "cannot open '" + opt.out + "'");
        }
        os = file.get();
    }
    if (opt.format == "json") {
        write_json(*os, table, nlohmann::json{{"command", "table1"}, {"seed", opt.seed},
                                              {"draws", n}});
    } else {
        write_csv(*os, table);
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"SABR small-maturity smile toolkit"};
    app.require_subcommand(1);

    ToolOptions smile_opt;
    ToolOptions triangle_opt;
    ToolOptions density_opt;
    ToolOptions mc_opt;
    ToolOptions table1_opt;

    CLI::App* smile = app.add_subcommand("smile", "implied-vol smile across strikes");
    add_model_options(smile, smile_opt);

    CLI::App* triangle = app.add_subcommand("triangle", "triangle-spread T(K) price curve");
    add_model_options(triangle, triangle_opt);
    add_mc_options(triangle, triangle_opt);
    triangle->add_flag("--mc", triangle_opt.with_mc, "append Monte Carlo price columns");

    CLI::App* density = app.add_subcommand("density", "risk-neutral density scan");
    add_model_options(density, density_opt);
    density->add_option("--fd-step", density_opt.fd_step,
                        "finite-difference strike step (default 1e-4 * forward)");

    CLI::App* mc_check = app.add_subcommand("mc-check", "Monte Carlo vs formula implied vols");
    add_model_options(mc_check, mc_opt);
    add_mc_options(mc_check, mc_opt);

    CLI::App* table1 = app.add_subcommand("table1", "equality/inequality summary of the two "
                                                    "zero-order terms over a random sweep");
    table1->add_option("--seed", table1_opt.seed, "sweep seed")->capture_default_str();
    table1->add_option("--sweep", table1_opt.sweep, "number of random parameter sets")
        ->capture_default_str();
    table1->add_option("--out", table1_opt.out, "output path, '-' for stdout")
        ->capture_default_str();
    table1->add_option("--format", table1_opt.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            return app.exit(e);
        }
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (smile->parsed()) {
            return cmd_smile(smile_opt);
        }
        if (triangle->parsed()) {
            return cmd_triangle(triangle_opt);
        }
        if (density->parsed()) {
            return cmd_density(density_opt);
        }
        if (mc_check->parsed()) {
            return cmd_mc_check(mc_opt);
        }
        if (table1->parsed()) {
            return cmd_table1(table1_opt);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const OutOfBandError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitOutOfBand;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitConfig;
}

}  // namespace sabrsmile
