#include "szilard/cli.hpp"

#include "szilard/boson.hpp"
#include "szilard/engine.hpp"
#include "szilard/fermion.hpp"
#include "szilard/info.hpp"
#include "szilard/oracle.hpp"
#include "szilard/phase.hpp"
#include "szilard/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <tuple>
#include <sstream>
#include <stdexcept>

namespace szilard::cli {

namespace {

using report::JsonObject;
using report::Table;
using report::integer;
using report::number;

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UndefinedQuantity : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ToleranceExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string species;
    std::vector<int> twice_spin;
    std::optional<long> particles;
    std::string particle_range;
    std::optional<double> temperature;
    std::optional<double> temperature_e0;
    std::string temperature_range;
    double length = 1e-9;
    double mass = 1e-26;
    double insertion = 0.5;
    long nmax = 1024;
    double tolerance = 1e-3;
    std::string format = "csv";
    std::string out;
    bool strict = false;
    unsigned threads = 1;
};

/// Validated view of a RunConfig.
struct Context {
    const RunConfig& config;
    std::vector<SpinStatistics> spins;
    WellGeometry geometry;
    bool json;

    const SpinStatistics& single_spin() const {
        if (spins.size() != 1)
            throw ConfigError("this command takes exactly one --two-s value");
        return spins.front();
    }

    std::vector<long> particle_numbers(std::optional<std::vector<long>> fallback = {}) const {
        if (config.particles && !config.particle_range.empty())
            throw ConfigError("give either --n or --n-range, not both");
        std::vector<long> out;
        if (config.particles)
            out = {*config.particles};
        else if (!config.particle_range.empty())
            out = parse_particle_range(config.particle_range);
        else if (fallback)
            out = *fallback;
        else
            throw ConfigError("--n or --n-range is required");
        for (long N : out)
            if (N < 0)
                throw ConfigError("particle numbers must be >= 0");
        return out;
    }

    long single_particle_number() const {
        if (!config.particle_range.empty())
            throw ConfigError("this command takes a single --n");
        return particle_numbers().front();
    }

    bool has_temperature() const {
        return config.temperature || config.temperature_e0 || !config.temperature_range.empty();
    }

    std::vector<double> temperatures() const {
        const int given = (config.temperature ? 1 : 0) + (config.temperature_e0 ? 1 : 0) +
                          (config.temperature_range.empty() ? 0 : 1);
        if (given == 0)
            throw ConfigError("a temperature is required (--temp, --temp-e0 or --temp-range)");
        if (given > 1)
            throw ConfigError("give only one of --temp, --temp-e0 and --temp-range");
        std::vector<double> out;
        if (config.temperature)
            out = {*config.temperature};
        else if (config.temperature_e0)
            out = {ThermalPoint::from_energy_ratio(*config.temperature_e0,
                                                   reference_energy(geometry))
                       .temperature()};
        else
            out = parse_temperature_range(config.temperature_range);
        for (double t : out)
            if (!(t >= 0.0) || !std::isfinite(t))
                throw ConfigError("temperatures must be finite and >= 0");
        return out;
    }

    double single_temperature() const {
        if (!config.temperature_range.empty())
            throw ConfigError("this command takes a single temperature");
        return temperatures().front();
    }
};

void emit_table(const Context& ctx, const Table& table, std::ostream& out) {
    if (ctx.json) {
        try {
            report::row_object(table).write(out);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    } else {
        report::write_csv(out, table);
    }
}

std::optional<double> ratio_or_empty(double num, double den) {
    if (den == 0.0)
        return std::nullopt;
    return num / den;
}

int cmd_work(const Context& ctx, std::ostream& out) {
    const auto& spin = ctx.single_spin();
    const auto Ns = ctx.particle_numbers();
    const auto Ts = ctx.temperatures();
    const Joules e0 = reference_energy(ctx.geometry);
    Table table;
    table.header = {"N"};
    if (spin.is_fermion())
        table.header.insert(table.header.end(), {"n", "k"});
    table.header.insert(table.header.end(), {"D", "W0_joule", "W0_e0", "T_kelvin", "W_tot_joule",
                                             "W_tot_kT", "T_c_kelvin"});
    for (long N : Ns) {
        const auto c = work_coefficients(spin, N, ctx.geometry);
        const auto tc = critical_temperature(c);
        if (!tc && ctx.config.strict)
            throw UndefinedQuantity("T_c is undefined for N=" + std::to_string(N) + " (D = 0)");
        for (double T : Ts) {
            const ThermalPoint thermal(T);
            const Joules w = c.total_work(thermal);
            std::vector<std::string> row = {integer(N)};
            if (spin.is_fermion()) {
                const auto f = fermion::decompose(N, spin.u());
                row.push_back(integer(f.n));
                row.push_back(integer(f.k));
            }
            row.insert(row.end(), {number(c.slope), number(c.absorbed), number(c.absorbed / e0),
                                   number(T), number(w), number(ratio_or_empty(w, thermal.kT())),
                                   number(tc)});
            table.add(std::move(row));
        }
    }
    emit_table(ctx, table, out);
    return kOk;
}

int cmd_distribution(const Context& ctx, std::ostream& out) {
    const auto& spin = ctx.single_spin();
    const long N = ctx.single_particle_number();
    const auto dist = measurement_distribution(spin, N);
    std::optional<std::vector<double>> logs;
    if (ctx.has_temperature()) {
        const ThermalPoint thermal(ctx.single_temperature());
        if (!thermal.is_zero())
            logs = log_post_expansion_weights(spin, N, ctx.geometry, thermal);
    }
    std::vector<double> f_star;
    for (std::size_t i = 0; i < dist.probabilities.size(); ++i)
        f_star.push_back(logs ? std::exp((*logs)[i]) : NAN);

    if (ctx.json) {
        JsonObject obj;
        obj.add_string("species", spin.label());
        obj.add_integer("particles", N);
        obj.add_integer("first_m", dist.first_m);
        obj.add_numbers("f", dist.probabilities);
        obj.add_numbers("f_star", f_star);
        obj.add_number("sum_f", dist.total());
        obj.write(out);
        return kOk;
    }
    Table table;
    table.header = {"m", "f_m", "f_star"};
    for (std::size_t i = 0; i < dist.probabilities.size(); ++i)
        table.add({integer(dist.first_m + static_cast<long>(i)), number(dist.probabilities[i]),
                   number(f_star[i])});
    double star_total = 0.0;
    for (double v : f_star)
        star_total += v;
    table.add({"sum", number(dist.total()), number(star_total)});
    report::write_csv(out, table);
    return kOk;
}

int cmd_phase(const Context& ctx, std::ostream& out) {
    if (ctx.json)
        throw ConfigError("phase output is a grid; use --format csv");
    const auto Ns = ctx.particle_numbers();
    const bool multi = ctx.spins.size() > 1;
    Table table;
    if (ctx.has_temperature()) {
        const auto Ts = ctx.temperatures();
        table.header = {"N", "T", "W_tot_joule", "sign"};
        if (multi)
            table.header.insert(table.header.begin(), "two_s");
        for (const auto& spin : ctx.spins) {
            const auto grid = work_grid(spin, ctx.geometry, Ns, Ts, ctx.config.threads);
            for (std::size_t i = 0; i < Ns.size(); ++i)
                for (std::size_t j = 0; j < Ts.size(); ++j) {
                    std::vector<std::string> row = {integer(Ns[i]), number(Ts[j]),
                                                    number(grid.at(i, j)),
                                                    integer(grid.sign(i, j))};
                    if (multi)
                        row.insert(row.begin(), integer(spin.twice_spin()));
                    table.add(std::move(row));
                }
        }
    } else {
        table.header = {"N", "T_c_kelvin", "defined"};
        if (multi)
            table.header.insert(table.header.begin(), "two_s");
        for (const auto& spin : ctx.spins) {
            for (const auto& p : phase_curve(spin, ctx.geometry, Ns)) {
                if (!p.critical && ctx.config.strict)
                    throw UndefinedQuantity("T_c is undefined for N=" +
                                            std::to_string(p.particles) + " (D = 0)");
                std::vector<std::string> row = {integer(p.particles), number(p.critical),
                                                p.critical ? "1" : "0"};
                if (multi)
                    row.insert(row.begin(), integer(spin.twice_spin()));
                table.add(std::move(row));
            }
        }
    }
    report::write_csv(out, table);
    return kOk;
}

/// α of the configurations whose efficiency has the second-highest closed form.
std::optional<double> alpha_for(const SpinStatistics& spin, long N) {
    if (spin.is_fermion()) {
        const int u = spin.u();
        const long k = N % (4L * u);
        if (k == 2 || k == 4L * u - 2)
            return fermion_alpha(u);
        return std::nullopt;
    }
    if (N == 2)
        return boson_alpha(spin.s());
    return std::nullopt;
}

int cmd_efficiency(const Context& ctx, std::ostream& out) {
    const auto& spin = ctx.single_spin();
    const auto Ns = ctx.particle_numbers();
    const ThermalPoint thermal(ctx.single_temperature());
    if (thermal.is_zero())
        throw ConfigError("efficiency needs T > 0");
    Table table;
    table.header = {"N",   "W_tot_joule", "W_eras_joule", "W_net_joule", "entropy_bits",
                    "eta", "alpha",       "eta_alpha"};
    for (long N : Ns) {
        const auto m = info_metrics(spin, N, ctx.geometry, thermal);
        if (!m.efficiency && ctx.config.strict)
            throw UndefinedQuantity("efficiency is undefined for N=" + std::to_string(N) +
                                    " (W_eras = 0)");
        const auto alpha = alpha_for(spin, N);
        std::optional<double> eta_alpha;
        if (alpha)
            eta_alpha = second_highest_efficiency(*alpha);
        table.add({integer(N), number(m.total_work), number(m.erasure_work), number(m.net_work),
                   number(m.entropy_bits()), number(m.efficiency), number(alpha),
                   number(eta_alpha)});
    }
    emit_table(ctx, table, out);
    return kOk;
}

int cmd_oracle(const Context& ctx, std::ostream& out) {
    const auto& spin = ctx.single_spin();
    const long N = ctx.single_particle_number();
    const ThermalPoint thermal(ctx.single_temperature());
    if (thermal.is_zero())
        throw ConfigError("oracle needs T > 0");
    const double fraction = ctx.config.insertion;
    if (!(fraction > 0.0 && fraction < 1.0))
        throw ConfigError("--insertion must lie strictly between 0 and 1");
    if (!(ctx.config.tolerance > 0.0))
        throw ConfigError("--tolerance must be positive");
    oracle::OracleOptions options;
    options.max_levels = ctx.config.nmax;
    const Meters L = ctx.geometry.length();

    const auto exact =
        oracle::exact_total_work(N, spin, ctx.geometry, thermal, fraction * L, options);
    const auto analytic_dist = measurement_distribution(spin, N);
    const Joules analytic_work = total_work(spin, N, ctx.geometry, thermal);

    Table table;
    table.header = {"quantity", "m", "exact", "analytic", "delta"};
    double max_f_delta = 0.0;
    double max_wall_delta = 0.0;
    for (long m = 0; m <= N; ++m) {
        const double fe = exact.distribution.at(m);
        const double fa = analytic_dist.at(m);
        max_f_delta = std::max(max_f_delta, std::abs(fe - fa));
        table.add({"f", integer(m), number(fe), number(fa), number(std::abs(fe - fa))});
    }
    for (long m = 0; m <= N; ++m) {
        const double we = exact.equilibria[static_cast<std::size_t>(m)].position / L;
        const auto wall = analytic_equilibrium(spin, N, m, ctx.geometry);
        std::optional<double> wa;
        std::optional<double> delta;
        if (wall) {
            wa = wall->position / L;
            delta = std::abs(we - *wa);
            max_wall_delta = std::max(max_wall_delta, *delta);
        }
        table.add({"wall_over_l", integer(m), number(we), number(wa), number(delta)});
    }
    const double work_delta = std::abs(exact.total_work - analytic_work) /
                              std::max(std::abs(analytic_work), 1e-300);
    table.add({"w_tot_joule", "", number(exact.total_work), number(analytic_work),
               number(work_delta)});
    table.add({"levels", "", integer(exact.convergence.levels), "", ""});
    table.add({"achieved_delta", "", number(exact.convergence.achieved_delta), "", ""});
    table.add({"leakage", "", number(exact.leakage), "", ""});

    const double tol = ctx.config.tolerance;
    const bool passed = max_f_delta <= tol && max_wall_delta <= tol && work_delta <= tol;
    if (ctx.json) {
        JsonObject obj;
        obj.add_string("species", spin.label());
        obj.add_integer("particles", N);
        obj.add_number("temperature_kelvin", thermal.temperature());
        obj.add_number("insertion_over_l", fraction);
        obj.add_numbers("f_exact", exact.distribution.probabilities);
        obj.add_number("max_f_delta", max_f_delta);
        obj.add_number("max_wall_delta", max_wall_delta);
        obj.add_number("w_tot_exact_joule", exact.total_work);
        obj.add_number("w_tot_analytic_joule", analytic_work);
        obj.add_number("w_tot_rel_delta", work_delta);
        obj.add_integer("levels", exact.convergence.levels);
        obj.add_number("achieved_delta", exact.convergence.achieved_delta);
        obj.add_number("leakage", exact.leakage);
        obj.add_number("tolerance", tol);
        obj.add_bool("passed", passed);
        obj.write(out);
    } else {
        report::write_csv(out, table);
    }
    if (!passed)
        throw ToleranceExceeded("oracle and closed forms differ by more than " + number(tol) +
                                " (f " + number(max_f_delta) + ", wall " +
                                number(max_wall_delta) + ", work " + number(work_delta) + ")");
    return kOk;
}

int cmd_limits(const Context& ctx, std::ostream& out) {
    const auto& spin = ctx.single_spin();
    const Joules e0 = reference_energy(ctx.geometry);
    Table table;
    if (spin.is_fermion()) {
        table.header = {"k", "average_absorbed_limit_joule", "average_absorbed_limit_e0"};
        for (long k = 0; k < 4L * spin.u(); ++k) {
            const Joules w = fermion::average_absorbed_work_limit(spin.u(), k, ctx.geometry);
            table.add({integer(k), number(w), number(w / e0)});
        }
    } else {
        table.header = {"N",  "D_limit",   "W0_limit_joule", "D",
                        "W0_joule", "D_rel_gap", "W0_rel_gap"};
        for (long N : ctx.particle_numbers(std::vector<long>{0, 1, 2, 3, 4, 5, 6})) {
            const auto lim = boson::large_spin_limits(N, ctx.geometry);
            const auto c = work_coefficients(spin, N, ctx.geometry);
            auto gap = [](double v, double ref) -> std::optional<double> {
                if (ref == 0.0)
                    return v == 0.0 ? std::optional<double>(0.0) : std::nullopt;
                return std::abs(v - ref) / std::abs(ref);
            };
            table.add({integer(N), number(lim.slope), number(lim.absorbed), number(c.slope),
                       number(c.absorbed), number(gap(c.slope, lim.slope)),
                       number(gap(c.absorbed, lim.absorbed))});
        }
    }
    emit_table(ctx, table, out);
    return kOk;
}

template <typename T>
T parse_number(const std::string& text, const std::string& what) {
    T value{};
    const char* first = text.data();
    const char* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw std::invalid_argument("bad " + what + " '" + text + "'");
    return value;
}

std::vector<std::string> split_colon(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(':', start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace

std::vector<long> parse_particle_range(const std::string& text) {
    const auto parts = split_colon(text);
    if (parts.size() < 2 || parts.size() > 3)
        throw std::invalid_argument("particle range must be A:B or A:B:step");
    const long a = parse_number<long>(parts[0], "range start");
    const long b = parse_number<long>(parts[1], "range end");
    const long step = parts.size() == 3 ? parse_number<long>(parts[2], "range step") : 1;
    if (step <= 0)
        throw std::invalid_argument("range step must be positive");
    if (a > b)
        throw std::invalid_argument("empty particle range '" + text + "'");
    std::vector<long> out;
    for (long v = a; v <= b; v += step)
        out.push_back(v);
    return out;
}

std::vector<double> parse_temperature_range(const std::string& text) {
    const auto parts = split_colon(text);
    if (parts.size() != 3)
        throw std::invalid_argument("temperature range must be A:B:step");
    const double a = parse_number<double>(parts[0], "range start");
    const double b = parse_number<double>(parts[1], "range end");
    const double step = parse_number<double>(parts[2], "range step");
    if (!(step > 0.0))
        throw std::invalid_argument("range step must be positive");
    if (a > b)
        throw std::invalid_argument("empty temperature range '" + text + "'");
    const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
    std::vector<double> out;
    for (long i = 0; i < count; ++i)
        out.push_back(a + static_cast<double>(i) * step);
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"Work, information and phase quantities of the spin quantum Szilard engine",
                 "szilard"};
    app.set_config("--config", "", "Read `key = value` settings; command-line flags win");
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--species", config.species, "fermion or boson")
        ->check(CLI::IsMember({"fermion", "boson"}));
    app.add_option("--two-s", config.twice_spin, "Twice the spin, 2s (several for phase)");
    app.add_option("--n", config.particles, "Particle number N");
    app.add_option("--n-range", config.particle_range, "Particle numbers A:B[:step]");
    app.add_option("--temp", config.temperature, "Temperature in kelvin");
    app.add_option("--temp-e0", config.temperature_e0, "Temperature as k_B T / E0");
    app.add_option("--temp-range", config.temperature_range, "Temperatures A:B:step in kelvin");
    app.add_option("--length", config.length, "Well length in meters")->capture_default_str();
    app.add_option("--mass", config.mass, "Particle mass in kg")->capture_default_str();
    app.add_option("--insertion", config.insertion, "Oracle wall insertion as a fraction of L")
        ->capture_default_str();
    app.add_option("--nmax", config.nmax, "Oracle level cutoff ceiling")->capture_default_str();
    app.add_option("--tolerance", config.tolerance, "Oracle comparison tolerance")
        ->capture_default_str();
    app.add_option("--format", config.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", config.out, "Write to this file instead of stdout");
    app.add_flag("--strict", config.strict, "Fail with exit code 3 on undefined quantities");
    app.add_option("--threads", config.threads, "Worker threads for grids (0 = all cores)")
        ->capture_default_str();

    using Command = std::function<int(const Context&, std::ostream&)>;
    const std::vector<std::tuple<std::string, std::string, Command>> commands = {
        {"work", "Slope D, absorbed work W0, total work and T_c", cmd_work},
        {"distribution", "Measurement probabilities f_m and weights f_m*", cmd_distribution},
        {"phase", "Critical temperature curve or work sign grid", cmd_phase},
        {"efficiency", "Total, erasure and net work and the efficiency", cmd_efficiency},
        {"oracle", "Exact canonical ensemble against the closed forms", cmd_oracle},
        {"limits", "Large-n fermion and large-spin boson limits", cmd_limits},
    };
    std::vector<CLI::App*> subs;
    for (const auto& [name, help, fn] : commands)
        subs.push_back(app.add_subcommand(name, help));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (config.species.empty())
            throw ConfigError("--species is required");
        if (config.twice_spin.empty())
            throw ConfigError("--two-s is required");
        const Statistics kind =
            config.species == "fermion" ? Statistics::Fermion : Statistics::Boson;
        std::vector<SpinStatistics> spins;
        try {
            for (int ts : config.twice_spin)
                spins.emplace_back(ts, kind);
        } catch (const DomainError& e) {
            throw ConfigError(e.what());
        }
        const WellGeometry geometry(config.length, config.mass);
        Context ctx{config, spins, geometry, config.format == "json"};

        std::size_t which = 0;
        while (!subs[which]->parsed())
            ++which;
        const Command& fn = std::get<2>(commands[which]);

        if (config.out.empty())
            return fn(ctx, out);
        std::ostringstream buffer;
        int code = kOk;
        try {
            code = fn(ctx, buffer);
        } catch (const ToleranceExceeded&) {
            std::ofstream file(config.out, std::ios::binary);
            file << buffer.str();
            throw;
        }
        std::ofstream file(config.out, std::ios::binary);
        if (!file)
            throw ConfigError("cannot open " + config.out + " for writing");
        file << buffer.str();
        return code;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const UndefinedQuantity& e) {
        err << "error: " << e.what() << '\n';
        return kUndefinedQuantity;
    } catch (const ToleranceExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kOracleFailure;
    } catch (const oracle::ConvergenceError& e) {
        err << "error: " << e.what() << " [levels " << e.levels() << ", achieved delta "
            << number(e.achieved_delta()) << "]\n";
        return kOracleFailure;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }
}

}  // namespace szilard::cli
