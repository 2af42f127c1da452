#pragma once

// Configuration-driven scenario running: parsing of key=value configs,
// single simulations, steady-state queries, parameter sweeps, reservoir
// spectra and figure-reproduction presets, all emitting deterministic CSV.

#include "observables.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <future>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace sqcav::scenario {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class JumpMode { full, reduced_no_jump, strict_no_jump };

inline const char* jump_mode_token(JumpMode m) {
    switch (m) {
        case JumpMode::full: return "full";
        case JumpMode::reduced_no_jump: return "paper-b26";
        case JumpMode::strict_no_jump: return "strict-no-jump";
    }
    return "full";
}

struct ScenarioConfig {
    double N = 0.0;
    bool n_set = false;
    double M = 0.0;           // resolved value when m_is_max is false
    bool m_is_max = true;     // M = sqrt(N(N+1))
    double eta = 1.0;
    double kappa1 = 1.0;
    double kappa2 = 1.0;
    double kappa12 = 0.0;     // resolved value when kappa12_geom is false
    bool kappa12_geom = true; // kappa12 = sqrt(kappa1 kappa2)
    int initial_label = 1;    // used when initial_weights is unset
    std::optional<std::array<double, 6>> initial_weights;
    double t_max = 10.0;
    double dt = 1e-3;
    int truncation = 2;       // K
    JumpMode jump_mode = JumpMode::full;
    double onset_threshold = 0.02;

    double resolved_m() const {
        return m_is_max ? reservoir::max_correlation(N) : M;
    }
    double resolved_kappa12() const {
        return kappa12_geom ? liouvillian::geometric_cross_damping(kappa1, kappa2) : kappa12;
    }
    liouvillian::SystemParams system_params() const {
        liouvillian::SystemParams p;
        p.kappa1 = kappa1;
        p.kappa2 = kappa2;
        p.kappa12 = resolved_kappa12();
        p.eta = eta;
        p.squeezing.N = N;
        p.squeezing.M = resolved_m();
        return p;
    }
};

inline constexpr double kSampleInterval = 0.01;  // in units 1/kappa1

// 9 significant digits, '.' decimal, "nan" for missing values, no "-0".
inline std::string format_value(double x) {
    if (std::isnan(x)) return "nan";
    if (x == 0.0) x = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

namespace detail {

inline double parse_number(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config error: key '" + key + "': not a number: '" + value + "'");
    }
}

inline void apply_key(ScenarioConfig& c, const std::string& key, const std::string& value) {
    if (key == "N") {
        c.N = parse_number(key, value);
        c.n_set = true;
    } else if (key == "M") {
        if (value == "max") {
            c.m_is_max = true;
        } else {
            c.M = parse_number(key, value);
            c.m_is_max = false;
        }
    } else if (key == "eta") {
        c.eta = parse_number(key, value);
    } else if (key == "kappa1") {
        c.kappa1 = parse_number(key, value);
    } else if (key == "kappa2") {
        c.kappa2 = parse_number(key, value);
    } else if (key == "kappa12") {
        if (value == "geom") {
            c.kappa12_geom = true;
        } else {
            c.kappa12 = parse_number(key, value);
            c.kappa12_geom = false;
        }
    } else if (key == "initial_state") {
        if (value.find(',') != std::string::npos) {
            std::array<double, 6> w{};
            std::stringstream ss(value);
            std::string item;
            std::size_t n = 0;
            while (std::getline(ss, item, ',')) {
                if (n >= 6) throw ConfigError("config error: key 'initial_state': expected 6 weights");
                w[n++] = parse_number(key, item);
            }
            if (n != 6) throw ConfigError("config error: key 'initial_state': expected 6 weights");
            c.initial_weights = w;
        } else {
            const double lab = parse_number(key, value);
            if (lab < 1 || lab > 6 || lab != std::floor(lab))
                throw ConfigError("config error: key 'initial_state': label must be 1..6");
            c.initial_label = static_cast<int>(lab);
            c.initial_weights.reset();
        }
    } else if (key == "t_max") {
        c.t_max = parse_number(key, value);
    } else if (key == "dt") {
        c.dt = parse_number(key, value);
    } else if (key == "K") {
        const double k = parse_number(key, value);
        if (k != std::floor(k)) throw ConfigError("config error: key 'K': must be an integer");
        c.truncation = static_cast<int>(k);
    } else if (key == "jump_mode") {
        if (value == "full") c.jump_mode = JumpMode::full;
        else if (value == "paper-b26") c.jump_mode = JumpMode::reduced_no_jump;
        else if (value == "strict-no-jump") c.jump_mode = JumpMode::strict_no_jump;
        else throw ConfigError("config error: key 'jump_mode': expected full|paper-b26|strict-no-jump");
    } else if (key == "onset_threshold") {
        c.onset_threshold = parse_number(key, value);
    } else {
        throw ConfigError("config error: unknown key '" + key + "'");
    }
}

} // namespace detail

inline void validate_config(const ScenarioConfig& c) {
    if (!c.n_set) throw ConfigError("config error: key 'N': required");
    if (c.N < 0.0) throw ConfigError("config error: key 'N': must be non-negative");
    if (c.eta < 0.0 || c.eta > 1.0) throw ConfigError("config error: key 'eta': must lie in [0, 1]");
    if (c.kappa1 <= 0.0) throw ConfigError("config error: key 'kappa1': must be positive");
    if (c.kappa2 <= 0.0) throw ConfigError("config error: key 'kappa2': must be positive");
    if (!c.kappa12_geom && c.kappa12 < 0.0)
        throw ConfigError("config error: key 'kappa12': must be non-negative");
    if (c.t_max <= 0.0) throw ConfigError("config error: key 't_max': must be positive");
    if (c.dt <= 0.0) throw ConfigError("config error: key 'dt': must be positive");
    const long per = std::lround(kSampleInterval / c.dt);
    if (per < 1 || std::abs(per * c.dt - kSampleInterval) > 1e-9 * kSampleInterval)
        throw ConfigError("config error: key 'dt': must divide the sample interval " +
                          format_value(kSampleInterval));
    if (c.truncation < 2 || c.truncation > 6)
        throw ConfigError("config error: key 'K': supported truncations are 2..6");
    if (c.onset_threshold <= 0.0)
        throw ConfigError("config error: key 'onset_threshold': must be positive");
    reservoir::SqueezingParams sq{c.N, c.resolved_m(), std::nullopt};
    const auto rep = reservoir::validate_physical(sq);
    if (!rep.ok)
        throw ConfigError("config error: key 'M': |M| exceeds sqrt(N(N+1)) by " +
                          format_value(rep.excess));
    if (c.initial_weights) {
        double sum = 0.0;
        for (double w : *c.initial_weights) {
            if (w < 0.0)
                throw ConfigError("config error: key 'initial_state': negative weight");
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw ConfigError("config error: key 'initial_state': weights must sum to 1");
    }
    if (c.jump_mode == JumpMode::reduced_no_jump) {
        if (c.kappa1 != c.kappa2 ||
            (!c.kappa12_geom && c.kappa12 != c.kappa1))
            throw ConfigError(
                "config error: key 'jump_mode': paper-b26 requires kappa1 = kappa2 = kappa12");
        if (c.truncation != 2)
            throw ConfigError("config error: key 'jump_mode': paper-b26 requires K=2");
    }
}

// Whitespace-separated key=value tokens; '#' starts a comment to end of line.
inline ScenarioConfig parse_config(const std::string& text) {
    ScenarioConfig c;
    std::stringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::stringstream toks(line);
        std::string tok;
        while (toks >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos || eq == 0)
                throw ConfigError("config error: expected key=value, got '" + tok + "'");
            detail::apply_key(c, tok.substr(0, eq), tok.substr(eq + 1));
        }
    }
    validate_config(c);
    return c;
}

inline std::string config_comment(const ScenarioConfig& c) {
    std::string s = "# config:";
    s += " N=" + format_value(c.N);
    s += " M=" + format_value(c.resolved_m());
    s += " eta=" + format_value(c.eta);
    s += " kappa1=" + format_value(c.kappa1);
    s += " kappa2=" + format_value(c.kappa2);
    s += " kappa12=" + format_value(c.resolved_kappa12());
    s += " K=" + std::to_string(c.truncation);
    if (c.initial_weights) {
        s += " initial_state=";
        for (std::size_t i = 0; i < 6; ++i)
            s += (i ? "," : "") + format_value((*c.initial_weights)[i]);
    } else {
        s += " initial_state=" + std::to_string(c.initial_label);
    }
    s += " t_max=" + format_value(c.t_max);
    s += " dt=" + format_value(c.dt);
    s += std::string(" jump_mode=") + jump_mode_token(c.jump_mode);
    s += " onset_threshold=" + format_value(c.onset_threshold);
    return s;
}

struct OutputRow {
    double t = 0.0;
    double rho11 = 0.0, rho22 = 0.0, rho33 = 0.0;
    double rho44 = 0.0, rho55 = 0.0, rho66 = 0.0;
    double rho14_re = 0.0;
    double negativity = 0.0;
    double gamma12 = 0.0;
    double eta12 = 0.0;
    double rho_alpha_alpha = 0.0;
    double trace = 1.0;
    double min_eigenvalue = 0.0;
    double shell_population = 0.0;
    bool warning = false;
};

inline constexpr const char* kColumnHeader =
    "t,rho11,rho22,rho33,rho44,rho55,rho66,rho14_re,negativity,gamma12,eta12,"
    "rho_alpha_alpha,trace,min_eigenvalue,shell_population,warning";

inline std::string format_row(const OutputRow& r) {
    std::string s;
    const double cols[] = {r.t,      r.rho11,     r.rho22,  r.rho33,
                           r.rho44,  r.rho55,     r.rho66,  r.rho14_re,
                           r.negativity, r.gamma12, r.eta12, r.rho_alpha_alpha,
                           r.trace,  r.min_eigenvalue, r.shell_population};
    for (double c : cols) s += format_value(c) + ",";
    s += r.warning ? "1" : "0";
    return s;
}

struct SimulationResult {
    ScenarioConfig config;
    std::vector<OutputRow> rows;
    int flagged_samples = 0;
    double max_shell_population = 0.0;
};

inline OutputRow make_row(double t_kappa, const dynamics::DensityMatrix& rho,
                          const dynamics::StateDiagnostics& diag, bool flagged,
                          double n_reservoir) {
    OutputRow r;
    r.t = t_kappa;
    r.rho11 = rho.population(1);
    r.rho22 = rho.population(2);
    r.rho33 = rho.population(3);
    r.rho44 = rho.population(4);
    r.rho55 = rho.population(5);
    r.rho66 = rho.population(6);
    r.rho14_re = rho.element(1, 4).real();
    r.negativity = observables::logarithmic_negativity(rho);
    const observables::CoherenceSet c = observables::coherences(rho);
    r.gamma12 = c.gamma12;
    r.eta12 = c.eta12;
    r.rho_alpha_alpha =
        observables::superposition_populations(rho, n_reservoir).rho_alpha_alpha;
    r.trace = diag.trace;
    r.min_eigenvalue = diag.min_eigenvalue;
    r.shell_population = diag.shell_population;
    r.warning = flagged;
    return r;
}

inline dynamics::DensityMatrix initial_state(const ScenarioConfig& c,
                                             const hilbert::BasisSpec& basis) {
    if (c.initial_weights)
        return dynamics::from_diagonal_weights(basis, *c.initial_weights);
    return dynamics::basis_state(basis, c.initial_label);
}

// Reduced five-variable propagation used by the paper-b26 mode: the state
// is expanded back to the six-state density matrix for the output rows.
inline SimulationResult run_reduced_no_jump(const ScenarioConfig& c) {
    const hilbert::BasisSpec basis = hilbert::enumerate_basis(2);
    const auto rhs = liouvillian::build_reduced_no_jump_rhs(c.system_params());
    std::array<double, 6> w{};
    if (c.initial_weights) w = *c.initial_weights;
    else w[c.initial_label - 1] = 1.0;
    liouvillian::ReducedState r{w[0], 0.5 * (w[1] + w[2]), w[3], 0.5 * (w[4] + w[5]), 0.0};

    const auto expand = [&](const liouvillian::ReducedState& s) {
        dynamics::DensityMatrix rho{CMat(6, 6), basis};
        rho.entries(0, 0) = s.rho11;
        rho.entries(1, 1) = rho.entries(2, 2) = s.rho_ss;
        rho.entries(3, 3) = s.rho44;
        rho.entries(4, 4) = rho.entries(5, 5) = s.rho_uu;
        rho.entries(0, 3) = rho.entries(3, 0) = s.rho_m;
        return rho;
    };
    const auto step = [&](liouvillian::ReducedState s, double dt) {
        const auto axpy = [](const liouvillian::ReducedState& x, double a,
                             const liouvillian::ReducedState& d) {
            return liouvillian::ReducedState{x.rho11 + a * d.rho11, x.rho_ss + a * d.rho_ss,
                                             x.rho44 + a * d.rho44, x.rho_uu + a * d.rho_uu,
                                             x.rho_m + a * d.rho_m};
        };
        const auto k1 = rhs(s);
        const auto k2 = rhs(axpy(s, 0.5 * dt, k1));
        const auto k3 = rhs(axpy(s, 0.5 * dt, k2));
        const auto k4 = rhs(axpy(s, dt, k3));
        liouvillian::ReducedState sum = k1;
        sum = axpy(sum, 2.0, k2);
        sum = axpy(sum, 2.0, k3);
        sum = axpy(sum, 1.0, k4);
        return axpy(s, dt / 6.0, sum);
    };

    SimulationResult out;
    out.config = c;
    const long per = std::lround(kSampleInterval / c.dt);
    const long steps = std::lround(c.t_max / c.dt);
    const dynamics::Tolerances tol;
    const auto record = [&](double t, const liouvillian::ReducedState& s) {
        const dynamics::DensityMatrix rho = expand(s);
        dynamics::StateDiagnostics d = dynamics::check_density_matrix(rho, tol);
        const bool flagged = !d.valid(tol, /*check_trace=*/false);
        out.rows.push_back(make_row(c.kappa1 * t, rho, d, flagged, c.N));
        if (flagged) ++out.flagged_samples;
        out.max_shell_population = std::max(out.max_shell_population, d.shell_population);
    };
    record(0.0, r);
    for (long s = 1; s <= steps; ++s) {
        r = step(r, c.dt);
        if (s % per == 0) record(s * c.dt, r);
    }
    return out;
}

inline SimulationResult run_simulate(const ScenarioConfig& c) {
    validate_config(c);
    if (c.jump_mode == JumpMode::reduced_no_jump) return run_reduced_no_jump(c);

    const hilbert::BasisSpec basis = hilbert::enumerate_basis(c.truncation);
    const liouvillian::SystemParams params = c.system_params();
    const liouvillian::Generator g =
        c.jump_mode == JumpMode::full
            ? liouvillian::build_full_generator(params, basis)
            : liouvillian::build_effective_hamiltonian_part(params, basis);
    const dynamics::DensityMatrix rho0 = initial_state(c, basis);
    const dynamics::TrajectoryRecord rec =
        dynamics::propagate(g, rho0, c.t_max, c.dt, kSampleInterval);

    SimulationResult out;
    out.config = c;
    out.flagged_samples = rec.flagged_count;
    out.max_shell_population = rec.max_shell_population;
    out.rows.reserve(rec.times.size());
    for (std::size_t i = 0; i < rec.times.size(); ++i)
        out.rows.push_back(make_row(c.kappa1 * rec.times[i], rec.states[i],
                                    rec.diagnostics[i], rec.flagged[i], c.N));
    return out;
}

inline void render_csv(std::ostream& os, const SimulationResult& r,
                       const std::string& subcommand,
                       const std::vector<std::string>& extra_comments = {}) {
    os << "# sqcav " << subcommand << "\n";
    os << config_comment(r.config) << "\n";
    for (const std::string& c : extra_comments) os << c << "\n";
    if (r.max_shell_population > dynamics::Tolerances{}.shell_warning)
        os << "# warning: max boundary-shell population "
           << format_value(r.max_shell_population)
           << " exceeds " << format_value(dynamics::Tolerances{}.shell_warning) << "\n";
    if (r.flagged_samples > 0)
        os << "# warning: " << r.flagged_samples
           << " samples failed state-validity checks\n";
    os << kColumnHeader << "\n";
    for (const OutputRow& row : r.rows) os << format_row(row) << "\n";
}

struct SteadyResult {
    SimulationResult sim;  // single row
    double purity = 0.0;
};

inline SteadyResult run_steady_state(const ScenarioConfig& c) {
    validate_config(c);
    if (c.jump_mode != JumpMode::full)
        throw ConfigError("config error: key 'jump_mode': steady requires jump_mode=full");
    const hilbert::BasisSpec basis = hilbert::enumerate_basis(c.truncation);
    const liouvillian::Generator g = liouvillian::build_full_generator(c.system_params(), basis);
    const dynamics::DensityMatrix rho = dynamics::steady_state(g);
    const dynamics::Tolerances tol;
    const dynamics::StateDiagnostics d = dynamics::check_density_matrix(rho, tol);
    SteadyResult out;
    out.sim.config = c;
    const bool flagged = !d.valid(tol, true);
    out.sim.rows.push_back(
        make_row(std::numeric_limits<double>::infinity(), rho, d, flagged, c.N));
    out.sim.flagged_samples = flagged ? 1 : 0;
    out.sim.max_shell_population = d.shell_population;
    out.purity = dynamics::purity(rho);
    return out;
}

inline void render_steady_csv(std::ostream& os, const SteadyResult& r) {
    render_csv(os, r.sim, "steady", {"# purity = " + format_value(r.purity)});
}

struct SweepRow {
    double value = 0.0;
    std::optional<double> onset;
    double steady_negativity = 0.0;
};

struct SweepResult {
    ScenarioConfig config;
    std::string key;
    std::vector<SweepRow> rows;
};

inline ScenarioConfig with_sweep_value(const ScenarioConfig& base, const std::string& key,
                                       double value) {
    ScenarioConfig c = base;
    if (key == "kappa2") c.kappa2 = value;
    else if (key == "eta") c.eta = value;
    else if (key == "N") c.N = value;
    else if (key == "onset_threshold") c.onset_threshold = value;
    else throw ConfigError("config error: sweep key must be kappa2|eta|N|onset_threshold");
    validate_config(c);
    return c;
}

inline SweepRow sweep_point(const ScenarioConfig& c, double value) {
    const SimulationResult sim = run_simulate(c);
    std::vector<double> ts, negs;
    ts.reserve(sim.rows.size());
    negs.reserve(sim.rows.size());
    for (const OutputRow& r : sim.rows) {
        ts.push_back(r.t);
        negs.push_back(r.negativity);
    }
    SweepRow row;
    row.value = value;
    row.onset = observables::onset_time(ts, negs, c.onset_threshold);
    const hilbert::BasisSpec basis = hilbert::enumerate_basis(c.truncation);
    const dynamics::DensityMatrix ss =
        dynamics::steady_state(liouvillian::build_full_generator(c.system_params(), basis));
    row.steady_negativity = observables::logarithmic_negativity(ss);
    return row;
}

// Scenarios are independent; they may run concurrently. Rows are assembled
// in input order regardless of completion order.
inline SweepResult run_sweep(const ScenarioConfig& base, const std::string& key,
                             const std::vector<double>& values) {
    SweepResult out;
    out.config = base;
    out.key = key;
    std::vector<std::future<SweepRow>> futures;
    futures.reserve(values.size());
    for (double v : values) {
        const ScenarioConfig c = with_sweep_value(base, key, v);
        futures.push_back(std::async(std::launch::async,
                                     [c, v]() { return sweep_point(c, v); }));
    }
    for (auto& f : futures) out.rows.push_back(f.get());
    return out;
}

inline void render_sweep_csv(std::ostream& os, const SweepResult& r) {
    os << "# sqcav sweep\n";
    os << config_comment(r.config) << "\n";
    os << "# sweep: key=" << r.key << "\n";
    os << "value,onset_time,steady_negativity\n";
    for (const SweepRow& row : r.rows) {
        os << format_value(row.value) << ","
           << format_value(row.onset ? *row.onset : std::numeric_limits<double>::quiet_NaN())
           << "," << format_value(row.steady_negativity) << "\n";
    }
}

// Figure-reproduction presets. Every file is a full simulate rendering, so
// a reproduce curve is byte-identical to run_simulate on the same config.
struct ReproduceCurve {
    std::string filename;
    ScenarioConfig config;
};

inline std::vector<ReproduceCurve> reproduce_curves(const std::string& figure_id) {
    ScenarioConfig base;
    base.N = 0.125;
    base.n_set = true;
    base.m_is_max = true;
    base.eta = 1.0;
    base.kappa1 = base.kappa2 = 1.0;
    base.kappa12_geom = true;
    base.t_max = 10.0;

    std::vector<ReproduceCurve> out;
    const auto initial_curve_set = [&](const std::string& fig) {
        for (int label : {1, 2, 4, 5}) {
            ScenarioConfig c = base;
            c.initial_label = label;
            out.push_back({fig + "_init" + std::to_string(label) + ".csv", c});
        }
    };
    if (figure_id == "fig2" || figure_id == "fig3" || figure_id == "fig4") {
        initial_curve_set(figure_id);
    } else if (figure_id == "fig5a" || figure_id == "fig5b") {
        const int label = figure_id == "fig5a" ? 5 : 4;
        for (double ratio : {1.0, 0.5, 2.0}) {
            ScenarioConfig c = base;
            c.initial_label = label;
            c.kappa2 = ratio;
            out.push_back({figure_id + "_ratio" + format_value(ratio) + ".csv", c});
        }
    } else if (figure_id == "fig7a" || figure_id == "fig7b") {
        const int label = figure_id == "fig7a" ? 2 : 4;
        for (double eta : {1.0, 0.9, 0.8}) {
            ScenarioConfig c = base;
            c.initial_label = label;
            c.eta = eta;
            out.push_back({figure_id + "_eta" + format_value(eta) + ".csv", c});
        }
    } else {
        throw ConfigError("config error: unknown figure id '" + figure_id +
                          "' (expected fig2|fig3|fig4|fig5a|fig5b|fig7a|fig7b)");
    }
    return out;
}

inline std::vector<std::string> run_reproduce(const std::string& figure_id,
                                              const std::string& out_dir) {
    std::vector<std::string> written;
    for (const ReproduceCurve& curve : reproduce_curves(figure_id)) {
        const SimulationResult sim = run_simulate(curve.config);
        const std::string path =
            out_dir.empty() ? curve.filename : out_dir + "/" + curve.filename;
        std::ofstream f(path);
        if (!f) throw std::runtime_error("run_reproduce: cannot open " + path);
        render_csv(f, sim, "simulate");
        written.push_back(path);
    }
    return written;
}

struct SpectraConfig {
    reservoir::OpoKind kind = reservoir::OpoKind::degenerate;
    double kappa_c = 1.0;
    double epsilon = 0.5 * (3.0 - 2.0 * std::sqrt(2.0));  // lambda = sqrt(2) mu
    double alpha = 0.0;
    double omega_min = 0.0, omega_max = 0.0;  // 0,0 = auto: [-10 lambda, 10 lambda]
    int points = 1000;
};

inline void render_spectra_csv(std::ostream& os, const SpectraConfig& sc) {
    reservoir::OpoParams p{sc.kind, sc.kappa_c, sc.epsilon, sc.alpha};
    const auto [lambda, mu] = reservoir::lambda_mu(p);
    double lo = sc.omega_min, hi = sc.omega_max;
    if (lo == 0.0 && hi == 0.0) {
        lo = -10.0 * lambda;
        hi = 10.0 * lambda;
    }
    if (sc.points < 2) throw ConfigError("config error: spectra need at least 2 points");
    os << "# sqcav spectra\n";
    os << "# config: kind="
       << (sc.kind == reservoir::OpoKind::degenerate ? "degenerate" : "nondegenerate")
       << " kappa_c=" << format_value(sc.kappa_c) << " epsilon=" << format_value(sc.epsilon)
       << " alpha=" << format_value(sc.alpha) << " lambda=" << format_value(lambda)
       << " mu=" << format_value(mu) << " points=" << sc.points << "\n";
    os << "omega_bar,N,M\n";
    for (int i = 0; i < sc.points; ++i) {
        const double w = lo + (hi - lo) * i / (sc.points - 1);
        const reservoir::SpectrumPoint s = reservoir::spectrum(p, w);
        os << format_value(w) << "," << format_value(s.N) << "," << format_value(s.M) << "\n";
    }
}

} // namespace sqcav::scenario
