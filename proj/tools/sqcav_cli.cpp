// Command-line front end: scenario simulations, steady-state queries,
// parameter sweeps, figure-reproduction presets and reservoir spectra.
// Exit codes: 0 success, 2 configuration error, 3 numerical-diagnostic
// failure.

#include "sqcav/scenario.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace sqcav;

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw scenario::ConfigError("config error: cannot read '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

scenario::ScenarioConfig load_config(const std::string& config_path,
                                     const std::vector<std::string>& overrides) {
    std::string text;
    if (!config_path.empty()) text = read_file(config_path);
    for (const std::string& kv : overrides) text += "\n" + kv;
    return scenario::parse_config(text);
}

int write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream f(out_path);
    if (!f) {
        std::cerr << "error: cannot open output file '" << out_path << "'\n";
        return 3;
    }
    f << content;
    return 0;
}

std::vector<double> parse_value_list(const std::string& csv) {
    std::vector<double> values;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            values.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw scenario::ConfigError("config error: sweep value '" + item +
                                        "' is not a number");
        }
    }
    if (values.empty())
        throw scenario::ConfigError("config error: sweep needs at least one value");
    return values;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two decaying cavities driven by a broadband squeezed reservoir"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    std::vector<std::string> overrides;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key=value configuration file");
        sub->add_option("--set", overrides, "override a single key=value")->take_all();
        sub->add_option("--out", out_path, "output file (default: stdout)");
    };

    CLI::App* simulate = app.add_subcommand("simulate", "propagate a scenario, emit CSV rows");
    add_common(simulate);

    CLI::App* steady = app.add_subcommand("steady", "steady state, negativity and purity");
    add_common(steady);

    CLI::App* sweep = app.add_subcommand("sweep", "sweep one key, emit onset and steady negativity");
    add_common(sweep);
    std::string sweep_key, sweep_values;
    sweep->add_option("--key", sweep_key, "kappa2|eta|N|onset_threshold")->required();
    sweep->add_option("--values", sweep_values, "comma-separated values")->required();

    CLI::App* reproduce = app.add_subcommand("reproduce", "emit the CSV family of a named figure");
    std::string figure_id, out_dir = ".";
    reproduce->add_option("figure", figure_id, "fig2|fig3|fig4|fig5a|fig5b|fig7a|fig7b")
        ->required();
    reproduce->add_option("--out", out_dir, "output directory (default: .)");

    CLI::App* spectra = app.add_subcommand("spectra", "squeezing spectral functions N, M");
    scenario::SpectraConfig spectra_cfg;
    std::string kind_token = "degenerate";
    spectra->add_option("--kind", kind_token, "degenerate|nondegenerate");
    spectra->add_option("--kappa-c", spectra_cfg.kappa_c, "OPO cavity damping rate");
    spectra->add_option("--epsilon", spectra_cfg.epsilon, "amplification parameter");
    spectra->add_option("--alpha", spectra_cfg.alpha, "signal/idler displacement");
    spectra->add_option("--wmin", spectra_cfg.omega_min, "grid start (default -10 lambda)");
    spectra->add_option("--wmax", spectra_cfg.omega_max, "grid end (default 10 lambda)");
    spectra->add_option("--points", spectra_cfg.points, "grid size");
    spectra->add_option("--out", out_path, "output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        std::ostringstream os;
        int flagged = 0;
        if (simulate->parsed()) {
            const scenario::SimulationResult r = scenario::run_simulate(load_config(config_path, overrides));
            scenario::render_csv(os, r, "simulate");
            flagged = r.flagged_samples;
        } else if (steady->parsed()) {
            const scenario::SteadyResult r = scenario::run_steady_state(load_config(config_path, overrides));
            scenario::render_steady_csv(os, r);
            flagged = r.sim.flagged_samples;
        } else if (sweep->parsed()) {
            const scenario::SweepResult r = scenario::run_sweep(
                load_config(config_path, overrides), sweep_key, parse_value_list(sweep_values));
            scenario::render_sweep_csv(os, r);
        } else if (reproduce->parsed()) {
            for (const std::string& path : scenario::run_reproduce(figure_id, out_dir))
                std::cerr << "wrote " << path << "\n";
            return 0;
        } else if (spectra->parsed()) {
            if (kind_token == "degenerate") {
                spectra_cfg.kind = sqcav::reservoir::OpoKind::degenerate;
            } else if (kind_token == "nondegenerate") {
                spectra_cfg.kind = sqcav::reservoir::OpoKind::nondegenerate;
            } else {
                throw scenario::ConfigError("config error: --kind must be degenerate|nondegenerate");
            }
            scenario::render_spectra_csv(os, spectra_cfg);
        }
        const int io_rc = write_output(out_path, os.str());
        if (io_rc != 0) return io_rc;
        if (flagged > 0) {
            std::cerr << "warning: " << flagged << " samples failed state-validity checks\n";
            return 3;
        }
        return 0;
    } catch (const scenario::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
