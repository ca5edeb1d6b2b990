// Command-line front end: runs verification experiments from JSON
// configs, lists the catalog, and fits growth models to CSV series.
//
// Exit codes: 0 all checks passed, 1 an experiment check failed,
// 2 usage or configuration error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "elwave/experiments.hpp"

namespace {

using elwave::experiments::json;

json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    json j;
    in >> j;
    return j;
}

int cmd_run(const std::string& config_path, const std::string& out_dir,
            unsigned threads, std::int64_t seed, bool has_seed) {
    elwave::experiments::RunOptions opts;
    opts.out_dir = out_dir;
    opts.threads = threads;
    if (has_seed) opts.seed = static_cast<std::uint64_t>(seed);
    const auto rep =
        elwave::experiments::run_experiment(load_json_file(config_path), opts);
    for (const auto& c : rep.checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                  << ": measured=" << elwave::experiments::format_double(c.measured)
                  << " target=" << elwave::experiments::format_double(c.target)
                  << " (" << c.comparison;
        if (c.tolerance != 0.0)
            std::cout << ", tol="
                      << elwave::experiments::format_double(c.tolerance);
        std::cout << ")\n";
    }
    std::cout << rep.id << " verdict: " << (rep.pass() ? "PASS" : "FAIL")
              << "\n";
    return rep.pass() ? 0 : 1;
}

int cmd_list() {
    for (const auto& id : elwave::experiments::experiment_ids())
        std::cout << id << "  "
                  << elwave::experiments::experiment_description(id) << "\n";
    return 0;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

int cmd_fit(const std::string& csv_path, const std::string& model_name,
            int t_col, int value_col) {
    const auto model = elwave::growth::parse_model(model_name);
    std::ifstream in(csv_path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open CSV file " + csv_path);
    std::vector<double> ts, values;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        const int need = std::max(t_col, value_col);
        if (static_cast<int>(fields.size()) <= need)
            throw std::invalid_argument(
                "CSV row has too few columns for the requested fields");
        try {
            const double t = std::stod(fields[t_col]);
            const double v = std::stod(fields[value_col]);
            ts.push_back(t);
            values.push_back(v);
        } catch (const std::exception&) {
            if (first) {
                first = false;
                continue; // header row
            }
            throw std::invalid_argument("CSV contains a non-numeric row: " +
                                        line);
        }
        first = false;
    }
    const auto fit = elwave::growth::fit_growth(ts, values, model);
    std::cout << elwave::experiments::fit_to_json("csv", fit).dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact Fourier-side evaluation of the elastic wave equation for "
        "Gaussian-polynomial data, with closed-form verification targets"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".", csv_path, model_name;
    unsigned threads = 0;
    std::int64_t seed = 0;

    auto* run = app.add_subcommand("run", "run an experiment from a JSON config");
    run->add_option("config", config_path, "path to the experiment config")
        ->required();
    run->add_option("--out", out_dir, "directory for reports and snapshots");
    run->add_option("--threads", threads, "worker threads (0 = hardware)");
    auto* seed_opt = run->add_option("--seed", seed, "override the RNG seed");

    auto* list = app.add_subcommand("list-experiments",
                                    "list the experiment catalog");

    int t_col = 0, value_col = 1;
    auto* fit = app.add_subcommand("fit", "fit a growth model to a CSV series");
    fit->add_option("csv", csv_path, "CSV file with time and value columns")
        ->required();
    fit->add_option("--model", model_name,
                    "growth model: const, sqrt_t or sqrt_log")
        ->required();
    fit->add_option("--t-col", t_col, "zero-based time column (default 0)");
    fit->add_option("--value-col", value_col,
                    "zero-based value column (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed())
            return cmd_run(config_path, out_dir, threads, seed,
                           seed_opt->count() > 0);
        if (list->parsed()) return cmd_list();
        if (fit->parsed()) return cmd_fit(csv_path, model_name, t_col, value_col);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
