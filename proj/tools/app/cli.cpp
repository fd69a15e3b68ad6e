// teraris - RIS-assisted NOMA-MIMO link simulation for terahertz bands
// Copyright (C) 2026 The teraris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "app.hpp"

#include "teraris/config.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <optional>
#include <sstream>

#ifndef TERARIS_VERSION_STRING
#define TERARIS_VERSION_STRING "unknown"
#endif

namespace teraris::app
{

namespace
{

struct SweepFlags
{
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> trials;
    std::optional<int> workers;
    std::string grid;
    std::string schemes;
    std::string out = ".";
};

void add_sweep_flags(CLI::App *cmd, SweepFlags &f, const std::string &default_schemes)
{
    cmd->add_option("--config", f.config, "Scenario file (absent keys take defaults)");
    cmd->add_option("--seed", f.seed, "Master seed");
    cmd->add_option("--trials", f.trials, "Monte Carlo trials per grid point");
    cmd->add_option("--workers", f.workers, "Worker threads (0 = all cores); results do not depend on it");
    cmd->add_option("--grid", f.grid, "start:stop:step, or a single value");
    cmd->add_option("--schemes", f.schemes, "Comma list of fixed, fair, improved-fair, baseline")
        ->default_str(default_schemes);
    cmd->add_option("--out", f.out, "Output directory")->default_str(".");
}

ScenarioConfig load(const std::string &path)
{
    return path.empty() ? parse_config("") : load_config(path);
}

std::vector<Scheme> parse_schemes(const std::string &text)
{
    std::vector<Scheme> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        const auto s = parse_scheme(item);
        if (!s)
            throw ConfigError("--schemes", "expected fixed, fair, improved-fair or baseline", item);
        out.push_back(*s);
    }
    if (out.empty())
        throw ConfigError("--schemes", "must name at least one scheme", text);
    return out;
}

SweepSpec make_spec(ScenarioConfig &cfg, const SweepFlags &f, bool outage)
{
    if (f.seed)
        cfg.sweep.seed = *f.seed;
    if (f.trials)
    {
        if (*f.trials < 1 || *f.trials > std::numeric_limits<int>::max())
            throw ConfigError("--trials", "must be in [1, 2^31)", std::to_string(*f.trials));
        cfg.sweep.trials = static_cast<int>(*f.trials);
    }
    if (f.workers)
        cfg.sweep.workers = *f.workers;
    if (!f.grid.empty())
    {
        Grid g;
        try
        {
            g = Grid::parse(f.grid);
        }
        catch (const ConfigError &)
        {
            throw ConfigError("--grid", "expected start:stop:step or a single value", f.grid);
        }
        (outage ? cfg.sweep.outage_grid : cfg.sweep.sumrate_grid) = g;
    }
    validate(cfg);
    SweepSpec spec = outage ? default_outage_spec(cfg) : default_sumrate_spec(cfg);
    if (!f.schemes.empty())
        spec.schemes = parse_schemes(f.schemes);
    validate(spec);
    return spec;
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

nlohmann::ordered_json config_json(const ScenarioConfig &cfg)
{
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    std::istringstream in(format_config(cfg));
    std::string line, section;
    while (std::getline(in, line))
    {
        if (line.empty())
            continue;
        if (line.front() == '[')
        {
            section = line.substr(1, line.size() - 2);
            j[section] = nlohmann::ordered_json::object();
            continue;
        }
        const auto eq = line.find(" = ");
        j[section][line.substr(0, eq)] = line.substr(eq + 3);
    }
    return j;
}

void write_manifest(const std::filesystem::path &dir, const std::string &command, const SweepSpec &spec,
                    const ScenarioConfig &cfg, const std::vector<std::string> &outputs)
{
    nlohmann::ordered_json m;
    m["tool"] = "teraris";
    m["version"] = TERARIS_VERSION_STRING;
    m["command"] = command;
    m["timestamp"] = utc_timestamp();
    m["seed"] = spec.seed;
    m["trials"] = spec.trials;
    m["workers"] = spec.workers;
    std::vector<std::string> names;
    for (Scheme s : spec.schemes)
        names.push_back(to_string(s));
    m["schemes"] = names;
    m["grid"] = spec.grid;
    m["config"] = config_json(cfg);
    m["config_text"] = format_config(cfg);
    m["outputs"] = outputs;
    write_atomic(dir / "manifest.json", m.dump(2) + "\n");
}

int cmd_sweep(const SweepFlags &f, bool outage, std::ostream &out)
{
    ScenarioConfig cfg = load(f.config);
    const SweepSpec spec = make_spec(cfg, f, outage);
    const SweepResult result = outage ? run_outage_sweep(spec, cfg) : run_sumrate_sweep(spec, cfg);
    const std::string name = outage ? "outage.csv" : "sumrate.csv";
    const std::filesystem::path dir(f.out);
    write_atomic(dir / name, outage ? outage_csv(result) : sumrate_csv(result));
    write_manifest(dir, outage ? "outage" : "sumrate", spec, cfg, {name});
    out << "wrote " << (dir / name).string() << " (" << spec.grid.size() << " points x " << spec.schemes.size()
        << " schemes, " << spec.trials << " trials)\n";
    return exit_ok;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"teraris: RIS-assisted NOMA-MIMO terahertz link simulator"};
    app.set_version_flag("--version", TERARIS_VERSION_STRING);
    app.require_subcommand(1);

    SweepFlags outage_flags, sumrate_flags;
    auto *outage = app.add_subcommand("outage", "Outage probability versus target rate");
    add_sweep_flags(outage, outage_flags, "fixed,fair");
    auto *sumrate = app.add_subcommand("sumrate", "Mean sum rate versus transmit power");
    add_sweep_flags(sumrate, sumrate_flags, "fixed,fair,improved-fair,baseline");

    std::string validate_config;
    ValidationOptions vopt;
    auto *validate_cmd = app.add_subcommand("validate", "Closed-form vs Monte Carlo and PA consistency checks");
    validate_cmd->add_option("--config", validate_config, "Scenario file");
    validate_cmd->add_option("--tolerance", vopt.tolerance_sigmas, "Allowed |closed - MC| in standard errors")
        ->check(CLI::PositiveNumber);
    validate_cmd->add_option("--trials", vopt.mc_trials, "Monte Carlo draws per oracle case")
        ->check(CLI::PositiveNumber);
    validate_cmd->add_option("--seed", vopt.seed, "Oracle seed");

    std::string print_config;
    auto *print = app.add_subcommand("print-config", "Print the effective scenario with all defaults");
    print->add_option("--config", print_config, "Scenario file");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_config_error;
    }

    try
    {
        if (outage->parsed())
            return cmd_sweep(outage_flags, true, out);
        if (sumrate->parsed())
            return cmd_sweep(sumrate_flags, false, out);
        if (print->parsed())
        {
            out << format_config(load(print_config));
            return exit_ok;
        }
        if (validate_cmd->parsed())
        {
            const ScenarioConfig cfg = load(validate_config);
            const ValidationReport report = run_validation(cfg, vopt);
            for (const auto &c : report.checks)
                out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
            out << (report.passed() ? "validation passed\n" : "validation FAILED\n");
            return report.passed() ? exit_ok : exit_validation_failure;
        }
    }
    catch (const ConfigError &e)
    {
        err << "config error: " << e.what() << "\n";
        return exit_config_error;
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << "\n";
        return exit_runtime_error;
    }
    return exit_runtime_error;
}

} // namespace teraris::app
