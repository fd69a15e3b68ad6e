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

#include "teraris/montecarlo.hpp"

#include "teraris/channel_assembly.hpp"
#include "teraris/config.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace teraris
{

std::string to_string(Scheme scheme)
{
    switch (scheme)
    {
    case Scheme::fixed:
        return "fixed";
    case Scheme::fair:
        return "fair";
    case Scheme::improved_fair:
        return "improved-fair";
    case Scheme::baseline:
        return "baseline";
    }
    return "unknown";
}

std::optional<Scheme> parse_scheme(const std::string &name)
{
    if (name == "baseline")
        return Scheme::baseline;
    if (auto pa = parse_pa_scheme(name))
    {
        switch (*pa)
        {
        case PaScheme::fixed:
            return Scheme::fixed;
        case PaScheme::fair:
            return Scheme::fair;
        case PaScheme::improved_fair:
            return Scheme::improved_fair;
        }
    }
    return std::nullopt;
}

PreparedScenario prepare_scenario(const ScenarioConfig &cfg)
{
    validate(cfg);
    PreparedScenario s;
    s.config = cfg;
    s.far_channel = user_channel(cfg, User::far);
    s.near_channel = user_channel(cfg, User::near);
    s.far_gain = channel_gain(s.far_channel);
    s.near_gain = channel_gain(s.near_channel);
    s.lb = cfg.link_budget();
    return s;
}

TrialGains draw_trial_gains(const PreparedScenario &scenario, RandomEngine &rng)
{
    const auto &fading = scenario.config.fading;
    double g_far = scenario.far_gain;
    double g_near = scenario.near_gain;
    if (fading.enabled)
    {
        const FadingModel model{fading.shape_m};
        if (fading.mode == FadingMode::per_link)
        {
            const double x_far = sample_nakagami(model, rng);
            const double x_near = sample_nakagami(model, rng);
            g_far *= x_far * x_far;
            g_near *= x_near * x_near;
        }
        else
        {
            g_far = channel_gain(apply_fading(scenario.far_channel, model, fading.mode, rng));
            g_near = channel_gain(apply_fading(scenario.near_channel, model, fading.mode, rng));
        }
    }
    if (scenario.config.noma.sic_order == SicOrder::instantaneous && g_far > g_near)
        std::swap(g_far, g_near);
    return {g_far, g_near};
}

TrialOutcome evaluate_trial(const TrialGains &gains, PaScheme scheme, const RateTargets &targets,
                            const LinkBudget &lb, double fixed_alpha_far)
{
    const PaResult pa = allocate(scheme, PaRequest{gains.far, lb, targets.far}, fixed_alpha_far);
    const TwoUserCapacities caps = capacities(two_user_sinr(gains.far, gains.near, pa.allocation, lb));
    const OutageFlags flags = outage_indicators(caps, targets, pa.allocation.far() > 0.0);
    return {flags.near, flags.far, caps.far_own + caps.near_own};
}

TrialOutcome run_trial(const PreparedScenario &scenario, PaScheme scheme, const RateTargets &targets,
                       RandomEngine &rng)
{
    return evaluate_trial(draw_trial_gains(scenario, rng), scheme, targets, scenario.lb,
                          scenario.config.power.fixed_alpha_far);
}

void validate(const SweepSpec &spec)
{
    if (spec.grid.empty())
        throw ConfigError("sweep.grid", "must not be empty", "empty");
    for (std::size_t k = 0; k < spec.grid.size(); ++k)
    {
        if (!std::isfinite(spec.grid[k]))
            throw ConfigError("sweep.grid", "values must be finite", format_number(spec.grid[k]));
        if (k > 0 && !(spec.grid[k] > spec.grid[k - 1]))
            throw ConfigError("sweep.grid", "must be strictly increasing", format_number(spec.grid[k]));
    }
    if (spec.variable == SweepVariable::target_rate && spec.grid.front() < 0.0)
        throw ConfigError("sweep.grid", "target rates must be >= 0", format_number(spec.grid.front()));
    if (spec.trials < 1)
        throw ConfigError("sweep.trials", "must be >= 1", std::to_string(spec.trials));
    if (spec.schemes.empty())
        throw ConfigError("sweep.schemes", "must name at least one scheme", "empty");
    if (spec.workers < 0)
        throw ConfigError("sweep.workers", "must be >= 0", std::to_string(spec.workers));
}

const SweepSeries &SweepResult::series_for(Scheme scheme) const
{
    for (const auto &s : series)
        if (s.scheme == scheme)
            return s;
    throw std::out_of_range("SweepResult: no series for scheme " + to_string(scheme));
}

namespace
{

constexpr std::int64_t block_size = 1024;

// Sums over one block of trials, per (scheme, grid point).
struct Partial
{
    double near = 0.0;
    double far = 0.0;
    double rate = 0.0;
    double rate_sq = 0.0;
};

struct SweepPlan
{
    const SweepSpec *spec;
    const PreparedScenario *main;
    const PreparedScenario *baseline; // null when not requested
    RateTargets fixed_targets;        // used by the power sweep
    std::vector<LinkBudget> budgets;  // one per grid point
    std::vector<RateTargets> targets; // one per grid point
};

PaScheme pa_scheme_of(Scheme s, const BaselineSettings &b)
{
    switch (s)
    {
    case Scheme::fixed:
        return PaScheme::fixed;
    case Scheme::fair:
        return PaScheme::fair;
    case Scheme::improved_fair:
        return PaScheme::improved_fair;
    case Scheme::baseline:
        return b.scheme;
    }
    return PaScheme::fixed;
}

void run_block(const SweepPlan &plan, std::int64_t block, std::vector<Partial> &out)
{
    const SweepSpec &spec = *plan.spec;
    const std::size_t ns = spec.schemes.size();
    const std::size_t np = spec.grid.size();
    out.assign(ns * np, Partial{});
    const std::int64_t first = block * block_size;
    const std::int64_t last = std::min(spec.trials, first + block_size);
    for (std::int64_t t = first; t < last; ++t)
    {
        // Common random numbers: one channel draw per trial, shared by every grid point and scheme.
        RandomEngine rng = stream_engine(spec.seed, static_cast<std::uint64_t>(t));
        const TrialGains main_gains = draw_trial_gains(*plan.main, rng);
        TrialGains base_gains;
        if (plan.baseline)
            base_gains = draw_trial_gains(*plan.baseline, rng);
        for (std::size_t s = 0; s < ns; ++s)
        {
            const bool is_base = spec.schemes[s] == Scheme::baseline;
            const PreparedScenario &sc = is_base ? *plan.baseline : *plan.main;
            const TrialGains &g = is_base ? base_gains : main_gains;
            const PaScheme pa = pa_scheme_of(spec.schemes[s], sc.config.baseline);
            for (std::size_t p = 0; p < np; ++p)
            {
                const TrialOutcome o = evaluate_trial(g, pa, plan.targets[p], plan.budgets[p],
                                                      sc.config.power.fixed_alpha_far);
                Partial &acc = out[s * np + p];
                acc.near += o.near_outage ? 1.0 : 0.0;
                acc.far += o.far_outage ? 1.0 : 0.0;
                acc.rate += o.sum_rate;
                acc.rate_sq += o.sum_rate * o.sum_rate;
            }
        }
    }
}

int resolve_workers(int requested, std::int64_t blocks)
{
    int w = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    w = std::max(w, 1);
    return static_cast<int>(std::min<std::int64_t>(w, blocks));
}

SweepResult execute(const SweepPlan &plan, const ScenarioConfig &cfg)
{
    const SweepSpec &spec = *plan.spec;
    const std::int64_t blocks = (spec.trials + block_size - 1) / block_size;
    std::vector<std::vector<Partial>> partials(static_cast<std::size_t>(blocks));

    const int workers = resolve_workers(spec.workers, blocks);
    std::atomic<std::int64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&]() {
        try
        {
            for (std::int64_t b = next++; b < blocks; b = next++)
                run_block(plan, b, partials[static_cast<std::size_t>(b)]);
        }
        catch (...)
        {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
            next = blocks;
        }
    };
    if (workers == 1)
        work();
    else
    {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto &th : pool)
            th.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    // Reduce in block order so the floating-point sums never depend on scheduling.
    const std::size_t ns = spec.schemes.size();
    const std::size_t np = spec.grid.size();
    std::vector<Partial> total(ns * np);
    for (const auto &block : partials)
        for (std::size_t k = 0; k < total.size(); ++k)
        {
            total[k].near += block[k].near;
            total[k].far += block[k].far;
            total[k].rate += block[k].rate;
            total[k].rate_sq += block[k].rate_sq;
        }

    const double n = static_cast<double>(spec.trials);
    auto proportion = [n](double count) {
        const double p = count / n;
        return Estimate{p, std::sqrt(p * (1.0 - p) / n)};
    };

    SweepResult result;
    result.variable = spec.variable;
    result.grid = spec.grid;
    result.scenario = cfg;
    result.seed = spec.seed;
    result.trials = spec.trials;
    for (std::size_t s = 0; s < ns; ++s)
    {
        SweepSeries series;
        series.scheme = spec.schemes[s];
        for (std::size_t p = 0; p < np; ++p)
        {
            const Partial &acc = total[s * np + p];
            const double mean = acc.rate / n;
            const double var = spec.trials > 1 ? std::max(0.0, (acc.rate_sq - n * mean * mean) / (n - 1.0)) : 0.0;
            series.points.push_back({proportion(acc.near), proportion(acc.far), Estimate{mean, std::sqrt(var / n)}});
        }
        result.series.push_back(std::move(series));
    }
    return result;
}

bool wants_baseline(const SweepSpec &spec)
{
    return std::find(spec.schemes.begin(), spec.schemes.end(), Scheme::baseline) != spec.schemes.end();
}

} // namespace

SweepResult run_outage_sweep(const SweepSpec &spec, const ScenarioConfig &cfg)
{
    validate(spec);
    const PreparedScenario main = prepare_scenario(cfg);
    std::optional<PreparedScenario> base;
    if (wants_baseline(spec))
        base = prepare_scenario(non_ris_non_thz_baseline(cfg));

    SweepPlan plan{&spec, &main, base ? &*base : nullptr, {}, {}, {}};
    for (double r : spec.grid)
    {
        plan.budgets.push_back(main.lb);
        plan.targets.push_back({r, r});
    }
    return execute(plan, cfg);
}

SweepResult run_sumrate_sweep(const SweepSpec &spec, const ScenarioConfig &cfg)
{
    validate(spec);
    const PreparedScenario main = prepare_scenario(cfg);
    std::optional<PreparedScenario> base;
    if (wants_baseline(spec))
        base = prepare_scenario(non_ris_non_thz_baseline(cfg));

    const double rate = cfg.sweep.sumrate_target_rate;
    SweepPlan plan{&spec, &main, base ? &*base : nullptr, {rate, rate}, {}, {}};
    for (double dbm : spec.grid)
    {
        plan.budgets.push_back({dbm_to_watt(dbm), main.lb.noise_power_w});
        plan.targets.push_back(plan.fixed_targets);
    }
    return execute(plan, cfg);
}

SweepSpec default_outage_spec(const ScenarioConfig &cfg)
{
    return {SweepVariable::target_rate, cfg.sweep.outage_grid.values(), cfg.sweep.trials,
            {Scheme::fixed, Scheme::fair}, cfg.sweep.seed, cfg.sweep.workers};
}

SweepSpec default_sumrate_spec(const ScenarioConfig &cfg)
{
    return {SweepVariable::tx_power_dbm, cfg.sweep.sumrate_grid.values(), cfg.sweep.trials,
            {Scheme::fixed, Scheme::fair, Scheme::improved_fair, Scheme::baseline}, cfg.sweep.seed,
            cfg.sweep.workers};
}

} // namespace teraris
