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

#include "teraris/channel_assembly.hpp"
#include "teraris/montecarlo.hpp"

#include <doctest.h>

#include <cmath>

using namespace teraris;

namespace
{
ScenarioConfig small(int antennas)
{
    ScenarioConfig cfg;
    cfg.channel.bs_antennas = antennas;
    cfg.channel.user_antennas = antennas;
    cfg.ris.element_count = 20;
    return cfg;
}

SweepSpec quick(SweepVariable v, std::vector<double> grid, std::int64_t trials, std::vector<Scheme> schemes)
{
    return {v, std::move(grid), trials, std::move(schemes), 5, 1};
}

// Trial loop written out from the definitions, sharing only the RNG streams and
// deterministic channels with the library.
struct Counts
{
    std::int64_t near = 0, far = 0;
};

Counts reference_outage(const ScenarioConfig &cfg, std::uint64_t seed, std::int64_t trials, double r, int scheme)
{
    const double g_far0 = user_channel(cfg, User::far).squaredNorm();
    const double g_near0 = user_channel(cfg, User::near).squaredNorm();
    const double p = std::pow(10.0, (cfg.link.tx_power_dbm - 30.0) / 10.0);
    const double s2 = std::pow(10.0, (cfg.link.effective_noise_dbm() - 30.0) / 10.0);
    const double xi = std::exp2(r) - 1.0;
    Counts c;
    for (std::int64_t t = 0; t < trials; ++t)
    {
        RandomEngine rng = stream_engine(seed, static_cast<std::uint64_t>(t));
        std::gamma_distribution<double> g1(cfg.fading.shape_m, 1.0 / cfg.fading.shape_m);
        const double x1 = std::sqrt(g1(rng));
        std::gamma_distribution<double> g2(cfg.fading.shape_m, 1.0 / cfg.fading.shape_m);
        const double x2 = std::sqrt(g2(rng));
        const double a = g_far0 * x1 * x1, b = g_near0 * x2 * x2;
        const double gm = std::min(a, b), gn = std::max(a, b);
        double am;
        if (scheme == 0)
            am = cfg.power.fixed_alpha_far;
        else
        {
            const double need = xi == 0.0 ? 0.0 : xi * (p * gm + s2) / (p * (1.0 + xi) * gm);
            am = need <= 1.0 ? need : (scheme == 1 ? 1.0 : 0.0);
        }
        const double an = 1.0 - am;
        const double cm = std::log2(1.0 + p * am * gm / (p * gm * an + s2));
        const double cnm = std::log2(1.0 + p * am * gn / (p * gn * an + s2));
        const double cn = std::log2(1.0 + p * an * gn / s2);
        const double tol = 1e-9;
        c.far += cm < r - tol;
        c.near += (am > 0.0 && cnm < r - tol) || cn < r - tol;
    }
    return c;
}
} // namespace

TEST_CASE("zero transmit power is outage for both users")
{
    const TrialOutcome o = evaluate_trial({1e-10, 2e-10}, PaScheme::fair, {1.0, 1.0}, {0.0, 1e-12}, 0.8);
    CHECK(o.near_outage);
    CHECK(o.far_outage);
    CHECK(o.sum_rate == 0.0);
}

TEST_CASE("without fading every trial is the same")
{
    ScenarioConfig cfg = small(4);
    cfg.fading.enabled = false;
    const PreparedScenario sc = prepare_scenario(cfg);
    RandomEngine rng = stream_engine(1, 0);
    const TrialOutcome first = run_trial(sc, PaScheme::improved_fair, {2.0, 2.0}, rng);
    for (int i = 0; i < 50; ++i)
    {
        const TrialOutcome o = run_trial(sc, PaScheme::improved_fair, {2.0, 2.0}, rng);
        CHECK(o.sum_rate == first.sum_rate);
        CHECK(o.near_outage == first.near_outage);
        CHECK(o.far_outage == first.far_outage);
    }
}

TEST_CASE("2x2 toy scenario matches a written-out trial loop exactly")
{
    const ScenarioConfig cfg = small(2);
    const std::int64_t n = 100000;
    const SweepSpec spec =
        quick(SweepVariable::target_rate, {1.0, 3.0, 5.0}, n, {Scheme::fixed, Scheme::fair, Scheme::improved_fair});
    const SweepResult r = run_outage_sweep(spec, cfg);
    for (int s = 0; s < 3; ++s)
        for (std::size_t p = 0; p < spec.grid.size(); ++p)
        {
            const Counts ref = reference_outage(cfg, spec.seed, n, spec.grid[p], s);
            const SeriesPoint &pt = r.series[static_cast<std::size_t>(s)].points[p];
            CHECK(std::llround(pt.near_outage.mean * n) == ref.near);
            CHECK(std::llround(pt.far_outage.mean * n) == ref.far);
        }
}

TEST_CASE("outage sweep basics")
{
    const ScenarioConfig cfg = small(4);
    const std::int64_t n = 4000;
    const std::vector<Scheme> all{Scheme::fixed, Scheme::fair, Scheme::improved_fair, Scheme::baseline};
    const SweepResult r = run_outage_sweep(quick(SweepVariable::target_rate, {0.0, 2.0, 40.0}, n, all), cfg);
    REQUIRE(r.series.size() == 4);
    for (const auto &s : r.series)
    {
        REQUIRE(s.points.size() == 3);
        CHECK(s.points[0].near_outage.mean == 0.0);
        CHECK(s.points[0].far_outage.mean == 0.0);
        for (const auto &pt : s.points)
            for (const Estimate &e : {pt.near_outage, pt.far_outage})
            {
                CHECK(e.mean >= 0.0);
                CHECK(e.mean <= 1.0);
                CHECK(e.std_error <= 0.5 / std::sqrt(static_cast<double>(n)) + 1e-15);
            }
    }
    CHECK(r.series_for(Scheme::fixed).points[2].far_outage.mean == 1.0);
    CHECK(r.seed == 5);
    CHECK(r.scenario == cfg);
    CHECK_THROWS_AS(SweepResult{}.series_for(Scheme::fair), std::out_of_range);
}

TEST_CASE("improved fair lowers near-user outage at high targets")
{
    const ScenarioConfig cfg;
    const SweepResult r =
        run_outage_sweep(quick(SweepVariable::target_rate, {5.0}, 20000, {Scheme::fair, Scheme::improved_fair}), cfg);
    CHECK(r.series_for(Scheme::improved_fair).points[0].near_outage.mean <
          r.series_for(Scheme::fair).points[0].near_outage.mean);
}

TEST_CASE("sum rate grows with power")
{
    ScenarioConfig cfg = small(4);
    const SweepResult r = run_sumrate_sweep(
        quick(SweepVariable::tx_power_dbm, Grid{0, 40, 5}.values(), 3000,
              {Scheme::fixed, Scheme::fair, Scheme::improved_fair, Scheme::baseline}),
        cfg);
    for (const auto &s : r.series)
        for (std::size_t p = 1; p < s.points.size(); ++p)
            CHECK(s.points[p].sum_rate.mean >= s.points[p - 1].sum_rate.mean);
}

TEST_CASE("results do not depend on the worker count")
{
    const ScenarioConfig cfg = small(4);
    SweepSpec spec = quick(SweepVariable::target_rate, {0.5, 2.5, 4.0}, 5000, {Scheme::fixed, Scheme::improved_fair});
    const SweepResult one = run_outage_sweep(spec, cfg);
    for (int w : {2, 3, 8})
    {
        spec.workers = w;
        const SweepResult many = run_outage_sweep(spec, cfg);
        for (std::size_t s = 0; s < one.series.size(); ++s)
            for (std::size_t p = 0; p < one.grid.size(); ++p)
            {
                CHECK(many.series[s].points[p].near_outage.mean == one.series[s].points[p].near_outage.mean);
                CHECK(many.series[s].points[p].sum_rate.mean == one.series[s].points[p].sum_rate.mean);
                CHECK(many.series[s].points[p].sum_rate.std_error == one.series[s].points[p].sum_rate.std_error);
            }
    }
}

TEST_CASE("baseline link is weaker than the terahertz composite")
{
    const ScenarioConfig cfg;
    const PreparedScenario thz = prepare_scenario(cfg);
    const ScenarioConfig base_cfg = non_ris_non_thz_baseline(cfg);
    const PreparedScenario base = prepare_scenario(base_cfg);
    CHECK(ris_channel_matrix(base_cfg, User::far).cwiseAbs().maxCoeff() == 0.0);
    // (c / 4πf)^2 d^{-3} at 3.5 GHz (tests/oracles/frozen_values.py)
    CHECK(base.far_gain == doctest::Approx(3.7168546332365391e-13).epsilon(1e-12));
    CHECK(base.near_gain == doctest::Approx(2.9734837065892313e-12).epsilon(1e-12));
    CHECK(base.far_gain < thz.far_gain);
    CHECK(base.near_gain < thz.far_gain);
}

TEST_CASE("sweep spec validation")
{
    const ScenarioConfig cfg = small(2);
    CHECK_THROWS_AS(run_outage_sweep(quick(SweepVariable::target_rate, {}, 10, {Scheme::fair}), cfg), ConfigError);
    CHECK_THROWS_AS(run_outage_sweep(quick(SweepVariable::target_rate, {1, 1}, 10, {Scheme::fair}), cfg), ConfigError);
    CHECK_THROWS_AS(run_outage_sweep(quick(SweepVariable::target_rate, {1}, 0, {Scheme::fair}), cfg), ConfigError);
    CHECK_THROWS_AS(run_outage_sweep(quick(SweepVariable::target_rate, {1}, 10, {}), cfg), ConfigError);
    CHECK_THROWS_AS(run_outage_sweep(quick(SweepVariable::target_rate, {-1}, 10, {Scheme::fair}), cfg), ConfigError);
}

TEST_CASE("per-entry fading and geometric ordering are selectable")
{
    ScenarioConfig cfg = small(2);
    cfg.fading.mode = FadingMode::per_entry;
    cfg.noma.sic_order = SicOrder::geometric;
    const SweepResult r =
        run_outage_sweep(quick(SweepVariable::target_rate, {1.0, 2.0}, 2000, {Scheme::improved_fair}), cfg);
    CHECK(r.series[0].points.size() == 2);
    const PreparedScenario sc = prepare_scenario(cfg);
    RandomEngine rng = stream_engine(1, 0);
    const TrialGains g = draw_trial_gains(sc, rng);
    CHECK(g.far > 0.0);
    CHECK(g.near > 0.0);
}

TEST_CASE("scheme names")
{
    for (Scheme s : {Scheme::fixed, Scheme::fair, Scheme::improved_fair, Scheme::baseline})
        CHECK(parse_scheme(to_string(s)) == s);
    CHECK_FALSE(parse_scheme("oma").has_value());
}
