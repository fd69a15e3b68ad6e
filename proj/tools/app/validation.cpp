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
#include "teraris/ergodic.hpp"

#include <cmath>
#include <cstdio>

namespace teraris::app
{

bool ValidationReport::passed() const
{
    for (const auto &c : checks)
        if (!c.passed)
            return false;
    return true;
}

namespace
{

std::string fmt(const char *pattern, double a, double b, double c, double d, double e)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c, d, e);
    return buf;
}

ValidationCheck oracle_check(const std::string &name, const PowerAllocation &pa, const LinkBudget &lb,
                             const WhitenedCovariance &cov, std::size_t m, const ValidationOptions &opt,
                             std::uint64_t seed)
{
    const EffectiveMatrices em = build_effective_matrices(pa, lb, cov, m);
    const double closed = closed_form_capacity(em.signal, em.interference, lb);
    const McEstimate mc = ergodic_capacity_mc_oracle(pa, lb, cov, m, opt.mc_trials, seed);
    const double diff = std::abs(closed - mc.mean);
    const double z = mc.std_error > 0.0 ? diff / mc.std_error : (diff == 0.0 ? 0.0 : INFINITY);
    ValidationCheck c;
    c.name = name;
    c.passed = z <= opt.tolerance_sigmas;
    c.detail = fmt("closed=%.9g mc=%.9g se=%.3g |z|=%.3f limit=%.3g", closed, mc.mean, mc.std_error, z,
                   opt.tolerance_sigmas);
    return c;
}

} // namespace

ValidationReport run_validation(const ScenarioConfig &cfg, const ValidationOptions &opt)
{
    ValidationReport report;
    const LinkBudget lb = cfg.link_budget();
    std::uint64_t case_seed = opt.seed;

    // Default covariance: i.i.d. entries with the mean per-entry power of each user channel.
    const PreparedScenario sc = prepare_scenario(cfg);
    const PowerAllocation fixed = PowerAllocation::two_user(cfg.power.fixed_alpha_far);
    for (User u : {User::far, User::near})
    {
        const ComplexMatrix &h = u == User::far ? sc.far_channel : sc.near_channel;
        const Eigen::Index dim = h.size();
        const double c = channel_gain(h) / static_cast<double>(dim);
        const auto cov = WhitenedCovariance::scaled_identity(dim, c);
        const std::string who = to_string(u);
        report.checks.push_back(oracle_check("closed-form vs MC, c*I covariance, " + who + " user, far message",
                                             fixed, lb, cov, 0, opt, ++case_seed));
        report.checks.push_back(oracle_check("closed-form vs MC, c*I covariance, " + who + " user, near message",
                                             fixed, lb, cov, 1, opt, ++case_seed));
    }

    // Random covariances of small dimension with distinct eigenvalues.
    RandomEngine rng = stream_engine(opt.seed, 0x5eed);
    for (int k = 0; k < 4; ++k)
    {
        const Eigen::Index dim = 2 + 2 * k;
        const auto cov = random_covariance(dim, rng);
        const LinkBudget unit{10.0, 1.0}; // 10 dB
        report.checks.push_back(oracle_check("closed-form vs MC, random covariance dim " + std::to_string(dim),
                                             PowerAllocation::two_user(0.8), unit, cov, 0, opt, ++case_seed));
    }

    // Power-allocation branch equivalence on random requests.
    {
        std::uniform_real_distribution<double> snr_db(-10.0, 40.0);
        std::uniform_real_distribution<double> rate(0.0, 8.0);
        int feasible = 0, mismatch = 0, iter_mismatch = 0, inexact = 0;
        double worst_rate_error = 0.0;
        for (int i = 0; i < opt.pa_requests; ++i)
        {
            const PaRequest req{std::pow(10.0, snr_db(rng) / 10.0), LinkBudget{1.0, 1.0}, rate(rng)};
            const PaResult basic = fair_pa(req);
            const PaResult improved = improved_fair_pa(req);
            if (basic.feasible_far)
            {
                ++feasible;
                if (basic.allocation.far() != improved.allocation.far() || !improved.feasible_far)
                    ++mismatch;
                const double cm = capacity(sinr_own(req.far_gain, basic.allocation, 0, req.lb));
                worst_rate_error = std::max(worst_rate_error, std::abs(cm - req.target_rate_far));
                if (std::abs(cm - req.target_rate_far) > rate_tolerance)
                    ++inexact;
            }
            else if (basic.allocation.far() != 1.0 || improved.allocation.far() != 0.0 || improved.feasible_far)
                ++mismatch;
            for (PaScheme s : {PaScheme::fair, PaScheme::improved_fair})
            {
                const PaResult closed = s == PaScheme::fair ? basic : improved;
                const PaResult loop = iterative_fair_pa(req, s);
                if (std::abs(loop.allocation.far() - closed.allocation.far()) > 1e-12 ||
                    loop.feasible_far != closed.feasible_far)
                    ++iter_mismatch;
            }
        }
        ValidationCheck c;
        c.name = "power allocation branch equivalence (" + std::to_string(opt.pa_requests) + " requests)";
        c.passed = mismatch == 0 && iter_mismatch == 0 && inexact == 0;
        c.detail = fmt("feasible=%.0f branch_mismatch=%.0f loop_mismatch=%.0f inexact=%.0f worst|C_m-R_m|=%.3g", feasible,
                       mismatch, iter_mismatch, inexact, worst_rate_error);
        report.checks.push_back(c);
    }
    return report;
}

} // namespace teraris::app
