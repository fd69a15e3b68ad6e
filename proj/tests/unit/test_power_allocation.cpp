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

#include "teraris/power_allocation.hpp"
#include "teraris/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace teraris;

TEST_CASE("target SINR")
{
    CHECK(target_sinr(0.0) == 0.0);
    CHECK(target_sinr(1.0) == 1.0);
    CHECK(target_sinr(5.0) == 31.0);
    CHECK_THROWS_AS(target_sinr(-1.0), std::domain_error);
}

TEST_CASE("fixed split")
{
    CHECK(fixed_pa(0.8).allocation.far() == 0.8);
    CHECK(fixed_pa(0.8).allocation.near() == doctest::Approx(0.2));
    CHECK(fixed_pa(1.0).allocation.near() == 0.0);
    CHECK(fixed_pa(0.5).allocation.near() == 0.5);
    CHECK(fixed_pa(0.5).scheme == PaScheme::fixed);
    CHECK_THROWS_AS(fixed_pa(1.1), std::domain_error);
}

TEST_CASE("basic fair allocation")
{
    // p g / σ² = 10, ξ = 1: 11 / 20
    const PaResult r = fair_pa({10.0, {1.0, 1.0}, 1.0});
    CHECK(r.allocation.far() == doctest::Approx(0.55).epsilon(1e-15));
    CHECK(r.allocation.near() == doctest::Approx(0.45).epsilon(1e-15));
    CHECK(r.feasible_far);
    CHECK(r.scheme == PaScheme::fair);

    // High SNR limit ξ/(1+ξ)
    CHECK(fair_pa({1e12, {1.0, 1.0}, 1.0}).allocation.far() == doctest::Approx(0.5).epsilon(1e-11));

    // p g / σ² = 1, ξ = 3: unclipped 1.5
    const PaRequest clip{1.0, {1.0, 1.0}, 2.0};
    CHECK(required_far_share(clip) == doctest::Approx(1.5));
    CHECK(fair_pa(clip).allocation.far() == 1.0);
    CHECK(fair_pa(clip).allocation.near() == 0.0);
    CHECK_FALSE(fair_pa(clip).feasible_far);

    const PaResult dead = fair_pa({0.0, {1.0, 1.0}, 1.0});
    CHECK(dead.allocation.far() == 1.0);
    CHECK_FALSE(dead.feasible_far);
    CHECK(std::isinf(required_far_share({0.0, {1.0, 1.0}, 1.0})));
}

TEST_CASE("improved fair allocation")
{
    const PaResult r = improved_fair_pa({10.0, {1.0, 1.0}, 1.0});
    CHECK(r.allocation.far() == fair_pa({10.0, {1.0, 1.0}, 1.0}).allocation.far());
    const PaResult bad = improved_fair_pa({1.0, {1.0, 1.0}, 2.0});
    CHECK(bad.allocation.far() == 0.0);
    CHECK(bad.allocation.near() == 1.0);
    CHECK_FALSE(bad.feasible_far);
    CHECK(improved_fair_pa({0.0, {1.0, 1.0}, 0.5}).allocation.far() == 0.0);
}

TEST_CASE("request validation")
{
    CHECK_THROWS_AS(fair_pa({-1.0, {1.0, 1.0}, 1.0}), std::domain_error);
    CHECK_THROWS_AS(fair_pa({1.0, {1.0, 0.0}, 1.0}), std::domain_error);
    CHECK_THROWS_AS(improved_fair_pa({1.0, {1.0, 1.0}, -0.5}), std::domain_error);
}

TEST_CASE("allocation invariants on random requests")
{
    RandomEngine rng = stream_engine(17, 0);
    std::uniform_real_distribution<double> db(-20.0, 50.0);
    std::uniform_real_distribution<double> rate(0.0, 10.0);
    for (int i = 0; i < 5000; ++i)
    {
        const PaRequest req{std::pow(10.0, db(rng) / 10.0), {1.0, 1.0}, rate(rng)};
        const PaResult basic = fair_pa(req);
        const PaResult improved = improved_fair_pa(req);
        for (const PaResult *r : {&basic, &improved})
        {
            const auto c = r->allocation.coefficients();
            CHECK(std::abs(c[0] + c[1] - 1.0) <= 1e-12);
            CHECK(c[0] >= 0.0);
            CHECK(c[0] <= 1.0);
        }
        if (basic.feasible_far)
        {
            CHECK(improved.allocation.far() == basic.allocation.far());
            const double cm = capacity(sinr_own(req.far_gain, basic.allocation, 0, req.lb));
            CHECK(std::abs(cm - req.target_rate_far) <= 1e-9);
        }
        else
        {
            CHECK(basic.allocation.far() == 1.0);
            CHECK(improved.allocation.far() == 0.0);
            // Never powers a far user that cannot reach its target.
            const double best = capacity(sinr_own(req.far_gain, PowerAllocation::two_user(1.0), 0, req.lb));
            CHECK(best < req.target_rate_far);
        }
        // Stronger far link or more power never needs a larger share.
        const PaRequest stronger{req.far_gain * 1.5, req.lb, req.target_rate_far};
        CHECK(fair_pa(stronger).allocation.far() <= basic.allocation.far());
        const PaRequest louder{req.far_gain, {2.0, 1.0}, req.target_rate_far};
        CHECK(fair_pa(louder).allocation.far() <= basic.allocation.far());
    }
}

TEST_CASE("loop form agrees with the closed form")
{
    RandomEngine rng = stream_engine(23, 0);
    std::uniform_real_distribution<double> db(-20.0, 50.0);
    std::uniform_real_distribution<double> rate(0.0, 10.0);
    for (int i = 0; i < 2000; ++i)
    {
        const PaRequest req{std::pow(10.0, db(rng) / 10.0), {1.0, 1.0}, rate(rng)};
        for (PaScheme s : {PaScheme::fair, PaScheme::improved_fair})
        {
            const PaResult loop = iterative_fair_pa(req, s);
            const PaResult closed = allocate(s, req, 0.8);
            CHECK(loop.allocation.far() == doctest::Approx(closed.allocation.far()).epsilon(1e-12));
            CHECK(loop.feasible_far == closed.feasible_far);
        }
    }
    CHECK_THROWS_AS(iterative_fair_pa({1.0, {1.0, 1.0}, 1.0}, PaScheme::fixed), std::invalid_argument);
}

TEST_CASE("scheme names")
{
    for (PaScheme s : {PaScheme::fixed, PaScheme::fair, PaScheme::improved_fair})
        CHECK(parse_pa_scheme(to_string(s)) == s);
    CHECK_FALSE(parse_pa_scheme("optimal").has_value());
}
