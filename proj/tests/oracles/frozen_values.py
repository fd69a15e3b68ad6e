#!/usr/bin/env python3
# teraris - RIS-assisted NOMA-MIMO link simulation for terahertz bands
# Copyright (C) 2026 The teraris authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------
#
# Independent extended-precision evaluation of the reference values frozen in
# tests/unit. Written against the formulas directly, not against the C++ code.
# Run: python3 tests/oracles/frozen_values.py

import mpmath as mp

mp.mp.dps = 40
c = mp.mpf(299792458)


def los(f, d, kappa=0, mis=None, eta=2):
    d1 = c / (4 * mp.pi * f) * mp.power(d, -mp.mpf(eta) / 2)
    d2 = mp.exp(-kappa * d / 2)
    if mis is None:
        return d1 * d2
    a, w, le = mis
    u = mp.sqrt(mp.pi) * a / (mp.sqrt(2) * w)
    we2 = w * w * mp.sqrt(mp.pi) * mp.erf(u) / (2 * u * mp.exp(-u * u))
    return d1 * d2 * mp.erf(u) ** 2 * mp.exp(-2 * le * le / we2)


def ula(n, spacing):
    return [(k - mp.mpf(n - 1) / 2) * spacing for k in range(n)]


def pairwise(sep, a, b):
    return [[mp.sqrt(sep * sep + (x - y) ** 2) for y in b] for x in a]


def multiray_factor(f, gains, delays):
    if not gains:
        return mp.mpc(1)
    s = sum(g * mp.expjpi(-2 * f * t) for g, t in zip(gains, delays))
    return 1 + mp.sqrt(mp.mpf(1) / len(gains)) * s


def main():
    f = mp.mpf("0.3e12")
    mis = (mp.mpf("0.1"), mp.mpf("0.2"), mp.mpf("0.05"))
    kappa = mp.mpf("0.0033")
    lam = c / f

    print("delta1_f0.3THz_d100", mp.nstr(los(f, 100), 17))
    print("los_d250_default", mp.nstr(los(f, 250, kappa, mis), 17))
    u = mp.sqrt(mp.pi) * mis[0] / (mp.sqrt(2) * mis[1])
    we2 = mis[1] ** 2 * mp.sqrt(mp.pi) * mp.erf(u) / (2 * u * mp.exp(-u * u))
    print("delta3_default", mp.nstr(mp.erf(u) ** 2 * mp.exp(-2 * mis[2] ** 2 / we2), 17))

    fac = multiray_factor(1, [mp.mpf("0.1"), mp.mpf("0.2")], [mp.mpf("0.25"), mp.mpf("0.5")])
    print("multiray_example_re", mp.nstr(fac.real, 17), "im", mp.nstr(fac.imag, 17))

    mag = mp.mpf("1e-3") / (8 * mp.sqrt(mp.pi ** 3) * 100 * 150)
    print("ris_magnitude_example", mp.nstr(mag, 17))

    # Default 16x16 direct channels: λ/2 ULAs, broadside at the BS-user distance.
    gains = [mp.mpf("0.1"), mp.mpf("0.05")]
    delays = [mp.mpf("2.1503e-9"), mp.mpf("4.0521e-9")]
    mr = multiray_factor(f, gains, delays)
    bs = ula(16, lam / 2)
    ue = ula(16, lam / 2)
    for name, dist in (("far", 500), ("near", 250)):
        d = pairwise(mp.mpf(dist), ue, bs)
        s = sum(abs(los(f, d[j][i], kappa, mis) * mr) ** 2 for j in range(16) for i in range(16))
        print("direct_frobenius_%s" % name, mp.nstr(mp.sqrt(s), 17))

    # RIS cascade for the far user with co-phasing toward centre antennas (index n/2).
    mp.mp.dps = 30
    ris = ula(200, lam / 2)
    rir = pairwise(mp.mpf(100), bs, ris)
    for name, rdist in (("far", 150), ("near", 250)):
        rrj = pairwise(mp.mpf(rdist), ris, ue)
        rrj_far = pairwise(mp.mpf(150), ris, ue)
        phi = [2 * mp.pi * mp.frac((rir[8][r] + rrj_far[r][8]) / lam) for r in range(200)]
        s = 0
        for j in range(16):
            for i in range(16):
                g = mp.mpc(0)
                for r in range(200):
                    path = rir[i][r] + rrj[r][j]
                    amp = lam / (8 * mp.sqrt(mp.pi ** 3) * rir[i][r] * rrj[r][j]) * mp.exp(-kappa * path / 2)
                    g += amp * mp.expj(phi[r] - 2 * mp.pi * path / lam)
                s += abs(g) ** 2
        print("ris_frobenius_%s" % name, mp.nstr(mp.sqrt(s), 17))
    mp.mp.dps = 40

    print("E1(1)", mp.nstr(mp.e1(1), 20))
    print("E1(0.5)", mp.nstr(mp.e1(mp.mpf("0.5")), 20))
    print("E1(10)", mp.nstr(mp.e1(10), 20))
    print("E3(2.5)", mp.nstr(mp.expint(3, mp.mpf("2.5")), 20))
    print("E5(0.3)", mp.nstr(mp.expint(5, mp.mpf("0.3")), 20))
    print("single_eig_capacity", mp.nstr(mp.e * mp.e1(1) / mp.log(2), 17))
    # E[ln(1 + λ X)], X ~ Gamma(3, 1), λ = 2, straight quadrature.
    lam3 = 2
    q = mp.quad(lambda x: mp.log(1 + lam3 * x) * x ** 2 * mp.exp(-x) / 2, [0, mp.inf])
    print("erlang3_lambda2", mp.nstr(q, 17))
    # Two clusters {2 (x2), 0.5 (x1)}: density of 2 G2 + 0.5 G1 by convolution quadrature.
    def pdf(s):
        return mp.quad(lambda x: (x / 4) * mp.exp(-x / 2) * 2 * mp.exp(-(s - x) * 2), [0, s])
    q2 = mp.quad(lambda s: mp.log(1 + s) * pdf(s), [0, 5, 20, mp.inf])
    print("mixed_clusters_2x2_0.5x1", mp.nstr(q2, 17))

    noise = -174 + 10 * mp.log10(mp.mpf("10e6")) + 10
    print("noise_dbm_default", mp.nstr(noise, 17))

    fb = mp.mpf("3.5e9")
    for name, dist in (("far", 500), ("near", 250)):
        print("baseline_gain_%s" % name, mp.nstr(los(fb, dist, 0, None, 3) ** 2, 17))


if __name__ == "__main__":
    main()
