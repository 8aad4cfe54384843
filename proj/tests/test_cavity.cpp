// Copyright 2026 The LGS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "doctest.h"
#include "lgs/cavity.hpp"
#include "lgs/error.hpp"
#include "oracles.hpp"

using namespace lgs;
using lgs::testing::C;
using lgs::testing::Gen;

namespace {

CavityParams random_params(Gen &g, bool lossless = false) {
    CavityParams p;
    p.kappa_over_g = g.uniform(0.05, 20.0);
    p.gamma_over_g = lossless ? 0.0 : g.uniform(0.0, 2.0);
    p.eta_h_over_g = g.uniform(0.1, 3.0);
    p.eta_v_over_g = g.uniform(0.1, 3.0);
    p.omega_over_g = g.uniform(-5.0, 5.0);
    return p;
}

BasisKet at(Polarization p, std::uint16_t line, std::uint64_t atoms) { return BasisKet{p, Line{line}, atoms}; }

}  // namespace

TEST_CASE("property: hot coefficients equal the steady state of the equations of motion") {
    Gen g(41);
    for (int trial = 0; trial < 500; ++trial) {
        const CavityParams p = random_params(g);
        for (Polarization k : {Polarization::H, Polarization::V}) {
            const double eta_k = k == Polarization::H ? p.eta_h_over_g : p.eta_v_over_g;
            const double eta_kbar = k == Polarization::H ? p.eta_v_over_g : p.eta_h_over_g;
            const auto [same, flipped] =
                testing::steady_state_reflection(p.kappa_over_g, p.gamma_over_g, eta_k, eta_kbar, p.omega_over_g);
            const HotCoeffs h = hot_coeffs(p, k);
            CHECK(std::abs(h.rh1 - same) < 1e-12);
            CHECK(std::abs(h.rh2 - flipped) < 1e-12);
        }
        const auto [cold, none] =
            testing::steady_state_reflection(p.kappa_over_g, p.gamma_over_g, 0.0, 0.0, p.omega_over_g);
        CHECK(std::abs(cold_coeff(p) - cold) < 1e-12);
        CHECK(none == C{});
    }
}

TEST_CASE("resonant closed forms with equal couplings") {
    for (double kappa : {0.2, 1.0, 2.0, 10.0}) {
        for (double gamma : {0.0, 0.01, 0.1, 0.2}) {
            CavityParams p;
            p.kappa_over_g = kappa;
            p.gamma_over_g = gamma;
            const double d = 2.0 + kappa * gamma / 4.0;
            const ScatterCoeffs c = scatter_coeffs(p);
            CHECK(std::abs(c.r0 - C(-1.0)) < 1e-15);
            CHECK(std::abs(c.rh1 - C(-1.0 + 2.0 / d)) < 1e-14);
            CHECK(std::abs(c.rh2 - C(2.0 / d)) < 1e-14);
        }
    }
}

TEST_CASE("property: reflection bounds") {
    Gen g(42);
    for (int trial = 0; trial < 500; ++trial) {
        const CavityParams p = random_params(g);
        CHECK(std::abs(std::abs(cold_coeff(p)) - 1.0) < 1e-12);
        const HotCoeffs h = hot_coeffs(p);
        CHECK(std::norm(h.rh1) + std::norm(h.rh2) <= 1.0 + 1e-12);
        const HotCoeffs lossless = hot_coeffs(random_params(g, true));
        CHECK(std::abs(std::norm(lossless.rh1) + std::norm(lossless.rh2) - 1.0) < 1e-12);
    }
}

TEST_CASE("weak-loss limit approaches the ideal map") {
    Gen g(43);
    CavityParams p;
    p.kappa_over_g = 1.0;
    p.gamma_over_g = 1e-8;
    for (int trial = 0; trial < 50; ++trial) {
        const HybridState s = g.state(2, 3, 12);
        const std::size_t atom = g.index(2);
        const HybridState real = scatter_real(s, Line{1}, atom, p);
        const HybridState ideal = scatter_ideal(s, Line{1}, atom);
        CHECK(testing::max_deviation(real, ideal) < 1e-3);
    }
}

TEST_CASE("ideal scattering rules") {
    const std::uint16_t l = 2;
    auto one = [&](Polarization p, std::uint64_t atoms) {
        HybridState s(1);
        s.accumulate(at(p, l, atoms), 1.0);
        return scatter_ideal(s, Line{l}, 0);
    };
    CHECK(one(Polarization::H, 0).amplitude(at(Polarization::V, l, 1)) == C(1.0));
    CHECK(one(Polarization::H, 1).amplitude(at(Polarization::H, l, 1)) == C(-1.0));
    CHECK(one(Polarization::V, 0).amplitude(at(Polarization::V, l, 0)) == C(-1.0));
    CHECK(one(Polarization::V, 1).amplitude(at(Polarization::H, l, 0)) == C(1.0));
    HybridState off(1);
    off.accumulate(at(Polarization::H, 3, 0), 1.0);
    CHECK(scatter_ideal(off, Line{l}, 0).terms() == off.terms());
}

TEST_CASE("lossy scattering rules") {
    CavityParams p;
    p.kappa_over_g = 1.3;
    p.gamma_over_g = 0.4;
    p.omega_over_g = 0.7;
    const ScatterCoeffs c = scatter_coeffs(p);
    HybridState s(2);
    s.accumulate(at(Polarization::H, 1, 0b00), 0.5);
    s.accumulate(at(Polarization::H, 1, 0b01), 0.5);
    s.accumulate(at(Polarization::V, 1, 0b10), 0.5);
    s.accumulate(at(Polarization::V, 1, 0b11), 0.5);
    const HybridState out = scatter_real(s, Line{1}, 0, p);
    CHECK(std::abs(out.amplitude(at(Polarization::H, 1, 0b00)) - 0.5 * c.rh1) < 1e-15);
    CHECK(std::abs(out.amplitude(at(Polarization::V, 1, 0b01)) - 0.5 * c.rh2) < 1e-15);
    CHECK(std::abs(out.amplitude(at(Polarization::H, 1, 0b01)) - 0.5 * c.r0) < 1e-15);
    CHECK(std::abs(out.amplitude(at(Polarization::V, 1, 0b10)) - 0.5 * c.r0) < 1e-15);
    CHECK(std::abs(out.amplitude(at(Polarization::H, 1, 0b10)) - 0.5 * c.rh2) < 1e-15);
    CHECK(std::abs(out.amplitude(at(Polarization::V, 1, 0b11)) - 0.5 * c.rh1) < 1e-15);
    for (const auto &[k, v] : out.terms()) CHECK(k.line == Line{1});
}

TEST_CASE("property: resonant lossy bounce never increases the norm") {
    Gen g(44);
    for (int trial = 0; trial < 200; ++trial) {
        CavityParams p;
        p.kappa_over_g = g.uniform(0.05, 10.0);
        p.gamma_over_g = g.uniform(0.0, 1.0);
        p.eta_h_over_g = p.eta_v_over_g = g.uniform(0.2, 2.0);
        const HybridState s = g.state(2, 2, 12);
        const HybridState out = scatter_real(s, Line{g.index(2) == 0 ? std::uint16_t{0} : std::uint16_t{1}}, 1, p);
        CHECK(norm_squared(out) <= norm_squared(s) + 1e-12);
    }
}

TEST_CASE("parameter validation and zero coupling") {
    CavityParams p;
    p.kappa_over_g = 0.0;
    CHECK_THROWS_AS(p.validate(), Error);
    p.kappa_over_g = 1.0;
    p.gamma_over_g = -0.1;
    CHECK_THROWS_AS(p.validate(), Error);
    p.gamma_over_g = 0.1;
    p.omega_over_g = INFINITY;
    CHECK_THROWS_AS(p.validate(), Error);
    p.omega_over_g = 0.3;
    p.eta_h_over_g = p.eta_v_over_g = 0.0;
    try {
        hot_coeffs(p);
        FAIL("expected a zero-coupling error");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::ZeroCoupling);
    }
    const ScatterCoeffs c = scatter_coeffs(p);
    CHECK(c.rh1 == c.r0);
    CHECK(c.rh2 == C{});
    HybridState s(1);
    CHECK_THROWS_AS(scatter_ideal(s, Line{0}, 1), Error);
}
