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
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "lgs/error.hpp"
#include "lgs/gates.hpp"
#include "oracles.hpp"

using namespace lgs;
using lgs::testing::C;
using lgs::testing::Coefficients;
using lgs::testing::Gen;

namespace {

constexpr GateKind kGates[] = {GateKind::Cnot, GateKind::Fredkin, GateKind::Toffoli};

std::size_t min_atoms(GateKind k) { return k == GateKind::Cnot ? 1 : 2; }

std::uint64_t oracle_target(GateKind k, bool v, std::uint64_t atoms, std::size_t n) {
    switch (k) {
        case GateKind::Cnot: return testing::cnot_target(v, atoms, n);
        case GateKind::Fredkin: return testing::fredkin_target(v, atoms, n);
        case GateKind::Toffoli: return testing::toffoli_target(v, atoms, n);
    }
    return atoms;
}

HybridState symbolic_input(const Coefficients &c, std::size_t atoms) {
    std::vector<QubitCoeffs> q{{c.z1, c.z2}};
    if (atoms > 1) q.emplace_back(c.e1, c.e2);
    return make_product_state({c.a1, c.a2}, Line{0}, q);
}

RunOptions real_options(double kappa, double gamma) {
    RunOptions o;
    o.mode = Mode::Real;
    o.cavity.kappa_over_g = kappa;
    o.cavity.gamma_over_g = gamma;
    return o;
}

ErrorCode code_of(const auto &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected an lgs::Error");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("ideal truth tables are the target permutations with unit phase") {
    for (GateKind kind : kGates) {
        for (std::size_t n = min_atoms(kind); n <= 6; ++n) {
            CAPTURE(gate_name(kind));
            CAPTURE(n);
            const TruthTable t = truth_table(GateSpec{kind, n});
            REQUIRE(t.rows.size() == (std::size_t{1} << (n + 1)));
            CHECK(t.bijective);
            CHECK(t.matches_target);
            REQUIRE(t.common_phase.has_value());
            CHECK(std::abs(*t.common_phase - C(1.0)) < 1e-12);
            std::set<BasisKet> images;
            for (const TruthRow &r : t.rows) {
                CHECK(r.single_ket);
                CHECK(r.mapped.line == Line{0});
                CHECK(r.mapped.pol == r.input.pol);
                const bool v = r.input.pol == Polarization::V;
                CHECK(r.mapped.atoms == oracle_target(kind, v, r.input.atoms, n));
                CHECK(r.expected.atoms == oracle_target(kind, v, r.input.atoms, n));
                CHECK(std::abs(norm_squared(r.output) - 1.0) < 1e-12);
                images.insert(r.mapped);
            }
            CHECK(images.size() == t.rows.size());
        }
    }
}

TEST_CASE("target permutation helper") {
    for (GateKind kind : kGates) {
        for (std::size_t n = min_atoms(kind); n <= 5; ++n) {
            for (std::uint64_t atoms = 0; atoms < (std::uint64_t{1} << n); ++atoms) {
                for (bool v : {false, true}) {
                    const BasisKet in{v ? Polarization::V : Polarization::H, Line{0}, atoms};
                    CHECK(gate_target(GateSpec{kind, n}, in).atoms == oracle_target(kind, v, atoms, n));
                }
            }
        }
    }
}

TEST_CASE("element inventories") {
    for (std::size_t n = 1; n <= 12; ++n) {
        const ElementCounts c = element_count(GateSpec{GateKind::Cnot, n});
        CHECK(c.pbs == 2);
        CHECK(c.hwp45 == n);
        CHECK(c.hwp0 == n % 2);
        CHECK(c.hwp90 == 0);
        CHECK(c.cavities == n);
        CHECK(c.cavity_visits == 2 * n);
        CHECK(c.mirrors == 0);
    }
    for (std::size_t n = 2; n <= 12; ++n) {
        const ElementCounts f = element_count(GateSpec{GateKind::Fredkin, n});
        CHECK(f.pbs == n);
        CHECK(f.hwp() == 1);
        CHECK((n == 2 ? f.hwp0 : f.hwp90) == 1);
        CHECK(f.cavities == n);
        const ElementCounts t = element_count(GateSpec{GateKind::Toffoli, n});
        CHECK(t.pbs == n + 1);
        CHECK(t.hwp90 == 1);
        CHECK(t.hwp45 == 1);
        CHECK(t.hwp0 == 0);
        CHECK(t.cavities == n);
        CHECK(t.optical_elements() == t.pbs + 2 + t.mirrors + n);
    }
}

TEST_CASE("small builders follow the published layouts") {
    CHECK(format_circuit(build_cnot(1)) ==
          "# cnot\nATOMS 1\n"
          "PBS split l0 -> l1 l2  # PBS1\n"
          "HWP 0 l2\n"
          "CAV l2 atom1\n"
          "HWP 45 l2\n"
          "CAV l2 atom1\n"
          "PBS merge l1 l2 -> l0  # PBS2\n");
    CHECK(format_circuit(build_fredkin(2)) ==
          "# fredkin\nATOMS 2\n"
          "PBS split l0 -> l1 l2  # PBS1\n"
          "HWP 0 l2\n"
          "CAV l2 atom1\n"
          "CAV l2 atom2\n"
          "CAV l2 atom1\n"
          "PBS merge l1 l2 -> l0  # PBS2\n");
    CHECK(format_circuit(build_toffoli(2)) ==
          "# toffoli\nATOMS 2\n"
          "PBS split l0 -> l1 l2  # PBS1\n"
          "CAV l2 atom1\n"
          "PBS split l2 -> l3 l4  # PBS2\n"
          "CAV l3 atom2\n"
          "HWP 45 l3\n"
          "CAV l3 atom2\n"
          "HWP 90 l3\n"
          "MIRROR l4\n"
          "MIRROR l4\n"
          "PBS merge l3 l4 -> l5  # PBS2\n"
          "CAV l5 atom1\n"
          "PBS merge l1 l5 -> l0  # PBS3\n");
}

TEST_CASE("intermediate states match the symbolic expressions") {
    Gen g(51);
    for (int trial = 0; trial < 5; ++trial) {
        const Coefficients c = Coefficients::random(g);
        const Circuit cnot = build_cnot(1);
        const Circuit fredkin = build_fredkin(2);
        const Circuit toffoli = build_toffoli(2);
        const HybridState one = symbolic_input(c, 1);
        const HybridState two = symbolic_input(c, 2);
        CHECK(testing::max_deviation(run_to_cut(cnot, one, kCutFirstBounce), testing::cnot_first_bounce(c)) < 1e-12);
        CHECK(testing::max_deviation(run_to_cut(cnot, one, kCutFlipped), testing::cnot_flipped(c)) < 1e-12);
        CHECK(testing::max_deviation(run_circuit(cnot, one), testing::cnot_output(c)) < 1e-12);
        CHECK(testing::max_deviation(run_to_cut(fredkin, two, kCutFirstBounce), testing::fredkin_first_bounce(c)) <
              1e-12);
        CHECK(testing::max_deviation(run_to_cut(fredkin, two, kCutSecondAtom), testing::fredkin_second_atom(c)) <
              1e-12);
        CHECK(testing::max_deviation(run_circuit(fredkin, two), testing::fredkin_output(c)) < 1e-12);
        CHECK(testing::max_deviation(run_to_cut(toffoli, two, kCutInnerBounce),
                                     testing::toffoli_inner_bounce_exchanged(c)) < 1e-12);
        CHECK(testing::max_deviation(run_to_cut(toffoli, two, kCutInnerMerged), testing::toffoli_inner_merged(c)) <
              1e-12);
        CHECK(testing::max_deviation(run_circuit(toffoli, two), testing::toffoli_output(c)) < 1e-12);
    }
}

TEST_CASE("property: every gate is an involution up to global phase") {
    Gen g(52);
    for (GateKind kind : kGates) {
        for (std::size_t n = min_atoms(kind); n <= 4; ++n) {
            const Circuit c = build_gate(GateSpec{kind, n});
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<QubitCoeffs> atoms;
                for (std::size_t i = 0; i < n; ++i) atoms.push_back(g.qubit());
                const HybridState s = make_product_state(g.qubit(), Line{0}, atoms);
                const HybridState twice = run_circuit(c, run_circuit(c, s));
                CHECK(equal_up_to_global_phase(twice, s, 1e-12));
            }
        }
    }
}

TEST_CASE("property: ideal runs keep the norm, lossy runs never gain") {
    Gen g(53);
    for (GateKind kind : kGates) {
        for (std::size_t n = min_atoms(kind); n <= 4; ++n) {
            const Circuit c = build_gate(GateSpec{kind, n});
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<QubitCoeffs> atoms;
                for (std::size_t i = 0; i < n; ++i) atoms.push_back(g.qubit());
                const HybridState s = make_product_state(g.qubit(), Line{0}, atoms);
                CHECK(std::abs(norm_squared(run_circuit(c, s)) - 1.0) < 1e-12);
                const RunOptions o = real_options(g.uniform(0.1, 3.0), g.uniform(0.0, 0.5));
                const double real = norm_squared(run_circuit(c, s, o));
                CHECK(real <= 1.0 + 1e-12);
                CHECK(real > 0.0);
            }
        }
    }
}

TEST_CASE("lossy runs with the strict merge policy report the wrong-port amplitude") {
    RunOptions o = real_options(1.0, 0.2);
    o.leakage = PortLeakage::Reject;
    Gen g(54);
    const HybridState s = symbolic_input(Coefficients::random(g), 2);
    CHECK(code_of([&] { run_circuit(build_toffoli(2), s, o); }) == ErrorCode::Miswired);
    CHECK(RunOptions{}.effective_leakage() == PortLeakage::Reject);
    CHECK(real_options(1.0, 0.2).effective_leakage() == PortLeakage::Discard);
}

TEST_CASE("run preconditions") {
    const Circuit c = build_cnot(2);
    CHECK(code_of([&] { run_circuit(c, basis_state(BasisKet{}, 1)); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { run_circuit(c, basis_state(BasisKet{Polarization::H, Line{3}, 0}, 2)); }) ==
          ErrorCode::InvalidArgument);
    CHECK(code_of([&] { run_to_cut(c, basis_state(BasisKet{}, 2), "nowhere"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("gate specs") {
    CHECK(code_of([] { GateSpec{GateKind::Cnot, 0}.validate(); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { GateSpec{GateKind::Fredkin, 1}.validate(); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { GateSpec{GateKind::Toffoli, 13}.validate(); }) == ErrorCode::InvalidArgument);
    GateSpec{GateKind::Toffoli, 20}.validate(20);
    CHECK(gate_from_name("fredkin") == GateKind::Fredkin);
    CHECK_FALSE(gate_from_name("swap").has_value());
    CHECK(std::string(gate_name(GateKind::Toffoli)) == "toffoli");
    CHECK(code_of([] { truth_table(GateSpec{GateKind::Cnot, 4}, {}, 16); }) == ErrorCode::LimitExceeded);
}

TEST_CASE("truth table text") {
    const std::string text = format_truth_table(truth_table(GateSpec{GateKind::Cnot, 1}));
    CHECK(text.find("|V,l0,gh> -> |V,l0,gv>  phase=1+0i") != std::string::npos);
    CHECK(text.find("# bijective=yes target=yes common_phase=1+0i") != std::string::npos);
}
