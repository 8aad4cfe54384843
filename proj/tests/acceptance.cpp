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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lgs/cavity.hpp"
#include "lgs/gates.hpp"
#include "lgs/metrics.hpp"
#include "lgs/pulse.hpp"
#include "lgs/regression.hpp"
#include "oracles.hpp"

using namespace lgs;
using lgs::testing::C;
using lgs::testing::Coefficients;
using lgs::testing::Gen;

namespace {

struct Outcome {
    bool pass = false;
    std::string summary;
    std::vector<std::string> details;
};

std::string fmt(const char *format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

const Range kDefaultKappa{0.2, 2.0, 30};
const Range kDefaultGamma{0.01, 0.2, 30};
constexpr GateKind kGates[] = {GateKind::Cnot, GateKind::Fredkin, GateKind::Toffoli};

// Criteria 1 and 2: published points under each convention; one convention
// has to match every point.
template <typename Convention>
Outcome regression(Metric metric, const std::vector<Convention> &conventions) {
    Outcome o;
    std::vector<bool> ok(conventions.size(), true);
    for (const ReferencePoint &p : reference_points()) {
        if (p.metric != metric) continue;
        std::string line = fmt("%-8s kappa=%.1f gamma=%.1f expected=%.4f", gate_name(p.gate), p.kappa_over_g,
                               p.gamma_over_g, p.expected);
        for (std::size_t i = 0; i < conventions.size(); ++i) {
            MetricConfig cfg;
            if constexpr (std::is_same_v<Convention, FidelityConvention>) {
                cfg.fidelity = conventions[i];
            } else {
                cfg.efficiency = conventions[i];
            }
            const GatePoint v =
                evaluate_gate(GateSpec{p.gate, reference_atoms(p.gate)}, p.kappa_over_g, p.gamma_over_g, cfg);
            const double value = metric == Metric::Fidelity ? v.fidelity : v.efficiency;
            const bool pass = std::abs(value - p.expected) <= 5e-4;
            ok[i] = ok[i] && pass;
            line += fmt("  %s=%.5f%s", convention_name(conventions[i]), value, pass ? "" : "(x)");
        }
        o.details.push_back(line);
    }
    std::string matching;
    for (std::size_t i = 0; i < conventions.size(); ++i) {
        if (ok[i]) matching += (matching.empty() ? "" : ", ") + std::string(convention_name(conventions[i]));
    }
    o.pass = !matching.empty();
    o.summary = fmt("%s points within 5e-4 under one convention (matching: %s)", metric_name(metric),
                    matching.empty() ? "none" : matching.c_str());
    return o;
}

Outcome criterion1() {
    return regression(Metric::Fidelity,
                      std::vector<FidelityConvention>{FidelityConvention::NormalizedOverlap,
                                                      FidelityConvention::RawOverlap});
}

Outcome criterion2() {
    return regression(Metric::Efficiency,
                      std::vector<EfficiencyConvention>{EfficiencyConvention::IdealBranch,
                                                        EfficiencyConvention::OutputNorm});
}

Outcome criterion3() {
    Outcome o;
    const SweepResult r = sweep(GateSpec{GateKind::Cnot, 1}, Metric::Fidelity, kDefaultKappa, kDefaultGamma);
    double worst = 2.0;
    for (const auto &row : r.rows) worst = std::min(worst, row.value);
    o.pass = r.rows.size() == 900 && worst >= 0.99;
    o.summary = fmt("CNOT fidelity >= 0.99 on the 30x30 grid (min %.12f over %zu nodes)", worst, r.rows.size());
    return o;
}

std::uint64_t oracle_target(GateKind k, bool v, std::uint64_t atoms, std::size_t n) {
    switch (k) {
        case GateKind::Cnot: return testing::cnot_target(v, atoms, n);
        case GateKind::Fredkin: return testing::fredkin_target(v, atoms, n);
        case GateKind::Toffoli: return testing::toffoli_target(v, atoms, n);
    }
    return atoms;
}

Outcome criterion4() {
    Outcome o;
    o.pass = true;
    std::size_t tables = 0, rows = 0;
    for (GateKind kind : kGates) {
        for (std::size_t n = kind == GateKind::Cnot ? 1 : 2; n <= 6; ++n) {
            const TruthTable t = truth_table(GateSpec{kind, n});
            bool ok = t.bijective && t.common_phase.has_value() && t.rows.size() == (std::size_t{1} << (n + 1));
            for (const TruthRow &r : t.rows) {
                const bool v = r.input.pol == Polarization::V;
                ok = ok && r.single_ket && r.mapped.line == Line{0} && r.mapped.pol == r.input.pol &&
                     r.mapped.atoms == oracle_target(kind, v, r.input.atoms, n);
            }
            ++tables;
            rows += t.rows.size();
            if (!ok) {
                o.pass = false;
                o.details.push_back(fmt("%s n=%zu is not the target permutation", gate_name(kind), n));
            } else if (n == 6 || n == (kind == GateKind::Cnot ? 1u : 2u)) {
                o.details.push_back(fmt("%s n=%zu: %zu rows, bijective, common phase %.0f%+.0fi", gate_name(kind), n,
                                        t.rows.size(), t.common_phase->real(), t.common_phase->imag()));
            }
        }
    }
    o.summary = fmt("ideal truth tables equal the target permutations up to one phase (%zu tables, %zu rows)",
                    tables, rows);
    return o;
}

HybridState symbolic_input(const Coefficients &c, std::size_t atoms) {
    std::vector<QubitCoeffs> q{{c.z1, c.z2}};
    if (atoms > 1) q.emplace_back(c.e1, c.e2);
    return make_product_state({c.a1, c.a2}, Line{0}, q);
}

Outcome criterion5() {
    struct Check {
        const char *label;
        const Circuit circuit;
        std::string_view cut;
        std::size_t atoms;
        std::function<HybridState(const Coefficients &)> expected;
    };
    const std::vector<Check> checks = {
        {"cnot first_bounce", build_cnot(1), kCutFirstBounce, 1, testing::cnot_first_bounce},
        {"cnot flipped", build_cnot(1), kCutFlipped, 1, testing::cnot_flipped},
        {"fredkin first_bounce", build_fredkin(2), kCutFirstBounce, 2, testing::fredkin_first_bounce},
        {"fredkin second_atom", build_fredkin(2), kCutSecondAtom, 2, testing::fredkin_second_atom},
        {"toffoli inner_bounce", build_toffoli(2), kCutInnerBounce, 2, testing::toffoli_inner_bounce_published},
        {"toffoli inner_merged", build_toffoli(2), kCutInnerMerged, 2, testing::toffoli_inner_merged},
    };
    Gen g(2026);
    std::vector<Coefficients> sets;
    for (int i = 0; i < 5; ++i) sets.push_back(Coefficients::random(g));

    Outcome o;
    o.pass = true;
    std::string failing;
    double worst = 0.0;
    for (const Check &c : checks) {
        double dev = 0.0;
        for (const Coefficients &s : sets) {
            const HybridState got = run_to_cut(c.circuit, symbolic_input(s, c.atoms), c.cut);
            dev = std::max(dev, testing::max_deviation(got, c.expected(s)));
        }
        worst = std::max(worst, dev);
        const bool pass = dev < 1e-12;
        if (!pass) {
            o.pass = false;
            failing += (failing.empty() ? "" : ", ") + std::string(c.label);
        }
        o.details.push_back(fmt("%-22s max deviation %.3e %s", c.label, dev, pass ? "ok" : "MISMATCH"));
    }
    double exchanged = 0.0;
    for (const Coefficients &s : sets) {
        const HybridState got = run_to_cut(build_toffoli(2), symbolic_input(s, 2), kCutInnerBounce);
        exchanged = std::max(exchanged, testing::max_deviation(got, testing::toffoli_inner_bounce_exchanged(s)));
    }
    o.details.push_back(fmt("toffoli inner_bounce against the reference with atom-2 coefficients exchanged on l3: "
                            "max deviation %.3e",
                            exchanged));
    o.summary = fmt("cut-point states equal the reference expressions for %zu random coefficient sets "
                    "(worst %.3e; failing: %s)",
                    sets.size(), worst, failing.empty() ? "none" : failing.c_str());
    return o;
}

Outcome criterion6() {
    Outcome o;
    o.pass = true;
    double worst = 0.0;
    for (double kappa : {1.0, 5.0, 10.0}) {
        for (double gamma : {0.0, 0.1, 0.2}) {
            CavityParams p;
            p.kappa_over_g = kappa;
            p.gamma_over_g = gamma;
            PulseConfig cfg;
            cfg.sigma_over_g = 0.01 * kappa;
            const ScatterCoeffs exact = scatter_coeffs(p);
            const ScatterCoeffs got = extract_coefficients(p, cfg, CoeffEstimator::CarrierRatio);
            const double d = std::max({std::abs(got.r0 - exact.r0), std::abs(got.rh1 - exact.rh1),
                                       std::abs(got.rh2 - exact.rh2)});
            worst = std::max(worst, d);
            if (d >= 1e-3) o.pass = false;
            o.details.push_back(fmt("kappa=%-4.0f gamma=%.1f  r0=%+.6f%+.6fi rh1=%+.6f%+.6fi rh2=%+.6f%+.6fi  "
                                    "max |diff| %.2e",
                                    kappa, gamma, got.r0.real(), got.r0.imag(), got.rh1.real(), got.rh1.imag(),
                                    got.rh2.real(), got.rh2.imag(), d));
        }
    }
    o.summary = fmt("time-domain pulse reproduces (r0, rh1, rh2) within 1e-3 on 9 parameter sets (worst %.2e)",
                    worst);
    return o;
}

Outcome criterion7() {
    Gen g(7);
    double lossless = 0.0;
    for (int i = 0; i < 1000; ++i) {
        CavityParams p;
        p.kappa_over_g = g.uniform(0.05, 20.0);
        p.gamma_over_g = 0.0;
        p.eta_h_over_g = g.uniform(0.1, 3.0);
        p.eta_v_over_g = g.uniform(0.1, 3.0);
        p.omega_over_g = g.uniform(-10.0, 10.0);
        const HotCoeffs h = hot_coeffs(p);
        lossless = std::max(lossless, std::abs(std::norm(h.rh1) + std::norm(h.rh2) - 1.0));
    }
    double limit = 0.0;
    for (double kappa : {0.5, 1.0, 2.0}) {
        CavityParams p;
        p.kappa_over_g = kappa;
        p.gamma_over_g = 1e-8 / kappa;  // kappa gamma / eta^2 = 1e-8
        for (int i = 0; i < 20; ++i) {
            const HybridState s = g.state(2, 2, 16);
            const std::size_t atom = g.index(2);
            limit = std::max(limit, testing::max_deviation(scatter_real(s, Line{1}, atom, p),
                                                           scatter_ideal(s, Line{1}, atom)));
        }
    }
    double cold = 0.0;
    for (int i = 0; i < 100; ++i) {
        CavityParams p;
        p.kappa_over_g = g.uniform(0.05, 20.0);
        p.omega_over_g = g.uniform(-50.0, 50.0);
        cold = std::max(cold, std::abs(std::abs(cold_coeff(p)) - 1.0));
    }
    Outcome o;
    o.pass = lossless <= 1e-12 && limit < 1e-3 && cold <= 1e-12;
    o.summary = fmt("limit properties (lossless |rh1|^2+|rh2|^2-1: %.1e; weak-loss vs ideal: %.1e; ||r0|-1|: %.1e)",
                    lossless, limit, cold);
    return o;
}

Outcome criterion8() {
    Outcome o;
    o.pass = true;
    for (std::size_t n = 2; n <= 12; ++n) {
        const ElementCounts c = element_count(GateSpec{GateKind::Cnot, n});
        const ElementCounts f = element_count(GateSpec{GateKind::Fredkin, n});
        const ElementCounts t = element_count(GateSpec{GateKind::Toffoli, n});
        const bool cnot_ok = c.pbs == 2 && c.hwp45 == n && c.hwp0 == n % 2 && c.hwp90 == 0;
        const bool fredkin_ok = f.pbs == n && f.hwp() == 1 && (n == 2 ? f.hwp0 : f.hwp90) == 1;
        const bool toffoli_ok = t.pbs == n + 1 && t.hwp90 == 1 && t.hwp45 == 1 && t.hwp0 == 0;
        if (!(cnot_ok && fredkin_ok && toffoli_ok)) {
            o.pass = false;
            o.details.push_back(fmt("n=%zu: cnot %s, fredkin %s, toffoli %s", n, cnot_ok ? "ok" : "MISMATCH",
                                    fredkin_ok ? "ok" : "MISMATCH", toffoli_ok ? "ok" : "MISMATCH"));
        }
    }
    const ElementCounts c12 = element_count(GateSpec{GateKind::Cnot, 12});
    const ElementCounts f12 = element_count(GateSpec{GateKind::Fredkin, 12});
    const ElementCounts t12 = element_count(GateSpec{GateKind::Toffoli, 12});
    o.details.push_back(fmt("n=12: cnot %zu PBS %zu HWP45 %zu HWP0; fredkin %zu PBS %zu HWP90; toffoli %zu PBS "
                            "%zu HWP90 %zu HWP45",
                            c12.pbs, c12.hwp45, c12.hwp0, f12.pbs, f12.hwp90, t12.pbs, t12.hwp90, t12.hwp45));
    o.summary = "element inventories for n=2..12 (fredkin n=2 carries the single HWP0 of its two-atom layout "
                "in place of the HWP90)";
    return o;
}

Outcome criterion9() {
    Outcome o;
    o.pass = true;
    std::size_t bytes = 0;
    for (GateKind kind : kGates) {
        for (Metric m : {Metric::Fidelity, Metric::Efficiency}) {
            const GateSpec g{kind, reference_atoms(kind)};
            const std::string a = sweep_csv(sweep(g, m, kDefaultKappa, kDefaultGamma));
            const std::string b = sweep_csv(sweep(g, m, kDefaultKappa, kDefaultGamma));
            bytes += a.size();
            if (a != b) {
                o.pass = false;
                o.details.push_back(fmt("%s %s differs between runs", gate_name(kind), metric_name(m)));
            }
        }
    }
    o.summary = fmt("repeated sweeps give byte-identical CSV (6 sweep pairs, %zu bytes each side, thread count %zu)",
                    bytes, sweep_threads({}));
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<double, Outcome (*)()>> criteria = {
        {1.0, criterion1}, {1.0, criterion2},  {10.0, criterion3}, {5.0, criterion4}, {0.0, criterion5},
        {30.0, criterion6}, {0.0, criterion7}, {0.0, criterion8},  {0.0, criterion9},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto [limit, fn] = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception &e) {
            o.pass = false;
            o.summary = std::string("raised: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string timing = fmt("%.3f s", secs);
        if (limit > 0.0) {
            timing += fmt(" / limit %.0f s", limit);
            if (secs >= limit) {
                o.pass = false;
                o.summary += " [too slow]";
            }
        }
        std::printf("[%s] criterion %zu: %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, o.summary.c_str(),
                    timing.c_str());
        for (const auto &d : o.details) std::printf("         %s\n", d.c_str());
        if (!o.pass) ++failures;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
