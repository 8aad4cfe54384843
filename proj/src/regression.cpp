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

#include "lgs/regression.hpp"

#include <cmath>
#include <cstdio>

namespace lgs {

const std::vector<ReferencePoint> &reference_points() {
    static const std::vector<ReferencePoint> points = {
        {Metric::Fidelity, GateKind::Fredkin, 2.0, 0.2, 0.9988},
        {Metric::Fidelity, GateKind::Fredkin, 1.0, 0.2, 0.9997},
        {Metric::Fidelity, GateKind::Toffoli, 2.0, 0.2, 0.9972},
        {Metric::Fidelity, GateKind::Toffoli, 1.0, 0.2, 0.9993},
        {Metric::Efficiency, GateKind::Cnot, 1.0, 0.2, 0.9518},
        {Metric::Efficiency, GateKind::Cnot, 1.0, 0.1, 0.9755},
        {Metric::Efficiency, GateKind::Fredkin, 1.0, 0.2, 0.9524},
        {Metric::Efficiency, GateKind::Fredkin, 1.0, 0.1, 0.9756},
        {Metric::Efficiency, GateKind::Toffoli, 1.0, 0.2, 0.9304},
        {Metric::Efficiency, GateKind::Toffoli, 1.0, 0.1, 0.9639},
    };
    return points;
}

std::size_t reference_atoms(GateKind g) { return g == GateKind::Cnot ? 1 : 2; }

RegressionReport run_regression(const MetricConfig &cfg, Mode mode, double tolerance) {
    RegressionReport report;
    report.mode = mode;
    report.tolerance = tolerance;

    bool fid_ok[2] = {true, true};
    bool eff_ok[2] = {true, true};
    const FidelityConvention fids[2] = {FidelityConvention::NormalizedOverlap, FidelityConvention::RawOverlap};
    const EfficiencyConvention effs[2] = {EfficiencyConvention::IdealBranch, EfficiencyConvention::OutputNorm};

    for (const ReferencePoint &p : reference_points()) {
        const GateSpec g{p.gate, reference_atoms(p.gate)};
        const Circuit c = build_gate(g);
        const HybridState s0 = initial_state(g, cfg);
        const HybridState ideal = run_circuit(c, s0, RunOptions{Mode::Ideal, {}, PortLeakage::Reject});
        const HybridState actual =
            mode == Mode::Ideal
                ? ideal
                : run_circuit(c, s0,
                              RunOptions{Mode::Real, metric_params(p.kappa_over_g, p.gamma_over_g, cfg), cfg.leakage});
        for (int i = 0; i < 2; ++i) {
            RegressionRow row;
            row.point = p;
            if (p.metric == Metric::Fidelity) {
                row.convention = convention_name(fids[i]);
                row.value = fidelity(actual, ideal, fids[i]);
            } else {
                row.convention = convention_name(effs[i]);
                row.value = efficiency(actual, ideal, effs[i]);
            }
            if (mode == Mode::Ideal) row.point.expected = 1.0;
            row.deviation = row.value - row.point.expected;
            row.pass = std::abs(row.deviation) <= tolerance;
            (p.metric == Metric::Fidelity ? fid_ok : eff_ok)[i] &= row.pass;
            report.rows.push_back(row);
        }
    }
    for (int i = 0; i < 2; ++i) {
        if (fid_ok[i]) report.fidelity_matches.emplace_back(convention_name(fids[i]));
        if (eff_ok[i]) report.efficiency_matches.emplace_back(convention_name(effs[i]));
    }
    return report;
}

std::string RegressionReport::text() const {
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "# mode=%s tolerance=%g\n", mode == Mode::Ideal ? "ideal" : "real", tolerance);
    out += buf;
    std::snprintf(buf, sizeof buf, "%-10s %-8s %6s %6s %-18s %9s %9s %10s %s\n", "metric", "gate", "kappa", "gamma",
                  "convention", "expected", "value", "deviation", "result");
    out += buf;
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof buf, "%-10s %-8s %6.3g %6.3g %-18s %9.4f %9.5f %+10.5f %s\n",
                      metric_name(r.point.metric), gate_name(r.point.gate), r.point.kappa_over_g,
                      r.point.gamma_over_g, r.convention.c_str(), r.point.expected, r.value, r.deviation,
                      r.pass ? "PASS" : "FAIL");
        out += buf;
    }
    auto list = [](const std::vector<std::string> &v) {
        if (v.empty()) return std::string("none");
        std::string s;
        for (const auto &x : v) s += (s.empty() ? "" : ", ") + x;
        return s;
    };
    out += "# fidelity convention matching all points: " + list(fidelity_matches) + "\n";
    out += "# efficiency convention matching all points: " + list(efficiency_matches) + "\n";
    return out;
}

}  // namespace lgs
