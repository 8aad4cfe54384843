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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgs/gates.hpp"

namespace lgs {

enum class FidelityConvention {
    NormalizedOverlap,  // |<ideal|actual>|^2 / <actual|actual>
    RawOverlap,         // |<ideal|actual>|^2
};

enum class EfficiencyConvention {
    IdealBranch,  // |<ideal|actual>|^2: probability of leaving in the intended output
    OutputNorm,   // <actual|actual>
};

enum class Metric { Fidelity, Efficiency };

const char *convention_name(FidelityConvention c);
const char *convention_name(EfficiencyConvention c);
const char *metric_name(Metric m);
std::optional<FidelityConvention> fidelity_convention_from_name(std::string_view s);
std::optional<EfficiencyConvention> efficiency_convention_from_name(std::string_view s);
std::optional<Metric> metric_from_name(std::string_view s);

struct MetricConfig {
    FidelityConvention fidelity = FidelityConvention::NormalizedOverlap;
    EfficiencyConvention efficiency = EfficiencyConvention::IdealBranch;
    /// Unset: every qubit in (|0> + |1>)/sqrt(2).
    std::optional<std::string> initial_state;
    double omega_over_g = 0.0;
    double eta_over_g = 1.0;  // used for both polarizations
    PortLeakage leakage = PortLeakage::Coalesce;
    /// 0: LGS_THREADS if set, otherwise the hardware concurrency.
    std::size_t threads = 0;
};

/// Uniform product state or the parsed literal, checked against the gate's
/// atom count, line l0 and unit norm.
HybridState initial_state(const GateSpec &g, const MetricConfig &cfg);

HybridState ideal_reference(const GateSpec &g, const HybridState &s0);

double fidelity(const HybridState &actual, const HybridState &ideal,
                FidelityConvention c = FidelityConvention::NormalizedOverlap);

double efficiency(const HybridState &actual);
double efficiency(const HybridState &actual, const HybridState &ideal, EfficiencyConvention c);

CavityParams metric_params(double kappa_over_g, double gamma_over_g, const MetricConfig &cfg);

struct GatePoint {
    double fidelity = 0.0;
    double efficiency = 0.0;
};

GatePoint evaluate_gate(const GateSpec &g, double kappa_over_g, double gamma_over_g, const MetricConfig &cfg = {});

struct Range {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t steps = 1;

    /// Inclusive endpoints; one step yields lo only.
    std::vector<double> values() const;
};

/// "lo:hi:steps".
Range parse_range(std::string_view text);

struct SweepRow {
    double kappa_over_g;
    double gamma_over_g;
    double value;
};

struct SweepResult {
    GateSpec gate;
    Metric metric = Metric::Fidelity;
    MetricConfig config;
    Range kappa, gamma;
    std::vector<SweepRow> rows;  // kappa outer, gamma inner
};

/// Thread count actually used for `cfg`.
std::size_t sweep_threads(const MetricConfig &cfg);

SweepResult sweep(const GateSpec &g, Metric metric, const Range &kappa, const Range &gamma,
                  const MetricConfig &cfg = {});

std::string sweep_csv(const SweepResult &r);
std::string sweep_summary_json(const SweepResult &r);

}  // namespace lgs
