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

#include <string>
#include <vector>

#include "lgs/metrics.hpp"

namespace lgs {

// Published fidelity and efficiency values for the three two-atom gates
// (CNOT with one atom) at eta = g, omega = 0.
struct ReferencePoint {
    Metric metric;
    GateKind gate;
    double kappa_over_g;
    double gamma_over_g;
    double expected;
};

const std::vector<ReferencePoint> &reference_points();

/// Atom count the published values refer to.
std::size_t reference_atoms(GateKind g);

struct RegressionRow {
    ReferencePoint point;
    std::string convention;
    double value = 0.0;
    double deviation = 0.0;
    bool pass = false;
};

struct RegressionReport {
    Mode mode = Mode::Real;
    double tolerance = 5e-4;
    std::vector<RegressionRow> rows;
    std::vector<std::string> fidelity_matches;    // conventions passing every fidelity point
    std::vector<std::string> efficiency_matches;  // same for efficiency

    std::string text() const;
};

/// Evaluates every reference point under both fidelity conventions and both
/// efficiency conventions. In Ideal mode the lossless circuit is used as the
/// actual state and every point is checked against 1.
RegressionReport run_regression(const MetricConfig &cfg = {}, Mode mode = Mode::Real, double tolerance = 5e-4);

}  // namespace lgs
