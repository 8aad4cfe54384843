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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lgs/cavity.hpp"
#include "lgs/elements.hpp"
#include "lgs/state.hpp"

namespace lgs {

// `device` numbers the physical beam splitter, so a PBS used once to split and
// once to merge (as in the Toffoli inner loop) counts as one element.
struct PbsSplit {
    Line in, h_out, v_out;
    int device = 0;
};
struct PbsMerge {
    Line h_in, v_in, out;
    int device = 0;
};
struct HwpStep {
    Line line;
    HwpAngle angle;
};
struct MirrorStep {
    Line line;
};
struct CavityVisit {
    Line line;
    std::size_t atom = 0;  // zero-based
};

using ElementStep = std::variant<PbsSplit, PbsMerge, HwpStep, MirrorStep, CavityVisit>;

struct Circuit {
    std::string name;
    std::size_t atom_count = 0;
    Line input{0};
    Line output{0};
    std::vector<ElementStep> steps;
    /// Named states inside the circuit: the value is the number of leading
    /// steps to run.
    std::map<std::string, std::size_t> cut_points;

    /// Lines in first-use order.
    std::vector<Line> lines() const;
};

/// Throws InvalidArgument unless every step reads a line that is live at that
/// point, every atom index is < atom_count and the photon ends on `output`.
void validate(const Circuit &c);

struct ElementCounts {
    std::size_t pbs = 0;  // physical devices
    std::size_t pbs_splits = 0;
    std::size_t pbs_merges = 0;
    std::size_t hwp0 = 0;
    std::size_t hwp45 = 0;
    std::size_t hwp90 = 0;
    std::size_t mirrors = 0;
    std::size_t cavities = 0;  // distinct atoms visited
    std::size_t cavity_visits = 0;

    std::size_t hwp() const { return hwp0 + hwp45 + hwp90; }
    /// PBS devices + wave plates + mirrors + cavities.
    std::size_t optical_elements() const { return pbs + hwp() + mirrors + cavities; }
};

ElementCounts count_elements(const Circuit &c);

enum class Mode { Ideal, Real };

struct RunOptions {
    Mode mode = Mode::Ideal;
    CavityParams cavity{};
    /// Unset: Reject in Ideal mode, Discard in Real mode.
    std::optional<PortLeakage> leakage;

    PortLeakage effective_leakage() const {
        return leakage.value_or(mode == Mode::Ideal ? PortLeakage::Reject : PortLeakage::Discard);
    }
};

HybridState apply_step(const ElementStep &step, const HybridState &s, const RunOptions &opts);

/// Folds steps [0, step_count) over `s`; `s` must live on the input line and
/// carry the circuit's atom count.
HybridState run_circuit(const Circuit &c, const HybridState &s, const RunOptions &opts = {},
                        std::optional<std::size_t> step_count = std::nullopt);

/// State at a named cut point.
HybridState run_to_cut(const Circuit &c, const HybridState &s, std::string_view cut, const RunOptions &opts = {});

// Text format, one step per line:
//   PBS split l0 -> l1 l2      PBS merge l1 l2 -> l0
//   HWP 45 l2                  MIRROR l4                 CAV l2 atom1
// `#` starts a comment; a trailing `# PBS<k>` comment on a PBS line names the
// physical device. Atom count is the largest atom referenced unless an
// `ATOMS <n>` line is present.
std::string format_circuit(const Circuit &c);
Circuit parse_circuit(std::string_view text);

std::string format_step(const ElementStep &step);

}  // namespace lgs
