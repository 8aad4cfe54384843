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

#include "lgs/circuit.hpp"

namespace lgs {

enum class GateKind { Cnot, Fredkin, Toffoli };

inline constexpr std::size_t kDefaultMaxAtoms = 12;

const char *gate_name(GateKind k);
std::optional<GateKind> gate_from_name(std::string_view name);

struct GateSpec {
    GateKind kind = GateKind::Cnot;
    std::size_t n = 1;

    /// CNOT needs n >= 1, Fredkin and Toffoli n >= 2; all need n <= max_n.
    void validate(std::size_t max_n = kDefaultMaxAtoms) const;
};

// Cut-point names attached by the builders.
inline constexpr std::string_view kCutFirstBounce = "first_bounce";    // CNOT n=1, Fredkin n=2
inline constexpr std::string_view kCutFlipped = "flipped";             // CNOT n=1: after the HWP45
inline constexpr std::string_view kCutSecondAtom = "second_atom";      // Fredkin n=2: after the atom-2 visit
inline constexpr std::string_view kCutInnerBounce = "inner_bounce";    // Toffoli n=2: after the first atom-2 visit
inline constexpr std::string_view kCutInnerMerged = "inner_merged";    // Toffoli n=2: after the inner recombination

/// Photon V flips every atom. Per atom the V arm runs CAV, HWP45, CAV; an
/// HWP0 in front of the chain fixes the sign when n is odd.
Circuit build_cnot(std::size_t n, std::size_t max_n = kDefaultMaxAtoms);

/// Photon V swaps atoms n-1 and n, conditioned for n > 2 on atoms 1..n-2
/// being g_v.
Circuit build_fredkin(std::size_t n, std::size_t max_n = kDefaultMaxAtoms);

/// Photon V flips atom n when atoms 1..n-1 are all g_v.
Circuit build_toffoli(std::size_t n, std::size_t max_n = kDefaultMaxAtoms);

Circuit build_gate(const GateSpec &g, std::size_t max_n = kDefaultMaxAtoms);

/// The permutation the gate should implement on a basis ket.
BasisKet gate_target(const GateSpec &g, const BasisKet &in);

ElementCounts element_count(const GateSpec &g);

struct TruthRow {
    BasisKet input;
    HybridState output;
    BasisKet mapped;          // largest-amplitude output ket
    Amplitude phase;          // amplitude of `mapped`
    bool single_ket = false;  // every other amplitude below tolerance
    BasisKet expected;
};

struct TruthTable {
    GateSpec gate;
    Mode mode = Mode::Ideal;
    std::vector<TruthRow> rows;
    bool bijective = false;       // every row single-ket and no ket hit twice
    bool matches_target = false;  // mapped == expected on every row
    std::optional<Amplitude> common_phase;  // set when all rows share one unit phase
};

inline constexpr std::size_t kDefaultTruthTableLimit = std::size_t{1} << 13;

/// Runs every computational-basis input (photon on l0). Throws LimitExceeded
/// when 2^(n+1) exceeds `row_limit`.
TruthTable truth_table(const GateSpec &g, const RunOptions &opts = {},
                       std::size_t row_limit = kDefaultTruthTableLimit, double tol = 1e-12);

/// One row per input: `input -> mapped  phase=<amp>` plus a verdict footer.
std::string format_truth_table(const TruthTable &t);

}  // namespace lgs
