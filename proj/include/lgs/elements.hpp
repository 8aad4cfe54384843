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

#include <optional>

#include "lgs/state.hpp"

namespace lgs {

/// Half-wave plate orientations used by the gates:
/// 0 deg = sigma_z, 45 deg = sigma_x, 90 deg = -sigma_z.
enum class HwpAngle { Deg0, Deg45, Deg90 };

int hwp_degrees(HwpAngle a);
std::optional<HwpAngle> hwp_from_degrees(int degrees);
PolarizationMatrix hwp_matrix(HwpAngle a);

/// What a merging PBS does with amplitude arriving at a port it would send
/// to its second (unmodeled) exit, i.e. V on the H input or H on the V input.
enum class PortLeakage {
    Reject,    // throw Miswired
    Discard,   // the amplitude leaves the circuit (photon loss)
    Coalesce,  // the amplitude is kept on the output line (polarization-only bookkeeping)
};

/// (H, in) -> (H, h_out), (V, in) -> (V, v_out). Other lines pass through.
HybridState pbs_split(const HybridState &s, Line in, Line h_out, Line v_out);

/// (H, h_in) -> (H, out), (V, v_in) -> (V, out); wrong-port terms per `leak`.
HybridState pbs_merge(const HybridState &s, Line h_in, Line v_in, Line out,
                      PortLeakage leak = PortLeakage::Reject);

HybridState hwp(const HybridState &s, Line line, HwpAngle angle);

/// Mirrors carry no phase in these circuits.
HybridState mirror(const HybridState &s, Line line);

}  // namespace lgs
