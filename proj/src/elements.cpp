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

#include "lgs/elements.hpp"

#include "lgs/error.hpp"
#include "lgs/literal.hpp"

namespace lgs {

int hwp_degrees(HwpAngle a) {
    switch (a) {
        case HwpAngle::Deg0: return 0;
        case HwpAngle::Deg45: return 45;
        case HwpAngle::Deg90: return 90;
    }
    return 0;
}

std::optional<HwpAngle> hwp_from_degrees(int degrees) {
    switch (degrees) {
        case 0: return HwpAngle::Deg0;
        case 45: return HwpAngle::Deg45;
        case 90: return HwpAngle::Deg90;
        default: return std::nullopt;
    }
}

PolarizationMatrix hwp_matrix(HwpAngle a) {
    switch (a) {
        case HwpAngle::Deg0: return {1.0, 0.0, 0.0, -1.0};
        case HwpAngle::Deg45: return {0.0, 1.0, 1.0, 0.0};
        case HwpAngle::Deg90: return {-1.0, 0.0, 0.0, 1.0};
    }
    return {1.0, 0.0, 0.0, 1.0};
}

HybridState pbs_split(const HybridState &s, Line in, Line h_out, Line v_out) {
    if (h_out == v_out) {
        throw Error(ErrorCode::InvalidArgument, "PBS split needs distinct output lines");
    }
    HybridState out = s.empty_like();
    for (const auto &[k, a] : s.terms()) {
        if (k.line != in) {
            out.accumulate(k, a);
        } else {
            out.accumulate(k.on_line(k.pol == Polarization::H ? h_out : v_out), a);
        }
    }
    return out.pruned();
}

HybridState pbs_merge(const HybridState &s, Line h_in, Line v_in, Line out, PortLeakage leak) {
    if (h_in == v_in) {
        throw Error(ErrorCode::InvalidArgument, "PBS merge needs distinct input lines");
    }
    HybridState result = s.empty_like();
    for (const auto &[k, a] : s.terms()) {
        const bool on_h = k.line == h_in;
        const bool on_v = k.line == v_in;
        if (!on_h && !on_v) {
            result.accumulate(k, a);
            continue;
        }
        const bool legal = (on_h && k.pol == Polarization::H) || (on_v && k.pol == Polarization::V);
        if (legal || leak == PortLeakage::Coalesce) {
            result.accumulate(k.on_line(out), a);
        } else if (leak == PortLeakage::Reject) {
            throw Error(ErrorCode::Miswired, "PBS merge l" + std::to_string(h_in.id) + " l" +
                                                 std::to_string(v_in.id) + " -> l" + std::to_string(out.id) +
                                                 " received " + format_ket(k, s.atom_count()) +
                                                 " at a port it would not route to l" + std::to_string(out.id));
        }
        // Discard: the term exits through the unmodeled port.
    }
    return result.pruned();
}

HybridState hwp(const HybridState &s, Line line, HwpAngle angle) {
    return apply_polarization_map(s, line, hwp_matrix(angle));
}

HybridState mirror(const HybridState &s, Line) { return s; }

}  // namespace lgs
