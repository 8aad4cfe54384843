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

#include "lgs/state.hpp"

namespace lgs {

/// Atom-cavity rates, all as ratios to a reference coupling g.
struct CavityParams {
    double kappa_over_g = 1.0;  // cavity damping
    double gamma_over_g = 0.0;  // spontaneous emission of |e>
    double eta_h_over_g = 1.0;  // g_h <-> e coupling (H mode)
    double eta_v_over_g = 1.0;  // g_v <-> e coupling (V mode)
    double omega_over_g = 0.0;  // photon detuning

    /// Throws InvalidArgument unless kappa > 0, gamma >= 0, eta >= 0 and all finite.
    void validate() const;
};

/// Reflection coefficients of one photon bouncing off the cavity.
///   r0:  cold cavity (photon does not couple to the atom's ground state)
///   rh1: hot cavity, photon and atom unchanged
///   rh2: hot cavity, photon and atom both flipped
struct ScatterCoeffs {
    Amplitude r0;
    Amplitude rh1;
    Amplitude rh2;
};

/// r0 = (2i w - kappa) / (2i w + kappa).
Amplitude cold_coeff(const CavityParams &p);

struct HotCoeffs {
    Amplitude rh1;
    Amplitude rh2;
};

/// Hot-cavity pair for an incoming photon of polarization `k` meeting the atom
/// in the matching ground state. With A = i w + kappa/2, G = i w + gamma/2,
/// D = eta_k^2 + eta_kbar^2 + A G:
///   rh1 = [(i w - kappa/2) + kappa eta_k^2 / D] / A
///   rh2 = kappa eta_k eta_kbar / (A D)
/// Throws ZeroCoupling when eta_h = eta_v = 0.
HotCoeffs hot_coeffs(const CavityParams &p, Polarization k = Polarization::H);

/// All three coefficients for polarization `k`; rh1 = r0, rh2 = 0 when both
/// couplings vanish.
ScatterCoeffs scatter_coeffs(const CavityParams &p, Polarization k = Polarization::H);

/// Lossless limit: |H,g_h> -> |V,g_v>, |H,g_v> -> -|H,g_v>,
/// |V,g_h> -> -|V,g_h>, |V,g_v> -> |H,g_h>, for terms on `line`.
HybridState scatter_ideal(const HybridState &s, Line line, std::size_t atom_index);

/// Lossy bounce:
///   |H,g_h> -> rh1 |H,g_h> + rh2 |V,g_v>,   |H,g_v> -> r0 |H,g_v>,
///   |V,g_h> -> r0 |V,g_h>,                  |V,g_v> -> rh2 |H,g_h> + rh1 |V,g_v>.
/// The output may be sub-normalized; the deficit is the loss probability.
HybridState scatter_real(const HybridState &s, Line line, std::size_t atom_index, const CavityParams &p);

}  // namespace lgs
