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
#include <string>
#include <vector>

#include "lgs/cavity.hpp"

namespace lgs {

// Time-domain oracle for the reflection coefficients. Integrates
//
//   d/dt a_k    = -eta_k b - sqrt(kappa) in(t) - kappa/2 a_k
//   d/dt a_kbar = -eta_kbar b              - kappa/2 a_kbar
//   d/dt b      =  eta_k a_k + eta_kbar a_kbar - gamma/2 b
//   out_k = in + sqrt(kappa) a_k,   out_kbar = sqrt(kappa) a_kbar
//
// with classical RK4 on a uniform grid, where k is the incoming polarization,
// a_* are the cavity-mode amplitudes and b the excited-state amplitude. The
// couplings are switched off when the atom's ground state does not match k
// (cold cavity). The input carrier is exp(+i w t); with that convention the
// signs above reproduce the closed-form coefficients of `hot_coeffs` and
// `cold_coeff` exactly in the monochromatic limit.

struct PulseConfig {
    double sigma_over_g = 0.01;  // spectral width of the Gaussian envelope; temporal width is 1/sigma
    double dt = 0.0;             // 0 selects 0.001 / kappa
    double half_window = 8.0;    // integrate over +-half_window temporal widths ...
    double tail_decays = 30.0;   // ... plus this many slowest-decay times after the pulse
    std::size_t max_samples = 4001;  // recorded samples (integrals always use every step)
    double instability_limit = 2.0;  // abort when internal energy exceeds this (input energy is 1)
};

struct PulseResult {
    CavityParams params;
    AtomGround atom = AtomGround::Gh;
    Polarization pol = Polarization::H;
    double dt = 0.0;
    std::size_t steps = 0;

    // Recorded every `stride` steps.
    std::size_t stride = 1;
    std::vector<double> t;
    std::vector<Amplitude> in, out_h, out_v;

    double input_energy = 0.0;
    double output_energy = 0.0;

    // Output component that keeps the photon polarization ("same") or flips it
    // together with the atom ("flipped").
    Amplitude mode_overlap_same, mode_overlap_flipped;  // <in|out> / <in|in>
    Amplitude carrier_same, carrier_flipped;            // out(w) / in(w) at the carrier

    Amplitude final_cavity_h, final_cavity_v, final_excited;
};

/// Unit-energy Gaussian envelope of temporal width 1/sigma centred at t = 0.
double gaussian_envelope(double t, double sigma);

/// Throws Unstable when the internal amplitudes blow up (dt too large).
PulseResult integrate_pulse(const CavityParams &p, AtomGround atom, Polarization pol, const PulseConfig &cfg = {});

enum class CoeffEstimator { CarrierRatio, ModeOverlap };

/// Runs a hot (H on g_h) and a cold (H on g_v) integration and reads off
/// (r0, rh1, rh2).
ScatterCoeffs extract_coefficients(const CavityParams &p, const PulseConfig &cfg = {},
                                   CoeffEstimator est = CoeffEstimator::CarrierRatio);

std::string pulse_csv(const PulseResult &r);

/// Run summary plus effective coefficients from both estimators and the
/// closed-form values. `cold` may be null, in which case r0 is omitted.
std::string pulse_summary_json(const PulseResult &hot, const PulseResult *cold);

}  // namespace lgs
