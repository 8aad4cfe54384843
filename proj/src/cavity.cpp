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

#include "lgs/cavity.hpp"

#include <cmath>

#include "lgs/error.hpp"

namespace lgs {

namespace {

constexpr Amplitude kI{0.0, 1.0};

void check_atom(const HybridState &s, std::size_t atom_index) {
    if (atom_index >= s.atom_count()) {
        throw Error(ErrorCode::InvalidArgument, "cavity visit on atom" + std::to_string(atom_index + 1) +
                                                    " but the state has " + std::to_string(s.atom_count()) +
                                                    " atom(s)");
    }
}

}  // namespace

void CavityParams::validate() const {
    auto finite = [](double x) { return std::isfinite(x); };
    if (!finite(kappa_over_g) || !finite(gamma_over_g) || !finite(eta_h_over_g) || !finite(eta_v_over_g) ||
        !finite(omega_over_g)) {
        throw Error(ErrorCode::InvalidArgument, "cavity parameters must be finite");
    }
    if (!(kappa_over_g > 0.0)) throw Error(ErrorCode::InvalidArgument, "kappa/g must be > 0");
    if (gamma_over_g < 0.0) throw Error(ErrorCode::InvalidArgument, "gamma/g must be >= 0");
    if (eta_h_over_g < 0.0 || eta_v_over_g < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "couplings eta/g must be >= 0");
    }
}

Amplitude cold_coeff(const CavityParams &p) {
    p.validate();
    const Amplitude two_i_w = 2.0 * kI * p.omega_over_g;
    return (two_i_w - p.kappa_over_g) / (two_i_w + p.kappa_over_g);
}

HotCoeffs hot_coeffs(const CavityParams &p, Polarization k) {
    p.validate();
    const double eta_k = k == Polarization::H ? p.eta_h_over_g : p.eta_v_over_g;
    const double eta_kbar = k == Polarization::H ? p.eta_v_over_g : p.eta_h_over_g;
    if (eta_k * eta_k + eta_kbar * eta_kbar == 0.0) {
        throw Error(ErrorCode::ZeroCoupling, "hot-cavity coefficients need a nonzero coupling; use cold_coeff");
    }
    const double kappa = p.kappa_over_g;
    const Amplitude iw = kI * p.omega_over_g;
    const Amplitude a = iw + kappa / 2.0;
    const Amplitude g = iw + p.gamma_over_g / 2.0;
    const Amplitude d = eta_k * eta_k + eta_kbar * eta_kbar + a * g;
    HotCoeffs out;
    out.rh1 = ((iw - kappa / 2.0) + kappa * eta_k * eta_k / d) / a;
    out.rh2 = kappa * eta_k * eta_kbar / (a * d);
    return out;
}

ScatterCoeffs scatter_coeffs(const CavityParams &p, Polarization k) {
    ScatterCoeffs c;
    c.r0 = cold_coeff(p);
    if (p.eta_h_over_g == 0.0 && p.eta_v_over_g == 0.0) {
        c.rh1 = c.r0;
        c.rh2 = 0.0;
        return c;
    }
    HotCoeffs hot = hot_coeffs(p, k);
    c.rh1 = hot.rh1;
    c.rh2 = hot.rh2;
    return c;
}

HybridState scatter_ideal(const HybridState &s, Line line, std::size_t atom_index) {
    check_atom(s, atom_index);
    HybridState out = s.empty_like();
    for (const auto &[k, a] : s.terms()) {
        if (k.line != line) {
            out.accumulate(k, a);
            continue;
        }
        const AtomGround atom = k.atom(atom_index);
        if (resonant_polarization(atom) == k.pol) {
            out.accumulate(k.with_pol(flipped(k.pol)).with_atom(atom_index, flipped(atom)), a);
        } else {
            out.accumulate(k, -a);
        }
    }
    return out.pruned();
}

HybridState scatter_real(const HybridState &s, Line line, std::size_t atom_index, const CavityParams &p) {
    check_atom(s, atom_index);
    const ScatterCoeffs for_h = scatter_coeffs(p, Polarization::H);
    const ScatterCoeffs for_v = scatter_coeffs(p, Polarization::V);
    HybridState out = s.empty_like();
    for (const auto &[k, a] : s.terms()) {
        if (k.line != line) {
            out.accumulate(k, a);
            continue;
        }
        const AtomGround atom = k.atom(atom_index);
        if (resonant_polarization(atom) == k.pol) {
            const ScatterCoeffs &c = k.pol == Polarization::H ? for_h : for_v;
            out.accumulate(k, c.rh1 * a);
            out.accumulate(k.with_pol(flipped(k.pol)).with_atom(atom_index, flipped(atom)), c.rh2 * a);
        } else {
            out.accumulate(k, for_h.r0 * a);
        }
    }
    return out.pruned();
}

}  // namespace lgs
