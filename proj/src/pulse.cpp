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

#include "lgs/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "lgs/error.hpp"

namespace lgs {

namespace {

constexpr Amplitude kI{0.0, 1.0};

struct Internal {
    Amplitude a_same, a_flip, b;

    Internal operator+(const Internal &o) const { return {a_same + o.a_same, a_flip + o.a_flip, b + o.b}; }
    Internal operator*(double s) const { return {a_same * s, a_flip * s, b * s}; }
    double energy() const { return std::norm(a_same) + std::norm(a_flip) + std::norm(b); }
};

struct Rates {
    double half_kappa, sqrt_kappa, half_gamma, eta_same, eta_flip;
};

Internal derivative(const Internal &x, Amplitude in, const Rates &r) {
    return {-r.eta_same * x.b - r.sqrt_kappa * in - r.half_kappa * x.a_same,
            -r.eta_flip * x.b - r.half_kappa * x.a_flip,
            r.eta_same * x.a_same + r.eta_flip * x.a_flip - r.half_gamma * x.b};
}

// Slowest decay rate of the linear system, used to size the tail.
double slowest_decay(const Rates &r) {
    const double kappa = 2.0 * r.half_kappa;
    const double gamma = 2.0 * r.half_gamma;
    const double s = r.eta_same * r.eta_same + r.eta_flip * r.eta_flip;
    double slowest = r.half_kappa;
    if (s > 0.0) {
        const double centre = (kappa + gamma) / 4.0;
        const double disc = std::pow((kappa - gamma) / 4.0, 2) - s;
        slowest = std::min(slowest, disc >= 0.0 ? centre - std::sqrt(disc) : centre);
    }
    return slowest;
}

nlohmann::json complex_json(Amplitude a) { return {{"re", a.real()}, {"im", a.imag()}}; }

}  // namespace

double gaussian_envelope(double t, double sigma) {
    const double tau = 1.0 / sigma;
    return std::pow(std::numbers::pi * tau * tau, -0.25) * std::exp(-t * t / (2.0 * tau * tau));
}

PulseResult integrate_pulse(const CavityParams &p, AtomGround atom, Polarization pol, const PulseConfig &cfg) {
    p.validate();
    if (!(cfg.sigma_over_g > 0.0) || !std::isfinite(cfg.sigma_over_g)) {
        throw Error(ErrorCode::InvalidArgument, "pulse bandwidth sigma must be > 0");
    }
    if (cfg.dt < 0.0 || !(cfg.half_window > 0.0) || cfg.tail_decays < 0.0 || cfg.max_samples < 2) {
        throw Error(ErrorCode::InvalidArgument, "invalid pulse integration settings");
    }

    const bool hot = resonant_polarization(atom) == pol;
    const double eta_pol = pol == Polarization::H ? p.eta_h_over_g : p.eta_v_over_g;
    const double eta_other = pol == Polarization::H ? p.eta_v_over_g : p.eta_h_over_g;
    const Rates rates{p.kappa_over_g / 2.0, std::sqrt(p.kappa_over_g), p.gamma_over_g / 2.0, hot ? eta_pol : 0.0,
                      hot ? eta_other : 0.0};

    PulseResult r;
    r.params = p;
    r.atom = atom;
    r.pol = pol;
    r.dt = cfg.dt > 0.0 ? cfg.dt : 1e-3 / p.kappa_over_g;

    const double tau = 1.0 / cfg.sigma_over_g;
    const double t_start = -cfg.half_window * tau;
    const double t_end = cfg.half_window * tau + cfg.tail_decays / slowest_decay(rates);
    const double span = t_end - t_start;
    if (span / r.dt > 5e8) {
        throw Error(ErrorCode::InvalidArgument, "pulse integration would need more than 5e8 steps");
    }
    r.steps = static_cast<std::size_t>(std::ceil(span / r.dt));
    r.stride = std::max<std::size_t>(1, (r.steps + cfg.max_samples - 2) / (cfg.max_samples - 1));

    const double omega = p.omega_over_g;
    auto input = [&](double t) { return gaussian_envelope(t, cfg.sigma_over_g) * std::exp(kI * omega * t); };

    Internal x{};
    Amplitude overlap_same{}, overlap_flip{}, carrier_in{}, carrier_same{}, carrier_flip{};
    double e_in = 0.0, e_out = 0.0;

    for (std::size_t n = 0; n <= r.steps; ++n) {
        const double t = t_start + static_cast<double>(n) * r.dt;
        const Amplitude in = input(t);
        const Amplitude out_same = in + rates.sqrt_kappa * x.a_same;
        const Amplitude out_flip = rates.sqrt_kappa * x.a_flip;

        const double w = (n == 0 || n == r.steps) ? 0.5 * r.dt : r.dt;
        const Amplitude demod = std::exp(-kI * omega * t);
        e_in += w * std::norm(in);
        e_out += w * (std::norm(out_same) + std::norm(out_flip));
        overlap_same += w * std::conj(in) * out_same;
        overlap_flip += w * std::conj(in) * out_flip;
        carrier_in += w * in * demod;
        carrier_same += w * out_same * demod;
        carrier_flip += w * out_flip * demod;

        if (n % r.stride == 0 || n == r.steps) {
            r.t.push_back(t);
            r.in.push_back(in);
            r.out_h.push_back(pol == Polarization::H ? out_same : out_flip);
            r.out_v.push_back(pol == Polarization::H ? out_flip : out_same);
        }
        if (n == r.steps) break;

        const Amplitude in_mid = input(t + 0.5 * r.dt);
        const Amplitude in_next = input(t + r.dt);
        const Internal k1 = derivative(x, in, rates);
        const Internal k2 = derivative(x + k1 * (0.5 * r.dt), in_mid, rates);
        const Internal k3 = derivative(x + k2 * (0.5 * r.dt), in_mid, rates);
        const Internal k4 = derivative(x + k3 * r.dt, in_next, rates);
        x = x + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (r.dt / 6.0);

        const double internal = x.energy();
        if (!std::isfinite(internal) || internal > cfg.instability_limit) {
            std::ostringstream msg;
            msg << "pulse integration unstable at t=" << t << " (internal energy " << internal
                << "); reduce dt (now " << r.dt << ", kappa*dt=" << p.kappa_over_g * r.dt << ")";
            throw Error(ErrorCode::Unstable, msg.str());
        }
    }

    r.input_energy = e_in;
    r.output_energy = e_out;
    r.mode_overlap_same = overlap_same / e_in;
    r.mode_overlap_flipped = overlap_flip / e_in;
    r.carrier_same = carrier_same / carrier_in;
    r.carrier_flipped = carrier_flip / carrier_in;
    r.final_cavity_h = pol == Polarization::H ? x.a_same : x.a_flip;
    r.final_cavity_v = pol == Polarization::H ? x.a_flip : x.a_same;
    r.final_excited = x.b;
    return r;
}

ScatterCoeffs extract_coefficients(const CavityParams &p, const PulseConfig &cfg, CoeffEstimator est) {
    const PulseResult hot = integrate_pulse(p, AtomGround::Gh, Polarization::H, cfg);
    const PulseResult cold = integrate_pulse(p, AtomGround::Gv, Polarization::H, cfg);
    if (est == CoeffEstimator::CarrierRatio) {
        return {cold.carrier_same, hot.carrier_same, hot.carrier_flipped};
    }
    return {cold.mode_overlap_same, hot.mode_overlap_same, hot.mode_overlap_flipped};
}

std::string pulse_csv(const PulseResult &r) {
    std::string out = "t,in_re,in_im,out_h_re,out_h_im,out_v_re,out_v_im\n";
    char buf[256];
    // Adding 0.0 turns -0 into 0.
    for (std::size_t i = 0; i < r.t.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g\n", r.t[i] + 0.0,
                      r.in[i].real() + 0.0, r.in[i].imag() + 0.0, r.out_h[i].real() + 0.0, r.out_h[i].imag() + 0.0,
                      r.out_v[i].real() + 0.0, r.out_v[i].imag() + 0.0);
        out += buf;
    }
    return out;
}

std::string pulse_summary_json(const PulseResult &hot, const PulseResult *cold) {
    using nlohmann::json;
    const CavityParams &p = hot.params;
    json j;
    j["params"] = {{"kappa_over_g", p.kappa_over_g},
                   {"gamma_over_g", p.gamma_over_g},
                   {"eta_h_over_g", p.eta_h_over_g},
                   {"eta_v_over_g", p.eta_v_over_g},
                   {"omega_over_g", p.omega_over_g}};
    j["atom"] = atom_ground_name(hot.atom);
    j["polarization"] = std::string(1, polarization_char(hot.pol));
    j["dt"] = hot.dt;
    j["steps"] = hot.steps;
    j["samples"] = hot.t.size();
    j["input_energy"] = hot.input_energy;
    j["output_energy"] = hot.output_energy;

    const bool is_hot = resonant_polarization(hot.atom) == hot.pol;
    json carrier, overlap, analytic;
    const ScatterCoeffs exact = scatter_coeffs(p, hot.pol);
    if (is_hot) {
        carrier["rh1"] = complex_json(hot.carrier_same);
        carrier["rh2"] = complex_json(hot.carrier_flipped);
        overlap["rh1"] = complex_json(hot.mode_overlap_same);
        overlap["rh2"] = complex_json(hot.mode_overlap_flipped);
        analytic["rh1"] = complex_json(exact.rh1);
        analytic["rh2"] = complex_json(exact.rh2);
    } else {
        carrier["r0"] = complex_json(hot.carrier_same);
        overlap["r0"] = complex_json(hot.mode_overlap_same);
    }
    if (cold != nullptr) {
        carrier["r0"] = complex_json(cold->carrier_same);
        overlap["r0"] = complex_json(cold->mode_overlap_same);
    }
    analytic["r0"] = complex_json(exact.r0);
    j["effective"] = {{"carrier_ratio", carrier}, {"mode_overlap", overlap}};
    j["closed_form"] = analytic;
    return j.dump(2) + "\n";
}

}  // namespace lgs
