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

#include "lgs/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "lgs/error.hpp"
#include "lgs/literal.hpp"

namespace lgs {

namespace {

double parse_double(std::string_view s, std::string_view what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw Error(ErrorCode::InvalidArgument, "bad " + std::string(what) + " '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

const char *convention_name(FidelityConvention c) {
    return c == FidelityConvention::NormalizedOverlap ? "normalized-overlap" : "raw-overlap";
}

const char *convention_name(EfficiencyConvention c) {
    return c == EfficiencyConvention::IdealBranch ? "ideal-branch" : "output-norm";
}

const char *metric_name(Metric m) { return m == Metric::Fidelity ? "fidelity" : "efficiency"; }

std::optional<FidelityConvention> fidelity_convention_from_name(std::string_view s) {
    if (s == "normalized-overlap") return FidelityConvention::NormalizedOverlap;
    if (s == "raw-overlap") return FidelityConvention::RawOverlap;
    return std::nullopt;
}

std::optional<EfficiencyConvention> efficiency_convention_from_name(std::string_view s) {
    if (s == "ideal-branch") return EfficiencyConvention::IdealBranch;
    if (s == "output-norm") return EfficiencyConvention::OutputNorm;
    return std::nullopt;
}

std::optional<Metric> metric_from_name(std::string_view s) {
    if (s == "fidelity") return Metric::Fidelity;
    if (s == "efficiency") return Metric::Efficiency;
    return std::nullopt;
}

HybridState initial_state(const GateSpec &g, const MetricConfig &cfg) {
    if (!cfg.initial_state) {
        const double c = 1.0 / std::sqrt(2.0);
        const std::vector<QubitCoeffs> atoms(g.n, QubitCoeffs{c, c});
        return make_product_state({c, c}, Line{0}, atoms);
    }
    HybridState s = parse_state_literal(*cfg.initial_state);
    if (s.atom_count() != g.n) {
        throw Error(ErrorCode::Validation, "initial state has " + std::to_string(s.atom_count()) + " atom(s), " +
                                               gate_name(g.kind) + " was built for " + std::to_string(g.n));
    }
    for (const auto &[k, a] : s.terms()) {
        if (k.line != Line{0}) throw Error(ErrorCode::Validation, "initial state must put the photon on l0");
    }
    if (std::abs(norm_squared(s) - 1.0) > 1e-9) {
        throw Error(ErrorCode::Validation, "initial state is not normalized (norm^2 = " +
                                               std::to_string(norm_squared(s)) + ")");
    }
    return s;
}

HybridState ideal_reference(const GateSpec &g, const HybridState &s0) {
    return run_circuit(build_gate(g), s0, RunOptions{Mode::Ideal, {}, PortLeakage::Reject});
}

double fidelity(const HybridState &actual, const HybridState &ideal, FidelityConvention c) {
    const double actual_norm = norm_squared(actual);
    if (!(actual_norm > 0.0)) throw Error(ErrorCode::InvalidArgument, "fidelity of a zero state");
    const double overlap = std::norm(inner_product(ideal, actual));
    return c == FidelityConvention::NormalizedOverlap ? overlap / actual_norm : overlap;
}

double efficiency(const HybridState &actual) { return norm_squared(actual); }

double efficiency(const HybridState &actual, const HybridState &ideal, EfficiencyConvention c) {
    return c == EfficiencyConvention::OutputNorm ? norm_squared(actual) : std::norm(inner_product(ideal, actual));
}

CavityParams metric_params(double kappa_over_g, double gamma_over_g, const MetricConfig &cfg) {
    CavityParams p{kappa_over_g, gamma_over_g, cfg.eta_over_g, cfg.eta_over_g, cfg.omega_over_g};
    p.validate();
    return p;
}

GatePoint evaluate_gate(const GateSpec &g, double kappa_over_g, double gamma_over_g, const MetricConfig &cfg) {
    const Circuit c = build_gate(g);
    const HybridState s0 = initial_state(g, cfg);
    const HybridState ideal = run_circuit(c, s0, RunOptions{Mode::Ideal, {}, PortLeakage::Reject});
    const HybridState actual =
        run_circuit(c, s0, RunOptions{Mode::Real, metric_params(kappa_over_g, gamma_over_g, cfg), cfg.leakage});
    return {fidelity(actual, ideal, cfg.fidelity), efficiency(actual, ideal, cfg.efficiency)};
}

std::vector<double> Range::values() const {
    if (steps == 1) return {lo};
    std::vector<double> out(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        out[i] = i + 1 == steps ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
    }
    return out;
}

Range parse_range(std::string_view text) {
    const auto first = text.find(':');
    const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
    if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos) {
        throw Error(ErrorCode::InvalidArgument, "range must look like lo:hi:steps, got '" + std::string(text) + "'");
    }
    Range r;
    r.lo = parse_double(text.substr(0, first), "range start");
    r.hi = parse_double(text.substr(first + 1, second - first - 1), "range end");
    const std::string_view steps = text.substr(second + 1);
    unsigned long long n = 0;
    auto [ptr, ec] = std::from_chars(steps.data(), steps.data() + steps.size(), n);
    if (ec != std::errc{} || ptr != steps.data() + steps.size() || n == 0 || n > 100000) {
        throw Error(ErrorCode::InvalidArgument, "range step count must be in 1..100000, got '" + std::string(steps) + "'");
    }
    r.steps = static_cast<std::size_t>(n);
    if (r.steps > 1 && r.hi < r.lo) throw Error(ErrorCode::InvalidArgument, "range end is below its start");
    return r;
}

std::size_t sweep_threads(const MetricConfig &cfg) {
    std::size_t n = cfg.threads;
    if (n == 0) {
        n = std::max(1u, std::thread::hardware_concurrency());
        if (const char *env = std::getenv("LGS_THREADS")) {
            const std::string_view s(env);
            unsigned long v = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec == std::errc{} && ptr == s.data() + s.size() && v > 0) n = std::min<std::size_t>(n, v);
        }
    }
    return n;
}

SweepResult sweep(const GateSpec &g, Metric metric, const Range &kappa, const Range &gamma, const MetricConfig &cfg) {
    g.validate();
    for (double k : kappa.values()) {
        if (!(k > 0.0)) throw Error(ErrorCode::InvalidArgument, "kappa/g values must be > 0");
    }
    for (double y : gamma.values()) {
        if (y < 0.0) throw Error(ErrorCode::InvalidArgument, "gamma/g values must be >= 0");
    }

    SweepResult r{g, metric, cfg, kappa, gamma, {}};
    const std::vector<double> ks = kappa.values();
    const std::vector<double> ys = gamma.values();
    r.rows.resize(ks.size() * ys.size());

    const Circuit c = build_gate(g);
    const HybridState s0 = initial_state(g, cfg);
    const HybridState ideal = run_circuit(c, s0, RunOptions{Mode::Ideal, {}, PortLeakage::Reject});
    auto node = [&](std::size_t i) {
        const double k = ks[i / ys.size()];
        const double y = ys[i % ys.size()];
        const HybridState actual = run_circuit(c, s0, RunOptions{Mode::Real, metric_params(k, y, cfg), cfg.leakage});
        const double v = metric == Metric::Fidelity ? fidelity(actual, ideal, cfg.fidelity)
                                                    : efficiency(actual, ideal, cfg.efficiency);
        r.rows[i] = {k, y, v};
    };

    const std::size_t workers = std::min(sweep_threads(cfg), r.rows.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < r.rows.size(); ++i) node(i);
        return r;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < r.rows.size(); i = next++) {
                try {
                    node(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = r.rows.size();
                }
            }
        });
    }
    for (auto &t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return r;
}

std::string sweep_csv(const SweepResult &r) {
    std::string out = "kappa_over_g,gamma_over_g,value\n";
    char buf[128];
    for (const auto &row : r.rows) {
        std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g\n", row.kappa_over_g, row.gamma_over_g, row.value);
        out += buf;
    }
    return out;
}

std::string sweep_summary_json(const SweepResult &r) {
    using nlohmann::json;
    json j;
    j["gate"] = gate_name(r.gate.kind);
    j["n"] = r.gate.n;
    j["metric"] = metric_name(r.metric);
    const MetricConfig &c = r.config;
    j["config"] = {{"fidelity_convention", convention_name(c.fidelity)},
                   {"efficiency_convention", convention_name(c.efficiency)},
                   {"initial_state", c.initial_state ? json(*c.initial_state) : json("uniform")},
                   {"omega_over_g", c.omega_over_g},
                   {"eta_over_g", c.eta_over_g},
                   {"port_leakage", c.leakage == PortLeakage::Coalesce  ? "coalesce"
                                    : c.leakage == PortLeakage::Discard ? "discard"
                                                                        : "reject"}};
    j["kappa_over_g"] = {{"lo", r.kappa.lo}, {"hi", r.kappa.hi}, {"steps", r.kappa.steps}};
    j["gamma_over_g"] = {{"lo", r.gamma.lo}, {"hi", r.gamma.hi}, {"steps", r.gamma.steps}};
    j["rows"] = r.rows.size();
    if (!r.rows.empty()) {
        auto [lo, hi] = std::minmax_element(r.rows.begin(), r.rows.end(),
                                            [](const SweepRow &a, const SweepRow &b) { return a.value < b.value; });
        j["min"] = lo->value;
        j["argmin"] = {{"kappa_over_g", lo->kappa_over_g}, {"gamma_over_g", lo->gamma_over_g}};
        j["max"] = hi->value;
        j["argmax"] = {{"kappa_over_g", hi->kappa_over_g}, {"gamma_over_g", hi->gamma_over_g}};
    }
    return j.dump(2) + "\n";
}

}  // namespace lgs
