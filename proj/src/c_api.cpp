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

#include "lgs/lgs.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "lgs/error.hpp"
#include "lgs/gates.hpp"
#include "lgs/literal.hpp"
#include "lgs/metrics.hpp"
#include "lgs/pulse.hpp"
#include "lgs/regression.hpp"

struct lgs_state {
    lgs::HybridState value;
};
struct lgs_circuit {
    lgs::Circuit value;
};
struct lgs_table {
    lgs::TruthTable value;
};
struct lgs_sweep {
    lgs::SweepResult value;
};
struct lgs_pulse {
    lgs::PulseResult value;
};

namespace {

thread_local std::string g_last_error;

lgs_status to_status(lgs::ErrorCode c) {
    switch (c) {
        case lgs::ErrorCode::InvalidArgument: return LGS_ERR_INVALID_ARGUMENT;
        case lgs::ErrorCode::Validation: return LGS_ERR_VALIDATION;
        case lgs::ErrorCode::Parse: return LGS_ERR_PARSE;
        case lgs::ErrorCode::Miswired: return LGS_ERR_MISWIRED;
        case lgs::ErrorCode::ZeroCoupling: return LGS_ERR_ZERO_COUPLING;
        case lgs::ErrorCode::Unstable: return LGS_ERR_UNSTABLE;
        case lgs::ErrorCode::LimitExceeded: return LGS_ERR_LIMIT_EXCEEDED;
    }
    return LGS_ERR_INTERNAL;
}

template <class F>
lgs_status guarded(F &&f) {
    g_last_error.clear();
    try {
        f();
        return LGS_OK;
    } catch (const lgs::Error &e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc &) {
        g_last_error = "out of memory";
        return LGS_ERR_INTERNAL;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return LGS_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return LGS_ERR_INTERNAL;
    }
}

template <class T>
void require(const T *p, const char *name) {
    if (p == nullptr) throw lgs::Error(lgs::ErrorCode::InvalidArgument, std::string(name) + " must not be null");
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

lgs_complex to_c(lgs::Amplitude a) { return {a.real(), a.imag()}; }

lgs::GateKind to_gate(lgs_gate g) {
    switch (g) {
        case LGS_GATE_CNOT: return lgs::GateKind::Cnot;
        case LGS_GATE_FREDKIN: return lgs::GateKind::Fredkin;
        case LGS_GATE_TOFFOLI: return lgs::GateKind::Toffoli;
    }
    throw lgs::Error(lgs::ErrorCode::InvalidArgument, "unknown gate");
}

lgs::CavityParams to_params(const lgs_cavity_params &p) {
    return {p.kappa, p.gamma, p.eta_h, p.eta_v, p.omega};
}

std::optional<lgs::PortLeakage> to_leakage(lgs_leakage l) {
    switch (l) {
        case LGS_LEAKAGE_DEFAULT: return std::nullopt;
        case LGS_LEAKAGE_REJECT: return lgs::PortLeakage::Reject;
        case LGS_LEAKAGE_DISCARD: return lgs::PortLeakage::Discard;
        case LGS_LEAKAGE_COALESCE: return lgs::PortLeakage::Coalesce;
    }
    throw lgs::Error(lgs::ErrorCode::InvalidArgument, "unknown port-leakage policy");
}

lgs::RunOptions to_run(const lgs_run_options *o) {
    lgs::RunOptions r;
    if (o == nullptr) return r;
    if (o->mode != LGS_MODE_IDEAL && o->mode != LGS_MODE_REAL) {
        throw lgs::Error(lgs::ErrorCode::InvalidArgument, "unknown mode");
    }
    r.mode = o->mode == LGS_MODE_IDEAL ? lgs::Mode::Ideal : lgs::Mode::Real;
    r.cavity = to_params(o->cavity);
    r.leakage = to_leakage(o->leakage);
    return r;
}

lgs::MetricConfig to_metric(const lgs_metric_config *c) {
    lgs::MetricConfig m;
    if (c == nullptr) return m;
    m.fidelity = c->fidelity == LGS_FIDELITY_RAW_OVERLAP ? lgs::FidelityConvention::RawOverlap
                                                         : lgs::FidelityConvention::NormalizedOverlap;
    m.efficiency = c->efficiency == LGS_EFFICIENCY_OUTPUT_NORM ? lgs::EfficiencyConvention::OutputNorm
                                                               : lgs::EfficiencyConvention::IdealBranch;
    if (c->initial_state != nullptr) m.initial_state = std::string(c->initial_state);
    m.omega_over_g = c->omega;
    m.eta_over_g = c->eta;
    m.leakage = to_leakage(c->leakage).value_or(lgs::PortLeakage::Coalesce);
    m.threads = c->threads;
    return m;
}

lgs::Range to_range(const lgs_range &r) { return {r.lo, r.hi, r.steps}; }

lgs::PulseConfig to_pulse(const lgs_pulse_config *c) {
    lgs::PulseConfig p;
    if (c == nullptr) return p;
    p.sigma_over_g = c->sigma;
    p.dt = c->dt;
    p.half_window = c->half_window;
    p.tail_decays = c->tail_decays;
    p.max_samples = c->max_samples;
    return p;
}

lgs_coeffs to_c(const lgs::ScatterCoeffs &c) { return {to_c(c.r0), to_c(c.rh1), to_c(c.rh2)}; }

}  // namespace

extern "C" {

const char *lgs_last_error(void) { return g_last_error.c_str(); }

const char *lgs_status_name(lgs_status status) {
    switch (status) {
        case LGS_OK: return "ok";
        case LGS_ERR_INVALID_ARGUMENT: return "invalid argument";
        case LGS_ERR_VALIDATION: return "validation error";
        case LGS_ERR_PARSE: return "parse error";
        case LGS_ERR_MISWIRED: return "mis-wired circuit";
        case LGS_ERR_ZERO_COUPLING: return "zero coupling";
        case LGS_ERR_UNSTABLE: return "unstable integration";
        case LGS_ERR_LIMIT_EXCEEDED: return "limit exceeded";
        case LGS_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void lgs_string_free(char *s) { std::free(s); }

const char *lgs_version(void) { return "0.1.0"; }

void lgs_cavity_params_default(lgs_cavity_params *out) {
    if (out != nullptr) *out = {1.0, 0.0, 1.0, 1.0, 0.0};
}

void lgs_run_options_default(lgs_run_options *out) {
    if (out == nullptr) return;
    out->mode = LGS_MODE_IDEAL;
    lgs_cavity_params_default(&out->cavity);
    out->leakage = LGS_LEAKAGE_DEFAULT;
}

void lgs_metric_config_default(lgs_metric_config *out) {
    if (out == nullptr) return;
    out->fidelity = LGS_FIDELITY_NORMALIZED_OVERLAP;
    out->efficiency = LGS_EFFICIENCY_IDEAL_BRANCH;
    out->initial_state = nullptr;
    out->omega = 0.0;
    out->eta = 1.0;
    out->leakage = LGS_LEAKAGE_COALESCE;
    out->threads = 0;
}

void lgs_pulse_config_default(lgs_pulse_config *out) {
    if (out == nullptr) return;
    const lgs::PulseConfig d;
    *out = {d.sigma_over_g, d.dt, d.half_window, d.tail_decays, d.max_samples};
}

lgs_status lgs_state_parse(const char *literal, lgs_state **out) {
    return guarded([&] {
        require(literal, "literal");
        require(out, "out");
        *out = new lgs_state{lgs::parse_state_literal(literal)};
    });
}

lgs_status lgs_state_basis(size_t atom_count, int polarization_v, uint64_t atoms_gv_mask, lgs_state **out) {
    return guarded([&] {
        require(out, "out");
        if (atom_count > lgs::kMaxAtoms) throw lgs::Error(lgs::ErrorCode::InvalidArgument, "too many atoms");
        if (atom_count < 64 && (atoms_gv_mask >> atom_count) != 0) {
            throw lgs::Error(lgs::ErrorCode::InvalidArgument, "atom mask has bits beyond the atom count");
        }
        const lgs::BasisKet k{polarization_v ? lgs::Polarization::V : lgs::Polarization::H, lgs::Line{0},
                              atoms_gv_mask};
        *out = new lgs_state{lgs::basis_state(k, atom_count)};
    });
}

void lgs_state_free(lgs_state *s) { delete s; }

lgs_status lgs_state_format(const lgs_state *s, char **out) {
    return guarded([&] {
        require(s, "state");
        require(out, "out");
        *out = dup_string(lgs::format_state(s->value));
    });
}

lgs_status lgs_state_atom_count(const lgs_state *s, size_t *out) {
    return guarded([&] {
        require(s, "state");
        require(out, "out");
        *out = s->value.atom_count();
    });
}

lgs_status lgs_state_term_count(const lgs_state *s, size_t *out) {
    return guarded([&] {
        require(s, "state");
        require(out, "out");
        *out = s->value.size();
    });
}

lgs_status lgs_state_norm2(const lgs_state *s, double *out) {
    return guarded([&] {
        require(s, "state");
        require(out, "out");
        *out = lgs::norm_squared(s->value);
    });
}

lgs_status lgs_state_amplitude(const lgs_state *s, int polarization_v, uint16_t line, uint64_t atoms_gv_mask,
                               lgs_complex *out) {
    return guarded([&] {
        require(s, "state");
        require(out, "out");
        const lgs::BasisKet k{polarization_v ? lgs::Polarization::V : lgs::Polarization::H, lgs::Line{line},
                              atoms_gv_mask};
        *out = to_c(s->value.amplitude(k));
    });
}

lgs_status lgs_state_inner(const lgs_state *a, const lgs_state *b, lgs_complex *out) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = to_c(lgs::inner_product(a->value, b->value));
    });
}

lgs_status lgs_scatter_coeffs(const lgs_cavity_params *p, lgs_coeffs *out) {
    return guarded([&] {
        require(p, "params");
        require(out, "out");
        *out = to_c(lgs::scatter_coeffs(to_params(*p)));
    });
}

lgs_status lgs_circuit_build(lgs_gate gate, size_t n, lgs_circuit **out) {
    return guarded([&] {
        require(out, "out");
        *out = new lgs_circuit{lgs::build_gate({to_gate(gate), n})};
    });
}

lgs_status lgs_circuit_parse(const char *text, lgs_circuit **out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new lgs_circuit{lgs::parse_circuit(text)};
    });
}

void lgs_circuit_free(lgs_circuit *c) { delete c; }

lgs_status lgs_circuit_format(const lgs_circuit *c, char **out) {
    return guarded([&] {
        require(c, "circuit");
        require(out, "out");
        *out = dup_string(lgs::format_circuit(c->value));
    });
}

lgs_status lgs_circuit_counts(const lgs_circuit *c, lgs_element_counts *out) {
    return guarded([&] {
        require(c, "circuit");
        require(out, "out");
        const lgs::ElementCounts n = lgs::count_elements(c->value);
        *out = {n.pbs, n.pbs_splits, n.pbs_merges, n.hwp0, n.hwp45, n.hwp90, n.mirrors, n.cavities, n.cavity_visits};
    });
}

lgs_status lgs_circuit_atom_count(const lgs_circuit *c, size_t *out) {
    return guarded([&] {
        require(c, "circuit");
        require(out, "out");
        *out = c->value.atom_count;
    });
}

lgs_status lgs_circuit_cut_names(const lgs_circuit *c, char **out) {
    return guarded([&] {
        require(c, "circuit");
        require(out, "out");
        std::string names;
        for (const auto &[name, steps] : c->value.cut_points) names += name + "\n";
        *out = dup_string(names);
    });
}

lgs_status lgs_circuit_run(const lgs_circuit *c, const lgs_state *in, const lgs_run_options *opts, const char *cut,
                           lgs_state **out) {
    return guarded([&] {
        require(c, "circuit");
        require(in, "state");
        require(out, "out");
        const lgs::RunOptions o = to_run(opts);
        *out = new lgs_state{cut == nullptr ? lgs::run_circuit(c->value, in->value, o)
                                            : lgs::run_to_cut(c->value, in->value, cut, o)};
    });
}

lgs_status lgs_table_build(lgs_gate gate, size_t n, const lgs_run_options *opts, size_t row_limit, lgs_table **out) {
    return guarded([&] {
        require(out, "out");
        *out = new lgs_table{lgs::truth_table({to_gate(gate), n}, to_run(opts),
                                              row_limit == 0 ? lgs::kDefaultTruthTableLimit : row_limit)};
    });
}

void lgs_table_free(lgs_table *t) { delete t; }

lgs_status lgs_table_format(const lgs_table *t, char **out) {
    return guarded([&] {
        require(t, "table");
        require(out, "out");
        *out = dup_string(lgs::format_truth_table(t->value));
    });
}

lgs_status lgs_table_row_count(const lgs_table *t, size_t *out) {
    return guarded([&] {
        require(t, "table");
        require(out, "out");
        *out = t->value.rows.size();
    });
}

lgs_status lgs_table_summary(const lgs_table *t, int *bijective, int *matches_target, int *has_phase,
                             lgs_complex *common_phase) {
    return guarded([&] {
        require(t, "table");
        if (bijective != nullptr) *bijective = t->value.bijective ? 1 : 0;
        if (matches_target != nullptr) *matches_target = t->value.matches_target ? 1 : 0;
        if (has_phase != nullptr) *has_phase = t->value.common_phase ? 1 : 0;
        if (common_phase != nullptr) *common_phase = to_c(t->value.common_phase.value_or(lgs::Amplitude{}));
    });
}

lgs_status lgs_evaluate_gate(lgs_gate gate, size_t n, double kappa, double gamma, const lgs_metric_config *cfg,
                             double *fidelity, double *efficiency) {
    return guarded([&] {
        const lgs::GatePoint p = lgs::evaluate_gate({to_gate(gate), n}, kappa, gamma, to_metric(cfg));
        if (fidelity != nullptr) *fidelity = p.fidelity;
        if (efficiency != nullptr) *efficiency = p.efficiency;
    });
}

lgs_status lgs_range_parse(const char *text, lgs_range *out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        const lgs::Range r = lgs::parse_range(text);
        *out = {r.lo, r.hi, r.steps};
    });
}

lgs_status lgs_sweep_run(lgs_gate gate, size_t n, lgs_metric metric, const lgs_range *kappa, const lgs_range *gamma,
                         const lgs_metric_config *cfg, lgs_sweep **out) {
    return guarded([&] {
        require(kappa, "kappa range");
        require(gamma, "gamma range");
        require(out, "out");
        if (metric != LGS_METRIC_FIDELITY && metric != LGS_METRIC_EFFICIENCY) {
            throw lgs::Error(lgs::ErrorCode::InvalidArgument, "unknown metric");
        }
        const lgs::Metric m = metric == LGS_METRIC_FIDELITY ? lgs::Metric::Fidelity : lgs::Metric::Efficiency;
        *out = new lgs_sweep{lgs::sweep({to_gate(gate), n}, m, to_range(*kappa), to_range(*gamma), to_metric(cfg))};
    });
}

void lgs_sweep_free(lgs_sweep *s) { delete s; }

lgs_status lgs_sweep_row_count(const lgs_sweep *s, size_t *out) {
    return guarded([&] {
        require(s, "sweep");
        require(out, "out");
        *out = s->value.rows.size();
    });
}

lgs_status lgs_sweep_row(const lgs_sweep *s, size_t index, double *kappa, double *gamma, double *value) {
    return guarded([&] {
        require(s, "sweep");
        if (index >= s->value.rows.size()) throw lgs::Error(lgs::ErrorCode::InvalidArgument, "row index out of range");
        const lgs::SweepRow &r = s->value.rows[index];
        if (kappa != nullptr) *kappa = r.kappa_over_g;
        if (gamma != nullptr) *gamma = r.gamma_over_g;
        if (value != nullptr) *value = r.value;
    });
}

lgs_status lgs_sweep_csv(const lgs_sweep *s, char **out) {
    return guarded([&] {
        require(s, "sweep");
        require(out, "out");
        *out = dup_string(lgs::sweep_csv(s->value));
    });
}

lgs_status lgs_sweep_summary_json(const lgs_sweep *s, char **out) {
    return guarded([&] {
        require(s, "sweep");
        require(out, "out");
        *out = dup_string(lgs::sweep_summary_json(s->value));
    });
}

lgs_status lgs_regression_report(const lgs_metric_config *cfg, lgs_mode mode, double tolerance, char **out,
                                 int *all_pass) {
    return guarded([&] {
        require(out, "out");
        const lgs::RegressionReport r =
            lgs::run_regression(to_metric(cfg), mode == LGS_MODE_IDEAL ? lgs::Mode::Ideal : lgs::Mode::Real, tolerance);
        *out = dup_string(r.text());
        if (all_pass != nullptr) *all_pass = !r.fidelity_matches.empty() && !r.efficiency_matches.empty();
    });
}

lgs_status lgs_pulse_run(const lgs_cavity_params *p, int atom_gv, int polarization_v, const lgs_pulse_config *cfg,
                         lgs_pulse **out) {
    return guarded([&] {
        require(p, "params");
        require(out, "out");
        *out = new lgs_pulse{lgs::integrate_pulse(to_params(*p), atom_gv ? lgs::AtomGround::Gv : lgs::AtomGround::Gh,
                                                  polarization_v ? lgs::Polarization::V : lgs::Polarization::H,
                                                  to_pulse(cfg))};
    });
}

void lgs_pulse_free(lgs_pulse *p) { delete p; }

lgs_status lgs_pulse_csv(const lgs_pulse *p, char **out) {
    return guarded([&] {
        require(p, "pulse");
        require(out, "out");
        *out = dup_string(lgs::pulse_csv(p->value));
    });
}

lgs_status lgs_pulse_summary_json(const lgs_pulse *hot, const lgs_pulse *cold, char **out) {
    return guarded([&] {
        require(hot, "pulse");
        require(out, "out");
        *out = dup_string(lgs::pulse_summary_json(hot->value, cold == nullptr ? nullptr : &cold->value));
    });
}

lgs_status lgs_pulse_extract(const lgs_cavity_params *p, const lgs_pulse_config *cfg, lgs_estimator est,
                             lgs_coeffs *out) {
    return guarded([&] {
        require(p, "params");
        require(out, "out");
        *out = to_c(lgs::extract_coefficients(to_params(*p), to_pulse(cfg),
                                              est == LGS_ESTIMATOR_MODE_OVERLAP ? lgs::CoeffEstimator::ModeOverlap
                                                                                : lgs::CoeffEstimator::CarrierRatio));
    });
}

}  // extern "C"
