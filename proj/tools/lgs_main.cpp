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

// lgs: command-line front end over liblgs.
//
//   lgs evolve       --gate toffoli --n 2 --mode real --kappa 1 --gamma 0.2 --input "<literal>"
//   lgs truth-table  --gate cnot --n 3 --mode ideal
//   lgs sweep        --gate fredkin --metric fidelity --kappa 0.2:2.0:30 --gamma 0.01:0.2:30 --out f.csv
//   lgs emit-circuit --gate fredkin --n 4
//   lgs oracle pulse --kappa 10 --gamma 0 --eta 1 --sigma 0.05 --dt 1e-3
//   lgs regress      [--mode ideal]
//
// Exit status: 0 success, 1 computation error, 2 usage error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lgs/lgs.h"

namespace {

constexpr int kUsage = 2;
constexpr int kFailure = 1;

// Signals an exit status from inside a subcommand handler.
struct Exit {
    int code;
};

[[noreturn]] void fail(int code, const std::string &what) {
    std::cerr << "lgs: " << what << "\n";
    throw Exit{code};
}

void check(lgs_status s, int code = kFailure) {
    if (s != LGS_OK) fail(code, std::string(lgs_status_name(s)) + ": " + lgs_last_error());
}

std::string take(char *s) {
    std::string out(s == nullptr ? "" : s);
    lgs_string_free(s);
    return out;
}

void emit(const std::string &text, const std::string &path) {
    if (path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(kFailure, "cannot open '" + path + "' for writing");
    f << text;
    if (!f.flush()) fail(kFailure, "failed writing '" + path + "'");
}

std::string read_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(kUsage, "cannot read '" + path + "'");
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

template <class T>
using Owned = std::unique_ptr<T, void (*)(T *)>;

const std::map<std::string, lgs_gate> kGates{
    {"cnot", LGS_GATE_CNOT}, {"fredkin", LGS_GATE_FREDKIN}, {"toffoli", LGS_GATE_TOFFOLI}};
const std::map<std::string, lgs_mode> kModes{{"ideal", LGS_MODE_IDEAL}, {"real", LGS_MODE_REAL}};
const std::map<std::string, lgs_leakage> kLeakage{{"default", LGS_LEAKAGE_DEFAULT},
                                                  {"reject", LGS_LEAKAGE_REJECT},
                                                  {"discard", LGS_LEAKAGE_DISCARD},
                                                  {"coalesce", LGS_LEAKAGE_COALESCE}};
const std::map<std::string, lgs_metric> kMetrics{{"fidelity", LGS_METRIC_FIDELITY},
                                                 {"efficiency", LGS_METRIC_EFFICIENCY}};
const std::map<std::string, lgs_fidelity_convention> kFidelity{
    {"normalized-overlap", LGS_FIDELITY_NORMALIZED_OVERLAP}, {"raw-overlap", LGS_FIDELITY_RAW_OVERLAP}};
const std::map<std::string, lgs_efficiency_convention> kEfficiency{
    {"ideal-branch", LGS_EFFICIENCY_IDEAL_BRANCH}, {"output-norm", LGS_EFFICIENCY_OUTPUT_NORM}};

struct GateFlags {
    std::string gate;
    std::size_t n = 0;  // 0: smallest size the gate supports

    void add(CLI::App *app, bool required = true) {
        auto *g = app->add_option("--gate", gate, "cnot, fredkin or toffoli")->check(CLI::IsMember(kGates));
        if (required) g->required();
        app->add_option("--n", n, "Number of atoms (default: 1 for cnot, 2 otherwise)")->check(CLI::Range(1, 64));
    }
    lgs_gate kind() const { return kGates.at(gate); }
    std::size_t atoms() const { return n != 0 ? n : (kind() == LGS_GATE_CNOT ? 1 : 2); }
};

struct CavityFlags {
    lgs_cavity_params p{};
    std::optional<double> eta;

    CavityFlags() { lgs_cavity_params_default(&p); }
    void add(CLI::App *app) {
        app->add_option("--kappa", p.kappa, "Cavity damping kappa/g")->capture_default_str();
        app->add_option("--gamma", p.gamma, "Atomic decay gamma/g")->capture_default_str();
        app->add_option("--eta", eta, "Coupling eta/g for both polarizations");
        app->add_option("--eta-h", p.eta_h, "Coupling eta_h/g")->capture_default_str();
        app->add_option("--eta-v", p.eta_v, "Coupling eta_v/g")->capture_default_str();
        app->add_option("--omega", p.omega, "Detuning omega/g")->capture_default_str();
    }
    lgs_cavity_params params() const {
        lgs_cavity_params out = p;
        if (eta) out.eta_h = out.eta_v = *eta;
        return out;
    }
};

struct RunFlags {
    std::string mode = "ideal";
    std::string leakage = "default";
    CavityFlags cavity;

    void add(CLI::App *app) {
        app->add_option("--mode", mode, "ideal or real")->check(CLI::IsMember(kModes))->capture_default_str();
        app->add_option("--leakage", leakage, "Wrong-port PBS amplitude: default, reject, discard or coalesce")
            ->check(CLI::IsMember(kLeakage))
            ->capture_default_str();
        cavity.add(app);
    }
    lgs_run_options options() const {
        lgs_run_options o;
        lgs_run_options_default(&o);
        o.mode = kModes.at(mode);
        o.cavity = cavity.params();
        o.leakage = kLeakage.at(leakage);
        return o;
    }
};

struct MetricFlags {
    std::string fidelity = "normalized-overlap";
    std::string efficiency = "ideal-branch";
    std::string leakage = "coalesce";
    std::string initial;
    double omega = 0.0;
    double eta = 1.0;
    std::size_t threads = 0;

    void add(CLI::App *app) {
        app->add_option("--fidelity-convention", fidelity, "normalized-overlap or raw-overlap")
            ->check(CLI::IsMember(kFidelity))
            ->capture_default_str();
        app->add_option("--efficiency-convention", efficiency, "ideal-branch or output-norm")
            ->check(CLI::IsMember(kEfficiency))
            ->capture_default_str();
        app->add_option("--leakage", leakage, "Wrong-port PBS amplitude: discard or coalesce")
            ->check(CLI::IsMember(kLeakage))
            ->capture_default_str();
        app->add_option("--initial", initial, "Initial state literal (default: uniform product state)");
        app->add_option("--omega", omega, "Detuning omega/g")->capture_default_str();
        app->add_option("--eta", eta, "Coupling eta/g for both polarizations")->capture_default_str();
        app->add_option("--threads", threads, "Worker threads (0: LGS_THREADS or all cores)")->capture_default_str();
    }
    lgs_metric_config config() const {
        lgs_metric_config c;
        lgs_metric_config_default(&c);
        c.fidelity = kFidelity.at(fidelity);
        c.efficiency = kEfficiency.at(efficiency);
        c.initial_state = initial.empty() ? nullptr : initial.c_str();
        c.omega = omega;
        c.eta = eta;
        c.leakage = kLeakage.at(leakage);
        c.threads = threads;
        return c;
    }
};

void add_config(CLI::App *app) {
    app->add_option("--config", "Read options from a key=value file (flags win)");
}

const char *const kSubcommands[] = {"evolve", "truth-table", "sweep", "emit-circuit", "pulse", "regress"};

// Replaces `--config FILE` with the file's `key=value` pairs as `--key=value`
// placed right after the subcommand name, so later command-line flags win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::size_t at = args.size();
    std::string path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config needs a file name");
            path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            at = i;
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
            at = i;
            break;
        }
    }
    if (at == args.size() && path.empty()) return args;

    std::size_t insert = 1;
    for (std::size_t i = 1; i < at; ++i) {
        for (const char *sub : kSubcommands) {
            if (args[i] == sub) insert = i + 1;
        }
    }
    std::vector<std::string> extra;
    for (const CLI::ConfigItem &item : CLI::ConfigINI().from_file(path)) {
        if (!item.parents.empty() || item.name == "++" || item.name == "--") {
            throw CLI::ConfigError("config keys must be flat: '" + item.fullname() + "'");
        }
        if (item.name == "config") throw CLI::ConfigError("config files cannot include other config files");
        std::string flag = "--" + item.name;
        if (!item.inputs.empty()) flag += "=" + CLI::detail::join(item.inputs, " ");
        extra.push_back(flag);
    }
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(insert), extra.begin(), extra.end());
    return args;
}

lgs_state *uniform_state(std::size_t n) {
    std::string lit = "photon(l0)=0.7071067811865476H+0.7071067811865476V";
    for (std::size_t i = 1; i <= n; ++i) {
        lit += "; atom" + std::to_string(i) + "=0.7071067811865476gh+0.7071067811865476gv";
    }
    lgs_state *s = nullptr;
    check(lgs_state_parse(lit.c_str(), &s));
    return s;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Photon-atom hybrid gate simulator", "lgs"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(lgs_version()));

    // evolve
    GateFlags ev_gate;
    RunFlags ev_run;
    std::string ev_input, ev_circuit, ev_cut, ev_out;
    auto *evolve = app.add_subcommand("evolve", "Run a gate circuit on an input state");
    ev_gate.add(evolve, false);
    ev_run.add(evolve);
    evolve->add_option("--circuit", ev_circuit, "Circuit text file to run instead of a built gate");
    evolve->add_option("--input", ev_input, "Input state literal (default: uniform product state)");
    evolve->add_option("--cut", ev_cut, "Stop at a named cut point");
    evolve->add_option("--out", ev_out, "Write the result to FILE");
    add_config(evolve);

    // truth-table
    GateFlags tt_gate;
    RunFlags tt_run;
    std::size_t tt_limit = 8192;
    std::string tt_out;
    auto *table = app.add_subcommand("truth-table", "Enumerate all computational-basis inputs");
    tt_gate.add(table);
    tt_run.add(table);
    table->add_option("--limit", tt_limit, "Maximum number of rows")->capture_default_str();
    table->add_option("--out", tt_out, "Write the table to FILE");
    add_config(table);

    // sweep
    GateFlags sw_gate;
    MetricFlags sw_metric;
    std::string sw_which, sw_kappa = "0.2:2.0:30", sw_gamma = "0.01:0.2:30", sw_out, sw_summary;
    auto *sweep = app.add_subcommand("sweep", "Evaluate a metric over a (kappa/g, gamma/g) grid");
    sw_gate.add(sweep);
    sweep->add_option("--metric", sw_which, "fidelity or efficiency")->required()->check(CLI::IsMember(kMetrics));
    sweep->add_option("--kappa", sw_kappa, "kappa/g range lo:hi:steps")->capture_default_str();
    sweep->add_option("--gamma", sw_gamma, "gamma/g range lo:hi:steps")->capture_default_str();
    sw_metric.add(sweep);
    sweep->add_option("--out", sw_out, "Write the CSV to FILE");
    sweep->add_option("--summary", sw_summary, "Write the summary JSON to FILE");
    add_config(sweep);

    // emit-circuit
    GateFlags ec_gate;
    std::string ec_out;
    auto *emit_circuit = app.add_subcommand("emit-circuit", "Print a gate circuit in text form");
    ec_gate.add(emit_circuit);
    emit_circuit->add_option("--out", ec_out, "Write the circuit to FILE");
    add_config(emit_circuit);

    // oracle pulse
    auto *oracle = app.add_subcommand("oracle", "Time-domain cross-checks");
    oracle->require_subcommand(1);
    CavityFlags op_cavity;
    lgs_pulse_config op_cfg;
    lgs_pulse_config_default(&op_cfg);
    std::string op_atom = "gh", op_pol = "H", op_out, op_summary;
    auto *pulse = oracle->add_subcommand("pulse", "Integrate a Gaussian pulse through one atom-cavity system");
    op_cavity.add(pulse);
    pulse->add_option("--sigma", op_cfg.sigma, "Spectral width sigma/g of the Gaussian pulse")->capture_default_str();
    pulse->add_option("--dt", op_cfg.dt, "Time step in 1/g (0: 0.001/kappa)")->capture_default_str();
    pulse->add_option("--window", op_cfg.half_window, "Half window in pulse widths")->capture_default_str();
    pulse->add_option("--tail", op_cfg.tail_decays, "Extra decay times after the pulse")->capture_default_str();
    pulse->add_option("--samples", op_cfg.max_samples, "Maximum recorded samples")->capture_default_str();
    pulse->add_option("--atom", op_atom, "Atom ground state gh or gv")
        ->check(CLI::IsMember({"gh", "gv"}))
        ->capture_default_str();
    pulse->add_option("--pol", op_pol, "Input polarization H or V")
        ->check(CLI::IsMember({"H", "V"}))
        ->capture_default_str();
    pulse->add_option("--out", op_out, "Write the CSV to FILE");
    pulse->add_option("--summary", op_summary, "Write the summary JSON to FILE");
    add_config(pulse);

    // regress
    MetricFlags rg_metric;
    std::string rg_mode = "real", rg_out;
    double rg_tol = 5e-4;
    auto *regress = app.add_subcommand("regress", "Compare against the published fidelity and efficiency values");
    regress->add_option("--mode", rg_mode, "ideal or real")->check(CLI::IsMember(kModes))->capture_default_str();
    regress->add_option("--tolerance", rg_tol, "Absolute tolerance")->capture_default_str();
    rg_metric.add(regress);
    regress->add_option("--out", rg_out, "Write the report to FILE");
    add_config(regress);

    try {
        std::vector<std::string> args = expand_config(std::vector<std::string>(argv, argv + argc));
        args.erase(args.begin());
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (evolve->parsed()) {
            const lgs_run_options opts = ev_run.options();
            lgs_circuit *raw_circuit = nullptr;
            if (!ev_circuit.empty()) {
                check(lgs_circuit_parse(read_file(ev_circuit).c_str(), &raw_circuit), kUsage);
            } else if (!ev_gate.gate.empty()) {
                check(lgs_circuit_build(ev_gate.kind(), ev_gate.atoms(), &raw_circuit), kUsage);
            } else {
                fail(kUsage, "evolve needs --gate or --circuit");
            }
            Owned<lgs_circuit> circuit(raw_circuit, lgs_circuit_free);
            std::size_t n = 0;
            check(lgs_circuit_atom_count(circuit.get(), &n));
            lgs_state *raw_in = nullptr;
            if (ev_input.empty()) {
                raw_in = uniform_state(n);
            } else {
                check(lgs_state_parse(ev_input.c_str(), &raw_in), kUsage);
            }
            Owned<lgs_state> in(raw_in, lgs_state_free);
            lgs_state *raw_out = nullptr;
            check(lgs_circuit_run(circuit.get(), in.get(), &opts, ev_cut.empty() ? nullptr : ev_cut.c_str(), &raw_out));
            Owned<lgs_state> out(raw_out, lgs_state_free);
            char *text = nullptr;
            check(lgs_state_format(out.get(), &text));
            double norm2 = 0.0;
            check(lgs_state_norm2(out.get(), &norm2));
            char buf[64];
            std::snprintf(buf, sizeof buf, "norm2 = %.12g\n", norm2);
            emit(take(text) + "\n" + buf, ev_out);
        } else if (table->parsed()) {
            const lgs_run_options opts = tt_run.options();
            lgs_table *raw = nullptr;
            check(lgs_table_build(tt_gate.kind(), tt_gate.atoms(), &opts, tt_limit, &raw));
            Owned<lgs_table> t(raw, lgs_table_free);
            char *text = nullptr;
            check(lgs_table_format(t.get(), &text));
            emit(take(text), tt_out);
        } else if (sweep->parsed()) {
            lgs_range kappa{}, gamma{};
            check(lgs_range_parse(sw_kappa.c_str(), &kappa), kUsage);
            check(lgs_range_parse(sw_gamma.c_str(), &gamma), kUsage);
            const lgs_metric_config cfg = sw_metric.config();
            lgs_sweep *raw = nullptr;
            check(lgs_sweep_run(sw_gate.kind(), sw_gate.atoms(), kMetrics.at(sw_which), &kappa, &gamma, &cfg, &raw));
            Owned<lgs_sweep> s(raw, lgs_sweep_free);
            char *csv = nullptr;
            check(lgs_sweep_csv(s.get(), &csv));
            emit(take(csv), sw_out);
            if (!sw_summary.empty()) {
                char *json = nullptr;
                check(lgs_sweep_summary_json(s.get(), &json));
                emit(take(json), sw_summary);
            }
        } else if (emit_circuit->parsed()) {
            lgs_circuit *raw = nullptr;
            check(lgs_circuit_build(ec_gate.kind(), ec_gate.atoms(), &raw), kUsage);
            Owned<lgs_circuit> c(raw, lgs_circuit_free);
            char *text = nullptr;
            check(lgs_circuit_format(c.get(), &text));
            emit(take(text), ec_out);
        } else if (pulse->parsed()) {
            const lgs_cavity_params p = op_cavity.params();
            const int atom_gv = op_atom == "gv";
            const int pol_v = op_pol == "V";
            lgs_pulse *raw = nullptr;
            check(lgs_pulse_run(&p, atom_gv, pol_v, &op_cfg, &raw));
            Owned<lgs_pulse> run(raw, lgs_pulse_free);
            // A hot run is paired with the cold configuration to report r0 too.
            Owned<lgs_pulse> cold(nullptr, lgs_pulse_free);
            if (atom_gv == pol_v) {
                lgs_pulse *raw_cold = nullptr;
                check(lgs_pulse_run(&p, !atom_gv, pol_v, &op_cfg, &raw_cold));
                cold.reset(raw_cold);
            }
            char *csv = nullptr;
            check(lgs_pulse_csv(run.get(), &csv));
            char *json = nullptr;
            check(lgs_pulse_summary_json(run.get(), cold.get(), &json));
            emit(take(csv), op_out);
            emit(take(json), op_summary);
        } else if (regress->parsed()) {
            const lgs_metric_config cfg = rg_metric.config();
            char *text = nullptr;
            check(lgs_regression_report(&cfg, kModes.at(rg_mode), rg_tol, &text, nullptr));
            emit(take(text), rg_out);
        }
    } catch (const Exit &e) {
        return e.code;
    }
    return 0;
}
