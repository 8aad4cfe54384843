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

#include "lgs/gates.hpp"

#include <cmath>
#include <functional>
#include <set>

#include "lgs/error.hpp"
#include "lgs/literal.hpp"

namespace lgs {

namespace {

constexpr Line kIn{0};

// Allocates lines and PBS device numbers in order of use.
class Builder {
   public:
    Builder(std::string name, std::size_t n) {
        c_.name = std::move(name);
        c_.atom_count = n;
        c_.input = kIn;
        c_.output = kIn;
    }

    Line fresh() { return Line{next_line_++}; }
    int device() { return next_device_++; }

    void split(Line in, Line h, Line v, int dev) { c_.steps.emplace_back(PbsSplit{in, h, v, dev}); }
    void merge(Line h, Line v, Line out, int dev) { c_.steps.emplace_back(PbsMerge{h, v, out, dev}); }
    void plate(Line l, HwpAngle a) { c_.steps.emplace_back(HwpStep{l, a}); }
    void mirror(Line l) { c_.steps.emplace_back(MirrorStep{l}); }
    void cavity(Line l, std::size_t atom) { c_.steps.emplace_back(CavityVisit{l, atom}); }
    void cut(std::string_view name) { c_.cut_points[std::string(name)] = c_.steps.size(); }

    Circuit finish() {
        validate(c_);
        return std::move(c_);
    }

   private:
    Circuit c_;
    std::uint16_t next_line_ = 1;
    int next_device_ = 1;
};

// PBS1 sends V down the control arm. Each control atom gets one visit, then
// an inner PBS keeps H on the arm and parks V on a mirrored bypass. The target
// block runs on the innermost arm and every level is undone in reverse: the
// same PBS recombines the arm with its bypass and the control atom is visited
// again.
Circuit control_chain(std::string name, std::size_t n, const std::vector<std::size_t> &controls,
                      const std::function<void(Builder &, Line)> &block, bool cut_merge) {
    Builder b(std::move(name), n);
    const Line h_arm = b.fresh();
    Line arm = b.fresh();
    const int outer = b.device();
    b.split(kIn, h_arm, arm, outer);

    struct Level {
        Line bypass;
        std::size_t atom;
        int device;
    };
    std::vector<Level> stack;
    for (std::size_t atom : controls) {
        b.cavity(arm, atom);
        const Line h = b.fresh();
        const Line v = b.fresh();
        const int dev = b.device();
        b.split(arm, h, v, dev);
        stack.push_back({v, atom, dev});
        arm = h;
    }
    block(b, arm);
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
        b.mirror(it->bypass);
        b.mirror(it->bypass);
        const Line out = b.fresh();
        b.merge(arm, it->bypass, out, it->device);
        if (cut_merge && it == stack.rbegin()) b.cut(kCutInnerMerged);
        b.cavity(out, it->atom);
        arm = out;
    }
    b.merge(h_arm, arm, kIn, b.device());
    return b.finish();
}

}  // namespace

const char *gate_name(GateKind k) {
    switch (k) {
        case GateKind::Cnot: return "cnot";
        case GateKind::Fredkin: return "fredkin";
        case GateKind::Toffoli: return "toffoli";
    }
    return "?";
}

std::optional<GateKind> gate_from_name(std::string_view name) {
    if (name == "cnot") return GateKind::Cnot;
    if (name == "fredkin") return GateKind::Fredkin;
    if (name == "toffoli") return GateKind::Toffoli;
    return std::nullopt;
}

void GateSpec::validate(std::size_t max_n) const {
    const std::size_t min_n = kind == GateKind::Cnot ? 1 : 2;
    if (n < min_n) {
        throw Error(ErrorCode::InvalidArgument, std::string(gate_name(kind)) + " needs at least " +
                                                    std::to_string(min_n) + " atom(s), got " + std::to_string(n));
    }
    const std::size_t cap = std::min(max_n, kMaxAtoms);
    if (n > cap) {
        throw Error(ErrorCode::InvalidArgument, std::string(gate_name(kind)) + " with " + std::to_string(n) +
                                                    " atoms exceeds the maximum of " + std::to_string(cap));
    }
}

Circuit build_cnot(std::size_t n, std::size_t max_n) {
    GateSpec{GateKind::Cnot, n}.validate(max_n);
    Builder b("cnot", n);
    const Line h = b.fresh();
    const Line v = b.fresh();
    b.split(kIn, h, v, b.device());
    if (n % 2 == 1) b.plate(v, HwpAngle::Deg0);
    for (std::size_t atom = 0; atom < n; ++atom) {
        b.cavity(v, atom);
        if (n == 1) b.cut(kCutFirstBounce);
        b.plate(v, HwpAngle::Deg45);
        if (n == 1) b.cut(kCutFlipped);
        b.cavity(v, atom);
    }
    b.merge(h, v, kIn, b.device());
    return b.finish();
}

Circuit build_fredkin(std::size_t n, std::size_t max_n) {
    GateSpec{GateKind::Fredkin, n}.validate(max_n);
    const std::size_t a = n - 2;
    const std::size_t z = n - 1;
    if (n == 2) {
        Builder b("fredkin", n);
        const Line h = b.fresh();
        const Line v = b.fresh();
        b.split(kIn, h, v, b.device());
        b.plate(v, HwpAngle::Deg0);
        b.cavity(v, a);
        b.cut(kCutFirstBounce);
        b.cavity(v, z);
        b.cut(kCutSecondAtom);
        b.cavity(v, a);
        b.merge(h, v, kIn, b.device());
        return b.finish();
    }
    std::vector<std::size_t> controls;
    for (std::size_t i = 0; i + 2 < n; ++i) controls.push_back(i);
    // On the inner arm the photon is H, so HWP90 plays the role HWP0 plays for
    // the V photon at n = 2.
    return control_chain("fredkin", n, controls,
                         [&](Builder &b, Line arm) {
                             b.plate(arm, HwpAngle::Deg90);
                             b.cavity(arm, a);
                             b.cavity(arm, z);
                             b.cavity(arm, a);
                         },
                         false);
}

Circuit build_toffoli(std::size_t n, std::size_t max_n) {
    GateSpec{GateKind::Toffoli, n}.validate(max_n);
    const std::size_t target = n - 1;
    std::vector<std::size_t> controls;
    for (std::size_t i = 0; i + 1 < n; ++i) controls.push_back(i);
    return control_chain("toffoli", n, controls,
                         [&](Builder &b, Line arm) {
                             b.cavity(arm, target);
                             if (n == 2) b.cut(kCutInnerBounce);
                             b.plate(arm, HwpAngle::Deg45);
                             b.cavity(arm, target);
                             b.plate(arm, HwpAngle::Deg90);
                         },
                         n == 2);
}

Circuit build_gate(const GateSpec &g, std::size_t max_n) {
    switch (g.kind) {
        case GateKind::Cnot: return build_cnot(g.n, max_n);
        case GateKind::Fredkin: return build_fredkin(g.n, max_n);
        case GateKind::Toffoli: return build_toffoli(g.n, max_n);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown gate");
}

BasisKet gate_target(const GateSpec &g, const BasisKet &in) {
    if (in.pol == Polarization::H) return in;
    const std::size_t n = g.n;
    auto all_gv = [&](std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) {
            if (in.atom(i) != AtomGround::Gv) return false;
        }
        return true;
    };
    BasisKet out = in;
    switch (g.kind) {
        case GateKind::Cnot:
            for (std::size_t i = 0; i < n; ++i) out = out.with_atom(i, flipped(in.atom(i)));
            break;
        case GateKind::Fredkin:
            if (all_gv(n - 2)) out = out.with_atom(n - 2, in.atom(n - 1)).with_atom(n - 1, in.atom(n - 2));
            break;
        case GateKind::Toffoli:
            if (all_gv(n - 1)) out = out.with_atom(n - 1, flipped(in.atom(n - 1)));
            break;
    }
    return out;
}

ElementCounts element_count(const GateSpec &g) { return count_elements(build_gate(g)); }

TruthTable truth_table(const GateSpec &g, const RunOptions &opts, std::size_t row_limit, double tol) {
    g.validate();
    if (g.n + 1 >= 63 || (std::size_t{1} << (g.n + 1)) > row_limit) {
        throw Error(ErrorCode::LimitExceeded, "truth table for n=" + std::to_string(g.n) + " needs 2^" +
                                                  std::to_string(g.n + 1) + " rows, above the limit of " +
                                                  std::to_string(row_limit));
    }
    const Circuit c = build_gate(g);
    TruthTable t;
    t.gate = g;
    t.mode = opts.mode;
    const std::uint64_t atom_states = std::uint64_t{1} << g.n;
    for (Polarization pol : {Polarization::H, Polarization::V}) {
        for (std::uint64_t atoms = 0; atoms < atom_states; ++atoms) {
            const BasisKet in{pol, kIn, atoms};
            TruthRow row{in, run_circuit(c, basis_state(in, g.n), opts), in, {}, false, gate_target(g, in)};
            double best = -1.0;
            double rest = 0.0;
            for (const auto &[k, a] : row.output.terms()) {
                const double w = std::abs(a);
                if (w > best) {
                    if (best >= 0.0) rest = std::max(rest, best);
                    best = w;
                    row.mapped = k;
                    row.phase = a;
                } else {
                    rest = std::max(rest, w);
                }
            }
            row.single_ket = best >= 0.0 && rest <= tol;
            t.rows.push_back(std::move(row));
        }
    }

    std::set<BasisKet> seen;
    t.bijective = true;
    t.matches_target = true;
    for (const auto &row : t.rows) {
        if (!row.single_ket || !seen.insert(row.mapped).second) t.bijective = false;
        if (row.mapped != row.expected) t.matches_target = false;
    }
    const Amplitude first = t.rows.front().phase;
    bool common = std::abs(std::abs(first) - 1.0) <= tol;
    for (const auto &row : t.rows) common = common && std::abs(row.phase - first) <= tol;
    if (common) t.common_phase = first;
    return t;
}

std::string format_truth_table(const TruthTable &t) {
    std::string out = "# " + std::string(gate_name(t.gate.kind)) + " n=" + std::to_string(t.gate.n) +
                      " mode=" + (t.mode == Mode::Ideal ? "ideal" : "real") + "\n";
    for (const auto &row : t.rows) {
        out += format_ket(row.input, t.gate.n) + " -> " + format_ket(row.mapped, t.gate.n) +
               "  phase=" + format_amplitude(row.phase);
        if (!row.single_ket) out += "  (superposition)";
        out += "\n";
    }
    out += std::string("# bijective=") + (t.bijective ? "yes" : "no") +
           " target=" + (t.matches_target ? "yes" : "no") +
           " common_phase=" + (t.common_phase ? format_amplitude(*t.common_phase) : std::string("none")) + "\n";
    return out;
}

}  // namespace lgs
