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

#include "lgs/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "lgs/error.hpp"

namespace lgs {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string line_name(Line l) { return "l" + std::to_string(l.id); }

[[noreturn]] void invalid(const std::string &what) { throw Error(ErrorCode::InvalidArgument, what); }

}  // namespace

std::vector<Line> Circuit::lines() const {
    std::vector<Line> out;
    auto note = [&](Line l) {
        if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    };
    note(input);
    for (const auto &step : steps) {
        std::visit(Overloaded{
                       [&](const PbsSplit &p) {
                           note(p.in);
                           note(p.h_out);
                           note(p.v_out);
                       },
                       [&](const PbsMerge &p) {
                           note(p.h_in);
                           note(p.v_in);
                           note(p.out);
                       },
                       [&](const HwpStep &h) { note(h.line); },
                       [&](const MirrorStep &m) { note(m.line); },
                       [&](const CavityVisit &v) { note(v.line); },
                   },
                   step);
    }
    note(output);
    return out;
}

void validate(const Circuit &c) {
    std::set<Line> live{c.input};
    auto need = [&](Line l, std::size_t index) {
        if (!live.contains(l)) {
            invalid("step " + std::to_string(index + 1) + " reads " + line_name(l) + ", which carries no light there");
        }
    };
    auto produce = [&](Line l, std::size_t index) {
        if (live.contains(l)) {
            invalid("step " + std::to_string(index + 1) + " writes " + line_name(l) + ", which is already in use");
        }
        live.insert(l);
    };
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        std::visit(Overloaded{
                       [&](const PbsSplit &p) {
                           need(p.in, i);
                           if (p.h_out == p.v_out) invalid("step " + std::to_string(i + 1) + ": identical PBS outputs");
                           live.erase(p.in);
                           produce(p.h_out, i);
                           produce(p.v_out, i);
                       },
                       [&](const PbsMerge &p) {
                           need(p.h_in, i);
                           need(p.v_in, i);
                           if (p.h_in == p.v_in) invalid("step " + std::to_string(i + 1) + ": identical PBS inputs");
                           live.erase(p.h_in);
                           live.erase(p.v_in);
                           produce(p.out, i);
                       },
                       [&](const HwpStep &h) { need(h.line, i); },
                       [&](const MirrorStep &m) { need(m.line, i); },
                       [&](const CavityVisit &v) {
                           need(v.line, i);
                           if (v.atom >= c.atom_count) {
                               invalid("step " + std::to_string(i + 1) + " visits atom" + std::to_string(v.atom + 1) +
                                       " but the circuit declares " + std::to_string(c.atom_count));
                           }
                       },
                   },
                   c.steps[i]);
    }
    if (live.size() != 1 || !live.contains(c.output)) {
        invalid("circuit does not recombine onto its output line " + line_name(c.output));
    }
    for (const auto &[name, count] : c.cut_points) {
        if (count > c.steps.size()) invalid("cut point '" + name + "' lies beyond the last step");
    }
}

ElementCounts count_elements(const Circuit &c) {
    ElementCounts n;
    std::set<int> devices;
    std::set<std::size_t> atoms;
    int anonymous = -1;
    for (const auto &step : c.steps) {
        std::visit(Overloaded{
                       [&](const PbsSplit &p) {
                           ++n.pbs_splits;
                           devices.insert(p.device > 0 ? p.device : anonymous--);
                       },
                       [&](const PbsMerge &p) {
                           ++n.pbs_merges;
                           devices.insert(p.device > 0 ? p.device : anonymous--);
                       },
                       [&](const HwpStep &h) {
                           switch (h.angle) {
                               case HwpAngle::Deg0: ++n.hwp0; break;
                               case HwpAngle::Deg45: ++n.hwp45; break;
                               case HwpAngle::Deg90: ++n.hwp90; break;
                           }
                       },
                       [&](const MirrorStep &) { ++n.mirrors; },
                       [&](const CavityVisit &v) {
                           ++n.cavity_visits;
                           atoms.insert(v.atom);
                       },
                   },
                   step);
    }
    n.pbs = devices.size();
    n.cavities = atoms.size();
    return n;
}

HybridState apply_step(const ElementStep &step, const HybridState &s, const RunOptions &opts) {
    return std::visit(Overloaded{
                          [&](const PbsSplit &p) { return pbs_split(s, p.in, p.h_out, p.v_out); },
                          [&](const PbsMerge &p) { return pbs_merge(s, p.h_in, p.v_in, p.out, opts.effective_leakage()); },
                          [&](const HwpStep &h) { return hwp(s, h.line, h.angle); },
                          [&](const MirrorStep &m) { return mirror(s, m.line); },
                          [&](const CavityVisit &v) {
                              return opts.mode == Mode::Ideal ? scatter_ideal(s, v.line, v.atom)
                                                              : scatter_real(s, v.line, v.atom, opts.cavity);
                          },
                      },
                      step);
}

HybridState run_circuit(const Circuit &c, const HybridState &s, const RunOptions &opts,
                        std::optional<std::size_t> step_count) {
    if (s.atom_count() != c.atom_count) {
        invalid("state has " + std::to_string(s.atom_count()) + " atom(s), circuit '" + c.name + "' expects " +
                std::to_string(c.atom_count));
    }
    for (const auto &[k, a] : s.terms()) {
        if (k.line != c.input) invalid("input state has a photon on " + line_name(k.line) + ", not " + line_name(c.input));
    }
    if (opts.mode == Mode::Real) opts.cavity.validate();
    const std::size_t end = std::min(step_count.value_or(c.steps.size()), c.steps.size());
    HybridState cur = s;
    for (std::size_t i = 0; i < end; ++i) cur = apply_step(c.steps[i], cur, opts);
    return cur;
}

HybridState run_to_cut(const Circuit &c, const HybridState &s, std::string_view cut, const RunOptions &opts) {
    auto it = c.cut_points.find(std::string(cut));
    if (it == c.cut_points.end()) invalid("circuit '" + c.name + "' has no cut point '" + std::string(cut) + "'");
    return run_circuit(c, s, opts, it->second);
}

std::string format_step(const ElementStep &step) {
    return std::visit(Overloaded{
                          [](const PbsSplit &p) {
                              std::string s = "PBS split " + line_name(p.in) + " -> " + line_name(p.h_out) + " " +
                                              line_name(p.v_out);
                              if (p.device > 0) s += "  # PBS" + std::to_string(p.device);
                              return s;
                          },
                          [](const PbsMerge &p) {
                              std::string s = "PBS merge " + line_name(p.h_in) + " " + line_name(p.v_in) + " -> " +
                                              line_name(p.out);
                              if (p.device > 0) s += "  # PBS" + std::to_string(p.device);
                              return s;
                          },
                          [](const HwpStep &h) {
                              return "HWP " + std::to_string(hwp_degrees(h.angle)) + " " + line_name(h.line);
                          },
                          [](const MirrorStep &m) { return "MIRROR " + line_name(m.line); },
                          [](const CavityVisit &v) {
                              return "CAV " + line_name(v.line) + " atom" + std::to_string(v.atom + 1);
                          },
                      },
                      step);
}

std::string format_circuit(const Circuit &c) {
    std::ostringstream out;
    out << "# " << (c.name.empty() ? "circuit" : c.name) << "\n";
    out << "ATOMS " << c.atom_count << "\n";
    for (const auto &step : c.steps) out << format_step(step) << "\n";
    return out.str();
}

namespace {

class LineParser {
   public:
    LineParser(std::string_view text, std::size_t line_no) : line_no_(line_no) {
        std::string buf(text);
        std::istringstream in(buf);
        std::string tok;
        while (in >> tok) tokens_.push_back(tok);
    }

    bool done() const { return pos_ >= tokens_.size(); }
    const std::string &next() {
        if (done()) fail("unexpected end of line");
        return tokens_[pos_++];
    }
    void expect(std::string_view word) {
        if (next() != word) fail("expected '" + std::string(word) + "'");
    }
    Line line() {
        const std::string &t = next();
        if (t.size() < 2 || t[0] != 'l') fail("expected a line label like l3, got '" + t + "'");
        return Line{static_cast<std::uint16_t>(number(t.substr(1), 0xFFFF))};
    }
    std::size_t atom() {
        const std::string &t = next();
        if (t.rfind("atom", 0) != 0) fail("expected atomN, got '" + t + "'");
        unsigned n = number(t.substr(4), 1u << 16);
        if (n == 0) fail("atoms are numbered from 1");
        return n - 1;
    }
    unsigned number(std::string_view t, unsigned max) {
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc{} || ptr != t.data() + t.size() || v > max) fail("bad number '" + std::string(t) + "'");
        return v;
    }
    [[noreturn]] void fail(const std::string &what) const {
        throw Error(ErrorCode::Parse, "circuit line " + std::to_string(line_no_) + ": " + what);
    }

   private:
    std::vector<std::string> tokens_;
    std::size_t pos_ = 0;
    std::size_t line_no_;
};

}  // namespace

Circuit parse_circuit(std::string_view text) {
    Circuit c;
    c.name = "parsed";
    std::optional<std::size_t> declared_atoms;
    std::size_t max_atom = 0;
    bool first_split = true;
    std::size_t line_no = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(begin, end - begin);
        begin = end + 1;
        ++line_no;

        int device = 0;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
            std::string comment;
            for (char ch : raw.substr(hash + 1)) {
                if (ch != ' ' && ch != '\t' && ch != '\r') comment.push_back(ch);
            }
            if (comment.rfind("PBS", 0) == 0 && comment.size() > 3) {
                LineParser dev("", line_no);
                device = static_cast<int>(dev.number(comment.substr(3), 1u << 16));
            }
            raw = raw.substr(0, hash);
        }
        LineParser p(raw, line_no);
        if (p.done()) continue;
        const std::string head = p.next();
        if (head == "ATOMS") {
            declared_atoms = p.number(p.next(), kMaxAtoms);
        } else if (head == "PBS") {
            const std::string kind = p.next();
            if (kind == "split") {
                PbsSplit s;
                s.in = p.line();
                p.expect("->");
                s.h_out = p.line();
                s.v_out = p.line();
                s.device = device;
                if (first_split) {
                    c.input = s.in;
                    first_split = false;
                }
                c.steps.emplace_back(s);
            } else if (kind == "merge") {
                PbsMerge m;
                m.h_in = p.line();
                m.v_in = p.line();
                p.expect("->");
                m.out = p.line();
                m.device = device;
                c.output = m.out;
                c.steps.emplace_back(m);
            } else {
                p.fail("expected 'split' or 'merge'");
            }
        } else if (head == "HWP") {
            unsigned deg = p.number(p.next(), 360);
            auto angle = hwp_from_degrees(static_cast<int>(deg));
            if (!angle) p.fail("HWP angle must be 0, 45 or 90");
            c.steps.emplace_back(HwpStep{p.line(), *angle});
        } else if (head == "MIRROR") {
            c.steps.emplace_back(MirrorStep{p.line()});
        } else if (head == "CAV") {
            CavityVisit v;
            v.line = p.line();
            v.atom = p.atom();
            max_atom = std::max(max_atom, v.atom + 1);
            c.steps.emplace_back(v);
        } else {
            p.fail("unknown element '" + head + "'");
        }
        if (!p.done()) p.fail("trailing tokens");
    }
    if (first_split) {
        // No PBS: the photon stays on the line of the first step.
        for (const auto &step : c.steps) {
            if (auto *h = std::get_if<HwpStep>(&step)) c.input = h->line;
            else if (auto *m = std::get_if<MirrorStep>(&step)) c.input = m->line;
            else if (auto *v = std::get_if<CavityVisit>(&step)) c.input = v->line;
            break;
        }
        c.output = c.input;
    }
    c.atom_count = declared_atoms.value_or(max_atom);
    validate(c);
    return c;
}

}  // namespace lgs
