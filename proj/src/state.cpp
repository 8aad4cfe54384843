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

#include "lgs/state.hpp"

#include <cmath>
#include <sstream>

#include "lgs/error.hpp"

namespace lgs {

namespace {

constexpr double kNormalizationTolerance = 1e-9;

void require_finite(Amplitude a) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
        throw Error(ErrorCode::InvalidArgument, "non-finite amplitude");
    }
}

void check_pair(const QubitCoeffs &c, const std::string &name) {
    require_finite(c.first);
    require_finite(c.second);
    double n2 = std::norm(c.first) + std::norm(c.second);
    if (std::abs(n2 - 1.0) > kNormalizationTolerance) {
        std::ostringstream msg;
        msg << name << " coefficients are not normalized (|c0|^2+|c1|^2 = " << n2 << ")";
        throw Error(ErrorCode::Validation, msg.str());
    }
}

}  // namespace

char polarization_char(Polarization p) { return p == Polarization::H ? 'H' : 'V'; }

const char *atom_ground_name(AtomGround a) { return a == AtomGround::Gh ? "gh" : "gv"; }

BasisKet BasisKet::with_atom(std::size_t index, AtomGround value) const {
    BasisKet k = *this;
    std::uint64_t bit = std::uint64_t{1} << index;
    k.atoms = value == AtomGround::Gv ? (atoms | bit) : (atoms & ~bit);
    return k;
}

HybridState::HybridState(std::size_t atom_count, double prune_threshold)
    : atom_count_(atom_count), prune_threshold_(prune_threshold) {
    if (atom_count > kMaxAtoms) {
        throw Error(ErrorCode::InvalidArgument, "atom count exceeds " + std::to_string(kMaxAtoms));
    }
    if (!(prune_threshold >= 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "prune threshold must be >= 0");
    }
}

Amplitude HybridState::amplitude(const BasisKet &k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Amplitude{} : it->second;
}

void HybridState::accumulate(const BasisKet &k, Amplitude amp) {
    if (atom_count_ < 64 && (k.atoms >> atom_count_) != 0) {
        throw Error(ErrorCode::InvalidArgument, "basis ket references an atom beyond the state's atom count");
    }
    terms_[k] += amp;
}

HybridState HybridState::pruned() const {
    HybridState out = empty_like();
    for (const auto &[k, a] : terms_) {
        require_finite(a);
        if (std::abs(a) > prune_threshold_) {
            out.terms_.emplace_hint(out.terms_.end(), k, a);
        }
    }
    return out;
}

HybridState HybridState::scaled(Amplitude factor) const {
    HybridState out = empty_like();
    for (const auto &[k, a] : terms_) {
        out.terms_.emplace_hint(out.terms_.end(), k, a * factor);
    }
    return out.pruned();
}

HybridState make_product_state(const QubitCoeffs &photon, Line line, std::span<const QubitCoeffs> atoms,
                               double prune_threshold) {
    check_pair(photon, "photon");
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        check_pair(atoms[i], "atom" + std::to_string(i + 1));
    }
    HybridState s(atoms.size(), prune_threshold);
    if (atoms.size() >= 63) {
        throw Error(ErrorCode::InvalidArgument, "product states are limited to 62 atoms");
    }
    const std::uint64_t configs = std::uint64_t{1} << atoms.size();
    for (Polarization p : {Polarization::H, Polarization::V}) {
        Amplitude cp = p == Polarization::H ? photon.first : photon.second;
        if (cp == Amplitude{}) continue;
        for (std::uint64_t bits = 0; bits < configs; ++bits) {
            Amplitude amp = cp;
            for (std::size_t i = 0; i < atoms.size() && amp != Amplitude{}; ++i) {
                amp *= ((bits >> i) & 1U) ? atoms[i].second : atoms[i].first;
            }
            if (amp != Amplitude{}) s.accumulate(BasisKet{p, line, bits}, amp);
        }
    }
    return s.pruned();
}

HybridState basis_state(const BasisKet &k, std::size_t atom_count) {
    HybridState s(atom_count);
    s.accumulate(k, 1.0);
    return s;
}

double norm_squared(const HybridState &s) {
    double total = 0.0;
    for (const auto &[k, a] : s.terms()) total += std::norm(a);
    return total;
}

Amplitude inner_product(const HybridState &a, const HybridState &b) {
    if (a.atom_count() != b.atom_count()) {
        throw Error(ErrorCode::InvalidArgument, "inner product of states with different atom counts");
    }
    // Iterate the smaller map and look up in the larger one.
    const bool a_small = a.size() <= b.size();
    const auto &small = a_small ? a : b;
    const auto &large = a_small ? b : a;
    Amplitude sum{};
    for (const auto &[k, amp] : small.terms()) {
        Amplitude other = large.amplitude(k);
        if (other == Amplitude{}) continue;
        sum += a_small ? std::conj(amp) * other : std::conj(other) * amp;
    }
    return sum;
}

double distance(const HybridState &a, const HybridState &b) {
    if (a.atom_count() != b.atom_count()) {
        throw Error(ErrorCode::InvalidArgument, "distance between states with different atom counts");
    }
    double d2 = 0.0;
    for (const auto &[k, amp] : a.terms()) d2 += std::norm(amp - b.amplitude(k));
    for (const auto &[k, amp] : b.terms()) {
        if (a.terms().find(k) == a.terms().end()) d2 += std::norm(amp);
    }
    return std::sqrt(d2);
}

Amplitude relative_phase(const HybridState &a, const HybridState &b) {
    double best = -1.0;
    Amplitude lambda{};
    for (const auto &[k, bv] : b.terms()) {
        Amplitude av = a.amplitude(k);
        if (av == Amplitude{} || bv == Amplitude{}) continue;
        if (std::abs(bv) > best) {
            best = std::abs(bv);
            Amplitude ratio = av / bv;
            lambda = ratio / std::abs(ratio);
        }
    }
    return lambda;
}

bool equal_up_to_global_phase(const HybridState &a, const HybridState &b, double tol) {
    if (a.empty() || b.empty() || norm_squared(a) == 0.0 || norm_squared(b) == 0.0) {
        throw Error(ErrorCode::InvalidArgument, "global-phase comparison of a zero state");
    }
    Amplitude lambda = relative_phase(a, b);
    if (lambda == Amplitude{}) return false;
    return distance(a, b.scaled(lambda)) <= tol;
}

HybridState apply_polarization_map(const HybridState &s, Line line, const PolarizationMatrix &m) {
    HybridState out = s.empty_like();
    for (const auto &[k, a] : s.terms()) {
        if (k.line != line) {
            out.accumulate(k, a);
            continue;
        }
        // Column of m selected by the incoming polarization.
        const std::size_t col = k.pol == Polarization::H ? 0 : 1;
        out.accumulate(k.with_pol(Polarization::H), m[col] * a);
        out.accumulate(k.with_pol(Polarization::V), m[2 + col] * a);
    }
    return out.pruned();
}

std::array<Amplitude, 4> atom_reduced_density(const HybridState &s, std::size_t index) {
    if (index >= s.atom_count()) {
        throw Error(ErrorCode::InvalidArgument, "atom index out of range");
    }
    std::array<Amplitude, 4> rho{};
    const std::uint64_t bit = std::uint64_t{1} << index;
    for (const auto &[k, a] : s.terms()) {
        if (k.atom(index) != AtomGround::Gh) continue;
        rho[0] += std::norm(a);
        BasisKet partner = k;
        partner.atoms |= bit;
        rho[1] += a * std::conj(s.amplitude(partner));
    }
    for (const auto &[k, a] : s.terms()) {
        if (k.atom(index) == AtomGround::Gv) rho[3] += std::norm(a);
    }
    rho[2] = std::conj(rho[1]);
    return rho;
}

HybridState restricted_to_line(const HybridState &s, Line line) {
    HybridState out = s.empty_like();
    for (const auto &[k, a] : s.terms()) {
        if (k.line == line) out.accumulate(k, a);
    }
    return out;
}

}  // namespace lgs
