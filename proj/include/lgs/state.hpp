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

#include <array>
#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lgs {

using Amplitude = std::complex<double>;

enum class Polarization : std::uint8_t { H = 0, V = 1 };

/// Ground state of a Lambda-type atom. The excited level never appears in the
/// stationary basis; it only exists inside the pulse integrator.
enum class AtomGround : std::uint8_t { Gh = 0, Gv = 1 };

inline Polarization flipped(Polarization p) { return p == Polarization::H ? Polarization::V : Polarization::H; }
inline AtomGround flipped(AtomGround a) { return a == AtomGround::Gh ? AtomGround::Gv : AtomGround::Gh; }

/// The polarization that couples to an atom resting in `a` (H <-> g_h, V <-> g_v).
inline Polarization resonant_polarization(AtomGround a) {
    return a == AtomGround::Gh ? Polarization::H : Polarization::V;
}

char polarization_char(Polarization p);
const char *atom_ground_name(AtomGround a);

/// Spatial path of the photon (l0, l1, ...).
struct Line {
    std::uint16_t id = 0;
    auto operator<=>(const Line &) const = default;
};

inline constexpr std::size_t kMaxAtoms = 64;

/// One photon on one line, plus the ground state of each of `n` atoms.
/// Atom `i` is bit `i` of `atoms` (set = g_v).
struct BasisKet {
    Polarization pol = Polarization::H;
    Line line{};
    std::uint64_t atoms = 0;

    AtomGround atom(std::size_t index) const {
        return ((atoms >> index) & 1U) != 0 ? AtomGround::Gv : AtomGround::Gh;
    }
    BasisKet with_atom(std::size_t index, AtomGround value) const;
    BasisKet with_pol(Polarization p) const {
        BasisKet k = *this;
        k.pol = p;
        return k;
    }
    BasisKet on_line(Line l) const {
        BasisKet k = *this;
        k.line = l;
        return k;
    }

    auto operator<=>(const BasisKet &) const = default;
};

/// Row-major 2x2 map on (H, V): new_H = m[0] H + m[1] V, new_V = m[2] H + m[3] V.
using PolarizationMatrix = std::array<Amplitude, 4>;

inline constexpr double kDefaultPruneThreshold = 1e-14;

/// Sparse joint photon-atom state. Values are immutable in spirit: every
/// transformation returns a new state. Terms with |amp| <= prune threshold are
/// dropped whenever a state is built.
class HybridState {
   public:
    using Terms = std::map<BasisKet, Amplitude>;

    explicit HybridState(std::size_t atom_count = 0, double prune_threshold = kDefaultPruneThreshold);

    std::size_t atom_count() const { return atom_count_; }
    double prune_threshold() const { return prune_threshold_; }
    const Terms &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    Amplitude amplitude(const BasisKet &k) const;

    /// Adds `amp` to the term at `k` (no pruning; call `pruned()` afterwards).
    void accumulate(const BasisKet &k, Amplitude amp);

    HybridState pruned() const;
    HybridState scaled(Amplitude factor) const;

    /// Same atom count and threshold, no terms.
    HybridState empty_like() const { return HybridState(atom_count_, prune_threshold_); }

   private:
    std::size_t atom_count_;
    double prune_threshold_;
    Terms terms_;
};

/// Coefficients (c_h, c_v) of the photon, or (c_gh, c_gv) of an atom.
using QubitCoeffs = std::pair<Amplitude, Amplitude>;

/// Tensor product (c_H|H> + c_V|V>)_line (x) (a|g_h> + b|g_v>)_1 (x) ...
/// Throws Validation when a pair is not normalized within 1e-9.
HybridState make_product_state(const QubitCoeffs &photon, Line line, std::span<const QubitCoeffs> atoms,
                               double prune_threshold = kDefaultPruneThreshold);

HybridState basis_state(const BasisKet &k, std::size_t atom_count);

double norm_squared(const HybridState &s);

/// <a|b>, conjugate-linear in `a`.
Amplitude inner_product(const HybridState &a, const HybridState &b);

/// ||a - b||.
double distance(const HybridState &a, const HybridState &b);

/// True iff ||a - lambda b|| <= tol for the unit lambda taken from the largest
/// |b| term that both states populate. Throws on a zero state.
bool equal_up_to_global_phase(const HybridState &a, const HybridState &b, double tol);

/// Phase lambda (|lambda| = 1) used by `equal_up_to_global_phase`, or 0 when the
/// states share no term.
Amplitude relative_phase(const HybridState &a, const HybridState &b);

/// Applies `m` to the polarization of every term whose photon is on `line`.
HybridState apply_polarization_map(const HybridState &s, Line line, const PolarizationMatrix &m);

/// Reduced 2x2 density matrix of atom `index` (row-major over g_h, g_v).
std::array<Amplitude, 4> atom_reduced_density(const HybridState &s, std::size_t index);

/// Copy of `s` keeping only terms on `line`.
HybridState restricted_to_line(const HybridState &s, Line line);

}  // namespace lgs
