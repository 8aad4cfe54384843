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

#include <string>
#include <string_view>

#include "lgs/state.hpp"

namespace lgs {

// Two textual forms are accepted (whitespace is ignored everywhere):
//
//   product:  photon(l0)=0.7071H+0.7071V; atom1=1.0gh; atom2=0.6gh+0.8gv
//   terms:    0.5|H,l0,gh,gv> + (0.5-0.5i)|V,l2,gv,gh>
//
// Coefficients are real (`0.6`), imaginary (`0.8i`, `-i`), complex (`0.6+0.8i`
// or `(0.6+0.8i)`), or omitted (1). Product literals are validated per qubit.

HybridState parse_state_literal(std::string_view text, double prune_threshold = kDefaultPruneThreshold);

/// Complex number as `a+bi` with `digits` significant digits.
std::string format_amplitude(Amplitude a, int digits = 10);

/// Terms form, in basis-ket order. An empty state prints as `0`.
std::string format_state(const HybridState &s, int digits = 10);

std::string format_ket(const BasisKet &k, std::size_t atom_count);

}  // namespace lgs
