// Copyright 2026 The graev Authors
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

#include <cstddef>
#include <vector>

#include "graev/extension.hpp"
#include "graev/metrics.hpp"
#include "graev/topology.hpp"

namespace graev {

/// The topology on the letters of one sign (X for +1, X^-1 for -1)
/// generated by the d^-balls centred at those letters, restricted to them.
/// Point i stands for x_i or x_i^-1 and carries the base name.
FiniteTopology letter_ball_topology(const GraevExtension& ext, int sign);

inline constexpr std::size_t kDefaultFamilyCap = 4096;

/// {rho_U : U open}, deduplicated, closed under pairwise maximum: the maxima
/// of all non-empty subfamilies. Throws kCapExceeded past `cap` metrics.
std::vector<QuasiPseudometric> rho_max_family(const FiniteTopology& t,
                                              std::size_t cap = kDefaultFamilyCap);

struct InverseFamilyReport {
  InverseTopology t_a;
  /// Generated on X^-1 by the d^-balls of every metric of the family.
  FiniteTopology family_topology;
  std::size_t family_size = 0;
  bool included = false;  // family topology coarser than T_A
  bool equal = false;
};

inline constexpr std::size_t kMaxFamilyPoints = 5;

/// Throws kCapExceeded for more than kMaxFamilyPoints points or a family
/// larger than `cap`.
InverseFamilyReport graev_family_topology_on_inverse(const FiniteTopology& t,
                                                     std::size_t cap = kDefaultFamilyCap);

}  // namespace graev
