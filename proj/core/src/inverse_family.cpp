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

#include "graev/inverse_family.hpp"

#include <algorithm>
#include <set>

#include "graev/error.hpp"

namespace graev {

FiniteTopology letter_ball_topology(const GraevExtension& ext, int sign) {
  std::vector<ReducedWord> letters;
  for (PointId p = 0; p < ext.points().size(); ++p) {
    letters.push_back(ReducedWord::from_letters({sign > 0 ? Letter::positive(p)
                                                          : Letter::negative(p)}));
  }
  return generated_topology(ext.restricted(letters, ext.points()));
}

std::vector<QuasiPseudometric> rho_max_family(const FiniteTopology& t, std::size_t cap) {
  std::vector<QuasiPseudometric> family;
  std::set<std::vector<Rational>> seen;
  auto add = [&](QuasiPseudometric d) {
    if (seen.contains(d.table())) return false;
    if (family.size() == cap) {
      throw Error(ErrorCode::kCapExceeded,
                  "rho family exceeds " + std::to_string(cap) + " metrics");
    }
    seen.insert(d.table());
    family.push_back(std::move(d));
    return true;
  };
  for (Subset u : t.opens()) add(rho_from_open_set(u, t));
  // Closing under pairwise max yields every subfamily maximum.
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const QuasiPseudometric pair[] = {family[i], family[j]};
      add(max_combine(pair));
    }
  }
  return family;
}

InverseFamilyReport graev_family_topology_on_inverse(const FiniteTopology& t, std::size_t cap) {
  if (t.size() > kMaxFamilyPoints) {
    throw Error(ErrorCode::kCapExceeded, "family comparison is limited to " +
                                             std::to_string(kMaxFamilyPoints) + " points");
  }
  auto family = rho_max_family(t, cap);
  std::vector<Subset> subbase;
  for (const auto& d : family) {
    auto opens = letter_ball_topology(GraevExtension(d), -1).opens();
    subbase.insert(subbase.end(), opens.begin(), opens.end());
  }
  std::sort(subbase.begin(), subbase.end());
  subbase.erase(std::unique(subbase.begin(), subbase.end()), subbase.end());
  InverseFamilyReport report{inverse_topology(t),
                             FiniteTopology::generated_by(t.points(), subbase),
                             family.size()};
  report.included = report.family_topology.is_coarser_than(report.t_a.on_inverse);
  report.equal = report.family_topology == report.t_a.on_inverse;
  return report;
}

}  // namespace graev
