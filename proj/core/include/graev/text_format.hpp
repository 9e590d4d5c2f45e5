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

#include <string>
#include <string_view>

#include "graev/metrics.hpp"
#include "graev/topology.hpp"

namespace graev {

// Metric files:
//   points: a b c
//   a b = 1/2
// one line per ordered pair of distinct points. With `sparse`, omitted pairs
// are 0. Topology files:
//   points: a b
//   open: a
// one line per open set; the empty and full sets are implicit. `#` starts a
// comment. Errors carry `source:line` and keep their code.

QuasiPseudometric parse_metric(std::string_view text, std::string_view source = "<input>",
                               bool sparse = false);
FiniteTopology parse_topology(std::string_view text, std::string_view source = "<input>");

std::string format_metric(const QuasiPseudometric& d);
std::string format_topology(const FiniteTopology& t);

/// Whole file contents. Throws kParse when the file cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace graev
