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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "graev/metrics.hpp"
#include "graev/words.hpp"

namespace graev::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The fixed 5-point metric used by `bench` and the benchmark suite: the
/// directed line metric min(1, (j - i) / 4) forwards and min(1, (i - j) / 3)
/// backwards.
QuasiPseudometric bench_metric();

/// A reduced word of the given length over `points` points, drawn from a
/// fixed-seed generator so every run sees the same word.
ReducedWord bench_word(std::size_t points, std::size_t length, std::uint32_t seed = 7);

}  // namespace graev::cli
