// Copyright 2026 The spectral-moore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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

namespace smoore::cli {

enum class Format { Text, Json, Csv };

struct RunConfig {
  std::string command;
  Format format = Format::Text;
  double tol = 1e-9;  // SPECTRAL_MOORE_TOL or --tol
  std::uint64_t seed = 0;
  int threads = 1;
  std::string table7;
};

/// Runs one subcommand. args excludes the program name.
/// Returns 0 on success, 2 when a check fails, 1 on usage errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smoore::cli
