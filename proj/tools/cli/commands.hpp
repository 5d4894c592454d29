// Copyright 2026 The QQW Authors
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
#include <optional>
#include <string>
#include <vector>

namespace qqw::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kConfigError = 2,
  kNotUnitary = 3,
  kCapExceeded = 4,
};

/// Settings shared by every subcommand. Flags override values read from
/// --config, which override these defaults.
struct RunConfig {
  std::string coin = "hadamard";      ///< preset name, inline JSON or @path
  std::string init = "[1, 0]";        ///< delta pair or state object, inline JSON or @path
  int steps = 0;
  std::string format = "csv";         ///< csv | json
  std::uint64_t seed = 42;
  double tolerance = 1e-10;
};

/// Runs the command line (without the program name). All output goes to
/// out, diagnostics to err. Returns one of ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qqw::cli
