// Copyright 2026 The pplab Authors
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


#ifndef PPLAB_CLI_H
#define PPLAB_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace pplab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitNumerical = 2;

/// Runs one pplab command. `args` excludes the program name. JSON goes to `out` (or the
/// --out file), diagnostics to `err`.
int parse_and_dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace pplab

#endif
