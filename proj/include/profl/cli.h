// Copyright 2026 The ProFL Authors
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

#ifndef PROFL_CLI_H_
#define PROFL_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace profl {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

// Runs the `profl` command line. `args` excludes the program name. Reports go
// to `out` when no output path is given; diagnostics go to `err` as single
// `ERROR <code>: <detail>` lines.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// RFC 4180 field quoting.
std::string CsvField(const std::string& value);

}  // namespace profl

#endif  // PROFL_CLI_H_
