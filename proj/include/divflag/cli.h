// Copyright 2026 The Authors.
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

#ifndef DIVFLAG_CLI_H_
#define DIVFLAG_CLI_H_

#include <ostream>

namespace divflag {

inline constexpr int kExitCertified = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitRefuted = 2;

// Runs one `divflag` invocation. Returns 0 when the verdict is positive (or
// the command only reports data), 2 when it is negative or undecided, and 1
// on usage, input or IO errors.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace divflag

#endif  // DIVFLAG_CLI_H_
