// Copyright 2026 The hhcover Authors.
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

#ifndef HHCOVER_TOOLS_CLI_H_
#define HHCOVER_TOOLS_CLI_H_

#include <ostream>

namespace hhcover {

// Exit codes: 0 success, 1 a check found violations, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

int CliMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hhcover

#endif  // HHCOVER_TOOLS_CLI_H_
