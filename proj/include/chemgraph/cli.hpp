// Copyright 2026 The chemgraph Authors
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

#ifndef CHEMGRAPH_CLI_HPP_
#define CHEMGRAPH_CLI_HPP_

#include <ostream>

namespace chemgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // disagreement, missing witness, exhausted budget
inline constexpr int kExitUsage = 2;

/// Worker count used when --workers is absent: CHEMGRAPH_WORKERS if it holds a
/// positive integer, otherwise the hardware concurrency.
int default_workers();

/// Entry point of the chemgraph command. Results go to out (or --output),
/// diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chemgraph::cli

#endif  // CHEMGRAPH_CLI_HPP_
