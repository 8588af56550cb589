// Copyright 2026 The ecx authors
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

#ifndef ECX_TOOLS_CLI_HPP
#define ECX_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ecx::cli {

/// Runs one tool invocation. Exit status: 0 on success, 1 when --strict is
/// set and a queried predicate came out false, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace ecx::cli

#endif  // ECX_TOOLS_CLI_HPP
