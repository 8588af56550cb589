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

#include "support.hpp"

#include "ecx/canonical.hpp"

namespace ecx::testing {

std::uint64_t count_classes_via_labeled_scan(int n) {
  std::set<std::uint64_t> forms;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    forms.insert(canonical_form(labeled_graph_from_mask(n, mask)).bits);
  }
  return forms.size();
}

}  // namespace ecx::testing
