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

#ifndef ECX_VERIFY_HPP
#define ECX_VERIFY_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecx/graph.hpp"

namespace ecx {

enum class VerifyMode { Lower, Song };

/// Result of one exhaustive (n, d) cell. In lower mode d is the color count
/// and the filter is (P3; d)-co-criticality; in song mode d is the maximum
/// degree and the filter keeps class 1 graphs of that degree whose every
/// one-edge extension needs d + 1 colors.
///
/// The first block of fields is the stable report section; the trailing
/// fields are run metadata (timings, provenance, flags) that never enter
/// byte-compared output.
struct VerificationReport {
  VerifyMode mode = VerifyMode::Lower;
  int n = 0;
  int d = 0;
  long long graphs_scanned = 0;
  long long accepted_count = 0;
  std::optional<long long> min_edges;
  long long bound_value = 0;
  bool bound_holds = true;   // vacuously true when nothing is accepted
  bool sharp = false;        // accepted minimum meets the bound exactly
  std::vector<std::string> witnesses;  // canonical graph6 at the minimum

  // metadata
  long long elapsed_ms = 0;
  bool no_instances = false;
  long long complete_graphs_accepted = 0;
  std::optional<std::string> provenance;
  std::optional<std::string> note;
  std::optional<std::string> error;
};

using GraphSink = std::function<void(const SimpleGraph&)>;
using GraphSource = std::function<void(const GraphSink&)>;

/// Built-in stream: one canonical representative per isomorphism class.
GraphSource enumeration_source(int n);

/// External graph6 stream, one graph per line; every graph must have order
/// n. Duplicate classes are the supplier's responsibility.
GraphSource graph6_file_source(std::string path, int n);

/// As above, from pre-read lines (stdin support).
GraphSource graph6_lines_source(std::vector<std::string> lines, int n);

struct VerifyOptions {
  int workers = 0;  // 0 = hardware concurrency
  std::optional<std::string> graph6_path;  // overrides the enumerator
  std::optional<std::string> provenance;   // recorded with file streams
};

/// Exhaustively checks the co-critical minimum-edge bound over all graphs
/// on n vertices. Deterministic for any worker count: the stream order is
/// fixed, aggregation is a min-reduce, and witnesses are sorted.
VerificationReport verify_lower(int n, int k, const VerifyOptions& = {});

/// Same scan with the saturated-class-1 filter at maximum degree delta.
VerificationReport verify_song(int n, int delta, const VerifyOptions& = {});

VerificationReport verify_cell(VerifyMode mode, int n, int d,
                               const GraphSource& source,
                               const VerifyOptions& = {});

/// One report per (n, d) cell over inclusive ranges, n-major order.
/// Per-cell failures land in the report's error field instead of aborting
/// the sweep.
std::vector<VerificationReport> sweep(VerifyMode mode, int n_lo, int n_hi,
                                      int d_lo, int d_hi,
                                      const VerifyOptions& = {});

enum class ReportFormat { Json, Csv };

/// Renders reports sorted by (mode, n, d) with a fixed field order, so
/// identical inputs produce identical bytes. The stable section carries the
/// ten schema keys; metadata (including elapsed time) trails the stable
/// section and is omitted entirely with stable_only.
std::string emit_report(std::span<const VerificationReport> reports,
                        ReportFormat format, bool stable_only = false);

}  // namespace ecx

#endif  // ECX_VERIFY_HPP
