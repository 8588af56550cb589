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

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ecx/verify.hpp"

namespace ecx {

namespace {

const char* mode_name(VerifyMode mode) {
  return mode == VerifyMode::Lower ? "lower" : "song";
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          constexpr char hex[] = "0123456789abcdef";
          out += "\\u00";
          out += hex[(ch >> 4) & 0xf];
          out += hex[ch & 0xf];
        } else {
          out += ch;
        }
    }
  }
  out += '"';
  return out;
}

std::string json_opt_string(const std::optional<std::string>& s) {
  return s ? json_string(*s) : "null";
}

void append_stable_json(std::string& out, const VerificationReport& r) {
  out += "{\"mode\":";
  out += json_string(mode_name(r.mode));
  out += ",\"n\":" + std::to_string(r.n);
  out += ",\"d\":" + std::to_string(r.d);
  out += ",\"graphs_scanned\":" + std::to_string(r.graphs_scanned);
  out += ",\"accepted_count\":" + std::to_string(r.accepted_count);
  out += ",\"min_edges\":";
  out += r.min_edges ? std::to_string(*r.min_edges) : "null";
  out += ",\"bound_value\":" + std::to_string(r.bound_value);
  out += ",\"bound_holds\":";
  out += r.bound_holds ? "true" : "false";
  out += ",\"sharp\":";
  out += r.sharp ? "true" : "false";
  out += ",\"witnesses\":[";
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    if (i > 0) out += ',';
    out += json_string(r.witnesses[i]);
  }
  out += ']';
}

void append_meta_json(std::string& out, const VerificationReport& r) {
  out += ",\"meta\":{\"elapsed_ms\":" + std::to_string(r.elapsed_ms);
  out += ",\"no_instances\":";
  out += r.no_instances ? "true" : "false";
  out +=
      ",\"complete_graphs_accepted\":" + std::to_string(r.complete_graphs_accepted);
  out += ",\"provenance\":" + json_opt_string(r.provenance);
  out += ",\"note\":" + json_opt_string(r.note);
  out += ",\"error\":" + json_opt_string(r.error);
  out += '}';
}

std::string one_line(const std::string& s) {
  std::string out = s;
  std::replace(out.begin(), out.end(), '\n', ' ');
  std::replace(out.begin(), out.end(), '\r', ' ');
  return out;
}

}  // namespace

std::string emit_report(std::span<const VerificationReport> reports,
                        ReportFormat format, bool stable_only) {
  std::vector<VerificationReport> sorted(reports.begin(), reports.end());
  // "lower" sorts before "song", which the enum order already matches
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const VerificationReport& a, const VerificationReport& b) {
                     if (a.mode != b.mode) {
                       return static_cast<int>(a.mode) < static_cast<int>(b.mode);
                     }
                     if (a.n != b.n) return a.n < b.n;
                     return a.d < b.d;
                   });

  std::string out;
  if (format == ReportFormat::Json) {
    out += '[';
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i > 0) out += ',';
      append_stable_json(out, sorted[i]);
      if (!stable_only) append_meta_json(out, sorted[i]);
      out += '}';
    }
    out += "]\n";
    return out;
  }
  if (format != ReportFormat::Csv) {
    throw std::invalid_argument("emit_report: unknown format");
  }
  out +=
      "mode,n,d,graphs_scanned,accepted_count,min_edges,bound_value,"
      "bound_holds,sharp,witnesses\n";
  for (const VerificationReport& r : sorted) {
    out += mode_name(r.mode);
    out += ',' + std::to_string(r.n);
    out += ',' + std::to_string(r.d);
    out += ',' + std::to_string(r.graphs_scanned);
    out += ',' + std::to_string(r.accepted_count);
    out += ',';
    if (r.min_edges) out += std::to_string(*r.min_edges);
    out += ',' + std::to_string(r.bound_value);
    out += r.bound_holds ? ",true" : ",false";
    out += r.sharp ? ",true" : ",false";
    out += ',';
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      if (i > 0) out += ';';
      out += r.witnesses[i];  // graph6 bytes never collide with , or ;
    }
    out += '\n';
  }
  if (!stable_only) {
    for (const VerificationReport& r : sorted) {
      out += "# meta ";
      out += mode_name(r.mode);
      out += ' ' + std::to_string(r.n) + ' ' + std::to_string(r.d);
      out += " elapsed_ms=" + std::to_string(r.elapsed_ms);
      out += " no_instances=";
      out += r.no_instances ? "true" : "false";
      out += " complete_graphs_accepted=" +
             std::to_string(r.complete_graphs_accepted);
      if (r.provenance) out += " provenance=" + one_line(*r.provenance);
      if (r.note) out += " note=" + one_line(*r.note);
      if (r.error) out += " error=" + one_line(*r.error);
      out += '\n';
    }
  }
  return out;
}

}  // namespace ecx
