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

#include "ecx/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ecx/canonical.hpp"
#include "ecx/cocritical.hpp"
#include "ecx/criticality.hpp"
#include "ecx/enumerate.hpp"
#include "ecx/graph6.hpp"

namespace ecx {

GraphSource enumeration_source(int n) {
  return [n](const GraphSink& sink) { enumerate_graphs(n, sink); };
}

namespace {

void sink_checked(const SimpleGraph& g, int n, const GraphSink& sink) {
  if (g.vertex_count() != n) {
    throw std::invalid_argument(
        "graph6 stream: graph order " + std::to_string(g.vertex_count()) +
        " does not match cell order " + std::to_string(n));
  }
  sink(g);
}

}  // namespace

GraphSource graph6_file_source(std::string path, int n) {
  return [path = std::move(path), n](const GraphSink& sink) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
    for_each_graph6_line(in,
                         [&](const SimpleGraph& g) { sink_checked(g, n, sink); });
  };
}

GraphSource graph6_lines_source(std::vector<std::string> lines, int n) {
  return [lines = std::move(lines), n](const GraphSink& sink) {
    for (const std::string& line : lines) {
      if (line.empty()) continue;
      sink_checked(parse_graph6(line), n, sink);
    }
  };
}

namespace {

struct Outcome {
  bool accepted = false;
  bool complete = false;
  int edges = 0;
  std::string witness;
};

// Evaluates a fixed block of graphs across workers (one graph per work
// unit), then folds the results in stream order, so the aggregate never
// depends on the worker count or on scheduling.
class CellRunner {
 public:
  CellRunner(VerifyMode mode, int d, int workers)
      : mode_(mode), d_(d), workers_(workers) {}

  void feed(const SimpleGraph& g) {
    block_.push_back(g);
    if (block_.size() >= kBlockSize) flush();
  }

  void finish() { flush(); }

  long long scanned = 0;
  long long accepted = 0;
  long long complete_accepted = 0;
  std::optional<long long> min_edges;
  std::vector<std::string> witnesses;

 private:
  static constexpr std::size_t kBlockSize = 1024;

  Outcome evaluate(const SimpleGraph& g) const {
    Outcome out;
    out.complete = g.is_complete();
    if (mode_ == VerifyMode::Lower) {
      // complete graphs are outside the co-critical definition
      if (out.complete || g.max_degree() > d_) return out;
      out.accepted = is_p3k_cocritical(g, d_).is_cocritical;
    } else {
      if (g.max_degree() != d_) return out;
      out.accepted = is_saturated_class1(g);
    }
    if (out.accepted) {
      out.edges = g.edge_count();
      out.witness = encode_graph6(canonical_graph(g));
    }
    return out;
  }

  void flush() {
    if (block_.empty()) return;
    std::vector<Outcome> results(block_.size());
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&]() {
      try {
        for (;;) {
          const std::size_t i = cursor.fetch_add(1);
          if (i >= block_.size()) break;
          results[i] = evaluate(block_[i]);
        }
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    };
    if (workers_ <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(workers_));
      for (int w = 0; w < workers_; ++w) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    for (const Outcome& out : results) {
      ++scanned;
      if (!out.accepted) continue;
      ++accepted;
      if (out.complete) ++complete_accepted;
      if (!min_edges || out.edges < *min_edges) {
        min_edges = out.edges;
        witnesses.clear();
      }
      if (out.edges == *min_edges) witnesses.push_back(out.witness);
    }
    block_.clear();
  }

  VerifyMode mode_;
  int d_;
  int workers_;
  std::vector<SimpleGraph> block_;
};

GraphSource pick_source(int n, const VerifyOptions& opts) {
  if (opts.graph6_path) return graph6_file_source(*opts.graph6_path, n);
  return enumeration_source(n);
}

}  // namespace

VerificationReport verify_cell(VerifyMode mode, int n, int d,
                               const GraphSource& source,
                               const VerifyOptions& opts) {
  if (mode == VerifyMode::Lower && d < 1) {
    throw std::invalid_argument("verify lower: k must be positive");
  }
  if (mode == VerifyMode::Song && d < 0) {
    throw std::invalid_argument("verify song: delta must be nonnegative");
  }
  if (n < 1 || n > kCanonicalCap) {
    // witnesses are reported in canonical form, which pins the cell cap
    throw std::invalid_argument("verify: n must be in [1, " +
                                std::to_string(kCanonicalCap) + "]");
  }
  const auto start = std::chrono::steady_clock::now();
  int workers = opts.workers;
  if (workers <= 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;
  }

  VerificationReport rep;
  rep.mode = mode;
  rep.n = n;
  rep.d = d;
  rep.bound_value = bound_min_edges(n, d).value;
  rep.provenance = opts.provenance;
  if (!rep.provenance && opts.graph6_path) rep.provenance = opts.graph6_path;

  CellRunner runner(mode, d, workers);
  source([&](const SimpleGraph& g) { runner.feed(g); });
  runner.finish();

  rep.graphs_scanned = runner.scanned;
  rep.accepted_count = runner.accepted;
  rep.min_edges = runner.min_edges;
  rep.complete_graphs_accepted = runner.complete_accepted;
  rep.no_instances = runner.accepted == 0;
  rep.bound_holds = !rep.min_edges || *rep.min_edges >= rep.bound_value;
  rep.sharp = rep.min_edges && *rep.min_edges == rep.bound_value;
  std::sort(runner.witnesses.begin(), runner.witnesses.end());
  rep.witnesses = std::move(runner.witnesses);
  if (mode == VerifyMode::Lower && d % 2 == 0 && n == d + 1) {
    rep.note = "n = k + 1 cell: below the usual stated range, within the "
               "bound's validity range";
  }
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

VerificationReport verify_lower(int n, int k, const VerifyOptions& opts) {
  return verify_cell(VerifyMode::Lower, n, k, pick_source(n, opts), opts);
}

VerificationReport verify_song(int n, int delta, const VerifyOptions& opts) {
  return verify_cell(VerifyMode::Song, n, delta, pick_source(n, opts), opts);
}

std::vector<VerificationReport> sweep(VerifyMode mode, int n_lo, int n_hi,
                                      int d_lo, int d_hi,
                                      const VerifyOptions& opts) {
  std::vector<VerificationReport> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int d = d_lo; d <= d_hi; ++d) {
      try {
        out.push_back(mode == VerifyMode::Lower ? verify_lower(n, d, opts)
                                                : verify_song(n, d, opts));
      } catch (const std::exception& ex) {
        VerificationReport rep;
        rep.mode = mode;
        rep.n = n;
        rep.d = d;
        try {
          rep.bound_value = bound_min_edges(n, d).value;
        } catch (const std::exception&) {
          rep.bound_value = 0;
        }
        rep.no_instances = true;
        rep.error = ex.what();
        out.push_back(std::move(rep));
      }
    }
  }
  return out;
}

}  // namespace ecx
