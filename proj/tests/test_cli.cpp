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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "ecx/enumerate.hpp"
#include "ecx/graph6.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result ecx_run(const std::vector<std::string>& args,
               const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int status = ecx::cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("chi and bound examples") {
  const Result chi = ecx_run({"chi", "--graph", "Bw"});
  CHECK(chi.status == 0);
  CHECK(chi.out == "3\n");

  const Result bound = ecx_run({"bound", "--n", "6", "--k", "2"});
  CHECK(bound.status == 0);
  CHECK(bound.out == "5 (epsilon=1)\n");

  const Result with_delta = ecx_run({"bound", "--n", "6", "--delta", "2"});
  CHECK(with_delta.out == bound.out);

  const Result both = ecx_run({"bound", "--n", "6", "--k", "2", "--delta", "2"});
  CHECK(both.status == 2);
}

TEST_CASE("verify reports sharp cells as json") {
  const Result r =
      ecx_run({"verify", "lower", "--n", "6", "--k", "2", "--json"});
  CHECK(r.status == 0);
  CHECK(r.out.find("\"sharp\":true") != std::string::npos);
  CHECK(r.out.find("\"bound_holds\":true") != std::string::npos);
  CHECK(r.out.find("\"meta\"") == std::string::npos);

  const Result meta = ecx_run(
      {"verify", "lower", "--n", "6", "--k", "2", "--json", "--with-meta"});
  CHECK(meta.out.find("\"meta\"") != std::string::npos);

  const Result csv = ecx_run({"verify", "song", "--n", "5", "--delta", "2",
                              "--csv"});
  CHECK(csv.status == 0);
  CHECK(csv.out.find("mode,n,d,") == 0);
  CHECK(csv.out.find("song,5,2,34,") != std::string::npos);
}

TEST_CASE("verify json output is byte-identical across worker counts") {
  const Result a = ecx_run({"verify", "lower", "--n", "6", "--k", "1:2",
                            "--json", "--jobs", "1"});
  const Result b = ecx_run({"verify", "lower", "--n", "6", "--k", "1:2",
                            "--json", "--jobs", "3"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("verify reads graph6 streams from stdin") {
  std::string stream;
  for (const auto& g : ecx::enumerate_graphs(5)) {
    stream += ecx::encode_graph6(g) + "\n";
  }
  const Result file = ecx_run(
      {"verify", "lower", "--n", "5", "--k", "2", "--file", "-", "--json"},
      stream);
  const Result builtin =
      ecx_run({"verify", "lower", "--n", "5", "--k", "2", "--json"});
  CHECK(file.status == 0);
  CHECK(file.out == builtin.out);
}

TEST_CASE("predicates, strict mode and exit codes") {
  CHECK(ecx_run({"saturated", "--family", "cycle:5"}).out == "false\n");
  CHECK(ecx_run({"saturated", "--family", "cycle:5"}).status == 0);
  CHECK(ecx_run({"saturated", "--family", "cycle:5", "--strict"}).status == 1);
  CHECK(ecx_run({"saturated", "--family", "cycle:6", "--strict"}).status == 0);

  CHECK(ecx_run({"cocritical", "--family", "extremal:6,2", "--k", "2",
                 "--strict"})
            .status == 0);
  CHECK(ecx_run({"delta-critical", "--family", "cycle:5"}).out == "true\n");
  CHECK(ecx_run({"critical-edge", "--graph", "Bw", "--edge", "0,1"}).out ==
        "true\n");

  // usage and input errors
  CHECK(ecx_run({"nonsense"}).status == 2);
  CHECK(ecx_run({"chi", "--graph", "~~~"}).status == 2);
  CHECK(ecx_run({"chi", "--graph", "Bw", "--file", "x.g6"}).status == 2);
  CHECK(ecx_run({"chi"}).status == 2);
  CHECK(ecx_run({"val", "--graph", "Cl", "--edge", "0,1"}).status == 2);
  CHECK(ecx_run({"enumerate", "--n", "10"}).status == 2);
  CHECK(ecx_run({"verify", "middle", "--n", "5", "--k", "1"}).status == 2);
  CHECK(ecx_run({"verify", "lower", "--n", "4:3", "--k", "1"}).status == 2);
  CHECK(ecx_run({"verify", "lower", "--n", "5", "--k", "0"}).status == 2);
  CHECK(ecx_run({"verify", "lower", "--n", "10", "--k", "2"}).status == 2);

  // within a sweep the failing cell is reported, not fatal
  const Result sweep_err = ecx_run(
      {"verify", "lower", "--n", "5", "--k", "0:1", "--json", "--with-meta"});
  CHECK(sweep_err.status == 0);
  CHECK(sweep_err.out.find("\"error\":\"") != std::string::npos);
  CHECK(sweep_err.out.find("\"accepted_count\":1") != std::string::npos);
  const Result diag = ecx_run({"construct", "--n", "4", "--k", "2"});
  CHECK(diag.status == 2);
  CHECK(diag.err.find("error:") == 0);
}

TEST_CASE("encode normalizes files byte-identically") {
  const std::string path = "ecx_cli_roundtrip.g6";
  {
    std::ofstream f(path);
    for (const auto& g : ecx::enumerate_graphs(4)) {
      f << ecx::encode_graph6(g) << '\n';
    }
  }
  std::string expected;
  {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    expected = ss.str();
  }
  const Result r = ecx_run({"encode", "--file", path});
  CHECK(r.status == 0);
  CHECK(r.out == expected);
  std::remove(path.c_str());
}

TEST_CASE("decode and encode are mutually inverse through the tool") {
  const Result decoded = ecx_run({"decode", "--graph", "C~", "--json"});
  CHECK(decoded.status == 0);
  CHECK(decoded.out ==
        "{\"n\":4,\"edges\":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}\n");
  const Result encoded = ecx_run({"encode", "--family", "complete:4"});
  CHECK(encoded.out == "C~\n");
}

TEST_CASE("chi emits a serialized optimal coloring on request") {
  const Result r = ecx_run({"chi", "--graph", "Bw", "--emit-coloring"});
  CHECK(r.status == 0);
  CHECK(r.out == "3\n0 1 1\n0 2 2\n1 2 3\n");

  const Result j = ecx_run({"chi", "--graph", "Bw", "--emit-coloring",
                            "--json"});
  CHECK(j.out ==
        "{\"n\":3,\"m\":3,\"max_degree\":2,\"chi\":3,"
        "\"coloring\":[[0,1,1],[0,2,2],[1,2,3]]}\n");
}

TEST_CASE("batch files run every line") {
  const std::string path = "ecx_cli_batch.g6";
  {
    std::ofstream f(path);
    f << "Bw\nC~\n";
  }
  const Result r = ecx_run({"chi", "--file", path});
  CHECK(r.status == 0);
  CHECK(r.out == "3\n3\n");
  const Result j = ecx_run({"classify", "--file", path, "--json"});
  CHECK(j.out ==
        "[{\"class\":2,\"chi\":3,\"max_degree\":2},"
        "{\"class\":1,\"chi\":3,\"max_degree\":3}]\n");
  std::remove(path.c_str());
}

TEST_CASE("graph-consuming subcommands read stdin with --file -") {
  const Result r = ecx_run({"chi", "--file", "-"}, "Bw\nC~\n");
  CHECK(r.status == 0);
  CHECK(r.out == "3\n3\n");
}

TEST_CASE("enumerate lines match the library stream") {
  const Result r = ecx_run({"enumerate", "--n", "4"});
  std::string expected;
  for (const auto& g : ecx::enumerate_graphs(4)) {
    expected += ecx::encode_graph6(g) + "\n";
  }
  CHECK(r.out == expected);
  CHECK(ecx_run({"enumerate", "--n", "5", "--count"}).out == "34\n");
}

TEST_SUITE_END();
