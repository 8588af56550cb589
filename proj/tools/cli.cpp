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

#include "cli.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ecx/canonical.hpp"
#include "ecx/cocritical.hpp"
#include "ecx/coloring.hpp"
#include "ecx/criticality.hpp"
#include "ecx/enumerate.hpp"
#include "ecx/graph.hpp"
#include "ecx/graph6.hpp"
#include "ecx/verify.hpp"
#include "json.hpp"

namespace ecx::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text, const char* flag) {
  Range r;
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, colon));
      r.hi = std::stoi(text.substr(colon + 1));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(flag) + ": expected N or LO:HI, got '" +
                                text + "'");
  }
  if (r.hi < r.lo) {
    throw std::invalid_argument(std::string(flag) + ": empty range '" + text + "'");
  }
  return r;
}

VertexPair parse_edge(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("--edge: expected U,V, got '" + text + "'");
  }
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument("--edge: expected U,V, got '" + text + "'");
  }
}

SimpleGraph family_graph(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        params.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw std::invalid_argument("--family: bad parameter '" + item + "'");
      }
    }
  }
  auto arity = [&](std::size_t want) {
    if (params.size() != want) {
      throw std::invalid_argument("--family: " + name + " takes " +
                                  std::to_string(want) + " parameter(s)");
    }
  };
  if (name == "complete") {
    arity(1);
    return complete_graph(params[0]);
  }
  if (name == "cycle") {
    arity(1);
    return cycle_graph(params[0]);
  }
  if (name == "empty") {
    arity(1);
    return empty_graph(params[0]);
  }
  if (name == "petersen") {
    arity(0);
    return petersen_graph();
  }
  if (name == "extremal") {
    arity(2);
    return construct_extremal(params[0], params[1]);
  }
  throw std::invalid_argument("--family: unknown family '" + name + "'");
}

// One graph source per graph-consuming subcommand: inline graph6, a file
// ('-' reads standard input), or a constructed family.
struct GraphInput {
  std::string graph6;
  std::string file;
  std::string family;

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph", graph6, "inline graph6 value");
    cmd->add_option("--file", file, "graph6 file, one graph per line ('-' = stdin)");
    cmd->add_option("--family", family,
                    "constructed family: complete:N, cycle:N, empty:N, "
                    "petersen, extremal:N,K");
  }

  bool batch() const { return !file.empty(); }

  std::vector<SimpleGraph> load(std::istream& in) const {
    const int sources =
        (graph6.empty() ? 0 : 1) + (file.empty() ? 0 : 1) + (family.empty() ? 0 : 1);
    if (sources != 1) {
      throw std::invalid_argument(
          "exactly one of --graph, --file, --family is required");
    }
    std::vector<SimpleGraph> graphs;
    if (!graph6.empty()) {
      graphs.push_back(parse_graph6(graph6));
    } else if (!family.empty()) {
      graphs.push_back(family_graph(family));
    } else if (file == "-") {
      for_each_graph6_line(in, [&](const SimpleGraph& g) { graphs.push_back(g); });
    } else {
      std::ifstream stream(file);
      if (!stream) throw std::runtime_error("--file: cannot open " + file);
      for_each_graph6_line(stream,
                           [&](const SimpleGraph& g) { graphs.push_back(g); });
    }
    return graphs;
  }
};

void print_json(std::ostream& out, const ordered_json& doc) {
  out << doc.dump() << '\n';
}

// Wraps per-graph results: a bare object for single-graph sources, an array
// in file mode, so identical inputs always render identical bytes.
void emit_per_graph(std::ostream& out, bool batch, std::vector<ordered_json> docs) {
  if (batch) {
    print_json(out, ordered_json(docs));
  } else {
    print_json(out, docs.front());
  }
}

ordered_json edge_json(const VertexPair& e) {
  return ordered_json::array({e.first, e.second});
}

std::string verification_status(int n, int k) {
  const int clique = (k + 1) / 2 + bound_min_edges(n, k).epsilon;
  return n - clique <= 14 ? "exact" : "by-construction";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"exact edge-coloring, criticality and co-critical graph toolkit",
               "ecx"};
  app.require_subcommand(1);

  bool json = false;
  bool strict = false;
  int jobs = 0;
  app.add_flag("--json", json, "machine-readable output");
  app.add_flag("--strict", strict, "exit 1 when a queried predicate is false");
  app.add_option("--jobs", jobs, "worker threads for verify (default: all cores)")
      ->envname("ECX_JOBS");

  // chi
  auto* chi_cmd = app.add_subcommand("chi", "exact chromatic index");
  GraphInput chi_in;
  chi_in.attach(chi_cmd);
  bool emit_coloring = false;
  chi_cmd->add_flag("--emit-coloring", emit_coloring,
                    "also print an optimal coloring, one 'u v color' per line");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "class 1 / class 2 label");
  GraphInput classify_in;
  classify_in.attach(classify_cmd);

  // critical-edge
  auto* critical_cmd =
      app.add_subcommand("critical-edge", "does removing the edge lower chi'?");
  GraphInput critical_in;
  critical_in.attach(critical_cmd);
  std::string critical_edge_text;
  critical_cmd->add_option("--edge", critical_edge_text, "edge as U,V")
      ->required();

  // delta-critical
  auto* delta_cmd = app.add_subcommand(
      "delta-critical", "connected, class 2, and every edge critical?");
  GraphInput delta_in;
  delta_in.attach(delta_cmd);

  // val
  auto* val_cmd = app.add_subcommand(
      "val", "adjacency condition at a critical edge of a class 2 graph");
  GraphInput val_in;
  val_in.attach(val_cmd);
  std::string val_edge_text;
  val_cmd->add_option("--edge", val_edge_text, "edge as U,V")->required();

  // saturated
  auto* saturated_cmd = app.add_subcommand(
      "saturated", "class 1 and every added edge forces one more color?");
  GraphInput saturated_in;
  saturated_in.attach(saturated_cmd);

  // cocritical
  auto* cocritical_cmd =
      app.add_subcommand("cocritical", "(P3; k)-co-criticality check");
  GraphInput cocritical_in;
  cocritical_in.attach(cocritical_cmd);
  int cocritical_k = 0;
  cocritical_cmd->add_option("--k", cocritical_k, "number of colors")->required();

  // bound
  auto* bound_cmd =
      app.add_subcommand("bound", "minimum-edge bound for given n and k");
  int bound_n = 0;
  int bound_k = -1;
  int bound_delta = -1;
  bound_cmd->add_option("--n", bound_n, "vertex count")->required();
  bound_cmd->add_option("--k", bound_k, "color count");
  bound_cmd->add_option("--delta", bound_delta, "maximum degree");

  // ramsey
  auto* ramsey_cmd = app.add_subcommand("ramsey", "smallest n forcing two "
                                                  "adjacent same-colored edges");
  int ramsey_k = 0;
  bool ramsey_brute = false;
  ramsey_cmd->add_option("--k", ramsey_k, "number of colors")->required();
  ramsey_cmd->add_flag("--brute", ramsey_brute,
                       "cross-check by exhaustive search (k <= 8)");

  // construct
  auto* construct_cmd =
      app.add_subcommand("construct", "minimum-size co-critical witness");
  int construct_n = 0;
  int construct_k = 0;
  construct_cmd->add_option("--n", construct_n, "vertex count")->required();
  construct_cmd->add_option("--k", construct_k, "color count")->required();

  // factorize
  auto* factorize_cmd = app.add_subcommand(
      "factorize", "perfect-matching decomposition of a complete graph");
  int factorize_n = 0;
  factorize_cmd->add_option("--n", factorize_n, "order (even)")->required();

  // enumerate
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "all graphs on n vertices, one per class");
  int enumerate_n = 0;
  bool enumerate_count = false;
  enumerate_cmd->add_option("--n", enumerate_n, "vertex count")->required();
  enumerate_cmd->add_flag("--count", enumerate_count, "print only the count");

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "exhaustive minimum-edge bound certification");
  std::string verify_mode;
  verify_cmd->add_option("mode", verify_mode, "lower | song")
      ->required()
      ->check(CLI::IsMember({"lower", "song"}));
  std::string verify_n_text;
  std::string verify_k_text;
  std::string verify_delta_text;
  std::string verify_file;
  std::string verify_provenance;
  bool verify_csv = false;
  bool verify_with_meta = false;
  verify_cmd->add_option("--n", verify_n_text, "vertex count N or range LO:HI")
      ->required();
  verify_cmd->add_option("--k", verify_k_text, "color count K or range LO:HI");
  verify_cmd->add_option("--delta", verify_delta_text,
                         "maximum degree D or range LO:HI");
  verify_cmd->add_option("--file", verify_file,
                         "graph6 stream instead of the built-in enumerator "
                         "('-' = stdin; single n only)");
  verify_cmd->add_option("--provenance", verify_provenance,
                         "provenance string recorded with a stream");
  verify_cmd->add_flag("--csv", verify_csv, "CSV report");
  verify_cmd->add_flag("--with-meta", verify_with_meta,
                       "append the volatile metadata block to reports");

  // encode / decode
  auto* encode_cmd = app.add_subcommand("encode", "graph6 form of the input");
  GraphInput encode_in;
  encode_in.attach(encode_cmd);
  auto* decode_cmd = app.add_subcommand("decode", "explicit edges of the input");
  GraphInput decode_in;
  decode_in.attach(decode_cmd);

  // global flags remain usable after the subcommand name
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  std::vector<const char*> argv{"ecx"};
  for (const std::string& a : args) argv.push_back(a.c_str());

  bool predicates_hold = true;
  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }

    if (chi_cmd->parsed()) {
      const auto graphs = chi_in.load(in);
      std::vector<ordered_json> docs;
      for (const SimpleGraph& g : graphs) {
        const int chi = chromatic_index_exact(g);
        if (json) {
          ordered_json doc{{"n", g.vertex_count()},
                           {"m", g.edge_count()},
                           {"max_degree", g.max_degree()},
                           {"chi", chi}};
          if (emit_coloring) {
            const auto witness = find_proper_coloring(g, chi);
            ordered_json lines = ordered_json::array();
            const auto edge_list = g.edges();
            for (std::size_t i = 0; i < edge_list.size(); ++i) {
              lines.push_back(ordered_json::array({edge_list[i].first,
                                                   edge_list[i].second,
                                                   witness->colors()[i]}));
            }
            doc["coloring"] = lines;
          }
          docs.push_back(std::move(doc));
        } else {
          out << chi << '\n';
          if (emit_coloring) out << find_proper_coloring(g, chi)->serialize();
        }
      }
      if (json) emit_per_graph(out, chi_in.batch(), std::move(docs));
    } else if (classify_cmd->parsed()) {
      const auto graphs = classify_in.load(in);
      std::vector<ordered_json> docs;
      for (const SimpleGraph& g : graphs) {
        const ClassLabel label = classify(g);
        const int cls = label.cls == GraphClass::Class1 ? 1 : 2;
        if (json) {
          docs.push_back(ordered_json{{"class", cls},
                                      {"chi", label.chromatic_index},
                                      {"max_degree", label.max_degree}});
        } else {
          out << "class " << cls << " (chi=" << label.chromatic_index
              << ", max_degree=" << label.max_degree << ")\n";
        }
      }
      if (json) emit_per_graph(out, classify_in.batch(), std::move(docs));
    } else if (critical_cmd->parsed()) {
      const auto [u, v] = parse_edge(critical_edge_text);
      const auto graphs = critical_in.load(in);
      std::vector<ordered_json> docs;
      for (const SimpleGraph& g : graphs) {
        const bool critical = is_critical_edge(g, u, v);
        predicates_hold = predicates_hold && critical;
        if (json) {
          docs.push_back(ordered_json{{"edge", edge_json({u, v})},
                                      {"critical", critical}});
        } else {
          out << (critical ? "true" : "false") << '\n';
        }
      }
      if (json) emit_per_graph(out, critical_in.batch(), std::move(docs));
    } else if (delta_cmd->parsed()) {
      const auto graphs = delta_in.load(in);
      std::vector<ordered_json> docs;
      for (const SimpleGraph& g : graphs) {
        const bool res = is_delta_critical(g);
        predicates_hold = predicates_hold && res;
        if (json) {
          docs.push_back(ordered_json{{"delta_critical", res}});
        } else {
          out << (res ? "true" : "false") << '\n';
        }
      }
      if (json) emit_per_graph(out, delta_in.batch(), std::move(docs));
    } else if (val_cmd->parsed()) {
      const auto [u, v] = parse_edge(val_edge_text);
      const auto graphs = val_in.load(in);
      std::vector<ordered_json> docs;
      for (const SimpleGraph& g : graphs) {
        const ValCheck check = val_check(g, u, v);
        predicates_hold = predicates_hold && check.holds;
        auto side = [](const ValSide& s) {
          return ordered_json{{"x", s.x},
                              {"y", s.y},
                              {"required", s.required},
                              {"found", s.found},
                              {"holds", s.holds}};
        };
        if (json) {
          docs.push_back(ordered_json{
              {"xy", side(check.xy)}, {"yx", side(check.yx)}, {"holds", check.holds}});
        } else {
          auto line = [&](const ValSide& s) {
            out << s.x << "->" << s.y << ": required=" << s.required
                << " found=" << s.found << (s.holds ? " holds" : " fails")
                << '\n';
          };
          line(check.xy);
          line(check.yx);
        }
      }
      if (json) emit_per_graph(out, val_in.batch(), std::move(docs));
    } else if (saturated_cmd->parsed()) {
      const auto graphs = saturated_in.load(in);
      std::vector<ordered_json> docs;
      for (const SimpleGraph& g : graphs) {
        const bool res = is_saturated_class1(g);
        predicates_hold = predicates_hold && res;
        if (json) {
          docs.push_back(ordered_json{{"saturated", res}});
        } else {
          out << (res ? "true" : "false") << '\n';
        }
      }
      if (json) emit_per_graph(out, saturated_in.batch(), std::move(docs));
    } else if (cocritical_cmd->parsed()) {
      const auto graphs = cocritical_in.load(in);
      std::vector<ordered_json> docs;
      for (const SimpleGraph& g : graphs) {
        const CoCriticalReport rep = is_p3k_cocritical(g, cocritical_k);
        predicates_hold = predicates_hold && rep.is_cocritical;
        if (json) {
          ordered_json doc{{"k", rep.k},
                           {"cocritical", rep.is_cocritical},
                           {"chi", rep.chromatic_index},
                           {"max_degree", rep.max_degree}};
          doc["failing_edge"] =
              rep.failing_edge ? edge_json(*rep.failing_edge) : ordered_json();
          docs.push_back(std::move(doc));
        } else if (rep.is_cocritical) {
          out << "true (chi=" << rep.chromatic_index
              << ", max_degree=" << rep.max_degree << ")\n";
        } else if (rep.failing_edge) {
          out << "false (adding " << rep.failing_edge->first << "-"
              << rep.failing_edge->second << " stays " << rep.k
              << "-colorable)\n";
        } else {
          out << "false (chi=" << rep.chromatic_index << " > k=" << rep.k
              << ")\n";
        }
      }
      if (json) emit_per_graph(out, cocritical_in.batch(), std::move(docs));
    } else if (bound_cmd->parsed()) {
      if ((bound_k < 0) == (bound_delta < 0)) {
        throw std::invalid_argument("bound: give exactly one of --k, --delta");
      }
      const BoundParams p = bound_min_edges(bound_n, std::max(bound_k, bound_delta));
      if (json) {
        print_json(out, ordered_json{{"n", p.n},
                                     {"d", p.d},
                                     {"epsilon", p.epsilon},
                                     {"value", p.value}});
      } else {
        out << p.value << " (epsilon=" << p.epsilon << ")\n";
      }
    } else if (ramsey_cmd->parsed()) {
      const int value = ramsey_p3_formula(ramsey_k);
      std::optional<int> brute;
      if (ramsey_brute) {
        brute = ramsey_p3_bruteforce(ramsey_k);
        if (*brute != value) {
          throw std::logic_error("ramsey: brute force disagrees with the formula");
        }
      }
      if (json) {
        ordered_json doc{{"k", ramsey_k}, {"value", value}};
        doc["bruteforce"] = brute ? ordered_json(*brute) : ordered_json();
        print_json(out, doc);
      } else {
        out << value << '\n';
      }
    } else if (construct_cmd->parsed()) {
      const SimpleGraph g = construct_extremal(construct_n, construct_k);
      const std::string status = verification_status(construct_n, construct_k);
      if (status == "exact" &&
          !is_p3k_cocritical(g, construct_k).is_cocritical) {
        throw std::logic_error("construct: witness failed verification");
      }
      const std::string g6 = encode_graph6(g);
      const long long bound = bound_min_edges(construct_n, construct_k).value;
      if (json) {
        print_json(out, ordered_json{{"graph6", g6},
                                     {"n", construct_n},
                                     {"k", construct_k},
                                     {"edges", g.edge_count()},
                                     {"bound", bound},
                                     {"verification", status}});
      } else {
        out << g6 << '\n';
        out << "n=" << construct_n << " k=" << construct_k
            << " edges=" << g.edge_count() << " bound=" << bound
            << " verification=" << status << '\n';
      }
    } else if (factorize_cmd->parsed()) {
      const auto rounds = one_factorization(factorize_n);
      if (json) {
        ordered_json doc{{"order", factorize_n}};
        ordered_json arr = ordered_json::array();
        for (const auto& matching : rounds) {
          ordered_json m = ordered_json::array();
          for (const auto& e : matching) m.push_back(edge_json(e));
          arr.push_back(std::move(m));
        }
        doc["rounds"] = std::move(arr);
        print_json(out, doc);
      } else {
        for (const auto& matching : rounds) {
          for (std::size_t i = 0; i < matching.size(); ++i) {
            if (i > 0) out << ' ';
            out << matching[i].first << '-' << matching[i].second;
          }
          out << '\n';
        }
      }
    } else if (enumerate_cmd->parsed()) {
      if (enumerate_count) {
        const auto count = count_graphs(enumerate_n);
        if (json) {
          print_json(out, ordered_json{{"n", enumerate_n}, {"count", count}});
        } else {
          out << count << '\n';
        }
      } else if (json) {
        ordered_json graphs = ordered_json::array();
        enumerate_graphs(enumerate_n, [&](const SimpleGraph& g) {
          graphs.push_back(encode_graph6(g));
        });
        print_json(out, ordered_json{{"n", enumerate_n}, {"graphs", graphs}});
      } else {
        enumerate_graphs(enumerate_n, [&](const SimpleGraph& g) {
          out << encode_graph6(g) << '\n';
        });
      }
    } else if (verify_cmd->parsed()) {
      const VerifyMode mode =
          verify_mode == "lower" ? VerifyMode::Lower : VerifyMode::Song;
      const Range n_range = parse_range(verify_n_text, "--n");
      if (mode == VerifyMode::Lower && verify_k_text.empty()) {
        throw std::invalid_argument("verify lower: --k is required");
      }
      if (mode == VerifyMode::Song && verify_delta_text.empty()) {
        throw std::invalid_argument("verify song: --delta is required");
      }
      const Range d_range = mode == VerifyMode::Lower
                                ? parse_range(verify_k_text, "--k")
                                : parse_range(verify_delta_text, "--delta");
      VerifyOptions opts;
      opts.workers = jobs;
      if (!verify_provenance.empty()) opts.provenance = verify_provenance;

      std::vector<VerificationReport> reports;
      if (!verify_file.empty()) {
        if (n_range.lo != n_range.hi) {
          throw std::invalid_argument(
              "verify: --file requires a single --n value");
        }
        GraphSource source;
        if (verify_file == "-") {
          std::vector<std::string> lines;
          std::string line;
          while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) lines.push_back(line);
          }
          if (!opts.provenance) opts.provenance = "stdin";
          source = graph6_lines_source(std::move(lines), n_range.lo);
        } else {
          if (!opts.provenance) opts.provenance = verify_file;
          source = graph6_file_source(verify_file, n_range.lo);
        }
        for (int d = d_range.lo; d <= d_range.hi; ++d) {
          reports.push_back(verify_cell(mode, n_range.lo, d, source, opts));
        }
      } else if (n_range.lo == n_range.hi && d_range.lo == d_range.hi) {
        // single cell: parameter problems surface as usage errors, not as
        // error-bearing sweep reports
        reports.push_back(mode == VerifyMode::Lower
                              ? verify_lower(n_range.lo, d_range.lo, opts)
                              : verify_song(n_range.lo, d_range.lo, opts));
      } else {
        reports =
            sweep(mode, n_range.lo, n_range.hi, d_range.lo, d_range.hi, opts);
      }

      for (const auto& r : reports) {
        predicates_hold = predicates_hold && r.bound_holds && !r.error;
      }
      if (json || verify_csv) {
        out << emit_report(reports,
                           verify_csv ? ReportFormat::Csv : ReportFormat::Json,
                           !verify_with_meta);
      } else {
        for (const auto& r : reports) {
          out << (r.mode == VerifyMode::Lower ? "lower" : "song") << " n=" << r.n
              << (r.mode == VerifyMode::Lower ? " k=" : " delta=") << r.d << ":";
          if (r.error) {
            out << " error: " << *r.error << '\n';
            continue;
          }
          out << " scanned=" << r.graphs_scanned
              << " accepted=" << r.accepted_count << " min_edges=";
          if (r.min_edges) {
            out << *r.min_edges;
          } else {
            out << '-';
          }
          out << " bound=" << r.bound_value
              << " holds=" << (r.bound_holds ? "true" : "false")
              << " sharp=" << (r.sharp ? "true" : "false") << " elapsed="
              << r.elapsed_ms << "ms\n";
          if (!r.witnesses.empty()) {
            out << "  witnesses:";
            for (const auto& w : r.witnesses) out << ' ' << w;
            out << '\n';
          }
        }
      }
    } else if (encode_cmd->parsed()) {
      const auto graphs = encode_in.load(in);
      std::vector<ordered_json> docs;
      for (const SimpleGraph& g : graphs) {
        if (json) {
          docs.push_back(ordered_json{{"graph6", encode_graph6(g)}});
        } else {
          out << encode_graph6(g) << '\n';
        }
      }
      if (json) emit_per_graph(out, encode_in.batch(), std::move(docs));
    } else if (decode_cmd->parsed()) {
      if (!decode_in.family.empty()) {
        throw std::invalid_argument("decode: give --graph or --file");
      }
      const auto graphs = decode_in.load(in);
      std::vector<ordered_json> docs;
      for (const SimpleGraph& g : graphs) {
        if (json) {
          ordered_json edges = ordered_json::array();
          for (const auto& e : g.edges()) edges.push_back(edge_json(e));
          docs.push_back(
              ordered_json{{"n", g.vertex_count()}, {"edges", edges}});
        } else {
          out << "n=" << g.vertex_count() << " m=" << g.edge_count() << ":";
          for (auto [u, v] : g.edges()) out << ' ' << u << '-' << v;
          out << '\n';
        }
      }
      if (json) emit_per_graph(out, decode_in.batch(), std::move(docs));
    }
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }

  if (strict && !predicates_hold) return 1;
  return 0;
}

}  // namespace ecx::cli
