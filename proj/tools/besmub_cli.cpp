// Copyright 2026 The besmub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "besmub/cayley_graph.hpp"
#include "besmub/certificate_io.hpp"
#include "besmub/clique.hpp"
#include "besmub/modp.hpp"
#include "besmub/pauli.hpp"
#include "besmub/quantum_oracle.hpp"
#include "besmub/reconstruction.hpp"
#include "besmub/spectral.hpp"

namespace {

using namespace besmub;
using nlohmann::json;

enum Exit : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kBudgetExhausted = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Prime parse_prime(std::uint32_t p) {
  try {
    return Prime(p);
  } catch (const std::invalid_argument &) {
    throw UsageError("p = " + std::to_string(p) + " is not prime");
  }
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw std::runtime_error("cannot write " + path);
}

json read_json(const std::string &path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error &e) {
    throw UsageError(path + ": " + e.what());
  }
}

void print_json(const json &j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

struct GraphArgs {
  std::uint32_t p = 0;
  std::string out;
};

int cmd_graph(const GraphArgs &a) {
  const Prime p = parse_prime(a.p);
  const CayleyGraph g = build_graph(p);
  const std::string out = a.out.empty() ? "gamma_p" + std::to_string(a.p) + ".dimacs" : a.out;
  const std::string table = std::filesystem::path(out).replace_extension(".vertices.json").string();
  write_file(out, export_dimacs(g));
  write_file(table, vertex_table_json(g).dump(2) + "\n");
  std::printf("p edge %zu %llu\nwrote %s and %s\n", g.size(), static_cast<unsigned long long>(g.edge_count()),
              out.c_str(), table.c_str());
  return kOk;
}

// ---------------------------------------------------------------------------

struct FindArgs {
  std::uint32_t p = 0;
  std::string mode;
  std::optional<std::uint32_t> s;
  std::optional<std::uint32_t> t;
  bool extend = false;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t max_nodes = SearchBudget{}.max_nodes;
  double max_seconds = SearchBudget{}.max_seconds;
  unsigned workers = 1;
  std::size_t target = 0;
  std::string out;
  bool json_out = false;
};

int cmd_find(const FindArgs &a) {
  const Prime p = parse_prime(a.p);
  SearchBudget budget;
  budget.seed = a.seed;
  budget.max_nodes = a.max_nodes;
  budget.max_seconds = a.max_seconds;
  budget.workers = a.workers;
  budget.target_size = a.target;
  try {
    budget.validate();
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }

  MubCertificate cert;
  bool exhausted = false;
  std::string note;
  try {
    if (a.mode == "subgroup") {
      cert = p == 2 ? qubit_partition()[0] : subgroup_clique(p);
    } else if (a.mode == "coset") {
      const std::uint32_t t = a.t.value_or(1) % p;
      cert = p == 2 ? qubit_partition()[t] : coset_partition(p)[t];
    } else if (a.mode == "constructive") {
      if (a.s.has_value() != a.t.has_value()) throw UsageError("--s and --t go together");
      const CayleyGraph g = build_graph(p);
      if (a.extend && !a.s) {
        const SearchResult r = extend_constructive(g, budget);
        cert = r.certificate;
        exhausted = r.budget_exhausted;
      } else {
        const auto params = constructive_parameters(p);
        if (params.empty()) throw InvalidParameters("no valid (s, t) at p = 2");
        const auto [s, t] = a.s ? std::pair{*a.s, *a.t} : params.front();
        cert = constructive_clique(p, s, t);
        note = " s=" + std::to_string(s) + " t=" + std::to_string(t);
        if (a.extend) {
          const SearchResult r = extend_clique(g, cert, budget);
          cert = r.certificate;
          exhausted = r.budget_exhausted;
        }
      }
    } else if (a.mode == "exact") {
      const SearchResult r = exact_max_clique(build_graph(p), budget);
      cert = r.certificate;
      exhausted = !r.optimal;
      note = r.optimal ? " optimal" : " not proven optimal";
      note += " nodes=" + std::to_string(r.nodes);
    } else if (a.mode == "heuristic") {
      const SearchResult r = heuristic_clique(build_graph(p), budget);
      cert = r.certificate;
      exhausted = r.budget_exhausted;
      note = " iterations=" + std::to_string(r.nodes);
    } else {
      throw UsageError("unknown mode " + a.mode);
    }
  } catch (const InvalidParameters &e) {
    throw UsageError(std::string("unsupported: ") + e.what());
  } catch (const std::out_of_range &e) {
    throw UsageError(e.what());
  }

  cert = verified(std::move(cert), false);
  std::printf("size %zu provenance %s verified_graph %s%s\n", cert.size(), std::string(to_string(cert.provenance)).c_str(),
              cert.verified_graph ? "true" : "false", note.c_str());
  const json j = certificate_to_json(cert);
  if (!a.out.empty()) write_file(a.out, j.dump(2) + "\n");
  if (a.json_out) print_json(j);
  if (!cert.verified_graph) return kVerificationFailed;
  return exhausted ? kBudgetExhausted : kOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string path;
  bool oracle = false;
  bool observables = false;
  double tolerance = tolerance::kVerification;
  std::uint64_t samples = OracleOptions{}.samples;
  std::uint64_t seed = kDefaultSeed;
  bool json_out = false;
};

int cmd_verify(const VerifyArgs &a) {
  MubCertificate cert;
  try {
    cert = certificate_from_json(read_json(a.path));
  } catch (const std::invalid_argument &e) {
    throw UsageError(a.path + ": " + e.what());
  }
  OracleOptions opts;
  opts.tolerance = a.tolerance;
  opts.samples = a.samples;
  opts.seed = a.seed;
  const VerificationReport r = verify_certificate(cert, a.oracle, opts);
  bool ok = r.ok();

  json out{{"p", cert.p},
           {"size", cert.size()},
           {"graph_ok", r.graph_ok},
           {"oracle_run", r.oracle_run},
           {"oracle_ok", r.oracle_ok},
           {"oracle_exhaustive", r.oracle_exhaustive},
           {"oracle_overlaps_checked", r.oracle_overlaps_checked},
           {"max_overlap_defect", r.max_overlap_defect}};
  json violations = json::array();
  for (const auto *list : {&r.graph_violations, &r.oracle_violations}) {
    for (const auto &v : *list) violations.push_back({{"i", v.i}, {"j", v.j}, {"reason", v.reason}});
  }
  out["violations"] = violations;

  if (a.observables) {
    if (!r.graph_ok) {
      out["partition"] = nullptr;
    } else {
      const PartitionReport pr = partition_check(cert);
      out["partition"] = {{"classes", pr.classes},     {"distinct_labels", pr.distinct_labels},
                          {"repeated", pr.repeated},   {"non_weight_two", pr.non_weight_two},
                          {"full", pr.full},           {"exhausted", pr.exhausted},
                          {"ok", pr.ok()}};
      ok = ok && pr.ok();
    }
  }
  out["ok"] = ok;

  if (a.json_out) {
    print_json(out);
  } else {
    std::printf("p %u size %zu graph %s", cert.p, cert.size(), r.graph_ok ? "ok" : "FAILED");
    if (r.oracle_run) {
      std::printf(" oracle %s (%s, %llu overlaps, max defect %.3g)", r.oracle_ok ? "ok" : "FAILED",
                  r.oracle_exhaustive ? "exhaustive" : "sampled",
                  static_cast<unsigned long long>(r.oracle_overlaps_checked), r.max_overlap_defect);
    }
    std::printf("\n");
    for (const auto &v : violations) {
      std::printf("violation: members %zu and %zu: %s\n", v["i"].get<std::size_t>(), v["j"].get<std::size_t>(),
                  v["reason"].get<std::string>().c_str());
    }
    if (a.observables && out["partition"].is_object()) {
      const auto &pr = out["partition"];
      std::printf("observables: %zu classes, %zu distinct weight-two labels, %zu repeated%s\n",
                  pr["classes"].get<std::size_t>(), pr["distinct_labels"].get<std::size_t>(),
                  pr["repeated"].get<std::size_t>(), pr["exhausted"].get<bool>() ? ", all labels exhausted" : "");
    }
  }
  return ok ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------

struct SpectrumArgs {
  std::uint32_t p = 0;
  bool complement = false;
  bool json_out = false;
};

int cmd_spectrum(const SpectrumArgs &a) {
  const Prime p = parse_prime(a.p);
  SpectrumReport computed, expected;
  bool ok = false;
  try {
    if (a.complement) {
      const ComplementReport r = complement_spectrum_check(p);
      computed = r.computed;
      expected = r.expected;
      ok = r.ok();
    } else {
      computed = computed_spectrum(build_graph(p));
      expected = expected_spectrum(p);
      ok = spectra_match(computed, expected);
    }
  } catch (const std::out_of_range &e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  if (a.json_out) {
    print_json({{"computed", spectrum_to_json(computed)}, {"expected", spectrum_to_json(expected)}, {"match", ok}});
  } else {
    std::printf("%s spectrum, p = %u\n", a.complement ? "complement" : "graph", a.p);
    for (const auto &[value, mult] : computed.pairs) std::printf("  %12.6f  x %llu\n", value, static_cast<unsigned long long>(mult));
    std::printf("closed form: %s\n", ok ? "match" : "MISMATCH");
    if (!a.complement) {
      const SpectralBounds b = spectral_bounds(p);
      std::printf("chromatic number in [%g, %g], independence number in [%g, %g]\n", b.chromatic_lower,
                  b.chromatic_upper, b.independence_lower, b.hoffman);
    }
  }
  return ok ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------

struct PartitionArgs {
  std::uint32_t p = 0;
  std::string out;
  bool json_out = false;
};

int cmd_partition(const PartitionArgs &a) {
  const Prime p = parse_prime(a.p);
  std::vector<MubCertificate> parts;
  try {
    parts = p == 2 ? qubit_partition() : coset_partition(p);
  } catch (const InvalidParameters &e) {
    throw UsageError(std::string("unsupported: ") + e.what());
  }
  std::set<Sl2Matrix> all;
  std::size_t total = 0;
  bool cliques = true;
  json certs = json::array();
  for (const auto &c : parts) {
    cliques = cliques && c.verified_graph;
    total += c.size();
    all.insert(c.members.begin(), c.members.end());
    certs.push_back(certificate_to_json(c));
  }
  const bool disjoint = all.size() == total;
  const bool covers = all.size() == group_order(p);
  const bool ok = cliques && disjoint && covers;
  if (!a.out.empty()) write_file(a.out, certs.dump(2) + "\n");
  if (a.json_out) {
    print_json({{"p", a.p}, {"certificates", certs}, {"disjoint", disjoint}, {"covers_group", covers}, {"ok", ok}});
  } else {
    std::printf("%zu certificates of size %zu, all cliques %s, disjoint %s, union covers SL(2,Z_%u) %s\n", parts.size(),
                parts.front().size(), cliques ? "yes" : "NO", disjoint ? "yes" : "NO", a.p, covers ? "yes" : "NO");
  }
  return ok ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------

int cmd_observables(const std::string &path, const std::string &out) {
  const MubCertificate cert = certificate_from_json(read_json(path));
  if (cert.p == 2) throw UsageError("observables: the qubit case is covered by the fixed two-qubit table");
  const std::string csv = observables_csv(cert);
  if (out.empty()) {
    std::cout << csv;
  } else {
    write_file(out, csv);
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct ReconstructArgs {
  std::string path;
  std::optional<double> trace;
  double tolerance = tolerance::kReconstruction;
  std::string out;
  bool json_out = false;
};

int cmd_reconstruct(const ReconstructArgs &a) {
  const json j = read_json(a.path);
  ProbabilityTable table;
  try {
    table = probability_table_from_json(j);
  } catch (const std::exception &e) {
    throw UsageError(a.path + ": " + e.what());
  }
  if (table.probs.empty()) throw UsageError(a.path + ": empty probability table");
  MubCertificate cert;
  cert.p = table.p;
  cert.members = table.bases;
  cert = verified(std::move(cert), false);
  double trace = 0;
  for (double x : table.probs.front()) trace += x;
  if (a.trace) trace = *a.trace;

  ComplexMatrix w;
  try {
    w = lmm_reconstruct(cert, table, trace);
  } catch (const std::invalid_argument &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kVerificationFailed;
  }
  const auto reference = reference_operator_from_json(j);
  std::optional<double> error;
  if (reference) error = (w - *reference).norm();
  const bool lmm = lmm_check((w + w.adjoint()) / 2.0);
  const bool ok = lmm && (!error || *error <= a.tolerance);

  json result{{"p", table.p}, {"trace", trace}, {"lmm", lmm}, {"operator", complex_matrix_to_json(w)}};
  if (error) result["frobenius_error"] = *error;
  if (!a.out.empty()) write_file(a.out, result.dump(2) + "\n");
  if (a.json_out) {
    print_json(result);
  } else {
    std::printf("reconstructed %ux%u operator from %zu bases, trace %.12g, local maximally mixed %s\n",
                table.p * table.p, table.p * table.p, table.bases.size(), trace, lmm ? "yes" : "NO");
    if (error) std::printf("frobenius error vs reference: %.3e\n", *error);
  }
  return ok ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------

struct SimulateArgs {
  std::uint32_t p = 0;
  std::string cert_path;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
};

int cmd_simulate(const SimulateArgs &a) {
  MubCertificate cert;
  if (!a.cert_path.empty()) {
    cert = certificate_from_json(read_json(a.cert_path));
  } else {
    const Prime p = parse_prime(a.p);
    try {
      cert = subgroup_clique(p);
    } catch (const InvalidParameters &e) {
      throw UsageError(std::string("unsupported: ") + e.what() + "; pass --cert");
    }
  }
  if (cert.p == 2) throw UsageError("simulate requires odd p");
  const std::uint32_t d = cert.p * cert.p;
  std::mt19937_64 rng(a.seed);
  std::normal_distribution<double> normal;
  ComplexMatrix h(d, d);
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) h(i, j) = Complex(normal(rng), normal(rng));
  }
  const ComplexMatrix w = project_to_lmm((h + h.adjoint()) / 2.0, cert.p);
  const json j = probability_table_to_json(simulate_probabilities(cert.members, w), w);
  if (a.out.empty()) {
    print_json(j);
  } else {
    write_file(a.out, j.dump(2) + "\n");
    std::printf("wrote %zu x %u outcome table for a random LMM operator to %s\n", cert.size(), d, a.out.c_str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Bipartite entangled stabilizer MUBs as cliques of Cayley graphs on SL(2, Z_p)"};
  app.require_subcommand(1);

  GraphArgs graph;
  auto *graph_cmd = app.add_subcommand("graph", "Write the Cayley graph as DIMACS plus a vertex table");
  graph_cmd->add_option("--p", graph.p, "Prime modulus")->required();
  graph_cmd->add_option("--out", graph.out, "DIMACS output path (default gamma_p<p>.dimacs)");

  FindArgs find;
  auto *find_cmd = app.add_subcommand("find", "Construct or search for a clique");
  find_cmd->add_option("--p", find.p, "Prime modulus")->required();
  find_cmd->add_option("--mode", find.mode, "Construction")
      ->required()
      ->check(CLI::IsMember({"subgroup", "coset", "constructive", "exact", "heuristic"}));
  find_cmd->add_option("--s", find.s, "Constructive parameter s");
  find_cmd->add_option("--t", find.t, "Constructive parameter t, or the coset index");
  find_cmd->add_flag("--extend", find.extend, "Extend the constructive clique (all (s, t) unless given)");
  find_cmd->add_option("--seed", find.seed, "Random seed");
  find_cmd->add_option("--max-nodes", find.max_nodes, "Node or iteration budget");
  find_cmd->add_option("--max-seconds", find.max_seconds, "Time budget in seconds");
  find_cmd->add_option("--workers", find.workers, "Parallel heuristic workers");
  find_cmd->add_option("--target", find.target, "Stop once a clique of this size is found");
  find_cmd->add_option("--out", find.out, "Certificate JSON output path");
  find_cmd->add_flag("--json", find.json_out, "Print the certificate JSON");

  VerifyArgs verify;
  auto *verify_cmd = app.add_subcommand("verify", "Check a certificate");
  verify_cmd->add_option("certificate", verify.path, "Certificate JSON")->required();
  verify_cmd->add_flag("--oracle", verify.oracle, "Also compare state overlaps with 1/p");
  verify_cmd->add_flag("--observables", verify.observables, "Also check the Pauli class partition");
  verify_cmd->add_option("--tolerance", verify.tolerance, "Overlap tolerance");
  verify_cmd->add_option("--samples", verify.samples, "Sampled overlaps above p = 5");
  verify_cmd->add_option("--seed", verify.seed, "Sampling seed");
  verify_cmd->add_flag("--json", verify.json_out, "Machine-readable report");

  SpectrumArgs spectrum;
  auto *spectrum_cmd = app.add_subcommand("spectrum", "Adjacency spectrum against the closed form");
  spectrum_cmd->add_option("--p", spectrum.p, "Prime modulus")->required();
  spectrum_cmd->add_flag("--complement", spectrum.complement, "Use the complement graph");
  spectrum_cmd->add_flag("--json", spectrum.json_out, "Machine-readable report");

  PartitionArgs partition;
  auto *partition_cmd = app.add_subcommand("partition", "Partition SL(2, Z_p) into cliques of size p^2 - 1");
  partition_cmd->add_option("--p", partition.p, "Prime modulus")->required();
  partition_cmd->add_option("--out", partition.out, "Write the certificates as a JSON array");
  partition_cmd->add_flag("--json", partition.json_out, "Machine-readable report");

  std::string observables_path, observables_out;
  auto *observables_cmd = app.add_subcommand("observables", "Pauli generators of each basis as CSV");
  observables_cmd->add_option("certificate", observables_path, "Certificate JSON")->required();
  observables_cmd->add_option("--out", observables_out, "CSV output path");

  ReconstructArgs reconstruct;
  auto *reconstruct_cmd = app.add_subcommand("reconstruct", "Rebuild an LMM operator from outcome statistics");
  reconstruct_cmd->add_option("table", reconstruct.path, "Probability table JSON")->required();
  reconstruct_cmd->add_option("--trace", reconstruct.trace, "Operator trace (default: first row sum)");
  reconstruct_cmd->add_option("--tolerance", reconstruct.tolerance, "Allowed Frobenius error vs reference");
  reconstruct_cmd->add_option("--out", reconstruct.out, "Write the operator JSON");
  reconstruct_cmd->add_flag("--json", reconstruct.json_out, "Print the operator JSON");

  SimulateArgs simulate;
  auto *simulate_cmd = app.add_subcommand("simulate", "Outcome table for a random LMM operator");
  simulate_cmd->add_option("--p", simulate.p, "Prime modulus (uses the subgroup certificate)");
  simulate_cmd->add_option("--cert", simulate.cert_path, "Certificate JSON with p^2 - 1 members");
  simulate_cmd->add_option("--seed", simulate.seed, "Random seed");
  simulate_cmd->add_option("--out", simulate.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*graph_cmd) return cmd_graph(graph);
    if (*find_cmd) return cmd_find(find);
    if (*verify_cmd) return cmd_verify(verify);
    if (*spectrum_cmd) return cmd_spectrum(spectrum);
    if (*partition_cmd) return cmd_partition(partition);
    if (*observables_cmd) return cmd_observables(observables_path, observables_out);
    if (*reconstruct_cmd) return cmd_reconstruct(reconstruct);
    if (*simulate_cmd) return cmd_simulate(simulate);
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  }
  return kUsage;
}
