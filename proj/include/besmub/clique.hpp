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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "besmub/cayley_graph.hpp"
#include "besmub/modp.hpp"

namespace besmub {

inline constexpr std::uint64_t kDefaultSeed = 20110301;

enum class Provenance { subgroup, coset, constructive, exact_search, heuristic_search, imported };

std::string_view to_string(Provenance p) noexcept;
/// Throws std::invalid_argument for unknown names.
Provenance provenance_from_string(std::string_view name);

/// A set of SL(2, Z_p) elements claimed to be pairwise unbiased.
struct MubCertificate {
  std::uint32_t p = 0;
  std::vector<Sl2Matrix> members;
  Provenance provenance = Provenance::imported;
  bool verified_graph = false;
  bool verified_oracle = false;

  std::size_t size() const noexcept { return members.size(); }
};

/// Raised when a construction is asked for parameters it cannot honour.
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
  double max_seconds = 60.0;
  std::uint64_t seed = kDefaultSeed;
  /// Stop as soon as a clique of this size is found; 0 disables.
  std::size_t target_size = 0;
  /// Independent restart streams for the heuristic; 1 keeps runs bit-reproducible.
  unsigned workers = 1;

  /// Throws std::invalid_argument unless every limit is positive.
  void validate() const;
};

struct SearchResult {
  MubCertificate certificate;
  bool optimal = false;
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

/// True iff every pair of listed vertices is adjacent. Throws std::out_of_range
/// for indices outside the graph.
bool is_clique(const CayleyGraph &g, std::span<const std::size_t> members);

/// Vertex indices of the certificate members. Throws std::out_of_range for
/// matrices that are not vertices of g.
std::vector<std::size_t> member_indices(const CayleyGraph &g, const MubCertificate &cert);
MubCertificate certificate_from_indices(const CayleyGraph &g, std::span<const std::size_t> members,
                                        Provenance provenance);

/// The two generators listed for p in {3, 5, 7, 11}.
std::pair<Sl2Matrix, Sl2Matrix> subgroup_generators(Prime p);
/// Closure of the generators under multiplication, sorted.
std::vector<Sl2Matrix> generate_subgroup(std::span<const Sl2Matrix> generators);

/// Order p^2 - 1 subgroup whose elements pairwise satisfy Tr(F_i^-1 F_j) != 2.
/// Throws InvalidParameters for p outside {3, 5, 7, 11}.
MubCertificate subgroup_clique(Prime p);

/// The p left cosets [[1,0],[t,1]] H_p, t = 0..p-1.
std::vector<MubCertificate> coset_partition(Prime p);

/// The two triangles that partition SL(2, Z_2).
std::vector<MubCertificate> qubit_partition();

/// s != 0 and t^2 + 4s a non-residue, i.e. s x^2 + t x y - y^2 anisotropic.
bool valid_constructive_parameters(Prime p, std::uint32_t s, std::uint32_t t);
std::vector<std::pair<std::uint32_t, std::uint32_t>> constructive_parameters(Prime p);

/// Image of the symmetric matrix [[a, b], [b, s a + t b]] (b != 0) in SL(2, Z_p).
Sl2Matrix constructive_member(Prime p, std::uint32_t a, std::uint32_t b, std::uint32_t s, std::uint32_t t);

/// p(p-1)-element clique. Throws InvalidParameters at p = 2 or for (s, t)
/// failing valid_constructive_parameters.
MubCertificate constructive_clique(Prime p, std::uint32_t s, std::uint32_t t);

/// Branch and bound with greedy colouring bounds. Vertex transitivity lets the
/// search fix the identity as the first member.
SearchResult exact_max_clique(const CayleyGraph &g, const SearchBudget &budget);

/// Grows base inside its common neighbourhood. The result always contains
/// base; optimal means the extension is maximum (the budget was not hit).
SearchResult extend_clique(const CayleyGraph &g, const MubCertificate &base, const SearchBudget &budget);

/// Extends constructive cliques for each valid (s, t) in turn, splitting the
/// budget, until one reaches budget.target_size (default p(p-1) + 2).
/// Returns the largest result. Throws InvalidParameters at p = 2.
SearchResult extend_constructive(const CayleyGraph &g, const SearchBudget &budget);

/// Iterated local search on the complement (a sparse graph): free additions,
/// (1,2)-swaps and single-vertex perturbations. Stagnation sends the search back
/// to the best clique of the current basin, and repeated stagnation restarts it
/// from a random greedy clique. Seeded from seed when given, otherwise from the constructive
/// clique of the first valid (s, t) at odd p and a greedy clique at p = 2.
SearchResult heuristic_clique(const CayleyGraph &g, const SearchBudget &budget,
                              const MubCertificate *seed = nullptr);

struct PairViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  std::string reason;
};

struct VerificationReport {
  bool graph_ok = false;
  bool oracle_run = false;
  bool oracle_ok = false;
  bool oracle_exhaustive = false;
  std::uint64_t oracle_overlaps_checked = 0;
  double max_overlap_defect = 0.0;
  std::vector<PairViolation> graph_violations;
  std::vector<PairViolation> oracle_violations;

  bool ok() const noexcept { return graph_ok && (!oracle_run || oracle_ok); }
};

struct OracleOptions {
  double tolerance = 1e-9;
  /// Largest p checked exhaustively; above it random cross pairs are sampled.
  std::uint32_t exhaustive_max_p = 5;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = kDefaultSeed;
};

/// Pairwise trace test always; with use_oracle every (or a sample of) cross
/// basis overlap is compared with 1/p. Violations are report content.
VerificationReport verify_certificate(const MubCertificate &cert, bool use_oracle,
                                      const OracleOptions &options = {});

/// Runs verify_certificate and stamps the verified flags.
MubCertificate verified(MubCertificate cert, bool use_oracle, const OracleOptions &options = {});

}  // namespace besmub
