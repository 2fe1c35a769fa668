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

#include <cstdint>
#include <utility>
#include <vector>

#include "besmub/cayley_graph.hpp"
#include "besmub/modp.hpp"
#include "json.hpp"

namespace besmub {

inline constexpr double kSpectrumBinTolerance = 1e-6;
/// Largest p handed to the dense eigensolver by default (2184 vertices).
inline constexpr std::uint32_t kDefaultSpectrumMaxPrime = 13;

/// Distinct eigenvalues, descending, with multiplicities.
struct SpectrumReport {
  std::uint32_t p = 0;
  std::vector<std::pair<double, std::uint64_t>> pairs;
  double tolerance = kSpectrumBinTolerance;

  std::uint64_t multiplicity_sum() const noexcept;
  double trace() const noexcept;
  double sum_of_squares() const noexcept;
};

/// Closed-form spectrum of the graph: p(p^2-1)-p^2, p, -1, -p with
/// multiplicities 1, p(p-1)^2/2, p^2, (p-2)(p+1)^2/2. Coinciding values are
/// merged and zero multiplicities dropped (both happen at p = 2).
SpectrumReport expected_spectrum(Prime p);
/// Closed-form spectrum of the complement: p^2-1, p-1, 0, -(p+1).
SpectrumReport expected_complement_spectrum(Prime p);

/// Groups sorted eigenvalues whose neighbours differ by at most tol.
SpectrumReport bin_eigenvalues(std::vector<double> values, double tol = kSpectrumBinTolerance);

/// Dense symmetric eigendecomposition of the adjacency matrix. Throws
/// std::out_of_range above max_prime.
SpectrumReport computed_spectrum(const CayleyGraph &g, std::uint32_t max_prime = kDefaultSpectrumMaxPrime);
SpectrumReport computed_complement_spectrum(const CayleyGraph &g,
                                            std::uint32_t max_prime = kDefaultSpectrumMaxPrime);

/// Same distinct values within tol and identical multiplicities.
bool spectra_match(const SpectrumReport &a, const SpectrumReport &b, double tol = kSpectrumBinTolerance);

/// Spectrum of the complement of a connected k-regular graph on n vertices:
/// k -> n-k-1 and every other eigenvalue lambda -> -lambda-1.
SpectrumReport complement_image(const SpectrumReport &s, std::uint64_t n, double k);

struct ComplementReport {
  SpectrumReport computed;
  SpectrumReport expected;
  bool matches = false;
  std::size_t complement_degree = 0;
  bool degree_ok = false;
  /// complement_image of the computed graph spectrum vs the computed complement.
  bool brouwer_haemers_ok = false;
  /// complement_image of the closed-form complement spectrum vs expected_spectrum.
  bool closed_forms_consistent = false;
  bool ok() const noexcept { return matches && degree_ok && brouwer_haemers_ok && closed_forms_consistent; }
};

ComplementReport complement_spectrum_check(Prime p, std::uint32_t max_prime = kDefaultSpectrumMaxPrime);

struct SpectralBounds {
  double chromatic_lower = 0;    // 1 - lambda_max / lambda_min
  double chromatic_upper = 0;    // row colouring
  double independence_lower = 0; // row classes
  double hoffman = 0;            // -n lambda_min / (lambda_max - lambda_min)
  double clique_upper = 0;       // p^2 - 1
};

SpectralBounds spectral_bounds(Prime p);

/// Diagonals of A^2 .. A^max_power; walk-regular iff each is constant.
struct WalkRegularityReport {
  std::vector<std::pair<double, double>> diagonal_range;  // (min, max) per power
  bool walk_regular = false;
};

WalkRegularityReport walk_regularity(const CayleyGraph &g, int max_power = 4);

/// {"p": p, "pairs": [[value, multiplicity], ...]}
nlohmann::json spectrum_to_json(const SpectrumReport &s);

}  // namespace besmub
