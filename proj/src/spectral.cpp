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

#include "besmub/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace besmub {

std::uint64_t SpectrumReport::multiplicity_sum() const noexcept {
  std::uint64_t s = 0;
  for (const auto &[v, m] : pairs) s += m;
  return s;
}

double SpectrumReport::trace() const noexcept {
  double s = 0;
  for (const auto &[v, m] : pairs) s += v * static_cast<double>(m);
  return s;
}

double SpectrumReport::sum_of_squares() const noexcept {
  double s = 0;
  for (const auto &[v, m] : pairs) s += v * v * static_cast<double>(m);
  return s;
}

namespace {

SpectrumReport normalise(std::uint32_t p, std::vector<std::pair<double, std::uint64_t>> raw) {
  std::sort(raw.begin(), raw.end(), [](const auto &a, const auto &b) { return a.first > b.first; });
  SpectrumReport out;
  out.p = p;
  for (const auto &[v, m] : raw) {
    if (m == 0) continue;
    if (!out.pairs.empty() && std::abs(out.pairs.back().first - v) <= out.tolerance) {
      out.pairs.back().second += m;
    } else {
      out.pairs.emplace_back(v, m);
    }
  }
  return out;
}

Eigen::MatrixXd adjacency(const CayleyGraph &g, bool complement) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i != j && g.adjacent(i, j) != complement) a(i, j) = 1.0;
    }
  }
  return a;
}

SpectrumReport spectrum_of(const CayleyGraph &g, bool complement, std::uint32_t max_prime) {
  if (g.p() > max_prime) {
    throw std::out_of_range("p = " + std::to_string(g.p().value()) + " exceeds the eigensolver budget (max p = " +
                            std::to_string(max_prime) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency(g, complement), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  const auto &ev = solver.eigenvalues();
  SpectrumReport s = bin_eigenvalues(std::vector<double>(ev.data(), ev.data() + ev.size()));
  s.p = g.p();
  return s;
}

}  // namespace

SpectrumReport expected_spectrum(Prime p) {
  const double q = p.value();
  const auto m = [](double v) { return static_cast<std::uint64_t>(std::llround(v)); };
  return normalise(p, {{q * (q * q - 1) - q * q, 1},
                       {q, m(q * (q - 1) * (q - 1) / 2)},
                       {-1.0, m(q * q)},
                       {-q, m((q - 2) * (q + 1) * (q + 1) / 2)}});
}

SpectrumReport expected_complement_spectrum(Prime p) {
  const double q = p.value();
  const auto m = [](double v) { return static_cast<std::uint64_t>(std::llround(v)); };
  return normalise(p, {{q * q - 1, 1},
                       {q - 1, m((q - 2) * (q + 1) * (q + 1) / 2)},
                       {0.0, m(q * q)},
                       {-(q + 1), m(q * (q - 1) * (q - 1) / 2)}});
}

SpectrumReport bin_eigenvalues(std::vector<double> values, double tol) {
  std::sort(values.begin(), values.end(), std::greater<>());
  SpectrumReport out;
  out.tolerance = tol;
  double bin_start = 0.0;
  double bin_sum = 0.0;
  for (double v : values) {
    if (!out.pairs.empty() && std::abs(bin_start - v) <= tol) {
      ++out.pairs.back().second;
      bin_sum += v;
      out.pairs.back().first = bin_sum / static_cast<double>(out.pairs.back().second);
    } else {
      out.pairs.emplace_back(v, 1);
      bin_start = v;
      bin_sum = v;
    }
  }
  return out;
}

SpectrumReport computed_spectrum(const CayleyGraph &g, std::uint32_t max_prime) {
  return spectrum_of(g, false, max_prime);
}

SpectrumReport computed_complement_spectrum(const CayleyGraph &g, std::uint32_t max_prime) {
  return spectrum_of(g, true, max_prime);
}

bool spectra_match(const SpectrumReport &a, const SpectrumReport &b, double tol) {
  if (a.pairs.size() != b.pairs.size()) return false;
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    if (std::abs(a.pairs[i].first - b.pairs[i].first) > tol || a.pairs[i].second != b.pairs[i].second) return false;
  }
  return true;
}

SpectrumReport complement_image(const SpectrumReport &s, std::uint64_t n, double k) {
  std::vector<std::pair<double, std::uint64_t>> raw;
  bool mapped_degree = false;
  for (const auto &[v, m] : s.pairs) {
    std::uint64_t rest = m;
    if (!mapped_degree && std::abs(v - k) <= s.tolerance) {
      raw.emplace_back(static_cast<double>(n) - k - 1.0, 1);
      mapped_degree = true;
      --rest;
    }
    if (rest) raw.emplace_back(-v - 1.0, rest);
  }
  return normalise(s.p, std::move(raw));
}

ComplementReport complement_spectrum_check(Prime p, std::uint32_t max_prime) {
  if (!p.odd()) throw std::invalid_argument("complement_spectrum_check requires odd p");
  const CayleyGraph g = build_graph(p);
  ComplementReport r;
  r.computed = computed_complement_spectrum(g, max_prime);
  r.expected = expected_complement_spectrum(p);
  r.matches = spectra_match(r.computed, r.expected);

  r.complement_degree = g.size() - 1 - g.degree(0);
  r.degree_ok = r.complement_degree == std::size_t{p} * p - 1;
  for (std::size_t v = 0; v < g.size() && r.degree_ok; ++v) r.degree_ok = g.size() - 1 - g.degree(v) == r.complement_degree;

  const SpectrumReport graph = computed_spectrum(g, max_prime);
  const double k = static_cast<double>(g.expected_degree());
  r.brouwer_haemers_ok = spectra_match(complement_image(graph, g.size(), k), r.computed);
  const double kc = static_cast<double>(p.value()) * p.value() - 1.0;
  r.closed_forms_consistent = spectra_match(complement_image(r.expected, g.size(), kc), expected_spectrum(p));
  return r;
}

SpectralBounds spectral_bounds(Prime p) {
  const SpectrumReport s = expected_spectrum(p);
  const double n = static_cast<double>(group_order(p));
  const double lmax = s.pairs.front().first;
  const double lmin = s.pairs.back().first;
  SpectralBounds b;
  b.chromatic_lower = 1.0 - lmax / lmin;
  b.chromatic_upper = static_cast<double>(p.value()) * p.value() - 1.0;
  b.independence_lower = p.value();
  b.hoffman = -n * lmin / (lmax - lmin);
  b.clique_upper = b.chromatic_upper;
  return b;
}

WalkRegularityReport walk_regularity(const CayleyGraph &g, int max_power) {
  const Eigen::MatrixXd a = adjacency(g, false);
  WalkRegularityReport r;
  r.walk_regular = true;
  Eigen::MatrixXd power = a;
  for (int k = 2; k <= max_power; ++k) {
    power = power * a;
    const auto diag = power.diagonal();
    const double lo = diag.minCoeff(), hi = diag.maxCoeff();
    r.diagonal_range.emplace_back(lo, hi);
    if (hi - lo > 1e-6) r.walk_regular = false;
  }
  return r;
}

nlohmann::json spectrum_to_json(const SpectrumReport &s) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto &[v, m] : s.pairs) pairs.push_back({std::round(v * 1e9) / 1e9, m});
  return {{"p", s.p}, {"pairs", pairs}};
}

}  // namespace besmub
