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

#include "besmub/clique.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "besmub/quantum_oracle.hpp"
#include "besmub/qubit_table.hpp"

namespace besmub {

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::subgroup:
      return "subgroup";
    case Provenance::coset:
      return "coset";
    case Provenance::constructive:
      return "constructive";
    case Provenance::exact_search:
      return "exact-search";
    case Provenance::heuristic_search:
      return "heuristic-search";
    case Provenance::imported:
      return "imported";
  }
  return "imported";
}

Provenance provenance_from_string(std::string_view name) {
  for (auto p : {Provenance::subgroup, Provenance::coset, Provenance::constructive, Provenance::exact_search,
                 Provenance::heuristic_search, Provenance::imported}) {
    if (to_string(p) == name) return p;
  }
  throw std::invalid_argument("unknown provenance '" + std::string(name) + "'");
}

void SearchBudget::validate() const {
  if (max_nodes == 0 || !(max_seconds > 0.0) || seed == 0 || workers == 0) {
    throw std::invalid_argument("search budget limits, seed and worker count must be positive");
  }
}

bool is_clique(const CayleyGraph &g, std::span<const std::size_t> members) {
  for (std::size_t v : members) {
    if (v >= g.size()) throw std::out_of_range("vertex " + std::to_string(v) + " is not in the graph");
  }
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (!g.adjacent(members[a], members[b])) return false;
    }
  }
  return true;
}

std::vector<std::size_t> member_indices(const CayleyGraph &g, const MubCertificate &cert) {
  std::vector<std::size_t> out;
  out.reserve(cert.members.size());
  for (const auto &m : cert.members) out.push_back(g.require_index(m));
  return out;
}

MubCertificate certificate_from_indices(const CayleyGraph &g, std::span<const std::size_t> members,
                                        Provenance provenance) {
  MubCertificate cert;
  cert.p = g.p();
  cert.provenance = provenance;
  for (std::size_t v : members) cert.members.push_back(g.vertex(v));
  std::sort(cert.members.begin(), cert.members.end());
  cert.verified_graph = is_clique(g, members);
  return cert;
}

// ---------------------------------------------------------------------------
// Explicit constructions

std::pair<Sl2Matrix, Sl2Matrix> subgroup_generators(Prime p) {
  switch (p.value()) {
    case 3:
      return {Sl2Matrix::make(p, 0, 1, 2, 0), Sl2Matrix::make(p, 1, 1, 1, 2)};
    case 5:
      return {Sl2Matrix::make(p, 0, 2, 2, 0), Sl2Matrix::make(p, 1, 1, 2, 3)};
    case 7:
      return {Sl2Matrix::make(p, 0, 2, 3, 0), Sl2Matrix::make(p, 1, 1, 4, 5)};
    case 11:
      return {Sl2Matrix::make(p, 0, 1, 10, 0), Sl2Matrix::make(p, 0, 4, 8, 10)};
    default:
      throw InvalidParameters("no subgroup of order p^2-1 is known for p = " + std::to_string(p.value()) +
                              " (supported: 3, 5, 7, 11)");
  }
}

std::vector<Sl2Matrix> generate_subgroup(std::span<const Sl2Matrix> generators) {
  if (generators.empty()) throw std::invalid_argument("generate_subgroup: no generators");
  std::set<Sl2Matrix> seen{Sl2Matrix::identity(Prime(generators.front().p))};
  std::deque<Sl2Matrix> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    const Sl2Matrix cur = frontier.front();
    frontier.pop_front();
    for (const auto &gen : generators) {
      const Sl2Matrix next = cur * gen;
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

MubCertificate subgroup_clique(Prime p) {
  const auto [a, b] = subgroup_generators(p);
  const std::array<Sl2Matrix, 2> gens{a, b};
  MubCertificate cert;
  cert.p = p;
  cert.provenance = Provenance::subgroup;
  cert.members = generate_subgroup(gens);
  return verified(std::move(cert), false);
}

std::vector<MubCertificate> coset_partition(Prime p) {
  const MubCertificate h = subgroup_clique(p);
  std::vector<MubCertificate> out;
  for (std::uint32_t t = 0; t < p; ++t) {
    const Sl2Matrix rep = Sl2Matrix::make(p, 1, 0, t, 1);
    MubCertificate coset;
    coset.p = p;
    coset.provenance = t == 0 ? Provenance::subgroup : Provenance::coset;
    for (const auto &m : h.members) coset.members.push_back(rep * m);
    std::sort(coset.members.begin(), coset.members.end());
    out.push_back(verified(std::move(coset), false));
  }
  return out;
}

std::vector<MubCertificate> qubit_partition() {
  const auto group = enumerate_sl2(Prime(2));
  std::vector<MubCertificate> out;
  const auto triangles = qubit_triangles();
  for (std::size_t k = 0; k < triangles.size(); ++k) {
    MubCertificate cert;
    cert.p = 2;
    cert.provenance = k == 0 ? Provenance::subgroup : Provenance::coset;
    for (std::size_t idx : triangles[k]) cert.members.push_back(group[idx]);
    out.push_back(verified(std::move(cert), false));
  }
  return out;
}

bool valid_constructive_parameters(Prime p, std::uint32_t s, std::uint32_t t) {
  if (!p.odd()) return false;
  s %= p;
  t %= p;
  if (s == 0) return false;
  const std::uint32_t disc = static_cast<std::uint32_t>((std::uint64_t{t} * t + 4 * std::uint64_t{s}) % p);
  return legendre(disc, p) == -1;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> constructive_parameters(Prime p) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t s = 0; s < p; ++s) {
    for (std::uint32_t t = 0; t < p; ++t) {
      if (valid_constructive_parameters(p, s, t)) out.emplace_back(s, t);
    }
  }
  return out;
}

Sl2Matrix constructive_member(Prime p, std::uint32_t a, std::uint32_t b, std::uint32_t s, std::uint32_t t) {
  const std::int64_t q = p.value();
  const std::int64_t bi = inv_mod(b, p);
  const std::int64_t A = a % q, S = s % q, T = t % q, B = b % q;
  const std::int64_t a_over_b = A * bi % q;
  return Sl2Matrix::make(p, -a_over_b, -bi, B - A * a_over_b % q * S - A * T, -a_over_b * S - T);
}

MubCertificate constructive_clique(Prime p, std::uint32_t s, std::uint32_t t) {
  if (!p.odd()) {
    throw InvalidParameters("the constructive family is not defined at p = 2; use the hardcoded triangles");
  }
  if (!valid_constructive_parameters(p, s, t)) {
    throw InvalidParameters("invalid parameters (s, t) = (" + std::to_string(s) + ", " + std::to_string(t) +
                            "): need s != 0 and t^2 + 4s a non-residue mod " + std::to_string(p.value()));
  }
  MubCertificate cert;
  cert.p = p;
  cert.provenance = Provenance::constructive;
  for (std::uint32_t a = 0; a < p; ++a) {
    for (std::uint32_t b = 1; b < p; ++b) cert.members.push_back(constructive_member(p, a, b, s, t));
  }
  std::sort(cert.members.begin(), cert.members.end());
  return verified(std::move(cert), false);
}

// ---------------------------------------------------------------------------
// Exact search

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class BranchAndBound {
 public:
  BranchAndBound(const CayleyGraph &g, const SearchBudget &budget, double max_seconds)
      : g_(g), budget_(budget), max_seconds_(max_seconds), start_(Clock::now()) {}

  /// Searches for cliques extending `current` inside `candidates`.
  void run(std::vector<std::size_t> current, VertexSet candidates) {
    if (current.size() > best_.size()) best_ = current;
    if (candidates.empty()) return;
    expand(current, candidates);
  }

  void set_incumbent(std::vector<std::size_t> clique) { best_ = std::move(clique); }
  const std::vector<std::size_t> &best() const noexcept { return best_; }
  bool stopped() const noexcept { return stopped_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  double elapsed() const { return seconds_since(start_); }

 private:
  // Greedy sequential colouring: colour classes are built one at a time as
  // maximal independent subsets of the remaining candidates.
  void colour_sort(const VertexSet &candidates, std::vector<std::size_t> &order,
                   std::vector<std::uint32_t> &colours) const {
    VertexSet uncoloured = candidates;
    std::uint32_t colour = 0;
    while (!uncoloured.empty()) {
      ++colour;
      VertexSet q = uncoloured;
      for (std::size_t v = q.next(); v != VertexSet::npos; v = q.next(v + 1)) {
        q.subtract(g_.neighbours(v));
        uncoloured.reset(v);
        order.push_back(v);
        colours.push_back(colour);
      }
    }
  }

  bool out_of_budget() {
    if (nodes_ >= budget_.max_nodes) return true;
    if ((nodes_ & 255) == 0 && elapsed() > max_seconds_) return true;
    return false;
  }

  void expand(std::vector<std::size_t> &current, VertexSet &candidates) {
    ++nodes_;
    if (out_of_budget()) {
      stopped_ = true;
      return;
    }
    std::vector<std::size_t> order;
    std::vector<std::uint32_t> colours;
    order.reserve(candidates.count());
    colours.reserve(order.capacity());
    colour_sort(candidates, order, colours);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (stopped_) return;
      if (current.size() + colours[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current.push_back(v);
      VertexSet next = candidates & g_.neighbours(v);
      if (next.empty()) {
        if (current.size() > best_.size()) {
          best_ = current;
          if (budget_.target_size && best_.size() >= budget_.target_size) stopped_ = true;
        }
      } else {
        expand(current, next);
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  const CayleyGraph &g_;
  SearchBudget budget_;
  double max_seconds_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  std::vector<std::size_t> best_;
};

std::vector<std::size_t> greedy_clique(const CayleyGraph &g, std::vector<std::size_t> clique, VertexSet candidates,
                                       std::mt19937_64 *rng) {
  for (std::size_t v : clique) candidates &= g.neighbours(v);
  while (!candidates.empty()) {
    std::size_t pick;
    if (rng) {
      const auto pool = candidates.members();
      pick = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(*rng)];
    } else {
      pick = candidates.next();
    }
    clique.push_back(pick);
    candidates &= g.neighbours(pick);
  }
  return clique;
}

}  // namespace

SearchResult exact_max_clique(const CayleyGraph &g, const SearchBudget &budget) {
  budget.validate();
  const std::size_t identity = g.require_index(Sl2Matrix::identity(g.p()));
  BranchAndBound bb(g, budget, budget.max_seconds);
  bb.set_incumbent(greedy_clique(g, {identity}, VertexSet::full(g.size()), nullptr));
  // Left multiplication is a graph automorphism acting transitively, so some
  // maximum clique contains the identity.
  bb.run({identity}, g.neighbours(identity));

  SearchResult result;
  result.certificate = certificate_from_indices(g, bb.best(), Provenance::exact_search);
  result.budget_exhausted = bb.stopped() && !(budget.target_size && bb.best().size() >= budget.target_size);
  result.optimal = !bb.stopped();
  result.nodes = bb.nodes();
  result.seconds = bb.elapsed();
  return result;
}

// ---------------------------------------------------------------------------
// Local search

namespace {

/// Set of vertex ids with O(1) insert, erase and uniform sampling.
class IndexedSet {
 public:
  explicit IndexedSet(std::size_t n) : pos_(n, npos) {}
  bool contains(std::size_t v) const noexcept { return pos_[v] != npos; }
  void insert(std::size_t v) {
    if (contains(v)) return;
    pos_[v] = items_.size();
    items_.push_back(v);
  }
  void erase(std::size_t v) {
    if (!contains(v)) return;
    const std::size_t at = pos_[v];
    items_[at] = items_.back();
    pos_[items_[at]] = at;
    items_.pop_back();
    pos_[v] = npos;
  }
  void clear() {
    for (auto v : items_) pos_[v] = npos;
    items_.clear();
  }
  bool empty() const noexcept { return items_.empty(); }
  std::size_t size() const noexcept { return items_.size(); }
  const std::vector<std::size_t> &items() const noexcept { return items_; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos_;
  std::vector<std::size_t> items_;
};

/// Complement adjacency lists; the complement has degree p^2 - 1.
std::vector<std::vector<std::uint32_t>> non_neighbour_lists(const CayleyGraph &g) {
  std::vector<std::vector<std::uint32_t>> out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto &row = g.neighbours(v);
    for (std::size_t u = 0; u < g.size(); ++u) {
      if (u != v && !row.test(u)) out[v].push_back(static_cast<std::uint32_t>(u));
    }
  }
  return out;
}

class LocalSearch {
 public:
  LocalSearch(const CayleyGraph &g, const std::vector<std::vector<std::uint32_t>> &non_nb, std::uint64_t seed)
      : g_(g),
        non_nb_(non_nb),
        rng_(seed),
        in_clique_(g.size(), false),
        miss_(g.size(), 0),
        owner_sum_(g.size(), 0),
        last_moved_(g.size(), 0),
        members_(g.size()),
        free_(g.size()),
        one_tight_(g.size()) {
    for (std::size_t v = 0; v < g.size(); ++v) free_.insert(v);
  }

  void load(const std::vector<std::size_t> &clique) {
    for (auto v : std::vector<std::size_t>(members_.items())) remove(v);
    for (auto v : clique) add(v);
  }

  std::vector<std::size_t> clique() const { return members_.items(); }
  std::size_t size() const noexcept { return members_.size(); }

  /// Free additions and (1,2)-swaps until neither applies.
  void descend() {
    while (true) {
      if (!free_.empty()) {
        const auto &pool = free_.items();
        add(pool[pick(pool.size())]);
        continue;
      }
      if (!two_for_one()) return;
    }
  }

  /// Forces a vertex into the clique and evicts its conflicts.
  void perturb() {
    ++step_;
    std::size_t v;
    if (!one_tight_.empty() && pick(2) == 0) {
      v = oldest_of(one_tight_.items(), 4);
    } else {
      std::size_t tries = 0;
      do {
        v = pick(g_.size());
      } while (in_clique_[v] && ++tries < 64);
      if (in_clique_[v]) return;
    }
    for (auto u : non_nb_[v]) {
      if (in_clique_[u]) remove(u);
    }
    add(v);
  }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  std::size_t oldest_of(const std::vector<std::size_t> &pool, int draws) {
    std::size_t best = pool[pick(pool.size())];
    for (int i = 1; i < draws; ++i) {
      const std::size_t c = pool[pick(pool.size())];
      if (last_moved_[c] < last_moved_[best]) best = c;
    }
    return best;
  }

  void refresh(std::size_t u) {
    if (in_clique_[u] || miss_[u] > 1) {
      free_.erase(u);
      one_tight_.erase(u);
    } else if (miss_[u] == 0) {
      one_tight_.erase(u);
      free_.insert(u);
    } else {
      free_.erase(u);
      one_tight_.insert(u);
    }
  }

  void add(std::size_t v) {
    in_clique_[v] = true;
    members_.insert(v);
    last_moved_[v] = step_;
    refresh(v);
    for (auto u : non_nb_[v]) {
      ++miss_[u];
      owner_sum_[u] += v;
      refresh(u);
    }
  }

  void remove(std::size_t v) {
    in_clique_[v] = false;
    members_.erase(v);
    last_moved_[v] = step_;
    for (auto u : non_nb_[v]) {
      --miss_[u];
      owner_sum_[u] -= v;
      refresh(u);
    }
    refresh(v);
  }

  bool two_for_one() {
    // Group the 1-tight vertices by the single member they conflict with and
    // look for two mutually adjacent ones.
    std::vector<std::size_t> pool = one_tight_.items();
    std::shuffle(pool.begin(), pool.end(), rng_);
    std::map<std::size_t, std::vector<std::size_t>> by_owner;
    for (std::size_t v : pool) {
      auto &peers = by_owner[owner_sum_[v]];
      for (std::size_t w : peers) {
        if (g_.adjacent(v, w)) {
          remove(owner_sum_[v]);
          add(v);
          add(w);
          return true;
        }
      }
      peers.push_back(v);
    }
    return false;
  }

  const CayleyGraph &g_;
  const std::vector<std::vector<std::uint32_t>> &non_nb_;
  std::mt19937_64 rng_;
  std::vector<bool> in_clique_;
  std::vector<std::uint32_t> miss_;
  std::vector<std::uint64_t> owner_sum_;
  std::vector<std::uint64_t> last_moved_;
  std::uint64_t step_ = 0;
  IndexedSet members_;
  IndexedSet free_;
  IndexedSet one_tight_;
};

struct WorkerOutcome {
  std::vector<std::size_t> best;
  std::uint64_t iterations = 0;
  bool hit_target = false;
};

WorkerOutcome run_local_search(const CayleyGraph &g, const std::vector<std::vector<std::uint32_t>> &non_nb,
                               const std::vector<std::size_t> &start, std::uint64_t seed, std::uint64_t max_iterations,
                               double max_seconds, std::size_t target) {
  const auto t0 = Clock::now();
  const std::size_t cap = std::size_t{g.p()} * g.p() - 1;
  LocalSearch ls(g, non_nb, seed);
  ls.load(start);
  ls.descend();
  WorkerOutcome out;
  out.best = ls.clique();
  std::vector<std::size_t> basin = out.best;
  const std::uint64_t patience = 4 * g.size();
  constexpr std::uint64_t kRevertsPerRestart = 20;
  std::uint64_t since_improvement = 0;
  std::uint64_t reverts = 0;
  while (out.iterations < max_iterations) {
    if (target && out.best.size() >= target) {
      out.hit_target = true;
      break;
    }
    if (out.best.size() >= cap) break;
    if ((out.iterations & 63) == 0 && seconds_since(t0) > max_seconds) break;
    ++out.iterations;
    ls.perturb();
    ls.descend();
    if (ls.size() > basin.size()) {
      basin = ls.clique();
      since_improvement = 0;
      reverts = 0;
    } else if (++since_improvement > patience || ls.size() + 2 < basin.size()) {
      since_improvement = 0;
      if (++reverts > kRevertsPerRestart) {
        ls.load({});
        ls.descend();
        basin = ls.clique();
        reverts = 0;
      } else {
        ls.load(basin);
      }
    }
    if (basin.size() > out.best.size()) out.best = basin;
  }
  std::sort(out.best.begin(), out.best.end());
  return out;
}

}  // namespace

SearchResult heuristic_clique(const CayleyGraph &g, const SearchBudget &budget, const MubCertificate *seed) {
  budget.validate();
  const auto t0 = Clock::now();
  const auto non_nb = non_neighbour_lists(g);

  std::vector<std::size_t> start;
  if (seed) {
    start = member_indices(g, *seed);
    if (!is_clique(g, start)) throw std::invalid_argument("heuristic_clique: seed is not a clique");
  } else if (Prime(g.p()).odd()) {
    const auto params = constructive_parameters(Prime(g.p()));
    start = member_indices(g, constructive_clique(Prime(g.p()), params.front().first, params.front().second));
  } else {
    std::mt19937_64 rng(budget.seed);
    start = greedy_clique(g, {}, VertexSet::full(g.size()), &rng);
  }

  std::vector<WorkerOutcome> outcomes(budget.workers);
  auto work = [&](unsigned k) {
    outcomes[k] = run_local_search(g, non_nb, start, budget.seed + 0x9E3779B97F4A7C15ULL * k, budget.max_nodes,
                                   budget.max_seconds, budget.target_size);
  };
  if (budget.workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned k = 0; k < budget.workers; ++k) threads.emplace_back(work, k);
    for (auto &t : threads) t.join();
  }

  std::size_t winner = 0;
  std::uint64_t iterations = 0;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    iterations += outcomes[k].iterations;
    if (outcomes[k].best.size() > outcomes[winner].best.size()) winner = k;
  }
  SearchResult result;
  result.certificate = certificate_from_indices(g, outcomes[winner].best, Provenance::heuristic_search);
  result.nodes = iterations;
  result.seconds = seconds_since(t0);
  result.budget_exhausted = budget.target_size && outcomes[winner].best.size() < budget.target_size;
  result.optimal = outcomes[winner].best.size() == std::size_t{g.p()} * g.p() - 1;
  return result;
}

SearchResult extend_clique(const CayleyGraph &g, const MubCertificate &base, const SearchBudget &budget) {
  budget.validate();
  const auto t0 = Clock::now();
  const auto base_idx = member_indices(g, base);
  if (!is_clique(g, base_idx)) throw std::invalid_argument("extend_clique: base is not a clique");

  VertexSet common = VertexSet::full(g.size());
  for (std::size_t v : base_idx) {
    common &= g.neighbours(v);
    common.reset(v);
  }
  BranchAndBound bb(g, budget, budget.max_seconds);
  bb.set_incumbent(greedy_clique(g, base_idx, common, nullptr));
  bb.run(base_idx, common);

  SearchResult result;
  result.certificate = certificate_from_indices(g, bb.best(), base.provenance);
  result.nodes = bb.nodes();
  result.budget_exhausted = bb.stopped() && (!budget.target_size || bb.best().size() < budget.target_size);
  result.optimal = !bb.stopped();
  result.seconds = seconds_since(t0);
  return result;
}

SearchResult extend_constructive(const CayleyGraph &g, const SearchBudget &budget) {
  budget.validate();
  const auto t0 = Clock::now();
  const Prime p(g.p());
  const auto params = constructive_parameters(p);
  if (params.empty()) throw InvalidParameters("extend_constructive: no valid (s, t) at p = 2");

  const std::size_t target = budget.target_size ? budget.target_size : std::size_t{g.p()} * (g.p() - 1) + 2;
  SearchResult best;
  std::uint64_t nodes = 0;
  for (std::size_t k = 0; k < params.size(); ++k) {
    const double remaining = budget.max_seconds - seconds_since(t0);
    if (remaining <= 0.0) break;
    SearchBudget slice = budget;
    slice.target_size = target;
    slice.max_seconds = remaining / static_cast<double>(params.size() - k);
    slice.max_nodes = std::max<std::uint64_t>(1, budget.max_nodes / params.size());
    auto r = extend_clique(g, constructive_clique(p, params[k].first, params[k].second), slice);
    nodes += r.nodes;
    if (k == 0 || r.certificate.size() > best.certificate.size()) best = std::move(r);
    if (best.certificate.size() >= target) break;
  }
  best.nodes = nodes;
  best.seconds = seconds_since(t0);
  best.budget_exhausted = best.certificate.size() < target;
  return best;
}

// ---------------------------------------------------------------------------
// Verification

VerificationReport verify_certificate(const MubCertificate &cert, bool use_oracle, const OracleOptions &options) {
  VerificationReport report;
  const auto &ms = cert.members;
  bool members_valid = is_prime(cert.p);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (ms[i].p != cert.p || ms[i].det() != 1 % cert.p || ms[i].alpha >= cert.p || ms[i].beta >= cert.p ||
        ms[i].gamma >= cert.p || ms[i].delta >= cert.p) {
      report.graph_violations.push_back({i, i, "member " + to_string(ms[i]) + " is not in SL(2,Z_p)"});
      members_valid = false;
    }
  }
  if (members_valid) {
    for (std::size_t i = 0; i < ms.size(); ++i) {
      for (std::size_t j = i + 1; j < ms.size(); ++j) {
        if (ms[i] == ms[j]) {
          report.graph_violations.push_back({i, j, "duplicate member"});
        } else if (trace_of_quotient(ms[i], ms[j]) == 2 % cert.p) {
          report.graph_violations.push_back({i, j, "Tr(F_i^-1 F_j) = 2"});
        }
      }
    }
  }
  report.graph_ok = report.graph_violations.empty();
  if (!use_oracle || !members_valid) return report;

  report.oracle_run = true;
  const double target = 1.0 / cert.p;
  auto record = [&](std::size_t i, std::size_t j, double defect) {
    report.max_overlap_defect = std::max(report.max_overlap_defect, defect);
    if (defect > options.tolerance) {
      if (report.oracle_violations.empty() || report.oracle_violations.back().i != i ||
          report.oracle_violations.back().j != j) {
        report.oracle_violations.push_back({i, j, "cross-basis overlap deviates from 1/p by " + std::to_string(defect)});
      }
    }
  };

  if (cert.p <= options.exhaustive_max_p) {
    report.oracle_exhaustive = true;
    std::vector<ComplexMatrix> bases;
    bases.reserve(ms.size());
    for (const auto &F : ms) bases.push_back(jam_basis(F));
    for (std::size_t i = 0; i < ms.size(); ++i) {
      for (std::size_t j = i + 1; j < ms.size(); ++j) {
        const ComplexMatrix cross = bases[i].adjoint() * bases[j];
        const double defect = (cross.cwiseAbs().array() - target).abs().maxCoeff();
        report.oracle_overlaps_checked += static_cast<std::uint64_t>(cross.size());
        record(i, j, defect);
      }
    }
  } else if (ms.size() >= 2) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> member(0, ms.size() - 1);
    std::uniform_int_distribution<std::uint32_t> residue(0, cert.p - 1);
    for (std::uint64_t s = 0; s < options.samples; ++s) {
      std::size_t i = member(rng), j = member(rng);
      while (j == i) j = member(rng);
      if (i > j) std::swap(i, j);
      const StateVector a = jam_state({ms[i], {residue(rng), residue(rng)}});
      const StateVector b = jam_state({ms[j], {residue(rng), residue(rng)}});
      ++report.oracle_overlaps_checked;
      record(i, j, std::abs(overlap(a, b) - target));
    }
  }
  report.oracle_ok = report.oracle_violations.empty();
  return report;
}

MubCertificate verified(MubCertificate cert, bool use_oracle, const OracleOptions &options) {
  const VerificationReport report = verify_certificate(cert, use_oracle, options);
  cert.verified_graph = report.graph_ok;
  cert.verified_oracle = report.oracle_run && report.oracle_ok && report.graph_ok;
  return cert;
}

}  // namespace besmub
