#include "ixpgraph/placement.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <string_view>

#include "ixpgraph/metrics.hpp"

namespace ixpgraph {
namespace {

std::string describe(const std::vector<Asn>& asns) {
  std::string out;
  for (const Asn asn : asns) {
    if (!out.empty()) out += ",";
    out += "AS" + to_string(asn);
  }
  return out;
}

// Candidate subsets re-expressed as positions in the universe.
struct IndexedInstance {
  std::vector<IxpId> ids;
  std::vector<std::vector<std::size_t>> sets;
  std::vector<double> cost;
  std::vector<double> weight;
};

IndexedInstance index_instance(const CoverageInstance& instance) {
  IndexedInstance out;
  out.weight.reserve(instance.universe.size());
  for (const Asn asn : instance.universe) {
    auto it = instance.weight.find(asn);
    out.weight.push_back(it == instance.weight.end() ? 1.0 : it->second);
  }
  for (const auto& [id, subset] : instance.candidates) {
    std::vector<std::size_t> positions;
    for (const Asn asn : subset) {
      auto it = std::lower_bound(instance.universe.begin(), instance.universe.end(), asn);
      if (it == instance.universe.end() || *it != asn) {
        throw Error(ErrorCode::kInvalidArgument,
                    "candidate " + id + " covers AS" + to_string(asn) + " outside the universe");
      }
      positions.push_back(static_cast<std::size_t>(it - instance.universe.begin()));
    }
    auto cost = instance.cost.find(id);
    out.ids.push_back(id);
    out.sets.push_back(std::move(positions));
    out.cost.push_back(cost == instance.cost.end() ? 1.0 : cost->second);
  }
  return out;
}

PlacementSolution make_solution(const CoverageInstance& instance, const IndexedInstance& indexed,
                                const std::vector<std::size_t>& picks) {
  PlacementSolution solution;
  std::vector<bool> covered(instance.universe.size(), false);
  for (const auto c : picks) {
    solution.chosen.push_back(indexed.ids[c]);
    solution.total_cost += indexed.cost[c];
    for (const auto e : indexed.sets[c]) covered[e] = true;
  }
  for (std::size_t e = 0; e < covered.size(); ++e) {
    if (!covered[e]) continue;
    solution.covered.push_back(instance.universe[e]);
    solution.total_weight += indexed.weight[e];
  }
  return solution;
}

double new_weight(const IndexedInstance& indexed, std::size_t c, const std::vector<bool>& covered) {
  double sum = 0.0;
  for (const auto e : indexed.sets[c]) {
    if (!covered[e]) sum += indexed.weight[e];
  }
  return sum;
}

// Is (cost_a, gain_a) strictly more cost-effective than (cost_b, gain_b)?
// Ratios are compared by cross-multiplication; exact ties fall through to
// the larger gain. Equal on both counts means "not better", which leaves the
// earlier (smaller) id in place.
bool more_cost_effective(double cost_a, double gain_a, double cost_b, double gain_b) {
  const double lhs = cost_a * gain_b;
  const double rhs = cost_b * gain_a;
  if (lhs != rhs) return lhs < rhs;
  return gain_a > gain_b;
}

}  // namespace

UncoverableError::UncoverableError(std::vector<Asn> residue)
    : Error(ErrorCode::kUncoverable, "no candidate covers " + describe(residue)),
      residue_(std::move(residue)) {}

CoverageInstance build_instance(const BipartiteGraph& graph, const std::set<Asn>& targets,
                                const std::map<IxpId, double>& costs,
                                const std::map<Asn, double>& weights) {
  CoverageInstance instance;
  for (const Asn asn : targets) {
    if (!graph.has_as(asn)) {
      throw Error(ErrorCode::kUnknownTarget, "AS" + to_string(asn) + " is not in the graph");
    }
    instance.universe.push_back(asn);
  }
  for (const Asn asn : instance.universe) {
    auto it = weights.find(asn);
    const double weight = it == weights.end() ? 1.0 : it->second;
    if (!(weight > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "weight of AS" + to_string(asn) + " must be > 0");
    }
    instance.weight.emplace(asn, weight);
    for (const auto& id : graph.memberships(asn)) instance.candidates[id].push_back(asn);
  }
  for (const auto& [id, subset] : instance.candidates) {
    auto it = costs.find(id);
    const double cost = it == costs.end() ? 1.0 : it->second;
    if (!(cost > 0.0)) throw Error(ErrorCode::kInvalidArgument, "cost of " + id + " must be > 0");
    instance.cost.emplace(id, cost);
  }
  return instance;
}

PlacementSolution greedy_set_cover(const CoverageInstance& instance) {
  const auto indexed = index_instance(instance);
  std::vector<bool> coverable(instance.universe.size(), false);
  for (const auto& set : indexed.sets) {
    for (const auto e : set) coverable[e] = true;
  }
  std::vector<Asn> residue;
  for (std::size_t e = 0; e < coverable.size(); ++e) {
    if (!coverable[e]) residue.push_back(instance.universe[e]);
  }
  if (!residue.empty()) throw UncoverableError(std::move(residue));

  std::vector<bool> covered(instance.universe.size(), false);
  std::size_t remaining = instance.universe.size();
  std::vector<std::size_t> picks;
  while (remaining > 0) {
    std::optional<std::size_t> best;
    double best_gain = 0.0;
    for (std::size_t c = 0; c < indexed.ids.size(); ++c) {
      const double gain = new_weight(indexed, c, covered);
      if (gain <= 0.0) continue;
      if (!best || more_cost_effective(indexed.cost[c], gain, indexed.cost[*best], best_gain)) {
        best = c;
        best_gain = gain;
      }
    }
    picks.push_back(*best);
    for (const auto e : indexed.sets[*best]) {
      if (!covered[e]) {
        covered[e] = true;
        --remaining;
      }
    }
  }
  return make_solution(instance, indexed, picks);
}

PlacementSolution budgeted_max_coverage(const CoverageInstance& instance, double budget) {
  if (!(budget > 0.0)) throw Error(ErrorCode::kInvalidArgument, "budget must be > 0");
  const auto indexed = index_instance(instance);

  // Branch 1: weight-per-cost greedy among candidates that still fit.
  std::vector<bool> covered(instance.universe.size(), false);
  std::vector<bool> used(indexed.ids.size(), false);
  std::vector<std::size_t> greedy_picks;
  double spent = 0.0;
  for (;;) {
    std::optional<std::size_t> best;
    double best_gain = 0.0;
    for (std::size_t c = 0; c < indexed.ids.size(); ++c) {
      if (used[c] || spent + indexed.cost[c] > budget) continue;
      const double gain = new_weight(indexed, c, covered);
      if (gain <= 0.0) continue;
      if (!best || more_cost_effective(indexed.cost[c], gain, indexed.cost[*best], best_gain)) {
        best = c;
        best_gain = gain;
      }
    }
    if (!best) break;
    used[*best] = true;
    spent += indexed.cost[*best];
    greedy_picks.push_back(*best);
    for (const auto e : indexed.sets[*best]) covered[e] = true;
  }
  auto greedy = make_solution(instance, indexed, greedy_picks);

  // Branch 2: the heaviest single affordable candidate.
  std::optional<std::size_t> single;
  double single_weight = 0.0;
  for (std::size_t c = 0; c < indexed.ids.size(); ++c) {
    if (indexed.cost[c] > budget) continue;
    double weight = 0.0;
    for (const auto e : indexed.sets[c]) weight += indexed.weight[e];
    if (!single || weight > single_weight) {
      single = c;
      single_weight = weight;
    }
  }
  if (single && single_weight > greedy.total_weight) {
    return make_solution(instance, indexed, {*single});
  }
  return greedy;
}

PlacementSolution exhaustive_cover_oracle(const CoverageInstance& instance,
                                          std::optional<double> budget) {
  const auto indexed = index_instance(instance);
  const std::size_t n = indexed.ids.size();
  if (n > kOracleCandidateLimit) {
    throw Error(ErrorCode::kTooLarge, std::to_string(n) + " candidates exceed the oracle limit of " +
                                          std::to_string(kOracleCandidateLimit));
  }
  if (budget && !(*budget > 0.0)) throw Error(ErrorCode::kInvalidArgument, "budget must be > 0");

  // Walk all subsets in Gray-code order, keeping per-element cover counts.
  const std::size_t universe = instance.universe.size();
  std::vector<std::uint32_t> count(universe, 0);
  std::size_t covered = 0;
  double weight = 0.0;

  std::optional<std::uint32_t> best;
  double best_cost = 0.0;
  double best_weight = 0.0;
  const auto mask_cost = [&](std::uint32_t mask) {
    double sum = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (1U << c)) sum += indexed.cost[c];
    }
    return sum;
  };

  const std::uint32_t limit = 1U << n;
  std::uint32_t mask = 0;
  for (std::uint32_t step = 0; step < limit; ++step) {
    if (step > 0) {
      const auto flip = static_cast<std::size_t>(std::countr_zero(step));
      mask ^= 1U << flip;
      const bool added = mask & (1U << flip);
      for (const auto e : indexed.sets[flip]) {
        if (added) {
          if (count[e]++ == 0) {
            ++covered;
            weight += indexed.weight[e];
          }
        } else if (--count[e] == 0) {
          --covered;
          weight -= indexed.weight[e];
        }
      }
    }
    if (!budget) {
      if (covered != universe) continue;
      const double cost = mask_cost(mask);
      if (!best || cost < best_cost || (cost == best_cost && mask < *best)) {
        best = mask;
        best_cost = cost;
      }
    } else {
      const double cost = mask_cost(mask);
      if (cost > *budget) continue;
      const bool better = !best || weight > best_weight ||
                          (weight == best_weight &&
                           (cost < best_cost || (cost == best_cost && mask < *best)));
      if (better) {
        best = mask;
        best_cost = cost;
        best_weight = weight;
      }
    }
  }

  if (!best) {
    std::vector<bool> coverable(universe, false);
    for (const auto& set : indexed.sets) {
      for (const auto e : set) coverable[e] = true;
    }
    std::vector<Asn> residue;
    for (std::size_t e = 0; e < universe; ++e) {
      if (!coverable[e]) residue.push_back(instance.universe[e]);
    }
    throw UncoverableError(std::move(residue));
  }
  std::vector<std::size_t> picks;
  for (std::size_t c = 0; c < n; ++c) {
    if (*best & (1U << c)) picks.push_back(c);
  }
  return make_solution(instance, indexed, picks);
}

std::vector<std::pair<Asn, std::size_t>> rank_tunnels(const BipartiteGraph& graph, Asn a) {
  std::set<Asn> colocated;
  for (const auto& id : graph.memberships(a)) {
    const auto& members = graph.members(id);
    colocated.insert(members.begin(), members.end());
  }
  colocated.erase(a);

  std::vector<std::pair<Asn, std::size_t>> ranking;
  ranking.reserve(colocated.size());
  for (const Asn b : colocated) ranking.emplace_back(b, remote_peering_gain(graph, a, b));
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const auto& x, const auto& y) { return x.second > y.second; });
  return ranking;
}

double default_site_weight(const AsNode&, std::size_t degree) {
  return 1.0 / (1.0 + static_cast<double>(degree));
}

namespace {

bool same_text(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](unsigned char x, unsigned char y) {
           return std::tolower(x) == std::tolower(y);
         });
}

}  // namespace

double site_selection_score(const BipartiteGraph& graph, const LocationQuery& location,
                            const SiteWeight& weight) {
  bool any_location = false;
  std::set<Asn> attributed;
  for (const auto& [id, node] : graph.ixps()) {
    if (!node.location) continue;
    any_location = true;
    if (!same_text(node.location->country, location.country)) continue;
    if (!location.city.empty() && !same_text(node.location->city, location.city)) continue;
    const auto& members = graph.members(id);
    attributed.insert(members.begin(), members.end());
  }
  if (!any_location) throw Error(ErrorCode::kNoLocationData, "no IXP carries a location");

  double score = 0.0;
  for (const Asn asn : attributed) score += weight(graph.as_node(asn), graph.degree(asn));
  return score;
}

}  // namespace ixpgraph
