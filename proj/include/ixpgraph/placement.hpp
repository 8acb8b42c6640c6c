#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ixpgraph/error.hpp"
#include "ixpgraph/model.hpp"

namespace ixpgraph {

// Weighted set-cover view of IXP selection: each candidate IXP covers the
// target ASes that are its members.
struct CoverageInstance {
  std::vector<Asn> universe;                      // sorted, unique
  std::map<IxpId, std::vector<Asn>> candidates;   // sorted subsets of universe
  std::map<IxpId, double> cost;                   // > 0, one per candidate
  std::map<Asn, double> weight;                   // > 0, one per universe element
};

struct PlacementSolution {
  std::vector<IxpId> chosen;  // pick order
  std::vector<Asn> covered;   // sorted
  double total_cost = 0.0;
  double total_weight = 0.0;
};

class UncoverableError : public Error {
 public:
  explicit UncoverableError(std::vector<Asn> residue);
  const std::vector<Asn>& residue() const { return residue_; }

 private:
  std::vector<Asn> residue_;
};

// Candidates are the IXPs with at least one target member. Missing costs and
// weights default to 1.0. Throws kUnknownTarget for targets not in the graph.
CoverageInstance build_instance(const BipartiteGraph& graph, const std::set<Asn>& targets,
                                const std::map<IxpId, double>& costs = {},
                                const std::map<Asn, double>& weights = {});

// Cost-effectiveness greedy: repeatedly takes the candidate with the lowest
// cost per newly covered weight. Ties prefer more new weight, then the
// smaller IXP id. Throws UncoverableError when the candidates miss a target.
PlacementSolution greedy_set_cover(const CoverageInstance& instance);

// Budgeted maximum coverage: the better of the weight-per-cost greedy run
// within the budget and the best single affordable candidate. This
// combination guarantees (1 - 1/e) / 2 of the optimum.
PlacementSolution budgeted_max_coverage(const CoverageInstance& instance, double budget);

inline constexpr std::size_t kOracleCandidateLimit = 20;

// Exact answer by enumerating every candidate subset: minimum cost full cover
// without a budget, maximum covered weight within it otherwise. Chosen ids are
// listed in id order. Throws kTooLarge beyond kOracleCandidateLimit candidates.
PlacementSolution exhaustive_cover_oracle(const CoverageInstance& instance,
                                          std::optional<double> budget = std::nullopt);

// Remote peering "tunnels" for AS a: every AS b sharing an IXP with a, with
// the gain of reaching b's IXPs through it. Sorted by gain descending, then ASN.
std::vector<std::pair<Asn, std::size_t>> rank_tunnels(const BipartiteGraph& graph, Asn a);

struct LocationQuery {
  std::string country;
  std::string city;  // empty matches every city of the country
};

using SiteWeight = std::function<double(const AsNode& node, std::size_t degree)>;

// 1 / (1 + degree): favours ASes that are not yet well connected elsewhere.
double default_site_weight(const AsNode& node, std::size_t degree);

// Sum of `weight` over the ASes with a membership at an IXP in the queried
// location. Throws kNoLocationData when no IXP carries a location.
double site_selection_score(const BipartiteGraph& graph, const LocationQuery& location,
                            const SiteWeight& weight = default_site_weight);

}  // namespace ixpgraph
