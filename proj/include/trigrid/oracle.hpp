#pragma once

#include "trigrid/placement.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace trigrid {

constexpr std::size_t kDefaultStateBudget = 5'000'000;

// Placements reachable from a start, keyed by Placement::key.
struct Component {
    std::unordered_map<std::string, int> distance;
    int eccentricity = 0;
    std::size_t size() const { return distance.size(); }
    bool contains(const Graph& g, const Placement& p) const { return distance.count(p.key(g)) > 0; }
};

// Breadth-first search over legal slides. Throws BudgetExceeded when more
// than `budget` states are discovered.
Component bfs_component(const Graph& g, const Placement& start, std::size_t budget = kDefaultStateBudget);

std::optional<int> distance(const Graph& g, const Placement& p, const Placement& q,
                            std::size_t budget = kDefaultStateBudget);
std::optional<std::vector<SlideMove>> shortest_path(const Graph& g, const Placement& p, const Placement& q,
                                                    std::size_t budget = kDefaultStateBudget);

// Every nearly perfect matching of g as a sorted edge list.
std::vector<std::vector<Edge>> all_near_perfect_matchings(const Graph& g);

// Number of labeled placements: matchings times n!.
std::size_t placement_count(const Graph& g);

// Number of connected components of the slide graph on all placements.
int component_count(const Graph& g, std::size_t budget = kDefaultStateBudget);

bool is_reconfigurable_bruteforce(const Graph& g, std::size_t budget = kDefaultStateBudget);

} // namespace trigrid
