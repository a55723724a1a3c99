#pragma once

#include "minpot/rational.hpp"

#include <vector>

namespace minpot {

struct WeightedEdge {
    int u = 0;
    int v = 0;
    Rational weight;
};

/// Undirected graph, no self-loops, at most one edge per vertex pair.
/// Isolated vertices are allowed.
struct WeightedGraph {
    int vertex_count = 0;
    std::vector<WeightedEdge> edges;
};

/// Validating constructor; throws std::invalid_argument on malformed input.
WeightedGraph make_graph(int vertex_count, std::vector<WeightedEdge> edges);

/// Edge set with pairwise-disjoint endpoints. Edges are stored with u < v,
/// sorted; weight is the exact sum of member weights.
struct Matching {
    std::vector<WeightedEdge> edges;
    Rational weight;
};

/// Maximum-weight matching (not necessarily of maximum cardinality) via a
/// primal-dual blossom search over exact rationals. The optimality
/// certificate (dual feasibility + complementary slackness) is re-checked on
/// every call; a violation throws std::logic_error.
Matching max_weight_matching(const WeightedGraph& graph);

/// Maximum cardinality of a matching (unit-weight run).
int max_matching_cardinality(const WeightedGraph& graph);

/// Among matchings of cardinality exactly q, one of maximum weight. Reduced
/// to max_weight_matching: shift every weight by Z so larger matchings
/// always dominate, then add |V| - 2q dummy vertices joined to every
/// original vertex with a weight W large enough that any optimum saturates
/// them, and strip the dummy edges. Throws InfeasibleError when the graph
/// has no matching of size q.
Matching max_weight_matching_of_size(const WeightedGraph& graph, int q);

/// Minimum-weight matching saturating the smaller side of a bipartite
/// graph. Input edges are (left index, right index, weight); the returned
/// Matching re-indexes right vertices as left_count + r. O(V^3) shortest
/// augmenting paths with exact potentials. Throws InfeasibleError when no
/// saturating matching exists.
Matching min_weight_perfect_bipartite_matching(int left_count, int right_count,
                                               const std::vector<WeightedEdge>& edges);

} // namespace minpot
