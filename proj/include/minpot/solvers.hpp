#pragma once

#include "minpot/game.hpp"
#include "minpot/matching.hpp"
#include "minpot/solve_result.hpp"

#include <map>
#include <utility>
#include <vector>

namespace minpot {

struct OracleOptions {
    long long state_budget = 10'000'000; ///< refuse beyond this many states
};

/// Exhaustive minimum over all states, in lexicographic choice-vector order;
/// the first minimizer wins. Branches whose partial potential already
/// reaches the best found are cut (latencies are non-negative, so the
/// partial sum is a lower bound). Throws BudgetExceededError when the state
/// space exceeds the budget.
SolveResult solve_brute_force(const Game& game, const OracleOptions& options = {});

/// Symmetric singleton game with non-decreasing latencies: sequential
/// insertion; every pure Nash equilibrium of this class is a global
/// potential minimizer.
SolveResult solve_symmetric_singleton(const Game& game);

/// Singleton game (symmetry not required) with non-decreasing latencies:
/// minimum-weight perfect matching between players plus zero-weight dummies
/// on one side and (resource, multiplicity) slots on the other, the
/// player-slot edge (i, (r, mu)) weighing l_r(mu).
SolveResult solve_general_singleton(const Game& game);

/// Symmetric game of size at most 2 with non-decreasing latencies, via a
/// maximum-weight matching of size exactly n: singleton strategies are
/// padded with a fictitious zero-latency resource, each resource gets n
/// vertex copies, each two-resource strategy contributes a complete
/// bipartite block with weights C - l_ri(a) - l_rj(b).
SolveResult solve_symmetric_size2(const Game& game);

/// Symmetric game with non-increasing latencies (any size): some optimum
/// puts every player on one shared strategy, so trying each strategy once
/// suffices.
SolveResult solve_symmetric_nonincreasing(const Game& game);

/// Front door: routes to the tractable solver for the game's class; for the
/// remaining classes falls back to the oracle when the state space fits the
/// budget, else to a heuristic (greedy cover for non-increasing singleton
/// games, improving dynamics otherwise) flagged as such.
SolveResult solve(const Game& game, const OracleOptions& options = {});

/// Internals of the size-2 reduction, exposed so the two conversion
/// directions can be property-tested against each other.
namespace size2 {

struct Reduction {
    WeightedGraph graph;
    Rational big_c;     ///< 2 * max_r l_r(n)
    int copies = 0;     ///< vertex copies per resource (= n)
    int resources = 0;  ///< internal resource count including the fictitious one
    /// shared strategy index -> internal resource pair (fictitious id 0 pads
    /// singletons; real resource r maps to id r + 1)
    std::vector<std::pair<int, int>> strategy_pairs;
    std::map<std::pair<int, int>, int> pair_to_strategy;
};

Reduction build(const Game& game);

/// Vertex id of copy `a` (1-based) of internal resource `rid`.
int vertex_of(const Reduction& red, int rid, int a);

/// While some resource has an unmatched copy below a matched one, move the
/// matched endpoint down. Non-decreasing latencies mean the weight never
/// drops. The result uses, for each resource, exactly the lowest copies.
Matching repair_holes(const Game& game, const Reduction& red, const Matching& matching);

/// Hole-free size-n matching -> state (one edge per player).
State matching_to_state(const Game& game, const Reduction& red, const Matching& matching);

/// State -> size-n matching of weight exactly n * C - potential(state).
Matching state_to_matching(const Game& game, const Reduction& red, const State& state);

} // namespace size2

} // namespace minpot
