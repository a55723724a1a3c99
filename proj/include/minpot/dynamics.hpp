#pragma once

#include "minpot/game.hpp"

#include <vector>

namespace minpot {

struct Move {
    int player = 0;
    int from = 0;
    int to = 0;
    Rational potential_before;
    Rational potential_after;
};

/// Record of an improving-move run; the potential strictly decreases at
/// every entry.
using MoveTrace = std::vector<Move>;

enum class MovePolicy { BestResponse, FirstImproving };

struct DynamicsResult {
    State state;
    MoveTrace trace;
    bool converged = false; ///< false when the move budget ran out first
};

/// Index of a strategy minimizing the player's cost after deviating, the
/// rest of the state held fixed. Ties go to the lowest strategy index.
int best_response(const Game& game, const State& state, int player);

/// True iff no player has a strictly improving deviation.
bool is_pure_nash(const Game& game, const State& state);

/// 10 * n * (total strategy count): generous for desk-scale instances
/// without masking non-termination bugs.
long long default_move_budget(const Game& game);

/// Applies strictly improving moves until none exists or max_moves is
/// reached. BestResponse scans players in index order and moves the first
/// player whose best response strictly improves; FirstImproving takes the
/// first improving (player, strategy) pair in index order. Both restart the
/// scan from player 0 after each move, so traces are reproducible.
DynamicsResult run_improving_dynamics(const Game& game, State start, MovePolicy policy,
                                      long long max_moves);

/// Builds a state for a symmetric singleton game with non-decreasing
/// latencies by inserting players one at a time, each taking a resource
/// minimizing l_r(current congestion + 1); ties go to the lowest resource
/// index. The result is a pure Nash equilibrium and a global potential
/// minimizer. Throws ClassMismatchError outside this class.
State greedy_sequential_insertion(const Game& game);

} // namespace minpot
