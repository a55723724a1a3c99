#pragma once

#include "minpot/game.hpp"
#include "minpot/solve_result.hpp"

namespace minpot {

/// Greedy cover for singleton games with non-increasing latencies. Rounds
/// pick the resource of minimum cost effectiveness
///   alpha_r = (sum_{t=1..nu_r} l_r(t)) / nu_r,
/// where nu_r counts the still-unassigned players that may use r, assign all
/// of them to it, and retire the resource. Ties go to the lowest resource
/// index. The result's potential is within a factor H_n of the optimum, and
/// that factor is tight.
SolveResult greedy_nonincreasing_singleton(const Game& game);

/// Replaces every latency with the running average of its prefix sums,
///   l'(x) = (sum_{h<=x} l(h)) / x,
/// keeping players and strategies. The potential of the input game equals
/// the social cost of the result at every state. For non-decreasing input
/// each l' is non-decreasing and x * l'(x) is convex over the integers, so
/// the result fits social-cost approximators that need those properties.
Game running_average_transform(const Game& game);

} // namespace minpot
