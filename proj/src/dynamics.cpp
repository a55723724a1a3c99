#include "minpot/dynamics.hpp"

#include "minpot/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace minpot {

namespace {

bool contains(const Strategy& sorted, int r) {
    return std::binary_search(sorted.begin(), sorted.end(), r);
}

// Cost of player i after switching to strategy `to`, with everyone else
// fixed and `load` the congestion of the current state.
Rational deviation_cost(const Game& game, const std::vector<int>& load, int player,
                        const Strategy& current, int to) {
    const auto& target = game.strategy(player, to);
    Rational cost = 0;
    for (int r : target) {
        const int users = load[r] + 1 - (contains(current, r) ? 1 : 0);
        cost += game.resource(r).latency(users);
    }
    return cost;
}

struct Improvement {
    int player;
    int to;
};

// First improving move under the policy, or nullopt at a pure Nash
// equilibrium.
std::optional<Improvement> find_improving_move(const Game& game, const State& state,
                                               const std::vector<int>& load,
                                               MovePolicy policy) {
    for (int i = 0; i < game.player_count(); ++i) {
        const auto& current = game.strategy(i, state.choices[i]);
        const Rational here = deviation_cost(game, load, i, current, state.choices[i]);
        int best = -1;
        Rational best_cost;
        for (int t = 0; t < static_cast<int>(game.strategies(i).size()); ++t) {
            if (t == state.choices[i]) continue;
            const Rational cost = deviation_cost(game, load, i, current, t);
            if (cost < here) {
                if (policy == MovePolicy::FirstImproving) return Improvement{i, t};
                if (best == -1 || cost < best_cost) {
                    best = t;
                    best_cost = cost;
                }
            }
        }
        if (best != -1) return Improvement{i, best};
    }
    return std::nullopt;
}

} // namespace

int best_response(const Game& game, const State& state, int player) {
    require_valid_state(game, state);
    if (player < 0 || player >= game.player_count())
        throw std::invalid_argument("no player with index " + std::to_string(player));
    const auto load = congestion(game, state);
    const auto& current = game.strategy(player, state.choices[player]);
    int best = -1;
    Rational best_cost;
    for (int t = 0; t < static_cast<int>(game.strategies(player).size()); ++t) {
        const Rational cost = deviation_cost(game, load, player, current, t);
        if (best == -1 || cost < best_cost) {
            best = t;
            best_cost = cost;
        }
    }
    return best;
}

bool is_pure_nash(const Game& game, const State& state) {
    require_valid_state(game, state);
    const auto load = congestion(game, state);
    return !find_improving_move(game, state, load, MovePolicy::FirstImproving).has_value();
}

long long default_move_budget(const Game& game) {
    return 10LL * game.player_count() * game.total_strategy_count();
}

DynamicsResult run_improving_dynamics(const Game& game, State start, MovePolicy policy,
                                      long long max_moves) {
    require_valid_state(game, start);
    DynamicsResult result;
    result.state = std::move(start);
    auto load = congestion(game, result.state);
    while (true) {
        const auto move = find_improving_move(game, result.state, load, policy);
        if (!move) {
            result.converged = true;
            break;
        }
        if (static_cast<long long>(result.trace.size()) >= max_moves) {
            result.converged = false;
            break;
        }
        Move record;
        record.player = move->player;
        record.from = result.state.choices[move->player];
        record.to = move->to;
        record.potential_before = potential(game, result.state);
        for (int r : game.strategy(move->player, record.from)) --load[r];
        for (int r : game.strategy(move->player, record.to)) ++load[r];
        result.state.choices[move->player] = move->to;
        record.potential_after = potential(game, result.state);
        result.trace.push_back(std::move(record));
    }
    return result;
}

State greedy_sequential_insertion(const Game& game) {
    const GameClass cls = classify(game);
    if (!cls.symmetric || cls.size != 1 || cls.monotonicity != Monotonicity::NonDecreasing)
        throw ClassMismatchError(
            "greedy sequential insertion requires a symmetric singleton game "
            "with non-decreasing latencies");
    std::vector<int> load(game.resource_count(), 0);
    State state;
    state.choices.resize(game.player_count());
    for (int i = 0; i < game.player_count(); ++i) {
        int best_t = -1;
        int best_r = -1;
        Rational best_value;
        for (int t = 0; t < static_cast<int>(game.strategies(i).size()); ++t) {
            const int r = game.strategy(i, t)[0];
            const Rational value = game.resource(r).latency(load[r] + 1);
            if (best_t == -1 || value < best_value ||
                (value == best_value && r < best_r)) {
                best_t = t;
                best_r = r;
                best_value = value;
            }
        }
        state.choices[i] = best_t;
        ++load[best_r];
    }
    return state;
}

} // namespace minpot
