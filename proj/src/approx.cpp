#include "minpot/approx.hpp"

#include "minpot/errors.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace minpot {

SolveResult greedy_nonincreasing_singleton(const Game& game) {
    const GameClass cls = classify(game);
    if (cls.size != 1 || !latencies_non_increasing(game))
        throw ClassMismatchError(
            "the greedy cover requires a singleton game with non-increasing latencies");

    const int n = game.player_count();
    const int m = game.resource_count();
    // users[r]: players that may pick r, with the strategy index realizing it
    std::vector<std::vector<std::pair<int, int>>> users(m);
    for (int i = 0; i < n; ++i) {
        const auto& list = game.strategies(i);
        for (int t = 0; t < static_cast<int>(list.size()); ++t)
            users[list[t][0]].push_back({i, t});
    }

    std::vector<bool> assigned(n, false);
    std::vector<bool> retired(m, false);
    State state;
    state.choices.assign(n, -1);
    int remaining = n;
    while (remaining > 0) {
        int pick = -1;
        Rational pick_alpha;
        for (int r = 0; r < m; ++r) {
            if (retired[r]) continue;
            int nu = 0;
            for (const auto& [i, t] : users[r])
                if (!assigned[i]) ++nu;
            if (nu == 0) continue;
            Rational total = 0;
            for (int t = 1; t <= nu; ++t) total += game.resource(r).latency(t);
            const Rational alpha = total / nu;
            if (pick == -1 || alpha < pick_alpha) {
                pick = r;
                pick_alpha = alpha;
            }
        }
        if (pick == -1)
            throw std::logic_error("greedy cover: unassigned player without available resource");
        for (const auto& [i, t] : users[pick]) {
            if (assigned[i]) continue;
            assigned[i] = true;
            state.choices[i] = t;
            --remaining;
        }
        retired[pick] = true;
    }

    SolveResult result;
    result.state = std::move(state);
    result.potential = potential(game, result.state);
    result.algorithm = "greedy-cover";
    result.optimality = Optimality::Heuristic;
    return result;
}

Game running_average_transform(const Game& game) {
    std::vector<Resource> averaged;
    averaged.reserve(game.resource_count());
    const int n = game.player_count();
    for (const auto& res : game.resources()) {
        const int length = res.latency.kind() == LatencyFunction::Kind::Table
                               ? res.latency.max_evaluable()
                               : n;
        std::vector<Rational> values;
        values.reserve(length);
        Rational prefix = 0;
        for (int x = 1; x <= length; ++x) {
            prefix += res.latency(x);
            values.push_back(prefix / x);
        }
        // declare a direction when the averages are monotone one way
        bool nondecreasing = true;
        bool nonincreasing = true;
        for (std::size_t h = 0; h + 1 < values.size(); ++h) {
            if (values[h + 1] < values[h]) nondecreasing = false;
            if (values[h + 1] > values[h]) nonincreasing = false;
        }
        std::optional<Trend> declared;
        if (nondecreasing)
            declared = Trend::NonDecreasing;
        else if (nonincreasing)
            declared = Trend::NonIncreasing;
        averaged.push_back({res.name, LatencyFunction::table(std::move(values), declared)});
    }

    if (game.symmetric_hint())
        return Game::symmetric(game.player_count(), std::move(averaged), game.strategies(0));
    std::vector<std::vector<Strategy>> per_player;
    per_player.reserve(game.player_count());
    for (int i = 0; i < game.player_count(); ++i) per_player.push_back(game.strategies(i));
    return Game::general(std::move(averaged), std::move(per_player));
}

} // namespace minpot
