#include "minpot/solvers.hpp"

#include "minpot/approx.hpp"
#include "minpot/dynamics.hpp"
#include "minpot/errors.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace minpot {

namespace {

struct OracleSearch {
    const Game& game;
    std::vector<int> load;
    std::vector<int> choices;
    std::optional<Rational> best;
    std::vector<int> best_choices;

    explicit OracleSearch(const Game& g)
        : game(g), load(g.resource_count(), 0), choices(g.player_count(), -1) {}

    void run(int player, const Rational& partial) {
        if (best && partial >= *best) return;
        if (player == game.player_count()) {
            best = partial;
            best_choices = choices;
            return;
        }
        const auto& list = game.strategies(player);
        for (int t = 0; t < static_cast<int>(list.size()); ++t) {
            Rational delta = 0;
            for (int r : list[t]) delta += game.resource(r).latency(load[r] + 1);
            choices[player] = t;
            for (int r : list[t]) ++load[r];
            run(player + 1, partial + delta);
            for (int r : list[t]) --load[r];
        }
        choices[player] = -1;
    }
};

} // namespace

SolveResult solve_brute_force(const Game& game, const OracleOptions& options) {
    if (game.state_space_size() > options.state_budget)
        throw BudgetExceededError("state space " + game.state_space_size().str() +
                                  " exceeds the enumeration budget " +
                                  std::to_string(options.state_budget));
    OracleSearch search(game);
    search.run(0, Rational(0));
    if (!search.best) throw std::invalid_argument("game has no states");
    SolveResult result;
    result.state = State{search.best_choices};
    result.potential = *search.best;
    result.algorithm = "brute-force";
    result.optimality = Optimality::ProvenOptimal;
    return result;
}

SolveResult solve_symmetric_singleton(const Game& game) {
    SolveResult result;
    result.state = greedy_sequential_insertion(game); // class-checks internally
    result.potential = potential(game, result.state);
    result.algorithm = "greedy-insertion";
    result.optimality = Optimality::ProvenOptimal;
    return result;
}

SolveResult solve_general_singleton(const Game& game) {
    const GameClass cls = classify(game);
    if (cls.size != 1 || !latencies_non_decreasing(game))
        throw ClassMismatchError(
            "the singleton matching solver requires a singleton game with "
            "non-decreasing latencies");

    const int n = game.player_count();
    const int m = game.resource_count();
    const int side = m * n; // players + dummies on the left, (r, mu) slots on the right
    std::vector<WeightedEdge> edges;
    for (int i = 0; i < n; ++i)
        for (const auto& s : game.strategies(i)) {
            const int r = s[0];
            // slots past the resource's evaluable range can never carry a
            // player in a congestion-consistent optimum; dummies fill them
            const int top = std::min(n, game.resource(r).latency.max_evaluable());
            for (int mu = 1; mu <= top; ++mu)
                edges.push_back({i, r * n + (mu - 1), game.resource(r).latency(mu)});
        }
    for (int d = n; d < side; ++d)
        for (int slot = 0; slot < side; ++slot) edges.push_back({d, slot, Rational(0)});

    const Matching matching = min_weight_perfect_bipartite_matching(side, side, edges);

    // slots matched to players, per resource; dummies are irrelevant
    std::vector<std::vector<int>> players_of(m);
    for (const auto& e : matching.edges) {
        if (e.u >= n) continue;
        players_of[(e.v - side) / n].push_back(e.u);
    }
    // canonical slot use: the k players of r sit on slots 1..k
    State state;
    state.choices.assign(n, -1);
    for (int r = 0; r < m; ++r) {
        std::sort(players_of[r].begin(), players_of[r].end());
        for (const int i : players_of[r]) {
            const auto& list = game.strategies(i);
            for (int t = 0; t < static_cast<int>(list.size()); ++t) {
                if (list[t][0] == r) {
                    state.choices[i] = t;
                    break;
                }
            }
        }
    }

    SolveResult result;
    result.state = std::move(state);
    result.potential = potential(game, result.state);
    result.algorithm = "singleton-matching";
    result.optimality = Optimality::ProvenOptimal;
    if (result.potential != matching.weight)
        throw std::logic_error("singleton matching weight does not match the state potential");
    return result;
}

namespace size2 {

int vertex_of(const Reduction& red, int rid, int a) { return rid * red.copies + (a - 1); }

Reduction build(const Game& game) {
    const GameClass cls = classify(game);
    if (!cls.symmetric || cls.size > 2 || !latencies_non_decreasing(game))
        throw ClassMismatchError(
            "the size-2 matching solver requires a symmetric game of size at "
            "most 2 with non-decreasing latencies");

    const int n = game.player_count();
    Reduction red;
    red.copies = n;
    red.resources = game.resource_count() + 1;
    const Rational zero(0);
    const auto latency_at = [&](int rid, int a) {
        return rid == 0 ? zero : game.resource(rid - 1).latency(a);
    };

    // C over the resources the shared strategies actually reference; an
    // unused resource may legitimately carry a short latency table
    const auto& shared = game.strategies(0);
    std::vector<bool> referenced(game.resource_count(), false);
    for (const auto& s : shared)
        for (int r : s) referenced[r] = true;
    red.big_c = 0;
    for (int r = 0; r < game.resource_count(); ++r)
        if (referenced[r]) red.big_c = std::max(red.big_c, game.resource(r).latency(n));
    red.big_c *= 2;
    for (const auto& s : shared) {
        std::pair<int, int> pair;
        if (s.size() == 1)
            pair = {0, s[0] + 1};
        else
            pair = {s[0] + 1, s[1] + 1};
        red.strategy_pairs.push_back(pair);
        red.pair_to_strategy.emplace(pair, static_cast<int>(red.strategy_pairs.size()) - 1);
    }

    std::vector<WeightedEdge> edges;
    std::set<std::pair<int, int>> seen;
    for (const auto& [j, k] : red.strategy_pairs) {
        if (!seen.insert({j, k}).second) continue;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                edges.push_back({vertex_of(red, j, a), vertex_of(red, k, b),
                                 red.big_c - latency_at(j, a) - latency_at(k, b)});
    }
    red.graph = make_graph(red.resources * n, std::move(edges));
    return red;
}

namespace {

struct DecodedEdge {
    int rid_u, a_u;
    int rid_v, a_v;
};

DecodedEdge decode(const Reduction& red, const WeightedEdge& e) {
    return {e.u / red.copies, e.u % red.copies + 1, e.v / red.copies, e.v % red.copies + 1};
}

} // namespace

Matching repair_holes(const Game& game, const Reduction& red, const Matching& matching) {
    const Rational zero(0);
    const auto latency_at = [&](int rid, int a) {
        return rid == 0 ? zero : game.resource(rid - 1).latency(a);
    };
    // per resource: which copies are matched; remap them onto 1..k in order
    std::vector<std::vector<int>> matched(red.resources);
    for (const auto& e : matching.edges) {
        const DecodedEdge d = decode(red, e);
        matched[d.rid_u].push_back(d.a_u);
        matched[d.rid_v].push_back(d.a_v);
    }
    std::vector<std::vector<int>> remap(red.resources); // remap[rid][old a] = new a
    for (int rid = 0; rid < red.resources; ++rid) {
        auto& copies = matched[rid];
        std::sort(copies.begin(), copies.end());
        remap[rid].assign(red.copies + 1, 0);
        for (std::size_t t = 0; t < copies.size(); ++t)
            remap[rid][copies[t]] = static_cast<int>(t) + 1;
    }
    Matching repaired;
    for (const auto& e : matching.edges) {
        const DecodedEdge d = decode(red, e);
        const int na = remap[d.rid_u][d.a_u];
        const int nb = remap[d.rid_v][d.a_v];
        WeightedEdge moved;
        moved.u = vertex_of(red, d.rid_u, na);
        moved.v = vertex_of(red, d.rid_v, nb);
        moved.weight = red.big_c - latency_at(d.rid_u, na) - latency_at(d.rid_v, nb);
        if (moved.u > moved.v) std::swap(moved.u, moved.v);
        repaired.edges.push_back(moved);
    }
    std::sort(repaired.edges.begin(), repaired.edges.end(),
              [](const WeightedEdge& a, const WeightedEdge& b) {
                  return std::pair(a.u, a.v) < std::pair(b.u, b.v);
              });
    repaired.weight = 0;
    for (const auto& e : repaired.edges) repaired.weight += e.weight;
    return repaired;
}

State matching_to_state(const Game& game, const Reduction& red, const Matching& matching) {
    if (static_cast<int>(matching.edges.size()) != game.player_count())
        throw std::invalid_argument("matching size differs from the player count");
    State state;
    state.choices.reserve(game.player_count());
    for (const auto& e : matching.edges) {
        const DecodedEdge d = decode(red, e);
        const std::pair<int, int> pair = std::minmax(d.rid_u, d.rid_v);
        const auto it = red.pair_to_strategy.find(pair);
        if (it == red.pair_to_strategy.end())
            throw std::invalid_argument("matching edge does not correspond to a strategy");
        state.choices.push_back(it->second);
    }
    return state;
}

Matching state_to_matching(const Game& game, const Reduction& red, const State& state) {
    require_valid_state(game, state);
    const Rational zero(0);
    const auto latency_at = [&](int rid, int a) {
        return rid == 0 ? zero : game.resource(rid - 1).latency(a);
    };
    std::vector<int> next_copy(red.resources, 1);
    Matching m;
    for (int i = 0; i < game.player_count(); ++i) {
        const auto [j, k] = red.strategy_pairs[state.choices[i]];
        const int a = next_copy[j]++;
        const int b = next_copy[k]++;
        WeightedEdge e;
        e.u = vertex_of(red, j, a);
        e.v = vertex_of(red, k, b);
        e.weight = red.big_c - latency_at(j, a) - latency_at(k, b);
        if (e.u > e.v) std::swap(e.u, e.v);
        m.edges.push_back(e);
    }
    std::sort(m.edges.begin(), m.edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    m.weight = 0;
    for (const auto& e : m.edges) m.weight += e.weight;
    return m;
}

} // namespace size2

SolveResult solve_symmetric_size2(const Game& game) {
    const size2::Reduction red = size2::build(game);
    const int n = game.player_count();
    const Matching raw = max_weight_matching_of_size(red.graph, n);
    const Matching repaired = size2::repair_holes(game, red, raw);
    SolveResult result;
    result.state = size2::matching_to_state(game, red, repaired);
    result.potential = potential(game, result.state);
    result.algorithm = "size2-matching";
    result.optimality = Optimality::ProvenOptimal;
    if (result.potential != red.big_c * n - repaired.weight)
        throw std::logic_error("size-2 reduction: repaired weight does not match the potential");
    return result;
}

SolveResult solve_symmetric_nonincreasing(const Game& game) {
    const GameClass cls = classify(game);
    if (!cls.symmetric || !latencies_non_increasing(game))
        throw ClassMismatchError(
            "the single-strategy enumeration requires a symmetric game with "
            "non-increasing latencies");
    SolveResult result;
    result.algorithm = "nonincreasing-enum";
    result.optimality = Optimality::ProvenOptimal;
    std::optional<Rational> best;
    const int count = static_cast<int>(game.strategies(0).size());
    for (int t = 0; t < count; ++t) {
        State state;
        state.choices.assign(game.player_count(), t);
        const Rational value = potential(game, state);
        if (!best || value < *best) {
            best = value;
            result.state = std::move(state);
        }
    }
    if (!best) throw std::invalid_argument("game has no states");
    result.potential = *best;
    return result;
}

SolveResult solve(const Game& game, const OracleOptions& options) {
    const GameClass cls = classify(game);
    const bool nd = latencies_non_decreasing(game);
    const bool ni = latencies_non_increasing(game);
    if (cls.symmetric && cls.size == 1 && nd) return solve_symmetric_singleton(game);
    if (cls.size == 1 && nd) return solve_general_singleton(game);
    if (cls.symmetric && cls.size <= 2 && nd) return solve_symmetric_size2(game);
    if (cls.symmetric && ni) return solve_symmetric_nonincreasing(game);

    if (game.state_space_size() <= options.state_budget) return solve_brute_force(game, options);

    if (cls.size == 1 && ni) return greedy_nonincreasing_singleton(game);

    State start;
    start.choices.assign(game.player_count(), 0);
    const DynamicsResult dyn = run_improving_dynamics(game, std::move(start),
                                                      MovePolicy::BestResponse,
                                                      default_move_budget(game));
    SolveResult result;
    result.state = dyn.state;
    result.potential = potential(game, result.state);
    result.algorithm = "dynamics";
    result.optimality = Optimality::Heuristic;
    return result;
}

} // namespace minpot
