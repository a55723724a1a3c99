#include "minpot/solvers.hpp"

#include "minpot/dynamics.hpp"
#include "minpot/errors.hpp"
#include "minpot/generators.hpp"
#include "testutil.hpp"

#include <doctest.h>

#include <algorithm>

using namespace minpot;

namespace {

// a random (usually hole-ridden) matching of size q in the reduction graph
Matching random_size_q_matching(const WeightedGraph& g, int q, minpot::Rng& rng) {
    while (true) {
        std::vector<int> order(g.edges.size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
        for (std::size_t k = 0; k < order.size(); ++k)
            std::swap(order[k], order[rng.uniform_int(static_cast<int>(k),
                                                      static_cast<int>(order.size()) - 1)]);
        std::vector<bool> used(g.vertex_count, false);
        Matching m;
        for (const int k : order) {
            const auto& e = g.edges[k];
            if (used[e.u] || used[e.v]) continue;
            used[e.u] = used[e.v] = true;
            m.edges.push_back(e);
            m.weight += e.weight;
            if (static_cast<int>(m.edges.size()) == q) return m;
        }
    }
}

Game random_in_class(minpot::Rng& rng, bool symmetric, int size, Monotonicity mono,
                     int max_players = 5, int max_resources = 4) {
    const int n = rng.uniform_int(2, max_players);
    const int m = rng.uniform_int(std::max(2, size), max_resources);
    return random_game({symmetric, size, mono, n, m, 4}, rng.next());
}

} // namespace

TEST_CASE("oracle minimizes exactly and reports the first minimizer") {
    const Game asym = testutil::asym_singleton_two_pne();
    const SolveResult r1 = solve_brute_force(asym);
    CHECK(r1.potential == 2);
    CHECK(r1.optimality == Optimality::ProvenOptimal);
    CHECK(r1.algorithm == "brute-force");
    CHECK(r1.state == testutil::kAsymEquilibriumLow);

    const Game pairs = testutil::sym_size2_two_pne();
    const SolveResult r2 = solve_brute_force(pairs);
    CHECK(r2.potential == 7);
    CHECK(r2.state == testutil::plain_min_potential(pairs).second);

    const Game single = Game::general(
        {{"a", testutil::linear(3)}, {"b", testutil::linear(1)}}, {{{0}, {1}}});
    const SolveResult r3 = solve_brute_force(single);
    CHECK(r3.potential == 1);
    CHECK(r3.state.choices == std::vector<int>{1});
}

TEST_CASE("oracle agrees with plain enumeration on random games") {
    minpot::Rng rng(211);
    for (int round = 0; round < 40; ++round) {
        const Game game = random_in_class(rng, rng.uniform_int(0, 1) == 1, rng.uniform_int(1, 2),
                                          rng.uniform_int(0, 1) == 1
                                              ? Monotonicity::NonDecreasing
                                              : Monotonicity::NonIncreasing);
        const auto [value, state] = testutil::plain_min_potential(game);
        const SolveResult result = solve_brute_force(game);
        CHECK(result.potential == value);
        CHECK(result.state == state); // lexicographic first minimizer
    }
}

TEST_CASE("oracle refuses beyond its budget") {
    const Game pairs = testutil::sym_size2_two_pne(); // 36 states
    CHECK_THROWS_AS(solve_brute_force(pairs, {35}), BudgetExceededError);
    CHECK(solve_brute_force(pairs, {36}).potential == 7);
}

TEST_CASE("symmetric singleton solver") {
    const Game two = Game::symmetric(
        2, {{"a", testutil::linear(1)}, {"b", testutil::linear(1)}}, {{0}, {1}});
    const SolveResult r = solve_symmetric_singleton(two);
    CHECK(r.potential == 2);
    CHECK(r.algorithm == "greedy-insertion");
    CHECK(r.optimality == Optimality::ProvenOptimal);

    const Game three = Game::symmetric(
        3, {{"a", testutil::linear(1)}, {"b", testutil::linear(2)}}, {{0}, {1}});
    CHECK(solve_symmetric_singleton(three).potential == 5);

    minpot::Rng rng(223);
    for (int round = 0; round < 50; ++round) {
        const Game game = random_in_class(rng, true, 1, Monotonicity::NonDecreasing, 6, 5);
        CHECK(solve_symmetric_singleton(game).potential ==
              testutil::plain_min_potential(game).first);
    }
    CHECK_THROWS_AS(solve_symmetric_singleton(testutil::asym_singleton_two_pne()),
                    ClassMismatchError);
}

TEST_CASE("general singleton solver via bipartite matching") {
    const Game asym = testutil::asym_singleton_two_pne();
    const SolveResult r = solve_general_singleton(asym);
    CHECK(r.potential == 2);
    CHECK(r.algorithm == "singleton-matching");
    CHECK(r.optimality == Optimality::ProvenOptimal);
    CHECK(r.state == testutil::kAsymEquilibriumLow); // unique minimizer

    const Game single = Game::general(
        {{"a", testutil::linear(3)}, {"b", testutil::linear(1)}}, {{{0}, {1}}});
    CHECK(solve_general_singleton(single).potential == 1);

    minpot::Rng rng(227);
    for (int round = 0; round < 50; ++round) {
        const Game game = random_in_class(rng, false, 1, Monotonicity::NonDecreasing, 6, 5);
        CHECK(solve_general_singleton(game).potential ==
              testutil::plain_min_potential(game).first);
    }
    CHECK_THROWS_AS(solve_general_singleton(testutil::sym_size2_two_pne()), ClassMismatchError);
    CHECK_THROWS_AS(solve_general_singleton(testutil::nonincreasing_two_pne()),
                    ClassMismatchError);
}

TEST_CASE("solvers accept tables that only cover the reachable congestion") {
    // r2 is reachable by one player only, so its table may hold one entry
    const Game narrow = Game::general(
        {{"r1", testutil::linear(1)},
         {"r2", LatencyFunction::table({Rational(1, 2)})}},
        {{{0}, {1}}, {{0}}, {{0}}});
    REQUIRE(validate(narrow).empty());
    CHECK(solve_general_singleton(narrow).potential ==
          testutil::plain_min_potential(narrow).first);

    // an unused resource with a short table must not disturb the size-2 path
    const Game with_unused = Game::symmetric(
        2,
        {{"a", testutil::linear(1)},
         {"b", testutil::linear(2)},
         {"idle", LatencyFunction::table({Rational(9)})}},
        {{0}, {0, 1}});
    REQUIRE(validate(with_unused).empty());
    CHECK(solve_symmetric_size2(with_unused).potential ==
          testutil::plain_min_potential(with_unused).first);
}

TEST_CASE("size-2 solver on the two-equilibria example") {
    const Game pairs = testutil::sym_size2_two_pne();
    const SolveResult r = solve_symmetric_size2(pairs);
    CHECK(r.potential == 7);
    CHECK(r.algorithm == "size2-matching");
    CHECK(r.optimality == Optimality::ProvenOptimal);
}

TEST_CASE("size-2 solver accepts single players and padded singletons") {
    const Game one = Game::symmetric(
        1, {{"a", testutil::linear(1)}, {"b", testutil::linear(1)}}, {{0, 1}});
    CHECK(solve_symmetric_size2(one).potential == 2);

    // mixed singleton and pair strategies
    const Game mixed = Game::symmetric(
        2, {{"a", testutil::linear(1)}, {"b", testutil::linear(2)}}, {{0}, {0, 1}});
    CHECK(solve_symmetric_size2(mixed).potential ==
          testutil::plain_min_potential(mixed).first);
}

TEST_CASE("size-2 solver equals the enumeration minimum on random games") {
    minpot::Rng rng(229);
    for (int round = 0; round < 40; ++round) {
        const Game game = random_in_class(rng, true, 2, Monotonicity::NonDecreasing, 5, 5);
        CHECK(solve_symmetric_size2(game).potential ==
              testutil::plain_min_potential(game).first);
    }
    CHECK_THROWS_AS(solve_symmetric_size2(testutil::asym_singleton_two_pne()),
                    ClassMismatchError);
    CHECK_THROWS_AS(solve_symmetric_size2(testutil::nonincreasing_two_pne()),
                    ClassMismatchError);
}

TEST_CASE("size-2 reduction: the two conversion directions agree") {
    // the reduction graph of the two-equilibria example, as a worked value:
    // C = 2 * max_r l_r(2) = 16, and the best size-2 matching weighs 2C - 7
    const Game pairs = testutil::sym_size2_two_pne();
    const size2::Reduction red = size2::build(pairs);
    CHECK(red.big_c == 16);
    const Matching best = max_weight_matching_of_size(red.graph, 2);
    CHECK(best.weight == Rational(2) * red.big_c - 7);

    minpot::Rng rng(233);
    for (int round = 0; round < 25; ++round) {
        const Game game = random_in_class(rng, true, 2, Monotonicity::NonDecreasing, 5, 4);
        const size2::Reduction r = size2::build(game);
        const int n = game.player_count();
        // any state gives a matching weighing exactly n*C - potential
        for (int trial = 0; trial < 5; ++trial) {
            State state;
            for (int i = 0; i < n; ++i)
                state.choices.push_back(
                    rng.uniform_int(0, static_cast<int>(game.strategies(i).size()) - 1));
            const Matching m = size2::state_to_matching(game, r, state);
            CHECK(static_cast<int>(m.edges.size()) == n);
            CHECK(m.weight == Rational(n) * r.big_c - potential(game, state));
        }
        // any size-n matching converts, after repair, to a state with
        // potential at most n*C - w; repair never loses weight
        for (int trial = 0; trial < 5; ++trial) {
            const Matching m = random_size_q_matching(r.graph, n, rng);
            const Matching repaired = size2::repair_holes(game, r, m);
            CHECK(repaired.weight >= m.weight);
            const State state = size2::matching_to_state(game, r, repaired);
            CHECK(potential(game, state) <= Rational(n) * r.big_c - m.weight);
        }
    }
}

TEST_CASE("single-strategy enumeration for symmetric non-increasing games") {
    const Game example = testutil::nonincreasing_two_pne();
    const SolveResult r = solve_symmetric_nonincreasing(example);
    CHECK(r.potential == 7);
    CHECK(r.algorithm == "nonincreasing-enum");
    CHECK(r.optimality == Optimality::ProvenOptimal);
    // everyone on one resource
    const auto load = congestion(example, r.state);
    CHECK(*std::max_element(load.begin(), load.end()) == 4);

    const Game one_strategy = Game::symmetric(
        3,
        {{"r", LatencyFunction::table({Rational(5), Rational(1), Rational(1)},
                                      Trend::NonIncreasing)}},
        {{0}});
    CHECK(solve_symmetric_nonincreasing(one_strategy).potential == 7);

    minpot::Rng rng(239);
    for (int round = 0; round < 50; ++round) {
        const Game game = random_in_class(rng, true, rng.uniform_int(1, 2),
                                          Monotonicity::NonIncreasing, 5, 4);
        CHECK(solve_symmetric_nonincreasing(game).potential ==
              testutil::plain_min_potential(game).first);
    }
    CHECK_THROWS_AS(solve_symmetric_nonincreasing(testutil::sym_size2_two_pne()),
                    ClassMismatchError);
}

TEST_CASE("front door dispatch") {
    // symmetric singleton: sequential insertion
    const Game sym_singleton = Game::symmetric(
        2, {{"a", testutil::linear(1)}, {"b", testutil::linear(1)}}, {{0}, {1}});
    CHECK(solve(sym_singleton).algorithm == "greedy-insertion");
    CHECK(solve(sym_singleton).optimality == Optimality::ProvenOptimal);

    // asymmetric singleton: bipartite matching
    CHECK(solve(testutil::asym_singleton_two_pne()).algorithm == "singleton-matching");

    // symmetric size 2: fixed-size matching
    CHECK(solve(testutil::sym_size2_two_pne()).algorithm == "size2-matching");

    // symmetric non-increasing: single-strategy enumeration
    CHECK(solve(testutil::nonincreasing_two_pne()).algorithm == "nonincreasing-enum");

    // symmetric size 3: no polynomial solver, small enough for the oracle
    std::vector<Strategy> triples;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            for (int c = b + 1; c < 4; ++c) triples.push_back({a, b, c});
    const Game size3 = Game::symmetric(3,
                                       {{"a", testutil::linear(1)},
                                        {"b", testutil::linear(2)},
                                        {"c", testutil::linear(1)},
                                        {"d", testutil::linear(3)}},
                                       std::move(triples));
    const SolveResult oracle_result = solve(size3);
    CHECK(oracle_result.algorithm == "brute-force");
    CHECK(oracle_result.optimality == Optimality::ProvenOptimal);

    // same class with a tiny budget: improving dynamics, flagged heuristic
    const SolveResult dyn_result = solve(size3, {1});
    CHECK(dyn_result.algorithm == "dynamics");
    CHECK(dyn_result.optimality == Optimality::Heuristic);
    CHECK(dyn_result.potential >= oracle_result.potential);

    // non-increasing singleton, asymmetric, tiny budget: greedy cover
    const Game tight = greedy_tight_instance(4, Rational(1, 100));
    const SolveResult greedy_result = solve(tight, {1});
    CHECK(greedy_result.algorithm == "greedy-cover");
    CHECK(greedy_result.optimality == Optimality::Heuristic);

    // within budget the same game goes to the oracle
    CHECK(solve(tight).algorithm == "brute-force");
}

TEST_CASE("dispatch always returns a usable result") {
    minpot::Rng rng(251);
    for (int round = 0; round < 40; ++round) {
        const bool symmetric = rng.uniform_int(0, 1) == 1;
        const int size = rng.uniform_int(1, 3);
        const Monotonicity mono = rng.uniform_int(0, 2) == 0   ? Monotonicity::NonDecreasing
                                  : rng.uniform_int(0, 1) == 0 ? Monotonicity::NonIncreasing
                                                               : Monotonicity::Mixed;
        const int m = std::max(size, rng.uniform_int(2, 4));
        const Game game = random_game({symmetric, size, mono, rng.uniform_int(2, 5), m, 4},
                                      rng.next());
        const SolveResult result = solve(game);
        CHECK(result.potential == potential(game, result.state));
        if (result.optimality == Optimality::ProvenOptimal)
            CHECK(result.potential == testutil::plain_min_potential(game).first);
        else
            CHECK(result.potential >= testutil::plain_min_potential(game).first);
    }
}
