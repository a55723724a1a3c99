#include "minpot/game.hpp"

#include "minpot/errors.hpp"
#include "minpot/generators.hpp"
#include "testutil.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace minpot;

TEST_CASE("latency evaluation") {
    const auto table = LatencyFunction::table({Rational(1), Rational(3, 2)});
    CHECK(table(0) == 0);
    CHECK(table(1) == 1);
    CHECK(table(2) == Rational(3, 2));
    CHECK_THROWS_AS(table(3), std::out_of_range);
    CHECK_THROWS_AS(table(-1), std::out_of_range);

    const auto poly = LatencyFunction::polynomial({Rational(0), Rational(2), Rational(1)});
    CHECK(poly(0) == 0);
    CHECK(poly(1) == 3);  // 2*1 + 1
    CHECK(poly(3) == 15); // 6 + 9
}

TEST_CASE("congestion counts users per resource") {
    const Game game = testutil::asym_singleton_two_pne();
    CHECK(congestion(game, testutil::kAsymEquilibriumHigh) == std::vector<int>{0, 1, 1});
    CHECK(congestion(game, testutil::kAsymEquilibriumLow) == std::vector<int>{1, 0, 1});
    CHECK_THROWS_AS(congestion(game, State{{0, 7}}), std::invalid_argument);
    CHECK_THROWS_AS(congestion(game, State{{0}}), std::invalid_argument);
}

TEST_CASE("congestion with everyone on one resource") {
    const Game game = Game::symmetric(5, {{"r", testutil::linear(1)}}, {{0}});
    State state;
    state.choices.assign(5, 0);
    CHECK(congestion(game, state) == std::vector<int>{5});
}

TEST_CASE("congestion matches an independent per-player tally") {
    minpot::Rng rng(11);
    for (int round = 0; round < 20; ++round) {
        const Game game = random_game(
            {true, 2, Monotonicity::NonDecreasing, 4, rng.uniform_int(2, 4), 4}, rng.next());
        testutil::for_each_state(game, [&](const State& s) {
            std::vector<int> tally(game.resource_count(), 0);
            for (int i = 0; i < game.player_count(); ++i)
                for (int r = 0; r < game.resource_count(); ++r) {
                    const auto& strat = game.strategy(i, s.choices[i]);
                    tally[r] += std::count(strat.begin(), strat.end(), r);
                }
            CHECK(congestion(game, s) == tally);
        });
    }
}

TEST_CASE("player cost") {
    const Game game = testutil::asym_singleton_two_pne();
    CHECK(player_cost(game, testutil::kAsymEquilibriumHigh, 0) == 2);
    CHECK(player_cost(game, testutil::kAsymEquilibriumHigh, 1) == 1);
    CHECK_THROWS_AS(player_cost(game, testutil::kAsymEquilibriumHigh, 5),
                    std::invalid_argument);

    const Game single = Game::symmetric(1, {{"r", testutil::linear(1)}}, {{0}});
    CHECK(player_cost(single, State{{0}}, 0) == 1);

    const Game pairs = testutil::sym_size2_two_pne();
    CHECK(player_cost(pairs, testutil::kSymSize2EquilibriumLow, 0) == 4); // l1(2) + l3(1)
}

TEST_CASE("potential values from the worked examples") {
    const Game game = testutil::asym_singleton_two_pne();
    CHECK(potential(game, testutil::kAsymEquilibriumHigh) == 3);
    CHECK(potential(game, testutil::kAsymEquilibriumLow) == 2);

    const Game pairs = testutil::sym_size2_two_pne();
    CHECK(potential(pairs, testutil::kSymSize2EquilibriumHigh) == 9);
    CHECK(potential(pairs, testutil::kSymSize2EquilibriumLow) == 7);
}

TEST_CASE("social cost") {
    const Game one = Game::symmetric(1, {{"r", LatencyFunction::table({Rational(5)})}}, {{0}});
    CHECK(social_cost(one, State{{0}}) == 5);

    const Game two = Game::symmetric(2, {{"r", testutil::linear(1)}}, {{0}});
    CHECK(social_cost(two, State{{0, 0}}) == 4); // both pay l(2) = 2
}

TEST_CASE("social cost equals the congestion-weighted resource sum") {
    minpot::Rng rng(23);
    for (int round = 0; round < 20; ++round) {
        const Game game = random_game(
            {false, 2, Monotonicity::NonDecreasing, 4, rng.uniform_int(2, 4), 3}, rng.next());
        testutil::for_each_state(game, [&](const State& s) {
            const auto load = congestion(game, s);
            Rational by_resource = 0;
            for (int r = 0; r < game.resource_count(); ++r)
                by_resource += Rational(load[r]) * game.resource(r).latency(load[r]);
            CHECK(social_cost(game, s) == by_resource);
        });
    }
}

TEST_CASE("classification") {
    const GameClass pairs = classify(testutil::sym_size2_two_pne());
    CHECK(pairs.symmetric);
    CHECK(pairs.size == 2);
    CHECK(pairs.monotonicity == Monotonicity::NonDecreasing);
    CHECK_FALSE(pairs.identical_latencies);

    const Game single = Game::symmetric(1, {{"r", testutil::linear(1)}}, {{0}});
    const GameClass single_cls = classify(single);
    CHECK(single_cls.symmetric);
    CHECK(single_cls.size == 1);

    const Game vc = from_vertex_cover({3, {{0, 1}, {1, 2}, {0, 2}}});
    const GameClass vc_cls = classify(vc);
    CHECK_FALSE(vc_cls.symmetric);
    CHECK(vc_cls.size == 1);
    CHECK(vc_cls.monotonicity == Monotonicity::NonIncreasing);
    CHECK(vc_cls.identical_latencies);

    const Game asym = testutil::asym_singleton_two_pne();
    CHECK_FALSE(classify(asym).symmetric);
}

TEST_CASE("mixed monotonicity") {
    std::vector<Resource> resources = {
        {"up", LatencyFunction::table({Rational(1), Rational(2)})},
        {"down", LatencyFunction::table({Rational(2), Rational(1)})}};
    const Game game = Game::symmetric(2, std::move(resources), {{0}, {1}});
    CHECK(classify(game).monotonicity == Monotonicity::Mixed);
    CHECK_FALSE(latencies_non_decreasing(game));
    CHECK_FALSE(latencies_non_increasing(game));
}

TEST_CASE("constant latencies count as both directions") {
    const Game game =
        Game::symmetric(3, {{"r", LatencyFunction::table({Rational(2), Rational(2), Rational(2)})}},
                        {{0}});
    CHECK(latencies_non_decreasing(game));
    CHECK(latencies_non_increasing(game));
    CHECK(classify(game).monotonicity == Monotonicity::NonDecreasing);
}

TEST_CASE("validate flags structural problems") {
    // empty strategy
    {
        const Game game = Game::symmetric(1, {{"r", testutil::linear(1)}}, {Strategy{}});
        const auto violations = validate(game);
        REQUIRE_FALSE(violations.empty());
        CHECK(violations[0].message == "empty strategy");
    }
    // l(1) = 0
    {
        const Game game = Game::symmetric(
            1, {{"r", LatencyFunction::table({Rational(0)})}}, {{0}});
        bool found = false;
        for (const auto& v : validate(game)) found = found || v.message == "l(1) must be positive";
        CHECK(found);
    }
    // well-formed
    CHECK(validate(testutil::sym_size2_two_pne()).empty());
    CHECK(validate(testutil::asym_singleton_two_pne()).empty());
    CHECK(validate(testutil::nonincreasing_two_pne()).empty());
}

TEST_CASE("validate covers the remaining invariants") {
    // unknown resource index
    CHECK_FALSE(validate(Game::symmetric(1, {{"r", testutil::linear(1)}}, {{5}})).empty());
    // duplicate resource inside one strategy
    CHECK_FALSE(validate(Game::symmetric(1, {{"r", testutil::linear(1)}}, {{0, 0}})).empty());
    // duplicate strategies
    CHECK_FALSE(validate(Game::symmetric(1, {{"r", testutil::linear(1)}}, {{0}, {0}})).empty());
    // table shorter than the possible congestion
    CHECK_FALSE(
        validate(Game::symmetric(3, {{"r", LatencyFunction::table({Rational(1)})}}, {{0}}))
            .empty());
    // declared direction violated
    CHECK_FALSE(validate(Game::symmetric(
                             2,
                             {{"r", LatencyFunction::table({Rational(2), Rational(1)},
                                                           Trend::NonDecreasing)}},
                             {{0}}))
                    .empty());
    // polynomial with a non-zero constant term
    CHECK_FALSE(validate(Game::symmetric(
                             1, {{"r", LatencyFunction::polynomial({Rational(1), Rational(1)})}},
                             {{0}}))
                    .empty());
    // zero tail on a non-increasing table is allowed
    CHECK(validate(Game::symmetric(2,
                                   {{"r", LatencyFunction::table({Rational(1), Rational(0)},
                                                                 Trend::NonIncreasing)}},
                                   {{0}}))
              .empty());
    // require_valid throws with the violations joined
    CHECK_THROWS_AS(
        require_valid(Game::symmetric(1, {{"r", testutil::linear(1)}}, {Strategy{}})),
        ValidationError);
}

TEST_CASE("deviations change the potential exactly like the deviator's cost") {
    minpot::Rng rng(37);
    int checked = 0;
    while (checked < 300) {
        const bool symmetric = rng.uniform_int(0, 1) == 1;
        const Monotonicity mono =
            rng.uniform_int(0, 1) == 1 ? Monotonicity::NonDecreasing : Monotonicity::NonIncreasing;
        const int n = rng.uniform_int(2, 5);
        const int m = rng.uniform_int(2, 5);
        const int size = rng.uniform_int(1, std::min(2, m));
        const Game game = random_game({symmetric, size, mono, n, m, 4}, rng.next());
        State state;
        for (int i = 0; i < n; ++i)
            state.choices.push_back(
                rng.uniform_int(0, static_cast<int>(game.strategies(i).size()) - 1));
        const int player = rng.uniform_int(0, n - 1);
        const int to =
            rng.uniform_int(0, static_cast<int>(game.strategies(player).size()) - 1);
        State deviated = state;
        deviated.choices[player] = to;
        const Rational phi_delta = potential(game, state) - potential(game, deviated);
        const Rational cost_delta =
            player_cost(game, state, player) - player_cost(game, deviated, player);
        CHECK(phi_delta == cost_delta);
        ++checked;
    }
}

TEST_CASE("potential equals the sum of marginal insertion costs") {
    minpot::Rng rng(41);
    for (int round = 0; round < 40; ++round) {
        const Game game = random_game(
            {true, 2, Monotonicity::NonDecreasing, rng.uniform_int(2, 5), rng.uniform_int(2, 4), 4},
            rng.next());
        State state;
        for (int i = 0; i < game.player_count(); ++i)
            state.choices.push_back(
                rng.uniform_int(0, static_cast<int>(game.strategies(i).size()) - 1));
        std::vector<int> load(game.resource_count(), 0);
        Rational incremental = 0;
        for (int i = 0; i < game.player_count(); ++i) {
            for (int r : game.strategy(i, state.choices[i])) {
                incremental += game.resource(r).latency(load[r] + 1);
                ++load[r];
            }
        }
        CHECK(incremental == potential(game, state));
    }
}
