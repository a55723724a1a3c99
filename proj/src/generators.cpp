#include "minpot/generators.hpp"

#include "minpot/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace minpot {

namespace {

LatencyFunction linear_latency() {
    return LatencyFunction::polynomial({Rational(0), Rational(1)});
}

// l(1) = first, l(h) = 0 afterwards; the usual cover gadget
LatencyFunction first_user_latency(const Rational& first, int length) {
    std::vector<Rational> values(length, Rational(0));
    values.at(0) = first;
    return LatencyFunction::table(std::move(values), Trend::NonIncreasing);
}

} // namespace

Game from_3dm(const ThreeDMInstance& instance) {
    if (instance.q < 1) throw std::invalid_argument("3dm: q must be at least 1");
    std::vector<std::vector<Strategy>> per_player(instance.q);
    for (const auto& [x, y, z] : instance.triples) {
        if (x < 0 || x >= instance.q || y < 0 || y >= instance.q || z < 0 || z >= instance.q)
            throw std::invalid_argument("3dm: triple coordinate out of range");
        per_player[x].push_back({y, instance.q + z});
    }
    for (int x = 0; x < instance.q; ++x) {
        if (per_player[x].empty())
            throw std::invalid_argument("3dm: element " + std::to_string(x) +
                                        " of the first set appears in no triple");
        std::sort(per_player[x].begin(), per_player[x].end());
        per_player[x].erase(std::unique(per_player[x].begin(), per_player[x].end()),
                            per_player[x].end());
    }
    std::vector<Resource> resources;
    for (int j = 0; j < instance.q; ++j)
        resources.push_back({"y" + std::to_string(j + 1), linear_latency()});
    for (int k = 0; k < instance.q; ++k)
        resources.push_back({"z" + std::to_string(k + 1), linear_latency()});
    return Game::general(std::move(resources), std::move(per_player));
}

Game from_x3c(const X3CInstance& instance) {
    if (instance.q < 1) throw std::invalid_argument("x3c: q must be at least 1");
    if (instance.sets.empty()) throw std::invalid_argument("x3c: empty collection");
    std::vector<Strategy> shared;
    for (const auto& s : instance.sets) {
        Strategy strategy(s.begin(), s.end());
        std::sort(strategy.begin(), strategy.end());
        if (strategy[0] < 0 || strategy[2] >= 3 * instance.q)
            throw std::invalid_argument("x3c: member out of range");
        if (strategy[0] == strategy[1] || strategy[1] == strategy[2])
            throw std::invalid_argument("x3c: set members must be distinct");
        shared.push_back(std::move(strategy));
    }
    std::sort(shared.begin(), shared.end());
    shared.erase(std::unique(shared.begin(), shared.end()), shared.end());
    std::vector<Resource> resources;
    for (int r = 0; r < 3 * instance.q; ++r)
        resources.push_back({"x" + std::to_string(r + 1), linear_latency()});
    return Game::symmetric(instance.q, std::move(resources), std::move(shared));
}

Game from_vertex_cover(const VertexCoverInstance& instance) {
    if (instance.vertices < 1) throw std::invalid_argument("vertex cover: empty graph");
    if (instance.edges.empty()) throw std::invalid_argument("vertex cover: no edges");
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v] : instance.edges) {
        if (u < 0 || u >= instance.vertices || v < 0 || v >= instance.vertices)
            throw std::invalid_argument("vertex cover: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("vertex cover: self-loop");
        if (!seen.insert(std::minmax(u, v)).second)
            throw std::invalid_argument("vertex cover: duplicate edge");
    }
    const int players = static_cast<int>(instance.edges.size());
    std::vector<Resource> resources;
    for (int v = 0; v < instance.vertices; ++v)
        resources.push_back({"v" + std::to_string(v + 1), first_user_latency(Rational(1), players)});
    std::vector<std::vector<Strategy>> per_player;
    per_player.reserve(players);
    for (const auto& [u, v] : instance.edges) per_player.push_back({{u}, {v}});
    return Game::general(std::move(resources), std::move(per_player));
}

Game from_set_cover(const SetCoverInstance& instance) {
    if (instance.universe < 1) throw std::invalid_argument("set cover: empty universe");
    if (instance.sets.empty()) throw std::invalid_argument("set cover: no sets");
    std::vector<std::vector<Strategy>> per_player(instance.universe);
    std::vector<Resource> resources;
    for (std::size_t c = 0; c < instance.sets.size(); ++c) {
        const auto& ws = instance.sets[c];
        if (ws.weight <= 0) throw std::invalid_argument("set cover: weights must be positive");
        if (ws.members.empty()) throw std::invalid_argument("set cover: empty set");
        std::set<int> distinct;
        for (const int e : ws.members) {
            if (e < 0 || e >= instance.universe)
                throw std::invalid_argument("set cover: member out of range");
            if (!distinct.insert(e).second)
                throw std::invalid_argument("set cover: duplicate member");
            per_player[e].push_back({static_cast<int>(c)});
        }
        resources.push_back(
            {"S" + std::to_string(c + 1), first_user_latency(ws.weight, instance.universe)});
    }
    for (int e = 0; e < instance.universe; ++e)
        if (per_player[e].empty())
            throw std::invalid_argument("set cover: element " + std::to_string(e) +
                                        " is covered by no set");
    return Game::general(std::move(resources), std::move(per_player));
}

Game greedy_tight_instance(int n, const Rational& eps) {
    if (n < 1) throw std::invalid_argument("tight family: n must be at least 1");
    if (eps <= 0) throw std::invalid_argument("tight family: eps must be positive");
    std::vector<Resource> resources;
    resources.push_back({"r0", first_user_latency(Rational(1) + eps, n)});
    for (int i = 1; i <= n; ++i)
        resources.push_back({"r" + std::to_string(i), first_user_latency(Rational(1, i), n)});
    std::vector<std::vector<Strategy>> per_player;
    for (int i = 1; i <= n; ++i) per_player.push_back({{0}, {i}});
    return Game::general(std::move(resources), std::move(per_player));
}

int Rng::uniform_int(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t range = static_cast<std::uint64_t>(hi) - lo + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return lo + static_cast<int>(x % range);
}

std::vector<int> Rng::sample_distinct(int lo, int hi, int count) {
    std::vector<int> pool;
    for (int v = lo; v <= hi; ++v) pool.push_back(v);
    if (count > static_cast<int>(pool.size()))
        throw std::invalid_argument("sample_distinct: range too small");
    for (int i = 0; i < count; ++i) {
        const int j = uniform_int(i, static_cast<int>(pool.size()) - 1);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

namespace {

LatencyFunction random_table(Rng& rng, int entries, bool ascending) {
    const int den = rng.uniform_int(1, 3);
    auto numerators = rng.sample_distinct(1, 3 * entries + 9, entries);
    std::sort(numerators.begin(), numerators.end());
    if (!ascending) std::reverse(numerators.begin(), numerators.end());
    std::vector<Rational> values;
    values.reserve(entries);
    for (const int num : numerators) values.push_back(Rational(num, den));
    return LatencyFunction::table(std::move(values),
                                  ascending ? Trend::NonDecreasing : Trend::NonIncreasing);
}

std::vector<Strategy> random_strategy_set(Rng& rng, int resources, int size,
                                          int max_strategies) {
    std::set<Strategy> chosen;
    // one strategy of full cardinality pins the game size
    chosen.insert([&] {
        auto s = rng.sample_distinct(0, resources - 1, size);
        std::sort(s.begin(), s.end());
        return Strategy(s.begin(), s.end());
    }());
    const int want = rng.uniform_int(1, max_strategies);
    int attempts = 0;
    while (static_cast<int>(chosen.size()) < want && attempts < 50 * max_strategies) {
        ++attempts;
        const int card = rng.uniform_int(1, size);
        auto s = rng.sample_distinct(0, resources - 1, card);
        std::sort(s.begin(), s.end());
        chosen.insert(Strategy(s.begin(), s.end()));
    }
    return {chosen.begin(), chosen.end()};
}

} // namespace

Game random_game(const RandomGameSpec& spec, std::uint64_t seed) {
    if (spec.players < 1 || spec.resources < 1)
        throw std::invalid_argument("random game: players and resources must be positive");
    if (spec.size < 1 || spec.size > spec.resources)
        throw std::invalid_argument("random game: size must lie in [1, resources]");
    if (spec.max_strategies < 1)
        throw std::invalid_argument("random game: max_strategies must be positive");
    if (spec.monotonicity != Monotonicity::NonDecreasing && spec.players < 2)
        throw std::invalid_argument(
            "random game: a single-player game evaluates every latency at one "
            "point only, so only the non-decreasing class is generatable");
    if (spec.monotonicity == Monotonicity::Mixed && spec.resources < 2)
        throw std::invalid_argument("random game: a mixed game needs two resources");
    if (!spec.symmetric && spec.players < 2)
        throw std::invalid_argument("random game: an asymmetric game needs two players");
    if (!spec.symmetric && spec.resources < 2 && spec.size == 1)
        throw std::invalid_argument(
            "random game: only one strategy exists, every player must share it");

    Rng rng(seed);
    std::vector<Resource> resources;
    for (int r = 0; r < spec.resources; ++r) {
        bool ascending;
        switch (spec.monotonicity) {
            case Monotonicity::NonDecreasing: ascending = true; break;
            case Monotonicity::NonIncreasing: ascending = false; break;
            default: ascending = r == 0 ? true : r == 1 ? false : rng.uniform_int(0, 1) == 1;
        }
        resources.push_back(
            {"r" + std::to_string(r + 1), random_table(rng, spec.players, ascending)});
    }

    if (spec.symmetric) {
        auto shared = random_strategy_set(rng, spec.resources, spec.size, spec.max_strategies);
        return Game::symmetric(spec.players, std::move(resources), std::move(shared));
    }

    std::vector<std::vector<Strategy>> per_player;
    per_player.reserve(spec.players);
    for (int i = 0; i < spec.players; ++i)
        per_player.push_back(
            random_strategy_set(rng, spec.resources, spec.size, spec.max_strategies));

    // use player 1 to break accidental symmetry; player 0 keeps the
    // full-size strategy that pins the game size
    const auto as_set = [](const std::vector<Strategy>& list) {
        return std::set<Strategy>(list.begin(), list.end());
    };
    bool all_equal = true;
    for (int i = 1; i < spec.players && all_equal; ++i)
        all_equal = as_set(per_player[i]) == as_set(per_player[0]);
    if (all_equal) {
        auto& list = per_player[1];
        if (list.size() > 1) {
            list.pop_back();
        } else {
            // the feasibility guards leave at least two singleton strategies
            for (int r = 0; r < spec.resources; ++r) {
                const Strategy candidate{r};
                if (!std::count(list.begin(), list.end(), candidate)) {
                    list.push_back(candidate);
                    break;
                }
            }
        }
    }
    return Game::general(std::move(resources), std::move(per_player));
}

} // namespace minpot
