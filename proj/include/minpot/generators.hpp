#pragma once

#include "minpot/game.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace minpot {

/// Three-dimensional matching: triples over three disjoint q-element sets,
/// coordinates indexed 0..q-1 each.
struct ThreeDMInstance {
    int q = 0;
    std::vector<std::array<int, 3>> triples;
};

/// Exact cover by 3-sets over the ground set 0..3q-1.
struct X3CInstance {
    int q = 0;
    std::vector<std::array<int, 3>> sets;
};

struct VertexCoverInstance {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

struct SetCoverInstance {
    struct WeightedSet {
        Rational weight;
        std::vector<int> members;
    };
    int universe = 0; ///< ground set 0..universe-1
    std::vector<WeightedSet> sets;
};

/// q players (the first coordinate), resources for the other two coordinate
/// sets with latency l(h) = h, strategy {y, z} per triple. The game has a
/// state of potential 2q exactly when the instance has a perfect matching.
Game from_3dm(const ThreeDMInstance& instance);

/// Symmetric game: q players, one resource per ground element with latency
/// l(h) = h, the 3-sets as the shared strategy space. Minimum potential 3q
/// exactly when an exact cover exists.
Game from_x3c(const X3CInstance& instance);

/// One player per edge with the two endpoint resources as singleton
/// strategies; every resource charges 1 for its first user and 0 after.
/// The minimum potential equals the minimum vertex cover size.
Game from_vertex_cover(const VertexCoverInstance& instance);

/// One resource per set charging its weight for the first user and 0 after;
/// one player per ground element choosing among the sets containing it.
/// The minimum potential equals the minimum cover weight.
Game from_set_cover(const SetCoverInstance& instance);

/// Worst case for the greedy cover: resources r_0..r_n with l_{r_0}(1) =
/// 1 + eps and l_{r_i}(1) = 1/i, zero beyond one user; player i chooses
/// between r_0 and r_i. Greedy reaches H_n while the optimum is 1 + eps.
Game greedy_tight_instance(int n, const Rational& eps);

struct RandomGameSpec {
    bool symmetric = true;
    int size = 1;
    Monotonicity monotonicity = Monotonicity::NonDecreasing;
    int players = 2;
    int resources = 2;
    int max_strategies = 4; ///< cap on the per-player strategy count
};

/// Seed-deterministic instance of the requested class; the classification of
/// the result reproduces the spec fields. Infeasible combinations (size >
/// resources, an asymmetric game with only one possible strategy, a
/// direction that one player cannot exhibit, ...) throw
/// std::invalid_argument.
Game random_game(const RandomGameSpec& spec, std::uint64_t seed);

/// Deterministic helper around std::mt19937_64 (whose output sequence is
/// pinned by the standard) with rejection sampling, so fixed seeds reproduce
/// everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// uniform over [lo, hi], inclusive
    int uniform_int(int lo, int hi);

    /// distinct integers from [lo, hi], in random order
    std::vector<int> sample_distinct(int lo, int hi, int count);

private:
    std::mt19937_64 engine_;
};

} // namespace minpot
