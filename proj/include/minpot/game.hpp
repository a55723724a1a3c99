#pragma once

#include "minpot/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace minpot {

/// Direction a single latency function may be declared to follow.
enum class Trend { NonDecreasing, NonIncreasing };

/// Game-level latency shape: every resource non-decreasing, every resource
/// non-increasing, or neither.
enum class Monotonicity { NonDecreasing, NonIncreasing, Mixed };

/// Latency of a resource as a function of its congestion. l(0) is 0 by
/// definition. Two representations:
///  - table: values l(1..n_max); evaluating past n_max throws, since the
///    congestion of a validated game never exceeds the table range;
///  - polynomial: l(x) = sum_q a_q x^q with non-negative coefficients.
class LatencyFunction {
public:
    enum class Kind { Table, Polynomial };

    static LatencyFunction table(std::vector<Rational> values,
                                 std::optional<Trend> declared = std::nullopt);
    static LatencyFunction polynomial(std::vector<Rational> coefficients);

    Kind kind() const { return kind_; }
    /// Table values l(1..n_max), or coefficients a_0..a_d.
    const std::vector<Rational>& data() const { return data_; }
    std::optional<Trend> declared() const { return declared_; }

    Rational operator()(int users) const;
    /// Largest congestion this function evaluates at.
    int max_evaluable() const;

private:
    Kind kind_;
    std::vector<Rational> data_;
    std::optional<Trend> declared_;
};

struct Resource {
    std::string name;
    LatencyFunction latency;
};

/// A strategy is a set of resource indices, kept sorted. Emptiness,
/// duplicates and range errors are reported by validate(), not hidden.
using Strategy = std::vector<int>;

class Game {
public:
    /// All players share one strategy set.
    static Game symmetric(int players, std::vector<Resource> resources,
                          std::vector<Strategy> shared);
    /// One strategy set per player; the player count is the outer size.
    static Game general(std::vector<Resource> resources,
                        std::vector<std::vector<Strategy>> per_player);

    int player_count() const { return n_; }
    int resource_count() const { return static_cast<int>(resources_.size()); }
    const std::vector<Resource>& resources() const { return resources_; }
    const Resource& resource(int r) const { return resources_.at(r); }
    const std::vector<Strategy>& strategies(int player) const { return strategies_.at(player); }
    const Strategy& strategy(int player, int index) const { return strategies_.at(player).at(index); }

    /// True when built through the shared-strategy-set constructor. Drives
    /// serialization; classification checks actual set equality instead.
    bool symmetric_hint() const { return symmetric_hint_; }

    long long total_strategy_count() const;
    BigInt state_space_size() const;

private:
    Game(int players, std::vector<Resource> resources,
         std::vector<std::vector<Strategy>> per_player, bool symmetric_hint);

    int n_;
    std::vector<Resource> resources_;
    std::vector<std::vector<Strategy>> strategies_;
    bool symmetric_hint_;
};

/// One strategy index per player.
struct State {
    std::vector<int> choices;

    friend bool operator==(const State&, const State&) = default;
};

struct GameClass {
    bool symmetric = false;
    int size = 0;
    Monotonicity monotonicity = Monotonicity::Mixed;
    bool identical_latencies = false;
};

struct Violation {
    std::string where;
    std::string message;
};

/// Throws std::invalid_argument when the state does not fit the game.
void require_valid_state(const Game& game, const State& state);

/// Congestion vector: entry r counts the players whose strategy contains r.
std::vector<int> congestion(const Game& game, const State& state);

/// Cost of one player: sum of the latencies of their chosen resources at the
/// state's congestion.
Rational player_cost(const Game& game, const State& state, int player);

/// Rosenthal potential: sum over resources of the latency prefix sums up to
/// the congestion.
Rational potential(const Game& game, const State& state);

/// Sum of all player costs.
Rational social_cost(const Game& game, const State& state);

GameClass classify(const Game& game);

/// Per-resource shape checks over congestion 1..n. A constant latency
/// satisfies both directions.
bool latencies_non_decreasing(const Game& game);
bool latencies_non_increasing(const Game& game);

/// Structural invariant check; returns every violation found and never
/// throws. An empty result means the game is well-formed.
std::vector<Violation> validate(const Game& game);

/// Throws ValidationError listing all violations, if any.
void require_valid(const Game& game);

const char* to_string(Monotonicity m);
const char* to_string(Trend t);

} // namespace minpot
