#include "minpot/game.hpp"

#include "minpot/errors.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace minpot {

LatencyFunction LatencyFunction::table(std::vector<Rational> values,
                                       std::optional<Trend> declared) {
    LatencyFunction f;
    f.kind_ = Kind::Table;
    f.data_ = std::move(values);
    f.declared_ = declared;
    return f;
}

LatencyFunction LatencyFunction::polynomial(std::vector<Rational> coefficients) {
    LatencyFunction f;
    f.kind_ = Kind::Polynomial;
    f.data_ = std::move(coefficients);
    f.declared_ = std::nullopt;
    return f;
}

Rational LatencyFunction::operator()(int users) const {
    if (users < 0) throw std::out_of_range("latency evaluated at negative congestion");
    if (users == 0) return Rational(0);
    if (kind_ == Kind::Table) {
        if (users > static_cast<int>(data_.size()))
            throw std::out_of_range("latency table evaluated beyond its last entry");
        return data_[users - 1];
    }
    Rational value = 0;
    Rational power = 1;
    for (const auto& coeff : data_) {
        value += coeff * power;
        power *= users;
    }
    return value;
}

int LatencyFunction::max_evaluable() const {
    if (kind_ == Kind::Table) return static_cast<int>(data_.size());
    return std::numeric_limits<int>::max();
}

Game::Game(int players, std::vector<Resource> resources,
           std::vector<std::vector<Strategy>> per_player, bool symmetric_hint)
    : n_(players),
      resources_(std::move(resources)),
      strategies_(std::move(per_player)),
      symmetric_hint_(symmetric_hint) {
    for (auto& list : strategies_)
        for (auto& s : list) std::sort(s.begin(), s.end());
}

Game Game::symmetric(int players, std::vector<Resource> resources,
                     std::vector<Strategy> shared) {
    std::vector<std::vector<Strategy>> per_player(std::max(players, 0), shared);
    return Game(players, std::move(resources), std::move(per_player), true);
}

Game Game::general(std::vector<Resource> resources,
                   std::vector<std::vector<Strategy>> per_player) {
    const int players = static_cast<int>(per_player.size());
    return Game(players, std::move(resources), std::move(per_player), false);
}

long long Game::total_strategy_count() const {
    long long total = 0;
    for (const auto& list : strategies_) total += static_cast<long long>(list.size());
    return total;
}

BigInt Game::state_space_size() const {
    BigInt product = 1;
    for (const auto& list : strategies_) product *= static_cast<long long>(list.size());
    return product;
}

void require_valid_state(const Game& game, const State& state) {
    if (static_cast<int>(state.choices.size()) != game.player_count())
        throw std::invalid_argument("state has " + std::to_string(state.choices.size()) +
                                    " choices for " + std::to_string(game.player_count()) +
                                    " players");
    for (int i = 0; i < game.player_count(); ++i) {
        const int c = state.choices[i];
        if (c < 0 || c >= static_cast<int>(game.strategies(i).size()))
            throw std::invalid_argument("player " + std::to_string(i) +
                                        " has no strategy with index " + std::to_string(c));
    }
}

std::vector<int> congestion(const Game& game, const State& state) {
    require_valid_state(game, state);
    std::vector<int> load(game.resource_count(), 0);
    for (int i = 0; i < game.player_count(); ++i)
        for (int r : game.strategy(i, state.choices[i])) ++load[r];
    return load;
}

Rational player_cost(const Game& game, const State& state, int player) {
    if (player < 0 || player >= game.player_count())
        throw std::invalid_argument("no player with index " + std::to_string(player));
    const auto load = congestion(game, state);
    Rational cost = 0;
    for (int r : game.strategy(player, state.choices[player]))
        cost += game.resource(r).latency(load[r]);
    return cost;
}

Rational potential(const Game& game, const State& state) {
    const auto load = congestion(game, state);
    Rational value = 0;
    for (int r = 0; r < game.resource_count(); ++r) {
        const auto& latency = game.resource(r).latency;
        for (int j = 1; j <= load[r]; ++j) value += latency(j);
    }
    return value;
}

Rational social_cost(const Game& game, const State& state) {
    const auto load = congestion(game, state);
    Rational total = 0;
    for (int i = 0; i < game.player_count(); ++i)
        for (int r : game.strategy(i, state.choices[i]))
            total += game.resource(r).latency(load[r]);
    return total;
}

namespace {

// Strategy lists compared as sets: order of strategies must not matter.
std::vector<Strategy> canonical_strategy_set(const std::vector<Strategy>& list) {
    std::vector<Strategy> sorted = list;
    std::sort(sorted.begin(), sorted.end());
    return sorted;
}

// Latency values at congestion 1..n; entries past a table's range are absent.
std::vector<std::optional<Rational>> latency_profile(const LatencyFunction& f, int n) {
    std::vector<std::optional<Rational>> profile;
    profile.reserve(n);
    for (int h = 1; h <= n; ++h) {
        if (h <= f.max_evaluable())
            profile.push_back(f(h));
        else
            profile.push_back(std::nullopt);
    }
    return profile;
}

} // namespace

namespace {

void latency_directions(const Game& game, bool& all_nondecreasing, bool& all_nonincreasing) {
    const int n = game.player_count();
    all_nondecreasing = true;
    all_nonincreasing = true;
    for (const auto& res : game.resources()) {
        const int upto = std::min(n, res.latency.max_evaluable());
        for (int h = 1; h < upto; ++h) {
            const Rational a = res.latency(h);
            const Rational b = res.latency(h + 1);
            if (b < a) all_nondecreasing = false;
            if (b > a) all_nonincreasing = false;
        }
    }
}

} // namespace

bool latencies_non_decreasing(const Game& game) {
    bool nd, ni;
    latency_directions(game, nd, ni);
    return nd;
}

bool latencies_non_increasing(const Game& game) {
    bool nd, ni;
    latency_directions(game, nd, ni);
    return ni;
}

GameClass classify(const Game& game) {
    GameClass cls;
    cls.symmetric = true;
    if (game.player_count() > 0) {
        const auto first = canonical_strategy_set(game.strategies(0));
        for (int i = 1; i < game.player_count() && cls.symmetric; ++i)
            cls.symmetric = canonical_strategy_set(game.strategies(i)) == first;
    }

    cls.size = 0;
    for (int i = 0; i < game.player_count(); ++i)
        for (const auto& s : game.strategies(i))
            cls.size = std::max(cls.size, static_cast<int>(s.size()));

    const int n = game.player_count();
    bool all_nondecreasing, all_nonincreasing;
    latency_directions(game, all_nondecreasing, all_nonincreasing);
    if (all_nondecreasing)
        cls.monotonicity = Monotonicity::NonDecreasing;
    else if (all_nonincreasing)
        cls.monotonicity = Monotonicity::NonIncreasing;
    else
        cls.monotonicity = Monotonicity::Mixed;

    cls.identical_latencies = true;
    if (game.resource_count() > 1) {
        const auto first = latency_profile(game.resource(0).latency, n);
        for (int r = 1; r < game.resource_count() && cls.identical_latencies; ++r)
            cls.identical_latencies = latency_profile(game.resource(r).latency, n) == first;
    }
    return cls;
}

std::vector<Violation> validate(const Game& game) {
    std::vector<Violation> out;
    const auto flag = [&out](std::string where, std::string message) {
        out.push_back({std::move(where), std::move(message)});
    };

    if (game.player_count() < 1) flag("game", "at least one player required");
    if (game.resource_count() < 1) flag("game", "at least one resource required");

    // how many players could ever use each resource; bounds the congestion
    std::vector<int> reach(game.resource_count(), 0);
    for (int i = 0; i < game.player_count(); ++i) {
        std::vector<bool> uses(game.resource_count(), false);
        const auto& list = game.strategies(i);
        const std::string who = "player " + std::to_string(i);
        if (list.empty()) flag(who, "empty strategy set");
        for (std::size_t k = 0; k < list.size(); ++k) {
            const auto& s = list[k];
            const std::string where = who + ", strategy " + std::to_string(k);
            if (s.empty()) flag(where, "empty strategy");
            for (std::size_t t = 0; t < s.size(); ++t) {
                if (s[t] < 0 || s[t] >= game.resource_count()) {
                    flag(where, "unknown resource index " + std::to_string(s[t]));
                } else {
                    if (t > 0 && s[t] == s[t - 1])
                        flag(where, "duplicate resource in strategy");
                    if (!uses[s[t]]) {
                        uses[s[t]] = true;
                        ++reach[s[t]];
                    }
                }
            }
        }
        std::set<Strategy> distinct(list.begin(), list.end());
        if (distinct.size() != list.size()) flag(who, "duplicate strategies");
    }

    for (int r = 0; r < game.resource_count(); ++r) {
        const auto& res = game.resource(r);
        const std::string where = "resource " + res.name;
        const auto& f = res.latency;
        if (f.kind() == LatencyFunction::Kind::Table) {
            if (f.data().empty()) {
                flag(where, "latency table is empty");
                continue;
            }
            if (f.data()[0] <= 0) flag(where, "l(1) must be positive");
            for (const auto& v : f.data())
                if (v < 0) flag(where, "negative latency value");
            if (static_cast<int>(f.data().size()) < reach[r])
                flag(where, "latency table shorter than the maximum possible congestion (" +
                                std::to_string(reach[r]) + ")");
            if (f.declared()) {
                const auto& vals = f.data();
                for (std::size_t h = 0; h + 1 < vals.size(); ++h) {
                    if (*f.declared() == Trend::NonDecreasing && vals[h + 1] < vals[h])
                        flag(where, "declared non-decreasing but decreases at " +
                                        std::to_string(h + 2) + " users");
                    if (*f.declared() == Trend::NonIncreasing && vals[h + 1] > vals[h])
                        flag(where, "declared non-increasing but increases at " +
                                        std::to_string(h + 2) + " users");
                }
            }
        } else {
            const auto& coeffs = f.data();
            if (coeffs.empty()) {
                flag(where, "polynomial latency has no coefficients");
                continue;
            }
            if (coeffs[0] != 0) flag(where, "constant coefficient must be zero so that l(0) = 0");
            bool any_positive = false;
            for (const auto& c : coeffs) {
                if (c < 0) flag(where, "negative polynomial coefficient");
                if (c > 0) any_positive = true;
            }
            if (!any_positive) flag(where, "l(1) must be positive");
        }
    }
    return out;
}

void require_valid(const Game& game) {
    const auto violations = validate(game);
    if (violations.empty()) return;
    std::ostringstream msg;
    msg << "invalid game:";
    for (const auto& v : violations) msg << "\n  " << v.where << ": " << v.message;
    throw ValidationError(msg.str());
}

const char* to_string(Monotonicity m) {
    switch (m) {
        case Monotonicity::NonDecreasing: return "non-decreasing";
        case Monotonicity::NonIncreasing: return "non-increasing";
        case Monotonicity::Mixed: return "mixed";
    }
    return "?";
}

const char* to_string(Trend t) {
    return t == Trend::NonDecreasing ? "non-decreasing" : "non-increasing";
}

} // namespace minpot
