#include "minpot/serialization.hpp"

#include "minpot/errors.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace minpot {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

const json& field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw ParseError(path + ": expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(path + ": missing field '" + key + "'");
    return *it;
}

int int_field(const json& j, const char* key, const std::string& path) {
    const json& v = field(j, key, path);
    if (!v.is_number_integer())
        throw ParseError(path + "." + key + ": expected an integer");
    return v.get<int>();
}

std::string string_at(const json& v, const std::string& path) {
    if (!v.is_string()) throw ParseError(path + ": expected a string");
    return v.get<std::string>();
}

Rational rational_at(const json& v, const std::string& path) {
    try {
        return parse_rational(string_at(v, path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::vector<Rational> rational_array(const json& v, const std::string& path) {
    if (!v.is_array()) throw ParseError(path + ": expected an array");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(rational_at(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

LatencyFunction parse_latency(const json& j, const std::string& path) {
    const std::string kind = string_at(field(j, "kind", path), path + ".kind");
    std::optional<Trend> declared;
    if (j.contains("monotone")) {
        const std::string m = string_at(j["monotone"], path + ".monotone");
        if (m == "non-decreasing")
            declared = Trend::NonDecreasing;
        else if (m == "non-increasing")
            declared = Trend::NonIncreasing;
        else
            throw ParseError(path + ".monotone: expected 'non-decreasing' or 'non-increasing'");
    }
    if (kind == "table")
        return LatencyFunction::table(rational_array(field(j, "values", path), path + ".values"),
                                      declared);
    if (kind == "poly") {
        if (declared)
            throw ParseError(path + ": 'monotone' applies to table latencies only");
        return LatencyFunction::polynomial(
            rational_array(field(j, "coeffs", path), path + ".coeffs"));
    }
    throw ParseError(path + ".kind: expected 'table' or 'poly'");
}

Strategy parse_strategy(const json& v, const std::map<std::string, int>& resource_index,
                        const std::string& path) {
    if (!v.is_array()) throw ParseError(path + ": expected an array of resource names");
    Strategy s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string name = string_at(v[i], path + "[" + std::to_string(i) + "]");
        const auto it = resource_index.find(name);
        if (it == resource_index.end())
            throw ParseError(path + "[" + std::to_string(i) + "]: unknown resource '" + name +
                             "'");
        s.push_back(it->second);
    }
    return s;
}

std::vector<Strategy> parse_strategy_list(const json& v,
                                          const std::map<std::string, int>& resource_index,
                                          const std::string& path) {
    if (!v.is_array()) throw ParseError(path + ": expected an array of strategies");
    std::vector<Strategy> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(parse_strategy(v[i], resource_index, path + "[" + std::to_string(i) + "]"));
    return out;
}

json latency_to_json(const LatencyFunction& f) {
    json j;
    if (f.kind() == LatencyFunction::Kind::Table) {
        j["kind"] = "table";
        json values = json::array();
        for (const auto& v : f.data()) values.push_back(to_string(v));
        j["values"] = std::move(values);
        if (f.declared()) j["monotone"] = to_string(*f.declared());
    } else {
        j["kind"] = "poly";
        json coeffs = json::array();
        for (const auto& c : f.data()) coeffs.push_back(to_string(c));
        j["coeffs"] = std::move(coeffs);
    }
    return j;
}

json strategy_to_json(const Game& game, const Strategy& s) {
    json out = json::array();
    for (const int r : s) out.push_back(game.resource(r).name);
    return out;
}

} // namespace

Game parse_game(const std::string& text) {
    const json doc = parse_json(text);
    if (int_field(doc, "schema", "document") != 1)
        throw ParseError("document.schema: only version 1 is understood");
    const int players = int_field(doc, "players", "document");

    const json& resources_json = field(doc, "resources", "document");
    if (!resources_json.is_array() || resources_json.empty())
        throw ParseError("document.resources: expected a non-empty array");
    std::vector<Resource> resources;
    std::map<std::string, int> resource_index;
    for (std::size_t r = 0; r < resources_json.size(); ++r) {
        const std::string path = "resources[" + std::to_string(r) + "]";
        const json& rj = resources_json[r];
        const std::string name = string_at(field(rj, "name", path), path + ".name");
        if (!resource_index.emplace(name, static_cast<int>(r)).second)
            throw ParseError(path + ".name: duplicate resource '" + name + "'");
        resources.push_back({name, parse_latency(field(rj, "latency", path), path + ".latency")});
    }

    const json& strategies_json = field(doc, "strategies", "document");
    const bool has_symmetric = strategies_json.contains("symmetric");
    const bool has_per_player = strategies_json.contains("per_player");
    if (has_symmetric == has_per_player)
        throw ParseError(
            "document.strategies: exactly one of 'symmetric' or 'per_player' is required");

    Game game = [&] {
        if (has_symmetric) {
            auto shared = parse_strategy_list(strategies_json["symmetric"], resource_index,
                                              "strategies.symmetric");
            return Game::symmetric(players, std::move(resources), std::move(shared));
        }
        const json& pp = strategies_json["per_player"];
        if (!pp.is_array() || static_cast<int>(pp.size()) != players)
            throw ParseError("strategies.per_player: expected one strategy list per player");
        std::vector<std::vector<Strategy>> per_player;
        for (std::size_t i = 0; i < pp.size(); ++i)
            per_player.push_back(parse_strategy_list(
                pp[i], resource_index, "strategies.per_player[" + std::to_string(i) + "]"));
        return Game::general(std::move(resources), std::move(per_player));
    }();
    if (game.player_count() != players)
        throw ParseError("document.players: does not match the strategy lists");
    require_valid(game);
    return game;
}

Game parse_game_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_game(buffer.str());
}

json game_to_json(const Game& game) {
    json doc;
    doc["schema"] = 1;
    doc["players"] = game.player_count();
    json resources = json::array();
    for (const auto& res : game.resources()) {
        json rj;
        rj["name"] = res.name;
        rj["latency"] = latency_to_json(res.latency);
        resources.push_back(std::move(rj));
    }
    doc["resources"] = std::move(resources);
    json strategies;
    if (game.symmetric_hint()) {
        json shared = json::array();
        if (game.player_count() > 0)
            for (const auto& s : game.strategies(0)) shared.push_back(strategy_to_json(game, s));
        strategies["symmetric"] = std::move(shared);
    } else {
        json per_player = json::array();
        for (int i = 0; i < game.player_count(); ++i) {
            json list = json::array();
            for (const auto& s : game.strategies(i)) list.push_back(strategy_to_json(game, s));
            per_player.push_back(std::move(list));
        }
        strategies["per_player"] = std::move(per_player);
    }
    doc["strategies"] = std::move(strategies);
    return doc;
}

std::string serialize_game(const Game& game) { return game_to_json(game).dump(2) + "\n"; }

ThreeDMInstance parse_3dm_instance(const std::string& text) {
    const json doc = parse_json(text);
    ThreeDMInstance inst;
    inst.q = int_field(doc, "q", "document");
    const json& triples = field(doc, "triples", "document");
    if (!triples.is_array()) throw ParseError("document.triples: expected an array");
    for (std::size_t i = 0; i < triples.size(); ++i) {
        const json& t = triples[i];
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
            !t[1].is_number_integer() || !t[2].is_number_integer())
            throw ParseError("triples[" + std::to_string(i) + "]: expected three integers");
        inst.triples.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
    return inst;
}

X3CInstance parse_x3c_instance(const std::string& text) {
    const json doc = parse_json(text);
    X3CInstance inst;
    inst.q = int_field(doc, "q", "document");
    const json& sets = field(doc, "sets", "document");
    if (!sets.is_array()) throw ParseError("document.sets: expected an array");
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const json& s = sets[i];
        if (!s.is_array() || s.size() != 3 || !s[0].is_number_integer() ||
            !s[1].is_number_integer() || !s[2].is_number_integer())
            throw ParseError("sets[" + std::to_string(i) + "]: expected three integers");
        inst.sets.push_back({s[0].get<int>(), s[1].get<int>(), s[2].get<int>()});
    }
    return inst;
}

VertexCoverInstance parse_vertex_cover_instance(const std::string& text) {
    const json doc = parse_json(text);
    VertexCoverInstance inst;
    inst.vertices = int_field(doc, "vertices", "document");
    const json& edges = field(doc, "edges", "document");
    if (!edges.is_array()) throw ParseError("document.edges: expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const json& e = edges[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("edges[" + std::to_string(i) + "]: expected two integers");
        inst.edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return inst;
}

SetCoverInstance parse_set_cover_instance(const std::string& text) {
    const json doc = parse_json(text);
    SetCoverInstance inst;
    inst.universe = int_field(doc, "universe", "document");
    const json& sets = field(doc, "sets", "document");
    if (!sets.is_array()) throw ParseError("document.sets: expected an array");
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const std::string path = "sets[" + std::to_string(i) + "]";
        const json& s = sets[i];
        SetCoverInstance::WeightedSet ws;
        ws.weight = rational_at(field(s, "weight", path), path + ".weight");
        const json& members = field(s, "members", path);
        if (!members.is_array()) throw ParseError(path + ".members: expected an array");
        for (const auto& m : members) {
            if (!m.is_number_integer())
                throw ParseError(path + ".members: expected integers");
            ws.members.push_back(m.get<int>());
        }
        inst.sets.push_back(std::move(ws));
    }
    return inst;
}

json game_class_to_json(const GameClass& cls) {
    json j;
    j["symmetric"] = cls.symmetric;
    j["size"] = cls.size;
    j["monotonicity"] = to_string(cls.monotonicity);
    j["identical_latencies"] = cls.identical_latencies;
    return j;
}

json solve_result_to_json(const Game& game, const SolveResult& result) {
    json j;
    j["algorithm"] = result.algorithm;
    j["optimality"] = to_string(result.optimality);
    j["potential"] = to_string(result.potential);
    j["potential_decimal"] = to_double(result.potential);
    json choices = json::array();
    json strategies = json::array();
    for (int i = 0; i < game.player_count(); ++i) {
        choices.push_back(result.state.choices[i]);
        strategies.push_back(strategy_to_json(game, game.strategy(i, result.state.choices[i])));
    }
    j["state"] = {{"choices", std::move(choices)}, {"strategies", std::move(strategies)}};
    const auto load = congestion(game, result.state);
    json congestion_json;
    for (int r = 0; r < game.resource_count(); ++r)
        congestion_json[game.resource(r).name] = load[r];
    j["congestion"] = std::move(congestion_json);
    j["class"] = game_class_to_json(classify(game));
    return j;
}

json dynamics_result_to_json(const Game& game, const DynamicsResult& result,
                             bool include_trace) {
    json j;
    j["converged"] = result.converged;
    j["moves"] = result.trace.size();
    j["potential"] = to_string(potential(game, result.state));
    j["potential_decimal"] = to_double(potential(game, result.state));
    j["is_pure_nash"] = is_pure_nash(game, result.state);
    json choices = json::array();
    for (const int c : result.state.choices) choices.push_back(c);
    j["state"] = {{"choices", std::move(choices)}};
    if (include_trace) {
        json trace = json::array();
        for (const auto& move : result.trace) {
            json mj;
            mj["player"] = move.player;
            mj["from"] = move.from;
            mj["to"] = move.to;
            mj["potential_before"] = to_string(move.potential_before);
            mj["potential_after"] = to_string(move.potential_after);
            trace.push_back(std::move(mj));
        }
        j["trace"] = std::move(trace);
    }
    return j;
}

} // namespace minpot
