#pragma once

#include "minpot/dynamics.hpp"
#include "minpot/game.hpp"
#include "minpot/generators.hpp"
#include "minpot/solve_result.hpp"

#include <json.hpp>

#include <string>

namespace minpot {

/// Parses and validates a game document. Format:
/// {
///   "schema": 1,
///   "players": 2,
///   "resources": [
///     {"name": "r1", "latency": {"kind": "table", "values": ["1", "3/2"],
///                                "monotone": "non-decreasing"}},
///     {"name": "r2", "latency": {"kind": "poly", "coeffs": ["0", "2"]}}
///   ],
///   "strategies": {"symmetric": [["r1"], ["r1", "r2"]]}
///     or           {"per_player": [[["r1"], ["r2"]], [["r1", "r2"]]]}
/// }
/// Rationals are strings, "p" or "p/q". Throws ParseError with field context
/// for malformed input and ValidationError for invariant violations.
Game parse_game(const std::string& text);
Game parse_game_file(const std::string& path);

nlohmann::json game_to_json(const Game& game);
/// Canonical rendering (sorted keys, two-space indent, trailing newline);
/// parse-then-serialize is idempotent.
std::string serialize_game(const Game& game);

/// Instance documents for the reduction generators:
///   {"q": 2, "triples": [[0, 0, 0], [1, 1, 1]]}
///   {"q": 2, "sets": [[0, 1, 2], [3, 4, 5]]}
///   {"vertices": 3, "edges": [[0, 1], [1, 2]]}
///   {"universe": 3, "sets": [{"weight": "2", "members": [0, 1, 2]}]}
ThreeDMInstance parse_3dm_instance(const std::string& text);
X3CInstance parse_x3c_instance(const std::string& text);
VertexCoverInstance parse_vertex_cover_instance(const std::string& text);
SetCoverInstance parse_set_cover_instance(const std::string& text);

nlohmann::json solve_result_to_json(const Game& game, const SolveResult& result);
nlohmann::json dynamics_result_to_json(const Game& game, const DynamicsResult& result,
                                       bool include_trace);
nlohmann::json game_class_to_json(const GameClass& cls);

} // namespace minpot
