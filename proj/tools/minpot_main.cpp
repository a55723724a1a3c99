#include "minpot/approx.hpp"
#include "minpot/combinatorics.hpp"
#include "minpot/dynamics.hpp"
#include "minpot/errors.hpp"
#include "minpot/generators.hpp"
#include "minpot/serialization.hpp"
#include "minpot/solvers.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

using minpot::Game;
using minpot::Rational;
using minpot::SolveResult;
using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw minpot::ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

minpot::State parse_start_state(const Game& game, const std::string& text) {
    minpot::State state;
    if (text.empty()) {
        state.choices.assign(game.player_count(), 0);
        return state;
    }
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) state.choices.push_back(std::stoi(token));
    minpot::require_valid_state(game, state);
    return state;
}

SolveResult run_named_algorithm(const Game& game, const std::string& algorithm,
                                const minpot::OracleOptions& options) {
    if (algorithm == "auto") return minpot::solve(game, options);
    if (algorithm == "oracle") return minpot::solve_brute_force(game, options);
    if (algorithm == "greedy-insertion") return minpot::solve_symmetric_singleton(game);
    if (algorithm == "singleton-matching") return minpot::solve_general_singleton(game);
    if (algorithm == "size2-matching") return minpot::solve_symmetric_size2(game);
    if (algorithm == "nonincreasing-enum") return minpot::solve_symmetric_nonincreasing(game);
    if (algorithm == "greedy-cover") return minpot::greedy_nonincreasing_singleton(game);
    if (algorithm == "dynamics") {
        minpot::State start;
        start.choices.assign(game.player_count(), 0);
        const auto dyn = minpot::run_improving_dynamics(game, std::move(start),
                                                        minpot::MovePolicy::BestResponse,
                                                        minpot::default_move_budget(game));
        SolveResult result;
        result.state = dyn.state;
        result.potential = minpot::potential(game, result.state);
        result.algorithm = "dynamics";
        result.optimality = minpot::Optimality::Heuristic;
        return result;
    }
    throw minpot::ParseError("unknown algorithm '" + algorithm + "'");
}

int dispatch(const std::function<void()>& action) {
    try {
        action();
        return 0;
    } catch (const minpot::ClassMismatchError& e) {
        std::cerr << "class mismatch: " << e.what() << "\n";
        return 1;
    } catch (const minpot::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 1;
    } catch (const minpot::BudgetExceededError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 1;
    } catch (const minpot::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const minpot::ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum Rosenthal-potential solver for congestion games"};
    app.require_subcommand(1);
    std::function<void()> action;

    // ---- solve / oracle / approx -------------------------------------
    std::string solve_input;
    std::string solve_algorithm = "auto";
    long long solve_budget = minpot::OracleOptions{}.state_budget;
    auto* solve_cmd = app.add_subcommand("solve", "Minimize the Rosenthal potential");
    solve_cmd->add_option("--input", solve_input, "game document")->required();
    solve_cmd
        ->add_option("--algorithm", solve_algorithm,
                     "auto|oracle|greedy-insertion|singleton-matching|size2-matching|"
                     "nonincreasing-enum|dynamics|greedy-cover")
        ->check(CLI::IsMember({"auto", "oracle", "greedy-insertion", "singleton-matching",
                               "size2-matching", "nonincreasing-enum", "dynamics",
                               "greedy-cover"}));
    solve_cmd->add_option("--budget", solve_budget, "oracle state budget");
    solve_cmd->callback([&] {
        action = [&] {
            const Game game = minpot::parse_game_file(solve_input);
            const auto result =
                run_named_algorithm(game, solve_algorithm, {solve_budget});
            emit(minpot::solve_result_to_json(game, result));
        };
    });

    std::string oracle_input;
    long long oracle_budget = minpot::OracleOptions{}.state_budget;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive minimum (exact reference)");
    oracle_cmd->add_option("--input", oracle_input, "game document")->required();
    oracle_cmd->add_option("--budget", oracle_budget, "state budget");
    oracle_cmd->callback([&] {
        action = [&] {
            const Game game = minpot::parse_game_file(oracle_input);
            emit(minpot::solve_result_to_json(game,
                                              minpot::solve_brute_force(game, {oracle_budget})));
        };
    });

    std::string approx_input;
    auto* approx_cmd =
        app.add_subcommand("approx", "Greedy cover for non-increasing singleton games");
    approx_cmd->add_option("--input", approx_input, "game document")->required();
    approx_cmd->callback([&] {
        action = [&] {
            const Game game = minpot::parse_game_file(approx_input);
            emit(minpot::solve_result_to_json(game, minpot::greedy_nonincreasing_singleton(game)));
        };
    });

    // ---- dynamics ----------------------------------------------------
    std::string dyn_input;
    std::string dyn_policy = "best-response";
    long long dyn_max_moves = -1;
    std::string dyn_start;
    bool dyn_trace = false;
    auto* dyn_cmd = app.add_subcommand("dynamics", "Run improving-move dynamics");
    dyn_cmd->add_option("--input", dyn_input, "game document")->required();
    dyn_cmd->add_option("--policy", dyn_policy, "best-response|first-improving")
        ->check(CLI::IsMember({"best-response", "first-improving"}));
    dyn_cmd->add_option("--max-moves", dyn_max_moves, "move budget (default 10*n*strategies)");
    dyn_cmd->add_option("--start", dyn_start, "comma-separated strategy indices (default all 0)");
    dyn_cmd->add_flag("--trace", dyn_trace, "include the move trace");
    dyn_cmd->callback([&] {
        action = [&] {
            const Game game = minpot::parse_game_file(dyn_input);
            const auto policy = dyn_policy == "best-response" ? minpot::MovePolicy::BestResponse
                                                              : minpot::MovePolicy::FirstImproving;
            const long long budget =
                dyn_max_moves >= 0 ? dyn_max_moves : minpot::default_move_budget(game);
            const auto result = minpot::run_improving_dynamics(
                game, parse_start_state(game, dyn_start), policy, budget);
            emit(minpot::dynamics_result_to_json(game, result, dyn_trace));
        };
    });

    // ---- check ---------------------------------------------------------
    std::string check_input;
    auto* check_cmd = app.add_subcommand("check", "Validate a game document");
    check_cmd->add_option("--input", check_input, "game document")->required();
    check_cmd->callback([&] {
        action = [&] {
            const Game game = minpot::parse_game_file(check_input);
            json j;
            j["ok"] = true;
            j["class"] = minpot::game_class_to_json(minpot::classify(game));
            j["players"] = game.player_count();
            j["resources"] = game.resource_count();
            emit(j);
        };
    });

    // ---- gen -----------------------------------------------------------
    auto* gen_cmd = app.add_subcommand("gen", "Emit instance games as JSON");
    gen_cmd->require_subcommand(1);

    std::string gen_input;
    const std::vector<std::pair<std::string, std::string>> reduction_kinds = {
        {"3dm", "three-dimensional matching instance"},
        {"x3c", "exact cover by 3-sets instance"},
        {"vc", "vertex cover instance"},
        {"setcover", "weighted set cover instance"}};
    for (const auto& [name, help] : reduction_kinds) {
        auto* sub = gen_cmd->add_subcommand(name, help);
        sub->add_option("--input", gen_input, "instance document")->required();
        const std::string kind = name;
        sub->callback([&, kind] {
            action = [&, kind] {
                const std::string text = read_file(gen_input);
                Game game = [&]() -> Game {
                    if (kind == "3dm") return minpot::from_3dm(minpot::parse_3dm_instance(text));
                    if (kind == "x3c") return minpot::from_x3c(minpot::parse_x3c_instance(text));
                    if (kind == "vc")
                        return minpot::from_vertex_cover(
                            minpot::parse_vertex_cover_instance(text));
                    return minpot::from_set_cover(minpot::parse_set_cover_instance(text));
                }();
                std::cout << minpot::serialize_game(game);
            };
        });
    }

    int tight_n = 3;
    std::string tight_eps = "1/100";
    auto* tight_cmd = gen_cmd->add_subcommand("tight", "worst case for the greedy cover");
    tight_cmd->add_option("--n", tight_n, "player count")->required();
    tight_cmd->add_option("--eps", tight_eps, "offset of the shared resource (rational)");
    tight_cmd->callback([&] {
        action = [&] {
            std::cout << minpot::serialize_game(
                minpot::greedy_tight_instance(tight_n, minpot::parse_rational(tight_eps)));
        };
    });

    minpot::RandomGameSpec random_spec;
    std::uint64_t random_seed = 0;
    std::string random_monotone = "non-decreasing";
    bool random_asymmetric = false;
    auto* random_cmd = gen_cmd->add_subcommand("random", "seeded random game of a given class");
    random_cmd->add_option("--players", random_spec.players, "player count")->required();
    random_cmd->add_option("--resources", random_spec.resources, "resource count")->required();
    random_cmd->add_option("--size", random_spec.size, "maximum strategy cardinality");
    random_cmd->add_flag("--asymmetric", random_asymmetric, "per-player strategy sets");
    random_cmd->add_option("--monotone", random_monotone, "non-decreasing|non-increasing|mixed")
        ->check(CLI::IsMember({"non-decreasing", "non-increasing", "mixed"}));
    random_cmd->add_option("--max-strategies", random_spec.max_strategies,
                           "cap on strategies per player");
    random_cmd->add_option("--seed", random_seed, "generator seed");
    random_cmd->callback([&] {
        action = [&] {
            random_spec.symmetric = !random_asymmetric;
            random_spec.monotonicity = random_monotone == "non-decreasing"
                                           ? minpot::Monotonicity::NonDecreasing
                                       : random_monotone == "non-increasing"
                                           ? minpot::Monotonicity::NonIncreasing
                                           : minpot::Monotonicity::Mixed;
            std::cout << minpot::serialize_game(minpot::random_game(random_spec, random_seed));
        };
    });

    // ---- combi -----------------------------------------------------------
    auto* combi_cmd = app.add_subcommand("combi", "Bell/lambda table and series checks");
    combi_cmd->require_subcommand(1);

    int table_dmax = 8;
    auto* table_cmd = combi_cmd->add_subcommand(
        "table", "bell(d+1) and lambda_d rows for d = 1..dmax");
    table_cmd->add_option("--dmax", table_dmax, "largest degree")->required();
    table_cmd->callback([&] {
        action = [&] {
            if (table_dmax < 1) throw std::domain_error("--dmax must be at least 1");
            json j;
            json ds = json::array(), bells = json::array(), lam = json::array(),
                 lam_exact = json::array();
            for (int d = 1; d <= table_dmax; ++d) {
                ds.push_back(d);
                bells.push_back(minpot::bell(d + 1).str());
                const Rational value = minpot::lambda_d(d);
                lam.push_back(minpot::to_fixed(value, 2));
                lam_exact.push_back(minpot::to_string(value));
            }
            j["d"] = std::move(ds);
            j["bell_next"] = std::move(bells);
            j["lambda"] = std::move(lam);
            j["lambda_exact"] = std::move(lam_exact);
            emit(j);
        };
    });

    int lambda_arg_d = 1;
    long long lambda_arg_y = -1;
    auto* lambda_cmd = combi_cmd->add_subcommand("lambda", "exact lambda_d or lambda_d(y)");
    lambda_cmd->add_option("--d", lambda_arg_d, "degree")->required();
    lambda_cmd->add_option("--y", lambda_arg_y, "Poisson parameter (omit for lambda_d)");
    lambda_cmd->callback([&] {
        action = [&] {
            json j;
            j["d"] = lambda_arg_d;
            const Rational value = lambda_arg_y < 0 ? minpot::lambda_d(lambda_arg_d)
                                                    : minpot::lambda_d_y(lambda_arg_d, lambda_arg_y);
            if (lambda_arg_y >= 0) j["y"] = lambda_arg_y;
            j["exact"] = minpot::to_string(value);
            j["decimal"] = minpot::to_double(value);
            j["rendered"] = minpot::to_fixed(value, 2);
            emit(j);
        };
    });

    int verify_dmax = 8;
    double verify_tol = 1e-8;
    auto* verify_cmd = combi_cmd->add_subcommand(
        "verify", "series identities for lambda_d and bell numbers");
    verify_cmd->add_option("--dmax", verify_dmax, "largest degree")->required();
    verify_cmd->add_option("--tol", verify_tol, "tolerance");
    verify_cmd->callback([&] {
        action = [&] {
            const auto report = minpot::verify_dobinski_variant(verify_dmax, verify_tol);
            json j;
            j["all_ok"] = report.all_ok;
            json checks = json::array();
            for (const auto& c : report.checks) {
                json cj;
                cj["d"] = c.d;
                cj["lambda_exact"] = minpot::to_string(c.lambda_exact);
                cj["lambda_series"] = c.lambda_series;
                cj["lambda_error"] = c.lambda_error;
                cj["lambda_ok"] = c.lambda_ok;
                cj["bell_exact"] = c.bell_exact.str();
                cj["bell_series"] = c.bell_series;
                cj["bell_error"] = c.bell_error;
                cj["bell_ok"] = c.bell_ok;
                checks.push_back(std::move(cj));
            }
            j["checks"] = std::move(checks);
            emit(j);
            if (!report.all_ok) throw minpot::InfeasibleError("series checks failed");
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return dispatch(action);
}
