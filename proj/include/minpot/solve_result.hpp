#pragma once

#include "minpot/game.hpp"

#include <string>

namespace minpot {

enum class Optimality { ProvenOptimal, Heuristic };

struct SolveResult {
    State state;
    Rational potential; ///< always equals potential(game, state)
    std::string algorithm;
    Optimality optimality = Optimality::Heuristic;
};

inline const char* to_string(Optimality o) {
    return o == Optimality::ProvenOptimal ? "proven-optimal" : "heuristic";
}

} // namespace minpot
