#pragma once

#include <stdexcept>
#include <string>

namespace minpot {

/// A solver was handed a game outside the class it handles.
class ClassMismatchError : public std::runtime_error {
public:
    explicit ClassMismatchError(const std::string& what) : std::runtime_error(what) {}
};

/// A combinatorial subproblem has no feasible solution (e.g. no matching of
/// the requested size).
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// Exhaustive enumeration refused because the state space exceeds the budget.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (JSON syntax, unknown names, bad rationals, ...).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A game violates a structural invariant. Carries the joined violation list.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace minpot
