#ifndef DYNCORE_ERRORS_HPP
#define DYNCORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dyncore {

/// Malformed caller input: dimension mismatches, bad weights, unknown keys.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Inconsistent configuration, e.g. a floor that makes the allocation set empty.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A stated hypothesis of an operation does not hold for the given instance.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A schedule or plan produced an infeasible allocation; names the step.
struct SimulationError : std::runtime_error {
    SimulationError(int step, const std::string& what)
        : std::runtime_error("step " + std::to_string(step) + ": " + what), step(step) {}
    int step;
};

/// A policy emitted an invalid allocation for the realized stage game.
struct PolicyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Iterated worths exceeded the divergence cap.
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Combinatorial exploration exceeded its state or node budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A bounded search ended without a witness that is only guaranteed asymptotically.
struct SearchExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical failure inside an LP solve.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dyncore

#endif
