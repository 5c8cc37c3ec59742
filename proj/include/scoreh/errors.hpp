#pragma once

#include <stdexcept>
#include <string>

namespace scoreh {

// Bad or malformed input (files, flags, infeasible configurations).
// The CLI maps this family to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure (singular solve, non-convergence, convergence guard).
// The CLI maps this family to exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
    NumericalError(const std::string& stage, const std::string& what)
        : std::runtime_error("[" + stage + "] " + what), stage_(stage) {}

    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

}  // namespace scoreh
