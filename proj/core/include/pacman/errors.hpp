#pragma once

#include <stdexcept>
#include <string>

namespace pacman {

// Precondition violations on geometry, angles, lattice points.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Evaluation at a genuine singularity (coincident points, the tip).
class SingularityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual, long iterations)
        : std::runtime_error(what), residual_(residual), iterations_(iterations) {}

    double residual() const noexcept { return residual_; }
    long iterations() const noexcept { return iterations_; }

private:
    double residual_;
    long iterations_;
};

// A walk ran past its step budget. Exit is a.s. finite, so this is a
// configuration bug and never silently truncated.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, long long budget)
        : std::runtime_error(what), budget_(budget) {}

    long long budget() const noexcept { return budget_; }

private:
    long long budget_;
};

class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PlotError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pacman
