#pragma once

#include <stdexcept>
#include <string>

namespace sftlab {

// Base class for engine failures.  The CLI catches these per command and
// records them in the report instead of aborting the run.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ResolutionError : public Error {
public:
    using Error::Error;
};

// Thrown when an enumeration would exceed its configured budget.  Budgets
// are never applied silently; exceeding one is always a hard error.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// Encoding ran out of bits before the requested window was fully colored.
class WindowNotFilled : public Error {
public:
    WindowNotFilled(long long cell_, const std::string& msg) : Error(msg), cell(cell_) {}
    long long cell;
};

// Decoding found no cell of the k-th progression inside the given window.
class NoRepresentative : public Error {
public:
    NoRepresentative(int step_, const std::string& msg) : Error(msg), step(step_) {}
    int step;
};

// Decoding found two cells of one progression carrying different symbols.
class InconsistentColoring : public Error {
public:
    using Error::Error;
};

}  // namespace sftlab
