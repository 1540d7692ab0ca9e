#ifndef SUPERSAT_ERROR_HPP
#define SUPERSAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace supersat {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input; `line` is 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line)
        : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

/// A desk-scale guardrail was exceeded without an override.
class GuardrailError : public Error {
public:
    using Error::Error;
};

/// Eigensolver ran out of iterations; carries the best estimate so far.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, double best_rho, double residual,
                     long iterations)
        : Error(msg), best_rho(best_rho), residual(residual), iterations(iterations) {}
    double best_rho;
    double residual;
    long iterations;
};

/// Counting budget exhausted; carries the partial count as a lower bound.
class BudgetError : public Error {
public:
    BudgetError(const std::string& msg, long long partial)
        : Error(msg), partial_count(partial) {}
    long long partial_count;
};

}  // namespace supersat

#endif
