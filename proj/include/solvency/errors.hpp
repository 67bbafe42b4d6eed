#ifndef SOLVENCY_ERRORS_HPP
#define SOLVENCY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace solvency {

// Malformed external data (unparseable rationals, bad JSON/CSV shape). CLI exit 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A caller violated a documented precondition (bad index set, wrong vector
// length, invalid configuration). CLI exit 2.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Well-formed input that fails a mathematical acceptance condition, e.g. the
// prime-square rejection in prime_matrix. CLI exit 1.
class ConstructionError : public std::runtime_error {
public:
    explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration exceeded its work budget. CLI exit 3.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// An invariant the library promises to maintain was observed broken.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace solvency

#endif // SOLVENCY_ERRORS_HPP
