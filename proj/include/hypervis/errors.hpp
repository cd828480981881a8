#ifndef HYPERVIS_ERRORS_HPP
#define HYPERVIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypervis {

// Bad arguments: wrong dimensions, invalid parameters, unknown options.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// A computation was refused because it would exceed a configured budget
// (sieve size, enumeration size). The message states what was achievable.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hypervis

#endif
