#ifndef CARTANKIT_ERRORS_HPP
#define CARTANKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cartankit {

// Bad user-supplied parameters (family bounds, shapes, labels).
class InvalidParams : public std::invalid_argument {
public:
    explicit InvalidParams(const std::string& msg) : std::invalid_argument(msg) {}
};

// Shape mismatch between operands.
class DimensionError : public InvalidParams {
public:
    explicit DimensionError(const std::string& msg) : InvalidParams(msg) {}
};

// Elimination hit a zero column; carries the rank found so far.
class SingularError : public std::runtime_error {
public:
    SingularError(const std::string& msg, std::size_t rank_found)
        : std::runtime_error(msg + " (rank " + std::to_string(rank_found) + ")"),
          rank(rank_found) {}
    std::size_t rank;
};

// Rank-one update denominator 1 + d^T A^{-1} c vanished.
class UpdateSingularError : public std::runtime_error {
public:
    explicit UpdateSingularError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cartankit

#endif
