#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace hookpairs {

// Exact arithmetic everywhere: parts, hook data and polynomial coefficients
// are arbitrary-precision integers/rationals.  No floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Invalid nodes, infeasible search bounds, out-of-range requests.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text input; `position` is a 0-based offset into the input.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

// Narrowing conversion with a domain check instead of silent truncation.
inline int checked_int(const Int& v, const char* what) {
    if (v < INT_MIN / 2 || v > INT_MAX / 2)
        throw DomainError(std::string(what) + " out of supported range");
    return static_cast<int>(v);
}

inline long long checked_ll(const Int& v, const char* what) {
    if (v < LLONG_MIN / 2 || v > LLONG_MAX / 2)
        throw DomainError(std::string(what) + " out of supported range");
    return static_cast<long long>(v);
}

}  // namespace hookpairs
