#pragma once

#include <stdexcept>
#include <string>

namespace flowpoly {

// Bad input from the caller: out-of-range parameters, malformed graphs,
// netflows of the wrong length. Maps to CLI exit code 2.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// An internal consistency check failed (e.g. a pi power that should cancel
// did not, or a bijection found no preimage). Maps to CLI exit code 3.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace flowpoly
