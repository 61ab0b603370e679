#pragma once

#include <stdexcept>
#include <string>

namespace mptkit {

// Malformed or out-of-range input: bad endpoints, unknown family names,
// parse failures.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input is well formed but violates an operation's precondition
// (duplicate points where distinct ones are required, non-canonical
// representation, an order that is not an MPT-order, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exhaustive oracle was asked to run above its configured size limit.
class RefusalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mptkit
