#pragma once

#include <stdexcept>
#include <string>

namespace twocolor {

// Malformed user data: bad JSON, bad flags, out-of-range arguments.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A part list that breaks a partition invariant (parity, ordering, sign).
class InvalidPartition : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// A diagram that cannot be read back as a pair of odd distinct part lists.
// On valid inputs this means a bug in the editing code.
class MalformedDiagram : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input is one of the staircase partitions the involution does not act on.
class ExceptionalPartition : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace twocolor
