#pragma once

#include <stdexcept>
#include <string>

namespace wordrep {

// Malformed or out-of-range arguments.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A size guard or search cap was exceeded before an answer could be produced.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The arguments are well formed but violate a mathematical precondition,
// e.g. a non-comparability graph where a comparability graph is required.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace wordrep
