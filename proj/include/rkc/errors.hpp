#ifndef RKC_ERRORS_HPP
#define RKC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rkc {

// A caller-side contract violation (bad shape, size mismatch, out-of-range parameter).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An instance-size guard refused a computation that would explode combinatorially.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Something that must hold mathematically did not (inexact division, failed
// interpolation check). Always a bug or a falsified claim, never bad input.
class ArithmeticError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A tableau handed to the inverse bijection does not decompose into column templates.
class NotInImageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace rkc

#endif
