#ifndef WLAB_ERRORS_HPP
#define WLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wlab {

// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user input: malformed files, points off the curve, wrong degrees.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

// Scalars from incompatible backends met in one operation.
class BackendMismatch : public Error {
public:
    explicit BackendMismatch(const std::string& what) : Error(what) {}
};

// A quotient-ring element with gcd(elem, m) nontrivial was inverted.
// Carries the discovered factor of the minimal polynomial, printable.
class ZeroDivisorError : public Error {
public:
    ZeroDivisorError(const std::string& what, std::string factor)
        : Error(what), factor_of_modulus(std::move(factor)) {}
    std::string factor_of_modulus;
};

// The curve is singular at the requested point.
class SingularPointError : public Error {
public:
    explicit SingularPointError(const std::string& what) : Error(what) {}
};

class NotOnCurveError : public InputError {
public:
    explicit NotOnCurveError(const std::string& what) : InputError(what) {}
};

// A truncated computation ran out of orders; caller may raise N.
class SaturationError : public Error {
public:
    explicit SaturationError(const std::string& what) : Error(what) {}
};

// Internal cross-checks disagreed (oracle mismatch, rank anomaly,
// negative weight deficit). Maps to CLI exit code 2.
class InconsistencyError : public Error {
public:
    explicit InconsistencyError(const std::string& what) : Error(what) {}
};

} // namespace wlab

#endif
