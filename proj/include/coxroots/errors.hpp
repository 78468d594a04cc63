#ifndef COXROOTS_ERRORS_HPP
#define COXROOTS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coxroots {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: malformed matrices, labels out of range, unparsable documents.
struct ValidationError : Error {
    using Error::Error;
};

// Mixing field elements that live over different ground fields.
struct ContextMismatchError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

// A word that was required to be reduced is not.
struct NotReducedError : Error {
    using Error::Error;
};

// A matrix fed to the descent algorithm does not behave like a group element.
struct NotGroupElementError : Error {
    using Error::Error;
};

// An operation was called outside its stated domain (e.g. on a finite system).
struct PreconditionError : Error {
    using Error::Error;
};

// CLI selector (element / root) that cannot be parsed or resolved.
struct SelectorError : Error {
    using Error::Error;
};

// Enumeration guard (element count, depth, memory) exceeded.
struct ResourceError : Error {
    using Error::Error;
};

// An internal invariant failed; always a bug, never a user error.
struct InvariantError : Error {
    using Error::Error;
};

// A mathematically proven property failed to hold in computation.
// Treated as an implementation-bug signal with its own exit code.
struct TheoremContradictionError : Error {
    using Error::Error;
};

}  // namespace coxroots

#endif
