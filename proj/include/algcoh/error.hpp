#ifndef ALGCOH_ERROR_HPP
#define ALGCOH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace algcoh {

/// Library-wide error with a coarse kind, used by the C API to map to status codes.
class Error : public std::runtime_error {
public:
    enum class Kind {
        invalid_argument,   // bad dimensions, mixed algebras, non-idempotent input, ...
        parse,              // malformed presentation file (message carries the line number)
        validation,         // axiom failure with a witness
        unsupported,        // e.g. exhaustive idempotent search over Q
        enumeration_limit,  // p^n exceeds the configured cap
        internal,           // broken invariant inside the library
    };

    Error(Kind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

[[noreturn]] inline void fail(Error::Kind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace algcoh

#endif
