#ifndef CMLAT_ERRORS_HPP
#define CMLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cmlat {

// Bad data supplied by the caller: malformed files, slopes out of range,
// sequences violating a documented precondition.  CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A structural property the library guarantees failed to hold.  Reaching
// this means a bug or corrupted intermediate state, never bad user input.
// CLI exit code 3.
class InvariantError : public std::runtime_error {
public:
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cmlat

#endif
