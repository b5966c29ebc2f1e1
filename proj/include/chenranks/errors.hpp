#ifndef CHENRANKS_ERRORS_HPP
#define CHENRANKS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chenranks {

// Malformed or inconsistent user input (bad JSON, invalid flats, ...). Exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A theorem-level cross-check failed. This is a bug in the engine (or a genuinely
// wrong input slipped past validation), never something to paper over. Exit code 3.
struct InvariantError : std::logic_error {
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

// A configured resource limit was exceeded. The contract is: an explicit error,
// never a silently wrong or truncated answer. Exit code 4.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace chenranks

#endif
