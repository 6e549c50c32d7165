#ifndef CARLITZ_ERRORS_HPP
#define CARLITZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace carlitz {

/// Input outside an operation's domain (bad argument, violated inequality,
/// ramification budget, unsupported configuration).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The requested output precision cannot be certified at any truncation depth.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal consistency check failed (e.g. an exact division left a
/// remainder). Indicates an arithmetic bug; verification suites abort on it.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace carlitz

#endif
