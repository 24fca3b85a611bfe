#pragma once

#include <stdexcept>
#include <string>

namespace mstd {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller handed us arguments that violate a documented precondition
// (bad interval, malformed fringe pair, missing anchor, out-of-range
// probability, exhaustion guard, ...).
struct parameter_error : error {
    explicit parameter_error(const std::string& msg) : error(msg) {}
};

// A result would exceed the configured universe guard (span limit).
struct span_error : error {
    explicit span_error(const std::string& msg) : error(msg) {}
};

// An internal self-check that is mathematically guaranteed to pass has
// failed; indicates a bug, not a caller mistake.
struct contract_error : error {
    explicit contract_error(const std::string& msg) : error(msg) {}
};

// No ambient size up to the escalation cap realizes the requested set.
struct realization_error : error {
    explicit realization_error(const std::string& msg) : error(msg) {}
};

} // namespace mstd
