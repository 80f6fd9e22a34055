#pragma once

#include <stdexcept>
#include <string>

namespace sodlab {

// User-supplied data violates a documented precondition.
class invalid_input : public std::runtime_error {
public:
    explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};

// Request exceeds a documented size cap or search window.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency check failed; indicates a bug, not bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw invalid_input(msg);
}

inline void ensure(bool ok, const std::string& msg) {
    if (!ok) throw internal_error(msg);
}

}  // namespace sodlab
