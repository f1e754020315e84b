#pragma once

#include <stdexcept>
#include <string>

namespace exptest {

// Bad user input: unreadable files, nonpositive lifetimes, invalid parameters.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric degeneracy: zero IPCW weights, degenerate jackknife, empty support.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace exptest
