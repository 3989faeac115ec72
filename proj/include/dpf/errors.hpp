#pragma once

#include <stdexcept>
#include <string>

namespace dpf {

/// Raised when the engine's output diverges from the embedded golden data
/// (or when a search box turns out to be too small).  CLI maps it to exit 3.
struct ConsistencyError : std::runtime_error {
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dpf
