#pragma once

#include <stdexcept>
#include <string>

namespace qdcs {

// Single exception type for every contract violation in the library:
// invalid sets, out-of-range points, parse errors, size limits, I/O failures.
// The message carries the specifics (parse errors include line/column).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qdcs
