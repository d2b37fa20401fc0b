#pragma once

#include <stdexcept>
#include <string>

namespace fcmqr {

// Raised for malformed or unusable input data (bad CSV cells, dimension
// mismatches, duplicate ids, degenerate numerical states). The CLI maps
// this to exit code 2; usage errors exit with 1.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fcmqr
