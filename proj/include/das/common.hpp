#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace das {

#ifdef DAS_REAL32
using real = float;  // speed mode; gradient checks assume the 64-bit build
#else
using real = double;
#endif

// Bad input that a caller could have avoided (shape mismatch, malformed
// file, out-of-range index). Maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad command-line invocation. Maps to CLI exit code 1.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace das
