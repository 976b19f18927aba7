#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gsr {

inline constexpr const char* kArtifactVersion = "gsrnet 0.1.0";

using index_t = std::int64_t;

// Validation failures: bad shapes, bad flags, bad config files. CLI exit 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : ConfigError {
    using ConfigError::ConfigError;
};

// Malformed on-disk data (bad magic, truncation, ...). CLI exit 1.
struct FormatError : ConfigError {
    using ConfigError::ConfigError;
};

// Forward/backward cache misuse (backward without forward, double fill).
struct SequencingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Allocation and I/O resource failures. CLI exit 3.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gsr
