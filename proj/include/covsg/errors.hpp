#pragma once

#include <stdexcept>
#include <string>

namespace covsg {

// Velocity magnitude at or above the speed of light.
struct SuperluminalError : std::domain_error {
    explicit SuperluminalError(const std::string& what) : std::domain_error(what) {}
};

// Tensor input violates a structural requirement (e.g. antisymmetry).
struct MalformedTensorError : std::invalid_argument {
    explicit MalformedTensorError(const std::string& what) : std::invalid_argument(what) {}
};

// Lorentz factor below 1.
struct InvalidFactorError : std::invalid_argument {
    explicit InvalidFactorError(const std::string& what) : std::invalid_argument(what) {}
};

// Vanishing gyromagnetic ratio.
struct InvalidRatioError : std::invalid_argument {
    explicit InvalidRatioError(const std::string& what) : std::invalid_argument(what) {}
};

// Operation called with the wrong spin model selected.
struct WrongModelError : std::logic_error {
    explicit WrongModelError(const std::string& what) : std::logic_error(what) {}
};

struct DimensionMismatchError : std::invalid_argument {
    explicit DimensionMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

// Command-line / configuration errors; the CLI maps these to exit status 2.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace covsg
