#pragma once

#include <stdexcept>
#include <string>

namespace webweaver {

/// Raised when a scenario or model configuration is invalid before a run starts.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an estimator is evaluated on data that cannot support it
/// (too few samples, zero variance, no qualifying blocks).
class UndefinedStatistic : public std::runtime_error {
public:
    explicit UndefinedStatistic(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace webweaver
