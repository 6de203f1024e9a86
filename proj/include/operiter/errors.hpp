#pragma once

#include <stdexcept>
#include <string>
#include <cstdint>

namespace operiter {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidVector : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct NumericalError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct DegenerateSplit : Error { using Error::Error; };
struct NotLinear : Error { using Error::Error; };
struct NonContractive : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

struct NotClustered : Error {
    int class_index;
    NotClustered(const std::string& msg, int idx) : Error(msg), class_index(idx) {}
};

struct NoContractiveStrip : Error {
    std::int64_t window_start;
    std::int64_t window_end;
    double best_norm;
    NoContractiveStrip(const std::string& msg, std::int64_t j0, std::int64_t j1, double best)
        : Error(msg), window_start(j0), window_end(j1), best_norm(best) {}
};

}  // namespace operiter
