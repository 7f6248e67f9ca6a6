#pragma once

#include <stdexcept>
#include <string>

namespace airgen {

// Error taxonomy. The CLI maps these onto exit codes: usage/data problems
// exit 2, numerical failures exit 3.

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IngestError : DataError {
    using DataError::DataError;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StatsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BalanceError : DataError {
    using DataError::DataError;
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CheckpointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when training hits a non-finite loss; carries epoch/batch context.
struct TrainingDiverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace airgen
