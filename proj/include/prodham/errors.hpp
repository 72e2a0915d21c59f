#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prodham {

/// Failure categories shared by every module. The CLI maps them to exit codes.
enum class ErrorKind {
    Malformed,
    CyclicSeed,
    NotSubgraph,
    Disconnected,
    BudgetExceeded,
    HasPathFactor,
    OddLayers,
    TooFewLayers,
    NoPerfectMatching,
    NoP23Factor,
    NoFactor,
    LayerBound,
    NotTree,
    InvalidFactor,
    PreconditionFailed,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace prodham
