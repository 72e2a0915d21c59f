#include "prodham/errors.hpp"

namespace prodham {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Malformed: return "Malformed";
        case ErrorKind::CyclicSeed: return "CyclicSeed";
        case ErrorKind::NotSubgraph: return "NotSubgraph";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::HasPathFactor: return "HasPathFactor";
        case ErrorKind::OddLayers: return "OddLayers";
        case ErrorKind::TooFewLayers: return "TooFewLayers";
        case ErrorKind::NoPerfectMatching: return "NoPerfectMatching";
        case ErrorKind::NoP23Factor: return "NoP23Factor";
        case ErrorKind::NoFactor: return "NoFactor";
        case ErrorKind::LayerBound: return "LayerBound";
        case ErrorKind::NotTree: return "NotTree";
        case ErrorKind::InvalidFactor: return "InvalidFactor";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    }
    return "Unknown";
}

}  // namespace prodham
