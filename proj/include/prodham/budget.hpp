#pragma once

#include <chrono>
#include <optional>

namespace prodham {

/// Wall-clock limit and worker count for exhaustive searches.
struct SearchBudget {
    std::optional<std::chrono::duration<double>> time_limit;
    int workers = 1;
};

}  // namespace prodham
