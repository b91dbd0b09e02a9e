#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lensgeom::acceptance {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
    double seconds;
};

/// Runs the full battery of quantitative checks the library is accepted
/// against. Deterministic for a fixed seed.
std::vector<CriterionResult> run_all(std::uint64_t seed = 0);

} // namespace lensgeom::acceptance
