#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nck {

struct SelftestResult {
    std::string name;
    bool ok = false;
};

// Seeded cross-module property sweep at reduced scale; every check is
// independent and exceptions count as failures of the check that threw.
std::vector<SelftestResult> run_selftest(std::uint64_t seed);

} // namespace nck
