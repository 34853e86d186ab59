#pragma once

#include <string>
#include <vector>

namespace bclab {

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct PropertyOptions {
    unsigned threads = 0;
};

/// The invariant suite behind `bclab verify`; each entry is self-checking
/// against a brute-force or independent computation.
std::vector<PropertyResult> run_property_suite(const PropertyOptions& options = {});

} // namespace bclab
