#pragma once

/**
 * Self-check suites run by `sgharm verify`. Each suite samples boundary
 * triples (or uses a fixed one), checks an exact identity or property, and
 * reports the first counterexample it meets.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgh/gasket.hpp"

namespace sgh::verify {

struct Config {
    unsigned trials = 100;
    unsigned depth = 6;
    unsigned m_max = 20;
    std::uint64_t seed = 20240521;
    std::optional<BoundaryValues> triple;  // overrides random sampling
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::vector<std::string> details;
    std::optional<std::string> counterexample;
};

/// Names accepted by run(), in the order run_all() uses.
const std::vector<std::string_view>& suite_names();

/// Throws ParseError for an unknown name.
SuiteResult run(std::string_view name, const Config& config);

std::vector<SuiteResult> run_all(const Config& config);

}  // namespace sgh::verify
