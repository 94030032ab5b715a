#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sgh/gasket.hpp"

namespace sgh::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

enum class Format : std::uint8_t { Human, Json, Csv };

struct RunConfig {
    std::string command;
    BoundaryValues bv{Rational(0), Rational(0), Rational(1)};
    bool triple_given = false;
    Edge edge = Edge::Bottom;
    unsigned depth = 6;
    std::optional<Rational> point;
    Format format = Format::Human;
    std::string output_path;

    // verify / zero-search
    std::string suite = "all";
    unsigned trials = 100;
    unsigned m_max = 20;
    std::uint64_t seed = 20240521;
    long bound = 10;
};

/// Parses a point as "p/q", "p" or "k/2^m".
Rational parse_point(const std::string& text);

int cmd_eval(const RunConfig& cfg, std::ostream& out);
int cmd_classify(const RunConfig& cfg, std::ostream& out);
int cmd_scan(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_zero_search(const RunConfig& cfg, std::ostream& out);

/// Full command line: parses arguments, dispatches, maps errors to exit
/// codes (2 for usage and input errors).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgh::cli
