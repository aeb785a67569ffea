#pragma once
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rca/scalars/serialize.hpp"

namespace rca::cli {

struct ConfigParse : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct JobConfig {
    std::string command;
    std::string group;
    std::string tau;
    std::vector<std::vector<Rational>> points;  // --c
    std::vector<std::string> grid;              // --grid min:max:den, one per coordinate or one for all
    int max_degree = 8;
    bool max_degree_set = false;
    std::optional<int> entry_bound;
    std::optional<Rational> kappa;
    int n = 0;
    int degree = -1;
    std::string output;
    std::string format = "json";
    int workers = 0;

    json to_json() const;
    static JobConfig from_json(const json& j);
};

struct RunResult {
    json envelope;  // schema_version, tool_version, config, wall_time, results, warnings
    std::string csv;
    std::string summary;
    int exit_code = 0;
};

// "min:max:den" -> reduced fractions p/q in [min, max] with q <= den
std::vector<Rational> expand_grid(const std::string& spec);

RunResult run(const JobConfig& cfg);

// full command line handling; returns the process exit code
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rca::cli
