#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bier/bier.hpp"
#include "bier/edgedecomp.hpp"
#include "bier/homology.hpp"

namespace bier {

enum class OutputFormat { text, machine };

struct JobSpec {
    std::string command;
    std::string input;                    ///< document text, see parse_input
    std::optional<std::vector<int>> cap;  ///< cap for ideal inputs
    SphereMethod method = SphereMethod::facet_formula;
    Field field = Field::rationals();
    VerifyMode verify = VerifyMode::automatic;
    std::uint64_t budget = kDefaultSearchBudget;
    OutputFormat out = OutputFormat::text;
    int n = 2;     ///< verify-all: number of variables
    int cmax = 2;  ///< verify-all: largest cap entry
};

struct JobResult {
    int exit_code = 0;  ///< 0 ok, 1 verification failure, 2 usage error
    std::string output;
    std::string error;
};

const std::vector<std::string>& command_names();

/// "q" or "p:<prime>".
Field parse_field(const std::string& text);
SphereMethod parse_method(const std::string& text);
VerifyMode parse_verify(const std::string& text);
OutputFormat parse_format(const std::string& text);

JobResult run(const JobSpec& job);

}  // namespace bier
