#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tangokv {

struct SuiteLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<SuiteLine> lines;

    bool all_pass() const {
        for (auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

// The named verification suites exposed by the CLI.
SuiteResult suite_examples24();
SuiteResult suite_cor34();
SuiteResult suite_thm35();
SuiteResult suite_classifier_grid();
SuiteResult suite_kodaira_grid();

// Additional blocks used by the acceptance runner.
SuiteResult suite_baselines();
SuiteResult suite_presets(std::uint64_t seed);
SuiteResult suite_split_goldens();
SuiteResult suite_properties(std::uint64_t seed);

/// The five CLI suite names: examples24, cor34, thm35, classifier-grid,
/// kodaira-grid.
std::vector<std::string> cli_suite_names();
SuiteResult run_named_suite(const std::string& name, std::uint64_t seed);

} // namespace tangokv
