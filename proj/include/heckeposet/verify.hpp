#pragma once

#include <string>
#include <vector>

namespace heckeposet {

struct SuiteResult {
    std::string name;
    int n_max = 0;
    bool passed = true;
    long long checks = 0;
    std::vector<std::string> failures;  // first few counterexamples
    double seconds = 0.0;
};

// relations, interval, hopf, twists, liu-weselcouch, borderstrips.
std::vector<std::string> suite_names();

SuiteResult run_suite(const std::string& name, int n_max);

// "all" expands to every suite in order.
std::vector<SuiteResult> run_suites(const std::string& name, int n_max);

std::string report_to_json(const std::vector<SuiteResult>& results);

}  // namespace heckeposet
