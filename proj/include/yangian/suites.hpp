#pragma once

#include "yangian/rational.hpp"
#include "yangian/report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace yangian {

struct SuiteOptions {
    std::vector<std::pair<Rational, Rational>> specializations;  // extra (a,b) for subrep
    std::string patterns_file;  // principal-relation candidates; empty = built-in family
    bool allow_expensive = false;
    int drinfeld_samples = 20;
    unsigned seed = 20240521;
    bool corrupt_omega = false;  // negative-control fault injection (drinfeld)
};

// Suites gated to N <= 3 for cost: drinfeld (and the Burnside test inside
// subrep runs only for N <= 3 regardless). Requesting drinfeld above the
// gate without allow_expensive is a usage error.
const std::vector<std::string>& all_suite_names();
bool suite_allowed(const std::string& name, int n, bool allow_expensive);

Report run_suite(const std::string& name, int n, const SuiteOptions& opt);

}  // namespace yangian
