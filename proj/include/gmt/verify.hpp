#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gmt/algebra.hpp"

namespace gmt {

struct UnknownSuite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NamedResidual {
    std::string name;
    double value = 0.0;
    double bound = 0.0;
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    std::vector<NamedResidual> residuals;
    std::vector<std::string> notes;
    bool pass = false;
};

nlohmann::json to_json(const SuiteResult& r);

/// Names of the individual verification suites, sorted:
/// eq2, eq3, lemma1, lemma2, lemma3, o1, o2, o3, o4, table1.
const std::vector<std::string>& suite_names();

/// Runs one named suite ("all" is not a suite; see run_all_suites).
/// Deterministic: every randomized check uses a fixed seed.
SuiteResult run_suite(const std::string& name, const Tolerance& tol = {});

/// All suites, aggregated in sorted name order.
std::vector<SuiteResult> run_all_suites(const Tolerance& tol = {});

}  // namespace gmt
