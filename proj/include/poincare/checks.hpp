#pragma once

// Invariant suites run by `poincare check`. Each suite evaluates a list of
// assertions and records the measured value, its tolerance, the pass flag and
// an anchor string naming the property. Reports are deterministic for a
// fixed seed.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace poincare::checks {

using Json = nlohmann::ordered_json;

enum class Relation { at_most, at_least, greater, equal };

struct Assertion {
    std::string name;
    std::string anchor;
    double measured = 0.0;
    double tolerance = 0.0;
    Relation relation = Relation::at_most;
    bool pass = false;
    std::string detail; ///< error text when the evaluation threw
};

struct SuiteReport {
    std::string name;
    std::vector<Assertion> assertions;

    bool pass() const;
};

struct CheckConfig {
    double k = 0.5;
    std::uint64_t seed = 20240611;
};

/// Suite ids in the order `check all` runs them.
const std::vector<std::string>& suite_names();

/// Throws UnknownSuite for an unknown id.
SuiteReport run_suite(const std::string& name, const CheckConfig& cfg);

/// "all" runs every suite.
std::vector<SuiteReport> run_suites(const std::string& name, const CheckConfig& cfg);

Json report_json(const std::vector<SuiteReport>& reports, const CheckConfig& cfg);

const char* relation_symbol(Relation r);

}  // namespace poincare::checks
