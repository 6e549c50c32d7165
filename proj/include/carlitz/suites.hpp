#ifndef CARLITZ_SUITES_HPP
#define CARLITZ_SUITES_HPP

#include <vector>

#include "carlitz/config.hpp"

namespace carlitz {

/// Outcome of one named verification suite. Exit status derives from
/// passed == cases (and !aborted).
struct SuiteReport {
    std::string suite;
    int cases = 0;
    int passed = 0;
    bool aborted = false;          ///< internal-consistency failure cut the run short
    std::string counterexample;    ///< serialized inputs of the first failure
    std::vector<std::string> certified; ///< certified precision per analytic check
    std::uint64_t seed = 0;
    double wall_ms = 0.0;

    bool ok() const { return !aborted && passed == cases; }
};

const std::vector<std::string>& suite_names();

/// Runs one suite at the configured scale. Unknown names throw domain_error.
SuiteReport run_suite(const RunConfig& cfg, const std::string& name);

nlohmann::json report_json(const SuiteReport& r, bool timings);
std::string report_text(const SuiteReport& r, bool timings);

} // namespace carlitz

#endif
