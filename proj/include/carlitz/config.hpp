#ifndef CARLITZ_CONFIG_HPP
#define CARLITZ_CONFIG_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "carlitz/fq.hpp"

namespace carlitz {

/// Run-wide configuration shared by the CLI and the verification suites.
struct RunConfig {
    int p = 2;
    int gamma = 1;
    std::optional<std::vector<int>> modulus; ///< override; default is derived
    int imax = 8;
    int m = 8;               ///< coefficient truncation order M
    std::int64_t prec = 64;  ///< series precision, units of x^(1/d)
    std::int64_t ram_cap = 0; ///< 0 means the default q^2
    std::uint64_t seed = 0;
    std::string format = "text"; ///< "text" | "json"
    bool timings = false;

    void validate() const;
    Fq make_field() const;
    std::int64_t effective_ram_cap(int q) const {
        return ram_cap > 0 ? ram_cap : std::int64_t(q) * q;
    }
};

RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {});
nlohmann::json config_to_json(const RunConfig& c);

/// Starting configuration: defaults, overlaid with the JSON file named by
/// the CARLITZ_DEFAULTS environment variable when it is set.
RunConfig base_config_from_env();

/// Per-field depth caps for exhaustive checks: largest i with q^i inside the
/// sum-formula budget (4096) and the product-oracle budget.
int sum_depth_cap(int q);
int oracle_depth_cap(int q);

} // namespace carlitz

#endif
