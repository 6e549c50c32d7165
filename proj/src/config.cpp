#include "carlitz/config.hpp"

#include <cstdlib>
#include <fstream>

#include "carlitz/errors.hpp"

namespace carlitz {

void RunConfig::validate() const {
    if (imax < 0 || imax > 16) throw domain_error("imax must be in [0, 16]");
    if (m < 1 || m > 64) throw domain_error("M must be in [1, 64]");
    if (prec < 1 || prec > 100000) throw domain_error("prec must be in [1, 100000]");
    if (ram_cap < 0) throw domain_error("ram-cap must be nonnegative");
    if (format != "text" && format != "json") throw domain_error("format must be text or json");
    // field parameters are validated by construction
    make_field();
}

Fq RunConfig::make_field() const {
    if (modulus) return Fq(p, gamma, *modulus);
    return Fq(p, gamma);
}

RunConfig config_from_json(const nlohmann::json& j, RunConfig base) {
    RunConfig c = base;
    if (j.contains("p")) c.p = j["p"].get<int>();
    if (j.contains("gamma")) c.gamma = j["gamma"].get<int>();
    if (j.contains("modulus")) c.modulus = j["modulus"].get<std::vector<int>>();
    if (j.contains("imax")) c.imax = j["imax"].get<int>();
    if (j.contains("M")) c.m = j["M"].get<int>();
    if (j.contains("prec")) c.prec = j["prec"].get<std::int64_t>();
    if (j.contains("ram_cap")) c.ram_cap = j["ram_cap"].get<std::int64_t>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("format")) c.format = j["format"].get<std::string>();
    if (j.contains("timings")) c.timings = j["timings"].get<bool>();
    return c;
}

nlohmann::json config_to_json(const RunConfig& c) {
    nlohmann::json j{{"p", c.p},       {"gamma", c.gamma}, {"imax", c.imax},
                     {"M", c.m},       {"prec", c.prec},   {"ram_cap", c.ram_cap},
                     {"seed", c.seed}, {"format", c.format}};
    if (c.modulus) j["modulus"] = *c.modulus;
    return j;
}

RunConfig base_config_from_env() {
    RunConfig c;
    const char* path = std::getenv("CARLITZ_DEFAULTS");
    if (!path || !*path) return c;
    std::ifstream in(path);
    if (!in) throw domain_error(std::string("cannot open CARLITZ_DEFAULTS file: ") + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw domain_error(std::string("invalid CARLITZ_DEFAULTS JSON: ") + e.what());
    }
    return config_from_json(j, c);
}

int sum_depth_cap(int q) {
    if (q == 2) return 12;
    if (q == 3) return 7;
    if (q == 4) return 6;
    int i = 0;
    std::int64_t v = 1;
    while (v * q <= 4096) {
        v *= q;
        ++i;
    }
    return i;
}

int oracle_depth_cap(int q) {
    if (q == 2) return 10;
    if (q == 3) return 7;
    if (q == 4) return 5;
    int i = 0;
    std::int64_t v = 1;
    while (v * q <= 1024) {
        v *= q;
        ++i;
    }
    return i;
}

} // namespace carlitz
