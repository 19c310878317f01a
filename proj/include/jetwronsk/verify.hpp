#ifndef JETWRONSK_VERIFY_HPP
#define JETWRONSK_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace jetwronsk {

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;  // inputs reproducing the first failure; empty on pass
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    int failed() const {
        int n = 0;
        for (const auto& c : checks) n += c.pass ? 0 : 1;
        return n;
    }
};

// Runs one named randomized suite; `trials` is the case count per
// configuration cell. Throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int trials);

const std::vector<std::string>& suite_names();

}  // namespace jetwronsk

#endif
