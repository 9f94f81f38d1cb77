#ifndef TRI_SELFTEST_HPP
#define TRI_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace tri {

struct SelftestSuiteResult {
    std::string name;
    int passed = 0;
    int failed = 0;
};

struct SelftestReport {
    std::vector<SelftestSuiteResult> suites;
    bool ok() const {
        for (const auto& s : suites)
            if (s.failed) return false;
        return true;
    }
};

SelftestReport run_selftest(std::uint64_t seed, bool full);

}  // namespace tri

#endif
