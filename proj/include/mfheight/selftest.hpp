#pragma once

#include <string>
#include <vector>

namespace mfh {

struct SelfTestResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Desk-scale invariant battery across every module; `quick` trims the loops
// to smoke-test size. Includes the mutation check (a corrupted Weil S phase
// must be caught by the relation checker).
std::vector<SelfTestResult> run_selftests(bool quick);

}  // namespace mfh
