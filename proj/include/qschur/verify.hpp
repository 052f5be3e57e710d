#pragma once

#include <string>
#include <vector>

namespace qschur {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
};

using Suite = std::vector<CheckResult>;

/// The numbered verification batteries; every threshold is pinned in code.
Suite verify_dimension_theorem(int jobs = 1);       // 1
Suite verify_sandwich(int jobs = 1);                // 2
Suite verify_classification(int jobs = 1);          // 3
Suite verify_semisimplicity(int jobs = 1);          // 4
Suite verify_blocks(int jobs = 1);                  // 5
Suite verify_projectives_ext();                     // 6
Suite verify_baby_weyl(int jobs = 1);               // 7
Suite verify_transfer(int jobs = 1);                // 8
Suite verify_schur_functor();                       // 9
Suite verify_appendix(int jobs = 1);                // 10
Suite verify_identities();                          // 11

/// Named suites: combinatorics, schur-core, little, representation,
/// transfer, appendix, all.
Suite run_suite(const std::string& name, int jobs = 1);

bool all_pass(const Suite& s);

}
