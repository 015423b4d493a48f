#pragma once

#include <string>
#include <vector>

namespace detcoh {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // bound used, or the first counterexample
};

/// Names of all property checks, in execution order.
std::vector<std::string> verify_check_names();

/// Run the checks selected by name or prefix ("all", "loccoh",
/// "loccoh.parity", ...). A max_size of 0 keeps each check's default sweep
/// bound; a positive value overrides it.
std::vector<CheckResult> run_verify(const std::string& selector, long long max_size);

} // namespace detcoh
