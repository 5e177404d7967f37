#pragma once

#include <string>
#include <vector>

#include "hilbmatch/matcher.hpp"

namespace hilbmatch {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The built-in identity checks behind `verify-paper`, in a fixed order:
//   enriques-rational-surface-match, cy3-product-match, cy4-hypersurface-match,
//   hypersurface-dual-path, product-lifting-d5-d8, cy-leading-coefficient.
// Every comparison is exact; a check either holds on the nose or fails.
std::vector<CheckResult> run_identity_checks();

// As above with one deliberately broken check appended; exercises the failure
// path end to end without corrupting any real constant.
std::vector<CheckResult> run_identity_checks_with_injected_failure();

// Every catalog family instantiated over the default parameter box. This is
// the population the scan-style checks (coefficient structure, integrality)
// range over.
std::vector<PolarizedFamily> default_scan_box();

}  // namespace hilbmatch
