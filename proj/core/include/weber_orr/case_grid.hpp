#pragma once

#include <string>
#include <vector>

#include "weber_orr/identities.hpp"

namespace weber_orr {

// A named identity suite with its cases. Every case has passed
// check_constraints by the time a grid is returned.
struct CaseGrid {
    std::string suite;
    std::vector<IdentityCase> cases;
};

// JSON layout:
//   {"suite": "eq18", "cases": [{"label": "...", "nu": 0.1, "s": [-0.9, 0], ...}]}
// Complex fields take a number or a [re, im] pair. Unknown keys are rejected.
// Throws ParameterError on malformed input and ConstraintError on a case
// outside its suite's admissible set.
CaseGrid parse_case_grid(const std::string& json_text);
CaseGrid load_case_grid(const std::string& path);

std::string case_to_json(const IdentityCase& c);

// Reports as a JSON array, in the given order; doubles are written round-trip exact.
std::string reports_to_json(const std::vector<IdentityReport>& reports, int indent = 2);

}  // namespace weber_orr
