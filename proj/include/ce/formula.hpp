#pragma once

#include <array>
#include <vector>

namespace ce {

// Positive 3-CNF formula for the one-in-three satisfiability variant: every
// clause names three distinct variables, and each variable occurs in at most
// four clauses.
struct Formula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;

    void validate() const;  // throws std::invalid_argument on shape violations
};

}  // namespace ce
