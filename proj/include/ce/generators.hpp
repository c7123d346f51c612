#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ce/formula.hpp"
#include "ce/instance.hpp"

namespace ce {

// Clause gadget: K4 on {0,1,2,3}, bridge 3-4, 4-5. Vertex 5 is the clause
// vertex; its three edges to variable gadgets are wired by the reduction.
Graph clause_gadget();

// Variable gadget: cycle {0,1,2,3} with one pendant occurrence vertex per
// cycle vertex (4-0, 5-1, 6-2, 7-3).
Graph variable_gadget();

// The one-in-three-SAT to cluster-editing construction at (a,d) = (2,1),
// s = 1, uniform budgets. Clause blocks come first, variable blocks after.
struct GadgetLayout {
    Graph graph;
    Params params;                                            // (2, 1, 1), no budget
    std::vector<std::array<int, 4>> var_slot;                 // [var][slot] -> occurrence vertex
    std::vector<int> clause_vertex;                           // [clause] -> its c vertex
    std::vector<std::array<std::pair<int, int>, 3>> clause_edge;  // [clause] -> c-to-slot edges
};

GadgetLayout build_sat_reduction(const Formula& f);

// Edit cost of the intended resolution for a given assignment: 5 per clause,
// 8 per true variable (two cycle deletions, six additions), 6 per false
// variable (four pendant deletions, two additions).
int satisfying_layout_cost(const Formula& f, const std::vector<bool>& assignment);

// Reads an assignment back out of an edit script: a variable is true iff a
// clause deleted its edge to one of the variable's occurrence vertices.
// Returns nullopt if some clause does not delete exactly one of its edges or
// the deletions name conflicting values.
std::optional<std::vector<bool>> recover_assignment(const GadgetLayout& layout, const Formula& f,
                                                    const std::vector<Edit>& script);

// Disjoint cliques of the given sizes with `flips` distinct pairs toggled,
// driven entirely by the seed.
struct PlantedInstance {
    Graph graph;
    std::vector<std::vector<int>> planted;
};

PlantedInstance planted_instance(const std::vector<int>& sizes, int flips, std::uint64_t seed);

}  // namespace ce
