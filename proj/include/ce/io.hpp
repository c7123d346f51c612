#pragma once

#include <stdexcept>
#include <string>

#include "ce/params.hpp"
#include "ce/solution.hpp"

namespace ce {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct ParsedInstance {
    Graph graph;
    BudgetOverrides overrides;
};

// Line-oriented instance format:
//   c <comment>
//   p ce <n> <m>        first non-comment line
//   a <v> <alpha>       per-vertex addition override
//   d <v> <delta>       per-vertex deletion override
//   e <u> <v>
ParsedInstance parse_instance(const std::string& text);
std::string serialize_instance(const Graph& g, const BudgetOverrides& ov = {});

// Solution format: "s yes <edits>" or "s no <reason>", then one "del u v" /
// "add u v" line per edit in script order, then one "k v1 v2 ..." line per
// cluster (clusters by smallest member, members ascending).
std::string serialize_solution(const Solution& sol);
Solution parse_solution(const std::string& text);

}  // namespace ce
