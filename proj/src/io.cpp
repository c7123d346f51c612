#include "ce/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ce {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

bool parse_int(const std::string& tok, int& out) {
    if (tok.empty()) return false;
    size_t pos = 0;
    try {
        long v = std::stol(tok, &pos);
        if (pos != tok.size() || v < 0 || v > INT32_MAX) return false;
        out = static_cast<int>(v);
    } catch (...) {
        return false;
    }
    return true;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
    ParsedInstance out;
    bool have_header = false;
    int declared_m = 0, edge_lines = 0;
    std::set<std::pair<int, int>> seen;

    const auto lines = split_lines(text);
    for (int ln = 1; ln <= static_cast<int>(lines.size()); ++ln) {
        auto toks = tokens_of(lines[ln - 1]);
        if (toks.empty()) continue;
        if (toks[0] == "c") continue;
        if (!have_header) {
            if (toks[0] != "p") throw ParseError(ln, "expected header 'p ce <n> <m>'");
            if (toks.size() != 4 || toks[1] != "ce") throw ParseError(ln, "malformed header");
            if (!parse_int(toks[2], out.graph.n) || !parse_int(toks[3], declared_m))
                throw ParseError(ln, "header counts must be non-negative integers");
            have_header = true;
            continue;
        }
        if (toks[0] == "e") {
            int u, v;
            if (toks.size() != 3 || !parse_int(toks[1], u) || !parse_int(toks[2], v))
                throw ParseError(ln, "malformed edge line");
            if (u >= out.graph.n || v >= out.graph.n) throw ParseError(ln, "vertex id out of range");
            if (u == v) throw ParseError(ln, "self-loop");
            if (u > v) std::swap(u, v);
            if (!seen.insert({u, v}).second) throw ParseError(ln, "duplicate edge");
            out.graph.edges.emplace_back(u, v);
            ++edge_lines;
        } else if (toks[0] == "a" || toks[0] == "d") {
            int v, budget;
            if (toks.size() != 3 || !parse_int(toks[1], v) || !parse_int(toks[2], budget))
                throw ParseError(ln, "malformed override line");
            if (v >= out.graph.n) throw ParseError(ln, "vertex id out of range");
            auto& m = toks[0] == "a" ? out.overrides.add : out.overrides.del;
            if (!m.emplace(v, budget).second) throw ParseError(ln, "duplicate override");
        } else {
            throw ParseError(ln, "unknown line type '" + toks[0] + "'");
        }
    }
    if (!have_header) throw ParseError(static_cast<int>(lines.size()) + 1, "missing header");
    if (edge_lines != declared_m)
        throw ParseError(static_cast<int>(lines.size()) + 1,
                         "edge count does not match the header");
    return out;
}

std::string serialize_instance(const Graph& g, const BudgetOverrides& ov) {
    std::ostringstream out;
    out << "p ce " << g.n << " " << g.edges.size() << "\n";
    for (auto [v, a] : ov.add) out << "a " << v << " " << a << "\n";
    for (auto [v, d] : ov.del) out << "d " << v << " " << d << "\n";
    auto edges = g.edges;
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) out << "e " << u << " " << v << "\n";
    return out.str();
}

std::string serialize_solution(const Solution& sol) {
    std::ostringstream out;
    if (sol.verdict == Verdict::No) {
        out << "s no " << (sol.no_reason.empty() ? "infeasible" : sol.no_reason) << "\n";
        return out.str();
    }
    out << "s yes " << sol.script.size() << "\n";
    for (const Edit& e : sol.script)
        out << (e.kind == EditKind::Add ? "add " : "del ") << e.u << " " << e.v << "\n";
    for (const auto& cluster : sol.clusters) {
        out << "k";
        for (int v : cluster) out << " " << v;
        out << "\n";
    }
    return out.str();
}

Solution parse_solution(const std::string& text) {
    Solution sol;
    bool have_status = false;
    const auto lines = split_lines(text);
    for (int ln = 1; ln <= static_cast<int>(lines.size()); ++ln) {
        auto toks = tokens_of(lines[ln - 1]);
        if (toks.empty() || toks[0] == "c") continue;
        if (!have_status) {
            if (toks.size() != 3 || toks[0] != "s") throw ParseError(ln, "expected status line");
            if (toks[1] == "yes") {
                sol.verdict = Verdict::Yes;
                int count;
                if (!parse_int(toks[2], count)) throw ParseError(ln, "malformed edit count");
            } else if (toks[1] == "no") {
                sol.verdict = Verdict::No;
                sol.no_reason = toks[2];
            } else {
                throw ParseError(ln, "status must be yes or no");
            }
            have_status = true;
            continue;
        }
        if (toks[0] == "del" || toks[0] == "add") {
            int u, v;
            if (toks.size() != 3 || !parse_int(toks[1], u) || !parse_int(toks[2], v) || u == v)
                throw ParseError(ln, "malformed edit line");
            sol.script.emplace_back(toks[0] == "add" ? EditKind::Add : EditKind::Delete, u, v);
        } else if (toks[0] == "k") {
            std::vector<int> cluster;
            for (size_t i = 1; i < toks.size(); ++i) {
                int v;
                if (!parse_int(toks[i], v)) throw ParseError(ln, "malformed cluster line");
                cluster.push_back(v);
            }
            if (cluster.empty()) throw ParseError(ln, "empty cluster line");
            sol.clusters.push_back(std::move(cluster));
        } else {
            throw ParseError(ln, "unknown line type '" + toks[0] + "'");
        }
    }
    if (!have_status) throw ParseError(static_cast<int>(lines.size()) + 1, "missing status line");
    return sol;
}

}  // namespace ce
