#include <folklab/report.hh>

namespace folklab
{
    auto to_string(CheckStatus s) -> std::string
    {
        switch (s) {
            case CheckStatus::pass: return "pass";
            case CheckStatus::fail: return "fail";
            case CheckStatus::unknown: return "unknown";
        }
        return "unknown";
    }

    auto to_json(const HypothesisCheck & c) -> json
    {
        return json{
            {"label", c.label},
            {"statement", c.statement},
            {"status", to_string(c.status)},
            {"informational", c.informational},
            {"evidence", c.evidence}};
    }

    auto graph_json(const Graph & g) -> json
    {
        return json{{"order", g.order()}, {"edges", g.edge_count()}, {"graph6", emit_graph6(g)}};
    }

    auto witness_json(const ArrowVerdict & v) -> json
    {
        if (auto w = v.vertex_witness())
            return json{{"kind", "vertex"}, {"colours", w->colours}};
        if (auto w = v.edge_witness()) {
            json edges = json::array();
            for (auto & e : w->edges)
                edges.push_back(json::array({e.u, e.v}));
            return json{{"kind", "edge"}, {"edges", edges}, {"colours", w->colours}};
        }
        return nullptr;
    }

    auto verdict_json(const ArrowVerdict & v, bool with_timing) -> json
    {
        json out{
            {"outcome", to_string(v.outcome)},
            {"stats", {
                {"nodes", v.stats.nodes},
                {"subtrees", v.stats.subtrees},
                {"frontier", v.stats.frontier},
                {"timed_out", v.stats.timed_out}}},
            {"witness", witness_json(v)}};
        if (with_timing)
            out["timing"] = json{{"seconds", v.stats.seconds}, {"explored", v.stats.explored}};
        return out;
    }

    auto status_for_arrows_claim(Outcome o) -> CheckStatus
    {
        switch (o) {
            case Outcome::arrows: return CheckStatus::pass;
            case Outcome::free: return CheckStatus::fail;
            case Outcome::unknown: return CheckStatus::unknown;
        }
        return CheckStatus::unknown;
    }
}
