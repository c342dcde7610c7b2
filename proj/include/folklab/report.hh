#pragma once

#include <folklab/arrowing.hh>
#include <folklab/graph.hh>

#include <json.hpp>

#include <string>

namespace folklab
{
    using nlohmann::json;

    inline constexpr const char * tool_version = FOLKLAB_VERSION;

    enum class CheckStatus { pass, fail, unknown };

    auto to_string(CheckStatus) -> std::string;

    /// One line of a certification ledger. Informational checks are reported but never
    /// influence an overall verdict.
    struct HypothesisCheck
    {
        std::string label;
        std::string statement;
        CheckStatus status = CheckStatus::unknown;
        json evidence = json::object();
        bool informational = false;
    };

    auto to_json(const HypothesisCheck & c) -> json;

    /// {order, edges, graph6}
    auto graph_json(const Graph & g) -> json;

    /// Outcome, reproducible statistics and witness. Wall time goes to a separate "timing"
    /// member only when asked for, so the rest can be compared byte for byte.
    auto verdict_json(const ArrowVerdict & v, bool with_timing) -> json;

    auto witness_json(const ArrowVerdict & v) -> json;

    /// Maps an arrowing outcome onto a check status for a claim of the form "g arrows t".
    auto status_for_arrows_claim(Outcome o) -> CheckStatus;
}
