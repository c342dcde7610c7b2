#pragma once

#include <folklab/graph.hh>

#include <functional>
#include <string_view>

namespace folklab
{
    // Construction expressions:
    //
    //   expr := K<n> | C<n> | E<n> | Q
    //         | circulant(n, d1, d2, ...)
    //         | complement(expr)
    //         | join(expr, expr)
    //
    // K<n> complete, C<n> cycle, E<n> edgeless, Q the 13-vertex witness graph. Whitespace is
    // ignored between tokens. The resolver supplies Q; callers that need the validated graph pass
    // one that runs reconstruct_q.

    using QResolver = std::function<Graph ()>;

    auto parse_expression(std::string_view text, const QResolver & q = q_candidate) -> Graph;

    /// True if the expression mentions the Q keyword.
    auto mentions_q(std::string_view text) -> bool;
}
