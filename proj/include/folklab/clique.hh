#pragma once

#include <folklab/graph.hh>

#include <functional>
#include <optional>
#include <span>

namespace folklab
{
    struct CliqueResult
    {
        int size = 0;
        VertexSet witness;
    };

    /// Maximum clique by branch and bound with greedy-colouring bounds over a degeneracy
    /// ordering. Among maximum cliques the lexicographically smallest vertex list is returned.
    auto clique_number(const Graph & g) -> CliqueResult;

    /// Maximum independent set, computed as a maximum clique of the complement.
    auto independence_number(const Graph & g) -> CliqueResult;

    /// Some k-clique inside `within`, or nothing. k == 0 yields the empty set.
    auto has_clique(const Graph & g, int k, VertexSet within) -> std::optional<VertexSet>;
    auto has_clique(const Graph & g, int k) -> std::optional<VertexSet>;

    auto is_clique(const Graph & g, VertexSet s) -> bool;
    auto is_independent(const Graph & g, VertexSet s) -> bool;

    /// Vertices in reverse smallest-last order: the densest core comes first.
    auto degeneracy_order(const Graph & g) -> std::vector<int>;

    /// Calls visit on every k-clique in increasing lexicographic order.
    auto for_each_clique(const Graph & g, int k, const std::function<void (VertexSet)> & visit) -> void;

    namespace kernel
    {
        // Raw routines over an adjacency-mask array; the arrowing search calls these on its
        // per-colour class graphs. adj must be symmetric and irreflexive on the bits used.

        /// True if `within` contains a k-clique of adj; the clique is OR-ed into *witness when given.
        auto find_clique(const Mask * adj, Mask within, int k, Mask * witness = nullptr) -> bool;

        /// Size of a maximum clique of adj inside `within`.
        auto max_clique_size(const Mask * adj, Mask within) -> int;
    }
}
