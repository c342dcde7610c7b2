#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace folklab
{
    using Mask = std::uint64_t;

    inline constexpr int max_order = 64;

    // Graph exceeds the 64-vertex capacity.
    class CapacityError : public std::length_error
    {
        public:
            using std::length_error::length_error;
    };

    // Argument outside the domain of a construction.
    class DomainError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    // Malformed textual input; carries the byte offset of the first bad character.
    class ParseError : public std::runtime_error
    {
        public:
            ParseError(const std::string & message, std::size_t offset);

            auto offset() const noexcept -> std::size_t { return _offset; }

        private:
            std::size_t _offset;
    };

    inline auto bit(int v) -> Mask { return Mask{1} << v; }

    inline auto low_mask(int n) -> Mask { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

    inline auto popcount(Mask m) -> int { return std::popcount(m); }

    inline auto lowest(Mask m) -> int { return std::countr_zero(m); }

    /// A set of vertices of some host graph, one bit per vertex index.
    class VertexSet
    {
        public:
            constexpr VertexSet() = default;
            constexpr explicit VertexSet(Mask bits) : _bits(bits) {}

            static auto of(std::initializer_list<int> vertices) -> VertexSet;

            auto bits() const -> Mask { return _bits; }
            auto size() const -> int { return popcount(_bits); }
            auto empty() const -> bool { return _bits == 0; }
            auto contains(int v) const -> bool { return (_bits >> v) & 1; }

            auto with(int v) const -> VertexSet { return VertexSet{_bits | bit(v)}; }
            auto without(int v) const -> VertexSet { return VertexSet{_bits & ~bit(v)}; }

            /// Members in increasing index order.
            auto members() const -> std::vector<int>;

            friend auto operator== (VertexSet, VertexSet) -> bool = default;
            friend auto operator& (VertexSet a, VertexSet b) -> VertexSet { return VertexSet{a._bits & b._bits}; }
            friend auto operator| (VertexSet a, VertexSet b) -> VertexSet { return VertexSet{a._bits | b._bits}; }

        private:
            Mask _bits = 0;
    };

    struct Edge
    {
        int u, v;   // u < v

        friend auto operator== (const Edge &, const Edge &) -> bool = default;
        friend auto operator<=> (const Edge &, const Edge &) = default;
    };

    /// Immutable simple undirected graph on at most 64 vertices labelled 0..order-1.
    class Graph
    {
        public:
            Graph() = default;

            /// Builds from per-vertex neighbourhood masks; rejects asymmetric, reflexive or
            /// out-of-range rows.
            Graph(int order, std::span<const Mask> rows);

            static auto from_edges(int order, std::span<const Edge> edges) -> Graph;
            static auto from_edges(int order, std::initializer_list<Edge> edges) -> Graph;

            auto order() const -> int { return _order; }
            auto neighbours(int v) const -> Mask { return _adj[v]; }
            auto adjacent(int u, int v) const -> bool { return (_adj[u] >> v) & 1; }
            auto degree(int v) const -> int { return popcount(_adj[v]); }
            auto all() const -> VertexSet { return VertexSet{low_mask(_order)}; }
            auto rows() const -> std::span<const Mask> { return {_adj.data(), static_cast<std::size_t>(_order)}; }
            auto adjacency() const -> const std::array<Mask, max_order> & { return _adj; }

            auto edge_count() const -> int;

            /// Edges (u,v), u < v, sorted lexicographically.
            auto edges() const -> std::vector<Edge>;

            friend auto operator== (const Graph & a, const Graph & b) -> bool
            {
                return a._order == b._order && a._adj == b._adj;
            }

        private:
            int _order = 0;
            std::array<Mask, max_order> _adj{};
    };

    // Mutable accumulator used by the constructions; produces a Graph once done.
    class GraphBuilder
    {
        public:
            explicit GraphBuilder(int order);

            auto add_edge(int u, int v) -> GraphBuilder &;
            auto build() const -> Graph;

        private:
            int _order;
            std::array<Mask, max_order> _adj{};
    };

    auto complete(int n) -> Graph;
    auto edgeless(int n) -> Graph;
    auto cycle(int n) -> Graph;

    /// Vertex i adjacent to i±d (mod n) for every listed distance, 1 <= d <= n/2.
    auto circulant(int n, std::span<const int> distances) -> Graph;
    auto circulant(int n, std::initializer_list<int> distances) -> Graph;

    auto complement(const Graph & g) -> Graph;

    /// Disjoint union plus every cross edge; g2's vertices are shifted by g1.order().
    auto join(const Graph & g1, const Graph & g2) -> Graph;

    struct InducedSubgraph
    {
        Graph graph;
        std::vector<int> labels;    // labels[i] = host vertex of new vertex i
    };

    auto induced(const Graph & g, VertexSet s) -> InducedSubgraph;

    /// True if every edge of sub is an edge of super (same order required).
    auto is_spanning_subgraph(const Graph & sub, const Graph & super) -> bool;

    /// The 13-vertex candidate for the witness graph Q: the complement of circulant(13, {1, 5}).
    /// Unvalidated; the certifier's reconstruct_q checks its properties.
    auto q_candidate() -> Graph;

    auto parse_graph6(std::string_view text) -> Graph;
    auto emit_graph6(const Graph & g) -> std::string;
}
