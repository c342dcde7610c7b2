#pragma once

#include <folklab/graph.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace folklab
{
    inline constexpr int max_colours = 8;

    // Colouring does not fit the tuple or host graph it is checked against.
    class ArityError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// Target clique sizes (a_1, ..., a_r) of an arrowing relation; 1 <= r <= 8, every a_i >= 1.
    class ArrowTuple
    {
        public:
            ArrowTuple(std::vector<int> entries);
            ArrowTuple(std::initializer_list<int> entries);

            /// Parses "3,4" style lists.
            static auto parse(std::string_view text) -> ArrowTuple;

            auto size() const -> int { return static_cast<int>(_entries.size()); }
            auto operator[] (int i) const -> int { return _entries[i]; }
            auto entries() const -> const std::vector<int> & { return _entries; }
            auto max_entry() const -> int;
            auto all_equal() const -> bool;
            auto to_string() const -> std::string;

            friend auto operator== (const ArrowTuple &, const ArrowTuple &) -> bool = default;

        private:
            std::vector<int> _entries;
    };

    enum class Mode { vertex, edge };

    auto to_string(Mode) -> std::string;

    /// colours[v] in 1..r for every vertex v.
    struct VertexColouring
    {
        std::vector<int> colours;

        friend auto operator== (const VertexColouring &, const VertexColouring &) -> bool = default;
    };

    /// colours[i] in 1..r for edges[i]; edges match the host graph's edge list.
    /// Colour 1 is "blue" (E_1), colour 2 is "red" (E_2).
    struct EdgeColouring
    {
        std::vector<Edge> edges;
        std::vector<int> colours;

        /// Colour class 1 is the given graph's edges, class 2 every other edge of the host.
        static auto split(const Graph & host, const Graph & first_class) -> EdgeColouring;

        friend auto operator== (const EdgeColouring &, const EdgeColouring &) -> bool = default;
    };

    auto check_vertex_colouring_free(const Graph & g, const ArrowTuple & t, const VertexColouring & c) -> bool;
    auto check_edge_colouring_free(const Graph & g, const ArrowTuple & t, const EdgeColouring & c) -> bool;

    struct SearchBudget
    {
        std::optional<std::uint64_t> max_nodes;
        std::optional<std::chrono::milliseconds> max_time;
        int workers = 1;

        static auto unlimited() -> SearchBudget { return SearchBudget{}; }
        static auto nodes(std::uint64_t n) -> SearchBudget { return SearchBudget{n, std::nullopt, 1}; }
        auto with_workers(int w) const -> SearchBudget;
        auto limited() const -> bool { return max_nodes || max_time; }
    };

    enum class Outcome { arrows, free, unknown };

    auto to_string(Outcome) -> std::string;

    struct SearchStats
    {
        std::uint64_t nodes = 0;        // expansions up to the decision point; reproducible
        std::uint64_t subtrees = 0;     // independent subtrees after top-level splitting
        std::uint64_t frontier = 0;     // subtrees left undecided when the outcome is Unknown
        bool timed_out = false;
        std::uint64_t explored = 0;     // every expansion, including cancelled work; varies with timing
        double seconds = 0;
    };

    struct ArrowVerdict
    {
        Outcome outcome = Outcome::unknown;
        std::variant<std::monostate, VertexColouring, EdgeColouring> witness;
        SearchStats stats;

        auto vertex_witness() const -> const VertexColouring * { return std::get_if<VertexColouring>(&witness); }
        auto edge_witness() const -> const EdgeColouring * { return std::get_if<EdgeColouring>(&witness); }
    };

    /// Decides g ->v t: Arrows iff every r-colouring of V(g) puts an a_i-clique in some colour i.
    auto vertex_arrows(const Graph & g, const ArrowTuple & t, const SearchBudget & budget = {}) -> ArrowVerdict;

    /// Decides g ->e t: Arrows iff no r-colouring of E(g) is free of monochromatic a_i-cliques.
    auto edge_arrows(const Graph & g, const ArrowTuple & t, const SearchBudget & budget = {}) -> ArrowVerdict;

    auto decide(Mode mode, const Graph & g, const ArrowTuple & t, const SearchBudget & budget = {}) -> ArrowVerdict;

    /// Unpruned enumeration of every colouring; refuses instances with more than 2^24 colourings.
    /// Shares no search or clique code with the deciders.
    auto decide_with_oracle(const Graph & g, const ArrowTuple & t, Mode mode) -> ArrowVerdict;

    inline constexpr std::uint64_t oracle_limit = std::uint64_t{1} << 24;

    struct CnfDocument
    {
        int variables = 0;
        std::vector<std::vector<int>> clauses;
        std::vector<std::string> comments;

        /// DIMACS text: comment lines, "p cnf V C", one zero-terminated clause per line.
        auto to_dimacs() const -> std::string;
    };

    /// Satisfiable iff a free 2-colouring exists. Variable i true means element i takes colour 1.
    auto export_cnf(const Graph & g, const ArrowTuple & t, Mode mode) -> CnfDocument;
}
