#pragma once

#include <folklab/arrowing.hh>
#include <folklab/registry.hh>
#include <folklab/report.hh>

#include <stdexcept>
#include <string>
#include <vector>

namespace folklab
{
    // A candidate graph lacks a property it is required to have.
    class ValidationError : public std::runtime_error
    {
        public:
            ValidationError(const std::string & property, const std::string & detail);

            auto property() const -> const std::string & { return _property; }

        private:
            std::string _property;
    };

    struct QReconstruction
    {
        Graph graph;
        std::vector<HypothesisCheck> validation;
    };

    /// Checks cl(Q) = 4, alpha(Q) = 2 and Q ->v (2,2,4) on a candidate; throws ValidationError
    /// naming the first property that fails or cannot be decided within the budget.
    auto validate_q(const Graph & candidate, const SearchBudget & budget = {}) -> QReconstruction;

    /// The witness graph Q, rebuilt as complement(circulant(13, {1, 5})) and validated.
    auto reconstruct_q(const SearchBudget & budget = {}) -> QReconstruction;

    /// Parameters of the join construction K_{R-2a+alpha+4} + U; R = R(3,a).
    struct TheoremInstance
    {
        int a = 0;
        int alpha = 0;
        Graph u;
        std::string u_label;
    };

    struct Theorem1Construction
    {
        Graph graph;
        int R = 0;
        int complete_part = 0;          // R - 2a + alpha + 4
        int q = 0;                      // R - a + alpha + 4
        int u_clique = 0;
        int clique_by_join = 0;         // complete_part + cl(U)
        int clique_recomputed = 0;      // clique_number of the joined graph
    };

    auto build_theorem1_graph(const TheoremInstance & inst, const Registry & registry) -> Theorem1Construction;

    enum class Overall { certified, refuted_hypothesis, inconclusive };

    auto to_string(Overall) -> std::string;

    struct FolkmanBound
    {
        std::vector<int> tuple;
        int q = 0;
        int upper = 0;
        std::optional<int> lower;

        auto text() const -> std::string;
    };

    struct TheoremReport
    {
        int theorem = 0;
        json instance;
        std::vector<HypothesisCheck> checks;
        json construction;
        FolkmanBound bound;
        Overall overall = Overall::inconclusive;
        std::string registry_hash;

        /// Deterministic for a fixed instance, registry and single worker: no timings.
        auto to_json() const -> json;
    };

    /// Status over the non-informational checks: any fail refutes, any unknown is inconclusive.
    auto overall_of(const std::vector<HypothesisCheck> & checks) -> Overall;

    auto certify_theorem1(const TheoremInstance & inst, const Registry & registry, const SearchBudget & budget) -> TheoremReport;

    struct Theorem2Options
    {
        bool probe_edge_34 = true;                  // edge_arrows(Q, (3,4))
        bool probe_vertex_44 = true;                // vertex_arrows(Q, (4,4))
        std::optional<SearchBudget> full_run;       // edge_arrows(K12 + Q, (4,4)) when set
    };

    auto certify_theorem2(const Graph & q_graph, const Registry & registry, const SearchBudget & budget,
            const Theorem2Options & options = {}) -> TheoremReport;
}
