#include <folklab/certifier.hh>
#include <folklab/clique.hh>

using std::string;
using std::vector;

namespace folklab
{
    ValidationError::ValidationError(const string & property, const string & detail) :
        std::runtime_error("validation failed: " + property + ": " + detail),
        _property(property)
    {
    }

    auto to_string(Overall o) -> string
    {
        switch (o) {
            case Overall::certified: return "certified";
            case Overall::refuted_hypothesis: return "refuted-hypothesis";
            case Overall::inconclusive: return "inconclusive";
        }
        return "inconclusive";
    }

    auto FolkmanBound::text() const -> string
    {
        string symbol = folkman_symbol(tuple, q);
        if (lower)
            return std::to_string(*lower) + " <= " + symbol + " <= " + std::to_string(upper);
        return symbol + " <= " + std::to_string(upper);
    }

    auto TheoremReport::to_json() const -> json
    {
        json checks_json = json::array();
        for (auto & c : checks)
            checks_json.push_back(folklab::to_json(c));
        return json{
            {"schema", "folklab.theorem-report/1"},
            {"tool-version", tool_version},
            {"registry-snapshot-hash", registry_hash},
            {"theorem", theorem},
            {"instance", instance},
            {"checks", checks_json},
            {"construction", construction},
            {"bound", {
                {"tuple", bound.tuple},
                {"q", bound.q},
                {"upper", bound.upper},
                {"lower", bound.lower ? json(*bound.lower) : json(nullptr)},
                {"text", bound.text()}}},
            {"overall", to_string(overall)}};
    }

    auto overall_of(const vector<HypothesisCheck> & checks) -> Overall
    {
        bool unknown = false;
        for (auto & c : checks) {
            if (c.informational)
                continue;
            if (c.status == CheckStatus::fail)
                return Overall::refuted_hypothesis;
            if (c.status == CheckStatus::unknown)
                unknown = true;
        }
        return unknown ? Overall::inconclusive : Overall::certified;
    }

    namespace
    {
        auto clique_check(const string & label, const string & statement, const Graph & g, int expected) -> HypothesisCheck
        {
            auto cl = clique_number(g);
            HypothesisCheck check{label, statement};
            check.status = cl.size == expected ? CheckStatus::pass : CheckStatus::fail;
            check.evidence = json{{"clique_number", cl.size}, {"expected", expected}, {"witness", cl.witness.members()}};
            return check;
        }

        auto arrowing_check(const string & label, const string & statement, Mode mode, const Graph & g,
                const ArrowTuple & t, const SearchBudget & budget) -> HypothesisCheck
        {
            auto v = decide(mode, g, t, budget);
            HypothesisCheck check{label, statement};
            check.status = status_for_arrows_claim(v.outcome);
            check.evidence = json{{"mode", to_string(mode)}, {"tuple", t.entries()}, {"verdict", verdict_json(v, false)}};
            if (v.outcome == Outcome::free) {
                bool rechecked = mode == Mode::vertex
                    ? check_vertex_colouring_free(g, t, *v.vertex_witness())
                    : check_edge_colouring_free(g, t, *v.edge_witness());
                check.evidence["witness_rechecked"] = rechecked;
            }
            return check;
        }

        auto tuple_text(const vector<int> & entries) -> string
        {
            return "(" + ArrowTuple{entries}.to_string() + ")";
        }

        auto construction_json(const Graph & g, int complete_part, int clique_by_join, int clique_recomputed, int q) -> json
        {
            return json{
                {"description", "K_" + std::to_string(complete_part) + " + U"},
                {"complete_part", complete_part},
                {"order", g.order()},
                {"edges", g.edge_count()},
                {"clique_number", clique_recomputed},
                {"clique_by_join", clique_by_join},
                {"q", q},
                {"clique_below_q", clique_recomputed < q},
                {"graph6", emit_graph6(g)}};
        }
    }

    auto validate_q(const Graph & candidate, const SearchBudget & budget) -> QReconstruction
    {
        QReconstruction result{candidate, {}};

        auto cl = clique_check("Q.clique", "cl(Q) = 4", candidate, 4);
        result.validation.push_back(cl);
        if (cl.status != CheckStatus::pass)
            throw ValidationError("cl(Q) = 4", "clique number is " + cl.evidence["clique_number"].dump());

        auto ind = independence_number(candidate);
        HypothesisCheck alpha{"Q.independence", "alpha(Q) = 2"};
        alpha.status = ind.size == 2 ? CheckStatus::pass : CheckStatus::fail;
        alpha.evidence = json{{"independence_number", ind.size}, {"expected", 2}, {"witness", ind.witness.members()}};
        result.validation.push_back(alpha);
        if (alpha.status != CheckStatus::pass)
            throw ValidationError("alpha(Q) = 2", "independence number is " + std::to_string(ind.size));

        auto arrows = arrowing_check("Q.vertex-2-2-4", "Q ->v (2,2,4)", Mode::vertex, candidate, ArrowTuple{2, 2, 4}, budget);
        result.validation.push_back(arrows);
        if (arrows.status == CheckStatus::fail)
            throw ValidationError("Q ->v (2,2,4)", "a free vertex colouring exists");
        if (arrows.status == CheckStatus::unknown)
            throw ValidationError("Q ->v (2,2,4)", "undecided within the search budget");

        return result;
    }

    auto reconstruct_q(const SearchBudget & budget) -> QReconstruction
    {
        return validate_q(q_candidate(), budget);
    }

    auto build_theorem1_graph(const TheoremInstance & inst, const Registry & registry) -> Theorem1Construction
    {
        if (inst.a < 4)
            throw DomainError("the construction needs a >= 4, got " + std::to_string(inst.a));
        if (inst.alpha < 0)
            throw DomainError("alpha must be non-negative, got " + std::to_string(inst.alpha));

        Theorem1Construction c;
        c.R = registry.ramsey(3, inst.a).value;
        c.complete_part = c.R - 2 * inst.a + inst.alpha + 4;
        c.q = c.R - inst.a + inst.alpha + 4;
        if (c.complete_part < 0)
            throw DomainError("complete part R - 2a + alpha + 4 = " + std::to_string(c.complete_part) + " is negative");
        if (c.complete_part + inst.u.order() > max_order)
            throw CapacityError("construction K_" + std::to_string(c.complete_part) + " + U has "
                    + std::to_string(c.complete_part + inst.u.order()) + " vertices, capacity is 64");

        c.graph = join(complete(c.complete_part), inst.u);
        c.u_clique = clique_number(inst.u).size;
        c.clique_by_join = c.complete_part + c.u_clique;
        c.clique_recomputed = clique_number(c.graph).size;
        return c;
    }

    auto certify_theorem1(const TheoremInstance & inst, const Registry & registry, const SearchBudget & budget) -> TheoremReport
    {
        const int a = inst.a, alpha = inst.alpha;
        auto construction = build_theorem1_graph(inst, registry);
        const int R = construction.R;
        const int R1 = registry.ramsey(3, a - 1).value;
        const int R2 = registry.ramsey(3, a - 2).value;

        TheoremReport report;
        report.theorem = 1;
        report.registry_hash = registry.snapshot_hash();
        report.instance = json{
            {"a", a},
            {"alpha", alpha},
            {"R", R},
            {"U", {{"label", inst.u_label}, {"order", inst.u.order()}, {"edges", inst.u.edge_count()}, {"graph6", emit_graph6(inst.u)}}}};

        {
            int derived_alpha = R1 + a - R;
            HypothesisCheck check{"H1.ramsey-step", "R(3,a) = R(3,a-1) + a - alpha"};
            check.status = R == R1 + a - alpha ? CheckStatus::pass : CheckStatus::fail;
            check.evidence = json{
                {"R(3,a)", R},
                {"R(3,a-1)", R1},
                {"rhs", R1 + a - alpha},
                {"derived_alpha", derived_alpha},
                {"alpha_matches_derived", derived_alpha == alpha},
                {"text", std::to_string(R) + (check.status == CheckStatus::pass ? " = " : " != ")
                    + std::to_string(R1) + " + " + std::to_string(a) + " - " + std::to_string(alpha)}};
            report.checks.push_back(check);
        }
        {
            int lhs = R - 3 * a + alpha + 5;
            HypothesisCheck check{"H2.size-margin", "R - 3a + alpha + 5 >= R(3,a-2)"};
            check.status = lhs >= R2 ? CheckStatus::pass : CheckStatus::fail;
            check.evidence = json{
                {"lhs", lhs},
                {"R(3,a-2)", R2},
                {"text", std::to_string(lhs) + (lhs >= R2 ? " >= " : " < ") + std::to_string(R2)}};
            report.checks.push_back(check);
        }

        report.checks.push_back(clique_check("H3.clique", "cl(U) = a - 1 = " + std::to_string(a - 1), inst.u, a - 1));

        {
            vector<int> entries{a - 1, a - 2};
            report.checks.push_back(arrowing_check("H4.vertex-arrowing", "U ->v (a-1, a-2) = " + tuple_text(entries),
                        Mode::vertex, inst.u, ArrowTuple{entries}, budget));
        }
        {
            vector<int> entries(a - 2, a - 3);
            entries.push_back(3);
            string statement = "U ->v (a-3 x (a-2), 3) = " + tuple_text(entries);

            // a colour whose target is 1 cannot be used at all, so such entries drop out
            vector<int> effective;
            for (int e : entries)
                if (e > 1)
                    effective.push_back(e);
            auto check = arrowing_check("H5.vertex-arrowing", statement, Mode::vertex, inst.u, ArrowTuple{effective}, budget);
            if (effective != entries)
                check.evidence["reduced_from"] = entries;
            report.checks.push_back(check);
        }

        report.construction = construction_json(construction.graph, construction.complete_part,
                construction.clique_by_join, construction.clique_recomputed, construction.q);
        report.bound = FolkmanBound{{3, a}, construction.q, construction.complete_part + inst.u.order(), std::nullopt};
        report.overall = overall_of(report.checks);
        return report;
    }

    auto certify_theorem2(const Graph & q_graph, const Registry & registry, const SearchBudget & budget,
            const Theorem2Options & options) -> TheoremReport
    {
        constexpr int complete_part = 12, q = 17;

        auto validated = validate_q(q_graph, budget);

        TheoremReport report;
        report.theorem = 2;
        report.registry_hash = registry.snapshot_hash();
        report.instance = json{
            {"complete_part", complete_part},
            {"tuple", {4, 4}},
            {"q", q},
            {"Q", graph_json(q_graph)}};

        for (auto & c : validated.validation)
            report.checks.push_back(c);

        Graph g = join(complete(complete_part), q_graph);
        int q_clique = clique_number(q_graph).size;
        int recomputed = clique_number(g).size;
        {
            HypothesisCheck check{"T2.join-clique", "cl(K_12 + Q) = 12 + cl(Q) < 17"};
            check.status = recomputed == complete_part + q_clique && recomputed < q ? CheckStatus::pass : CheckStatus::fail;
            check.evidence = json{{"clique_number", recomputed}, {"clique_by_join", complete_part + q_clique}, {"q", q}};
            report.checks.push_back(check);
        }

        if (options.probe_edge_34) {
            auto check = arrowing_check("P1.edge-3-4", "Q ->e (3,4)", Mode::edge, q_graph, ArrowTuple{3, 4}, budget);
            check.informational = true;
            report.checks.push_back(check);
        }
        if (options.probe_vertex_44) {
            auto check = arrowing_check("P2.vertex-4-4", "Q ->v (4,4)", Mode::vertex, q_graph, ArrowTuple{4, 4}, budget);
            check.informational = true;
            report.checks.push_back(check);
        }
        if (options.full_run) {
            auto check = arrowing_check("P3.edge-4-4-full", "K_12 + Q ->e (4,4)", Mode::edge, g, ArrowTuple{4, 4}, *options.full_run);
            check.informational = true;
            report.checks.push_back(check);
        }

        report.construction = construction_json(g, complete_part, complete_part + q_clique, recomputed, q);
        report.construction["description"] = "K_12 + Q";

        std::optional<int> lower;
        if (auto entry = registry.find_folkman(ValueKind::folkman_lower, {4, 4}, q))
            lower = entry->value;
        report.bound = FolkmanBound{{4, 4}, q, complete_part + q_graph.order(), lower};
        report.overall = overall_of(report.checks);
        return report;
    }
}
