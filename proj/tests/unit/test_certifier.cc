#include <folklab/certifier.hh>
#include <folklab/clique.hh>

#include <doctest.h>

using namespace folklab;

namespace
{
    auto find(const TheoremReport & r, const std::string & label) -> const HypothesisCheck &
    {
        for (auto & c : r.checks)
            if (c.label == label)
                return c;
        throw std::out_of_range(label);
    }

    auto instance(int a, int alpha, Graph u) -> TheoremInstance
    {
        return TheoremInstance{a, alpha, std::move(u), "U"};
    }
}

TEST_CASE("reconstruct_q validates the candidate")
{
    auto q = reconstruct_q();
    CHECK(q.graph == q_candidate());
    CHECK(q.validation.size() == 3);
    for (auto & c : q.validation)
        CHECK(c.status == CheckStatus::pass);
}

TEST_CASE("validate_q names the first failing property")
{
    try {
        validate_q(complete(13));
        FAIL("expected a validation error");
    }
    catch (const ValidationError & e) {
        CHECK(e.property() == "cl(Q) = 4");
    }
    try {
        validate_q(complement(join(edgeless(4), complete(3))));
        FAIL("expected a validation error");
    }
    catch (const ValidationError & e) {
        CHECK(e.property() == "alpha(Q) = 2");
    }
    try {
        validate_q(q_candidate(), SearchBudget::nodes(1));
        FAIL("expected a validation error");
    }
    catch (const ValidationError & e) {
        CHECK(e.property() == "Q ->v (2,2,4)");
    }
}

TEST_CASE("theorem 1 at a = 5 with U = Q")
{
    auto r = certify_theorem1(TheoremInstance{5, 0, q_candidate(), "Q"}, Registry::builtin(), {});
    CHECK(find(r, "H1.ramsey-step").status == CheckStatus::pass);
    CHECK(find(r, "H1.ramsey-step").evidence["text"] == "14 = 9 + 5 - 0");
    CHECK(find(r, "H2.size-margin").status == CheckStatus::fail);
    CHECK(find(r, "H2.size-margin").evidence["text"] == "4 < 6");
    CHECK(find(r, "H3.clique").status == CheckStatus::pass);
    CHECK(find(r, "H4.vertex-arrowing").status == CheckStatus::pass);
    CHECK(find(r, "H5.vertex-arrowing").status == CheckStatus::pass);
    CHECK(r.construction["order"] == 21);
    CHECK(r.construction["clique_number"] == 12);
    CHECK(r.construction["clique_by_join"] == 12);
    CHECK(r.construction["q"] == 13);
    CHECK(r.bound.text() == "F_e(3,5;13) <= 21");
    CHECK(r.overall == Overall::refuted_hypothesis);
}

TEST_CASE("theorem 1 reports are byte-identical on repeat")
{
    auto a = certify_theorem1(TheoremInstance{5, 0, q_candidate(), "Q"}, Registry::builtin(), {}).to_json().dump();
    auto b = certify_theorem1(TheoremInstance{5, 0, q_candidate(), "Q"}, Registry::builtin(), {}).to_json().dump();
    CHECK(a == b);
    auto j = nlohmann::json::parse(a);
    CHECK(j["schema"] == "folklab.theorem-report/1");
    CHECK(j.contains("tool-version"));
    CHECK(j["registry-snapshot-hash"] == Registry::builtin().snapshot_hash());
}

TEST_CASE("theorem 1 build cross-checks clique additivity")
{
    auto reg = Registry::builtin();
    for (int a : {4, 5, 6})
        for (int alpha : {0, 1, 2}) {
            auto c = build_theorem1_graph(instance(a, alpha, cycle(5)), reg);
            CHECK(c.clique_by_join == c.clique_recomputed);
            CHECK(c.clique_recomputed == clique_number(c.graph).size);
            CHECK(c.graph.order() == c.complete_part + 5);
        }
    CHECK_THROWS_AS(build_theorem1_graph(instance(3, 0, cycle(5)), reg), DomainError);
    CHECK_THROWS_AS(build_theorem1_graph(instance(5, -1, cycle(5)), reg), DomainError);
}

TEST_CASE("theorem 1 with a missing Ramsey value")
{
    CHECK_THROWS_AS(certify_theorem1(instance(12, 0, cycle(5)), Registry::builtin(), {}), UnknownValueError);
}

TEST_CASE("budget exhaustion yields inconclusive, never certified")
{
    std::vector<HypothesisCheck> checks(2);
    checks[0].status = CheckStatus::pass;
    checks[1].status = CheckStatus::unknown;
    CHECK(overall_of(checks) == Overall::inconclusive);
    checks[1].status = CheckStatus::fail;
    CHECK(overall_of(checks) == Overall::refuted_hypothesis);
    checks[1].status = CheckStatus::pass;
    CHECK(overall_of(checks) == Overall::certified);
    checks.push_back(HypothesisCheck{"P", "probe", CheckStatus::fail, {}, true});
    CHECK(overall_of(checks) == Overall::certified);
}

TEST_CASE("theorem 2 structural facts and probes")
{
    auto r = certify_theorem2(q_candidate(), Registry::builtin(), {});
    CHECK(r.construction["order"] == 25);
    CHECK(r.construction["clique_number"] == 16);
    CHECK(r.construction["q"] == 17);
    CHECK(r.bound.text() == "22 <= F_e(4,4;17) <= 25");
    CHECK(find(r, "T2.join-clique").status == CheckStatus::pass);
    CHECK(find(r, "P1.edge-3-4").status == CheckStatus::fail);
    CHECK(find(r, "P1.edge-3-4").informational);
    CHECK(find(r, "P2.vertex-4-4").status == CheckStatus::fail);
    CHECK(r.overall == Overall::certified);
}
