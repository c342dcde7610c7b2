#include <folklab/registry.hh>

#include <doctest.h>

#include <cstdlib>
#include <fstream>

using namespace folklab;

TEST_CASE("built-in registry lookups")
{
    auto r = Registry::builtin();
    CHECK(r.ramsey(3, 3).value == 6);
    CHECK(r.ramsey(3, 4).value == 9);
    CHECK(r.ramsey(4, 3).value == 9);
    CHECK(r.ramsey(3, 5).value == 14);
    CHECK(r.ramsey(4, 4).value == 18);
    CHECK_THROWS_AS(r.ramsey(5, 5), UnknownValueError);
    CHECK(r.ramsey(3, 4).statement() == "R(3,4) = 9");
    CHECK(r.snapshot_hash().size() == 64);
}

TEST_CASE("registry symmetry and Folkman parameter validity")
{
    auto r = Registry::builtin();
    for (auto & e : r.entries())
        if (e.kind == ValueKind::ramsey)
            CHECK(r.ramsey(e.tuple[1], e.tuple[0]).value == e.value);
    for (auto & e : r.folkman_bounds()) {
        REQUIRE(e.q);
        CHECK(validate_folkman_q(ArrowTuple{e.tuple}, *e.q));
    }
    auto upper = r.find_folkman(ValueKind::folkman_upper, {3, 5}, 13);
    REQUIRE(upper);
    CHECK(upper->statement() == "F_e(3,5;13) <= 21");
    auto lower = r.find_folkman(ValueKind::folkman_lower, {4, 4}, 17);
    REQUIRE(lower);
    CHECK(lower->value == 22);
}

TEST_CASE("validate_folkman_q")
{
    CHECK(! validate_folkman_q({4, 4}, 4));
    CHECK(validate_folkman_q({4, 4}, 5));
    CHECK(validate_folkman_q({3, 3}, 100));
    CHECK(folkman_symbol({3, 5}, 13) == "F_e(3,5;13)");
}

TEST_CASE("registry parse errors")
{
    CHECK_THROWS_AS(Registry::parse("ramsey | 3,3 | 6 | unknown-source | - | x\n"), ParseError);
    CHECK_THROWS_AS(Registry::parse("bogus | 3,3 | 6 | trusted-literature | - | x\n"), ParseError);
    CHECK_THROWS_AS(Registry::parse("ramsey | 3,3 | 6\n"), ParseError);
    CHECK_THROWS_AS(Registry::parse("folkman-upper | 4,4;4 | 9 | trusted-literature | - | x\n"), ParseError);
    CHECK_THROWS_AS(Registry::parse("ramsey | 3,3 | 6 | verified-in-suite | - | x\n"), ParseError);
    auto ok = Registry::parse("# comment\n\nramsey | 3,3 | 6 | trusted-literature | C5 | x\n");
    CHECK(ok.entries().size() == 1);
    CHECK(ok.entries()[0].construction == "C5");
}

TEST_CASE("hash tracks the table text")
{
    auto a = Registry::parse("ramsey | 3,3 | 6 | trusted-literature | C5 | x\n");
    auto b = Registry::parse("ramsey | 3,3 | 6 | trusted-literature | C5 | y\n");
    CHECK(a.snapshot_hash() != b.snapshot_hash());
    CHECK(a.snapshot_hash() == Registry::parse("ramsey | 3,3 | 6 | trusted-literature | C5 | x\n").snapshot_hash());
    // SHA-256 of the empty string
    CHECK(Registry::parse("").snapshot_hash() == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("verify_small upgrades provenance and reruns reproduce pass")
{
    auto r = Registry::builtin();
    SearchBudget budget = SearchBudget::nodes(10'000'000);
    for (std::size_t i = 0 ; i < r.entries().size() ; ++i) {
        auto & e = r.entries()[i];
        if (e.kind != ValueKind::ramsey || e.value > 9)
            continue;
        auto check = r.verify_small(i, budget);
        INFO(e.statement());
        CHECK(check.status == CheckStatus::pass);
        CHECK(r.entries()[i].provenance == Provenance::verified_in_suite);
        CHECK(! r.entries()[i].verified_by.empty());
        CHECK(verify_known_value(r.entries()[i], budget).status == CheckStatus::pass);
    }
}

TEST_CASE("verify R(3,5): lower half by witness, upper half budget-limited")
{
    auto r = Registry::builtin();
    auto & e = r.ramsey(3, 5);
    auto check = verify_known_value(e, SearchBudget::nodes(100'000));
    CHECK(check.evidence["lower"]["witness_free"] == true);
    CHECK(check.status == CheckStatus::unknown);
}

TEST_CASE("Lin construction entry verifies")
{
    auto r = Registry::builtin();
    auto e = r.find_folkman(ValueKind::folkman_upper, {3, 3}, 6);
    REQUIRE(e);
    CHECK(verify_known_value(*e, {}).status == CheckStatus::pass);
}

TEST_CASE("environment override")
{
    std::string path = "registry_override_test.txt";
    {
        std::ofstream f(path);
        f << "ramsey | 3,3 | 6 | trusted-literature | C5 | override\n";
    }
    ::setenv("FOLKLAB_REGISTRY", path.c_str(), 1);
    auto r = Registry::from_environment();
    ::unsetenv("FOLKLAB_REGISTRY");
    CHECK(r.entries().size() == 1);
    CHECK(r.entries()[0].source == "override");
    CHECK(Registry::from_environment().entries().size() > 1);
    std::remove(path.c_str());
}
