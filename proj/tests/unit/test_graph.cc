#include <folklab/graph.hh>

#include "support/oracles.hh"

#include <doctest.h>

using namespace folklab;

TEST_CASE("constructions")
{
    CHECK(complete(4).edge_count() == 6);
    CHECK(edgeless(5).edge_count() == 0);
    CHECK(cycle(5).edge_count() == 5);
    CHECK(cycle(5).adjacent(0, 4));
    CHECK_THROWS_AS(cycle(2), DomainError);
    CHECK(circulant(8, {1, 4}).edge_count() == 12);
    CHECK(circulant(13, {1, 5}).edge_count() == 26);
    CHECK_THROWS_AS(circulant(8, {5}), DomainError);
    CHECK_THROWS_AS(complete(65), CapacityError);
    CHECK(complete(64).edge_count() == 64 * 63 / 2);
    CHECK(complement(complete(6)) == edgeless(6));
}

TEST_CASE("join places the first graph first")
{
    auto g = join(complete(3), cycle(5));
    CHECK(g.order() == 8);
    CHECK(g.edge_count() == 3 + 5 + 15);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(3, 4));
    CHECK(! g.adjacent(3, 5));
    CHECK(g.adjacent(2, 7));
    CHECK_THROWS_AS(join(complete(40), complete(25)), CapacityError);
}

TEST_CASE("induced subgraph relabels densely")
{
    auto c = cycle(6);
    auto sub = induced(c, VertexSet::of({0, 1, 2, 4}));
    CHECK(sub.graph.order() == 4);
    CHECK(sub.labels == std::vector<int>{0, 1, 2, 4});
    CHECK(sub.graph.edge_count() == 2);
    CHECK(sub.graph.adjacent(0, 1));
    CHECK(! sub.graph.adjacent(2, 3));
}

TEST_CASE("graph invariants are enforced")
{
    std::array<Mask, 2> loop{1, 0};
    CHECK_THROWS_AS(Graph(2, loop), DomainError);
    std::array<Mask, 2> asym{2, 0};
    CHECK_THROWS_AS(Graph(2, asym), DomainError);
    std::array<Mask, 2> beyond{4, 0};
    CHECK_THROWS_AS(Graph(2, beyond), DomainError);
    CHECK_THROWS_AS(Graph::from_edges(3, {Edge{0, 3}}), DomainError);
}

TEST_CASE("edges are listed lexicographically")
{
    auto es = cycle(4).edges();
    CHECK(es == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
}

TEST_CASE("graph6 fixed encodings")
{
    CHECK(parse_graph6("Bw") == complete(3));
    CHECK(emit_graph6(complete(3)) == "Bw");
    CHECK(parse_graph6(">>graph6<<Bw") == complete(3));
    CHECK(emit_graph6(edgeless(0)) == "?");
    CHECK(emit_graph6(complete(4)) == "C~");
    CHECK(emit_graph6(cycle(5)) == "Dhc");
    CHECK(parse_graph6("Bw\n") == complete(3));
}

TEST_CASE("graph6 errors carry the byte offset")
{
    try {
        parse_graph6("B\x01");
        FAIL("expected a parse error");
    }
    catch (const ParseError & e) {
        CHECK(e.offset() == 1);
    }
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);
    CHECK_THROWS_AS(parse_graph6("Bx"), ParseError);   // padding bit set
}

TEST_CASE("graph6 long order field")
{
    auto g = complete(63);
    auto s = emit_graph6(g);
    CHECK(s[0] == '~');
    CHECK(parse_graph6(s) == g);
    auto h = cycle(64);
    CHECK(parse_graph6(emit_graph6(h)) == h);
    CHECK_THROWS_AS(parse_graph6("~?@A"), CapacityError);
}

TEST_CASE("graph6 round trip on random graphs")
{
    testing::Rng rng(7);
    for (int i = 0 ; i < 300 ; ++i) {
        auto g = testing::random_graph(rng, testing::random_int(rng, 0, 64), 0.4);
        auto s = emit_graph6(g);
        REQUIRE(parse_graph6(s) == g);
        REQUIRE(emit_graph6(parse_graph6(s)) == s);
    }
}

TEST_CASE("q candidate")
{
    auto q = q_candidate();
    CHECK(q.order() == 13);
    CHECK(q.edge_count() == 52);
    for (int v = 0 ; v < 13 ; ++v)
        CHECK(q.degree(v) == 8);
}
