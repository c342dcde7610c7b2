#include "cli.hh"

#include <folklab/arrowing.hh>
#include <folklab/graph.hh>

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

using nlohmann::json;

namespace
{
    struct Run
    {
        int code;
        std::string out, err;
    };

    auto cli(std::vector<std::string> args) -> Run
    {
        args.insert(args.begin(), "folklab");
        std::ostringstream out, err;
        int code = folklab::cli::run(args, out, err);
        return Run{code, out.str(), err.str()};
    }
}

TEST_CASE("cli: arrow-edge expectations and exit codes")
{
    CHECK(cli({"arrow-edge", "--graph", "K6", "--tuple", "3,3", "--expect", "arrows"}).code == 0);
    CHECK(cli({"arrow-edge", "K6", "3,3"}).code == 0);
    auto mismatch = cli({"arrow-edge", "K5", "3,3", "--expect", "arrows"});
    CHECK(mismatch.code == 3);
    CHECK(mismatch.err.find("expected arrows, got free") != std::string::npos);
    CHECK(cli({"arrow-edge", "K9", "3,4", "--max-nodes", "10"}).code == 4);
    CHECK(cli({"arrow-edge", "K9", "3,4", "--max-nodes", "10", "--expect", "unknown"}).code == 0);
    CHECK(cli({"arrow-vertex", "C5", "2,2", "--expect", "arrows"}).code == 0);
}

TEST_CASE("cli: usage errors exit 2 with a one-line diagnostic")
{
    auto none = cli({"arrow-edge", "--tuple", "3,3"});
    CHECK(none.code == 2);
    CHECK(std::count(none.err.begin(), none.err.end(), '\n') == 1);
    CHECK(cli({"arrow-edge", "K5", "--graph6", "Bw", "--tuple", "3,3"}).code == 2);
    CHECK(cli({"arrow-edge", "K5", "3,x"}).code == 2);
    CHECK(cli({"arrow-edge", "join(K3", "3,3"}).code == 2);
    CHECK(cli({"arrow-edge", "K5", "3,3", "--expect", "maybe"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"arrow-edge", "--help"}).code == 0);
    CHECK(cli({"--version"}).out == std::string(FOLKLAB_VERSION) + "\n");
}

TEST_CASE("cli: witness json re-validates")
{
    auto r = cli({"arrow-edge", "K5", "3,3", "--json", "--recheck", "--workers", "1"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["command"] == "arrow-edge");
    CHECK(j["outcome"] == "free");
    CHECK(j["witness_rechecked"] == true);
    std::vector<folklab::Edge> edges;
    for (auto & e : j["witness"]["edges"])
        edges.push_back(folklab::Edge{e[0].get<int>(), e[1].get<int>()});
    folklab::EdgeColouring c{edges, j["witness"]["colours"].get<std::vector<int>>()};
    CHECK(folklab::check_edge_colouring_free(folklab::complete(5), {3, 3}, c));
}

TEST_CASE("cli: graph sources")
{
    CHECK(cli({"clique", "--graph", "Q", "--expect", "4"}).code == 0);
    CHECK(cli({"clique", "--graph", "Q", "--expect", "5"}).code == 3);
    CHECK(cli({"clique", "--graph6", "Bw", "--expect", "3"}).code == 0);
    {
        std::ofstream f("cli_graph_file.g6");
        f << "\n>>graph6<<Dhc\n";
    }
    CHECK(cli({"clique", "--graph-file", "cli_graph_file.g6", "--expect", "2"}).code == 0);
    std::remove("cli_graph_file.g6");
    CHECK(cli({"clique", "--graph-file", "no_such_file.g6"}).code == 2);
}

TEST_CASE("cli: build emits graph6")
{
    auto r = cli({"build", "--expr", "join(K3,C5)", "--emit", "graph6"});
    CHECK(r.code == 0);
    CHECK(folklab::parse_graph6(r.out.substr(0, r.out.size() - 1)) == folklab::join(folklab::complete(3), folklab::cycle(5)));
    auto e = cli({"build", "C4", "--emit", "edges"});
    CHECK(e.out == "0 1\n0 3\n1 2\n2 3\n");
}

TEST_CASE("cli: cnf")
{
    auto r = cli({"cnf", "K3", "3,3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("p cnf 3 2") != std::string::npos);
    CHECK(cli({"cnf", "K3", "3,3,3"}).code == 2);
}

TEST_CASE("cli: certify-thm1 json is deterministic at one worker")
{
    std::vector<std::string> args{"certify-thm1", "--a", "5", "--alpha", "0", "--U", "Q", "--json", "--workers", "1"};
    auto a = cli(args), b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j = json::parse(a.out);
    CHECK(j["command"] == "certify-thm1");
    CHECK(j["bound"]["text"] == "F_e(3,5;13) <= 21");
    CHECK(j["overall"] != "certified");
    CHECK(cli({"certify-thm1", "--a", "5", "--expect", "certified"}).code == 3);
    CHECK(cli({"certify-thm1", "--a", "3"}).code == 2);
}

TEST_CASE("cli: certify-thm2 rejects an invalid Q")
{
    CHECK(cli({"certify-thm2", "--Q", "K13", "--no-probes"}).code == 5);
    auto ok = cli({"certify-thm2", "--no-probes", "--json"});
    CHECK(ok.code == 0);
    CHECK(json::parse(ok.out)["overall"] == "certified");
}

TEST_CASE("cli: registry and verify-known")
{
    auto r = cli({"registry", "--json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["entries"].size() > 10);
    auto v = cli({"verify-known", "--entry", "R(3,3)", "--entry", "R(3,4)", "--strict", "--json"});
    CHECK(v.code == 0);
    auto checks = json::parse(v.out)["checks"];
    CHECK(checks.size() == 2);
    for (auto & c : checks)
        CHECK(c["provenance"] == "verified-in-suite");
    CHECK(cli({"--registry", "no_such_registry.txt", "registry"}).code == 2);
}
